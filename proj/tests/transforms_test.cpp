#include <doctest.h>

#include <algorithm>
#include <random>

#include "mbe/cones.hpp"
#include "mbe/error.hpp"
#include "mbe/linalg.hpp"
#include "mbe/oracle.hpp"
#include "mbe/transforms.hpp"
#include "support.hpp"

using namespace mbe;
using mbe::test::constant;
using mbe::test::q;

namespace {

RationalFunction over(const LaurentPolynomial& num, std::vector<LatticeVector> factors) {
  return RationalFunction(num, factors);
}

// truncation of sigma_K against enumeration of K, graded by a positive functional
void check_against_enumeration(const PointedCone& cone, Closure closure, long bound) {
  const auto c = linalg::strictly_positive_functional(cone.generators, cone.ambient_dim());
  REQUIRE(c);
  const auto pts = oracle::enumerate_cone(cone, *c, bound, closure == Closure::Interior);
  const auto expected = LaurentPolynomial::sum_of_monomials(cone.ambient_dim(), pts);
  CHECK(oracle::expand_truncated(sigma_pointed(cone, closure), *c, bound) == expected);
}

}  // namespace

TEST_CASE("ray transform") {
  const SimplicialCone ray(LatticeVector{0}, {LatticeVector{1}});
  CHECK(sigma_simplicial(ray) == RationalFunction::geometric(LatticeVector{1}));
  CHECK(parallelepiped_transform(ray) == constant(1, 1));
  CHECK(sigma_simplicial(ray.with_open_facets({true})) == over(q(1, 0), {LatticeVector{1}}));
}

TEST_CASE("cone over an interval") {
  for (auto [a, b] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 5}}) {
    const auto cone = cone_over(test::segment(a, b));
    LaurentPolynomial num = constant(2, 1);
    for (int k = a + 1; k < b; ++k) num += q(2, 0, k) * q(2, 1);
    CHECK(sigma_pointed(cone) == over(num, {LatticeVector{a, 1}, LatticeVector{b, 1}}));
  }
}

TEST_CASE("cone over the standard simplex") {
  for (std::size_t d = 1; d <= 3; ++d) {
    std::vector<LatticeVector> den;
    for (std::size_t i = 0; i <= d; ++i) den.push_back(LatticeVector::unit(d + 2, i) + LatticeVector::unit(d + 2, d + 1));
    CHECK(sigma_pointed(cone_over(test::standard_simplex(d))) == over(constant(d + 2, 1), den));
  }
}

TEST_CASE("first quadrant") {
  const PointedCone k{LatticeVector{0, 0}, {LatticeVector{1, 0}, LatticeVector{0, 1}}};
  CHECK(sigma_pointed(k) == over(constant(2, 1), {LatticeVector{1, 0}, LatticeVector{0, 1}}));
  CHECK(sigma_pointed(k, Closure::Interior) ==
        over(q(2, 0) * q(2, 1), {LatticeVector{1, 0}, LatticeVector{0, 1}}));
}

TEST_CASE("sigma of a simplicial cone does not depend on the path") {
  const SimplicialCone c(LatticeVector{0, 0}, {LatticeVector{1, 2}, LatticeVector{3, 1}});
  CHECK(sigma_pointed(PointedCone{c.apex(), c.generators()}) == sigma_simplicial(c));
  check_against_enumeration(PointedCone{c.apex(), c.generators()}, Closure::Closed, 6);
}

TEST_CASE("apex shifts the transform") {
  const PointedCone k{LatticeVector{2}, {LatticeVector{1}}};
  CHECK(sigma_pointed(k) == over(q(1, 0, 2), {LatticeVector{1}}));
}

TEST_CASE("square cone matches enumeration") {
  const auto cone = cone_over(test::unit_square());
  check_against_enumeration(cone, Closure::Closed, 4);
  check_against_enumeration(cone, Closure::Interior, 4);
}

TEST_CASE("sigma of a ray minus its interior is one") {
  for (const auto& g : {LatticeVector{1}, LatticeVector{-3}, LatticeVector{2, 1}}) {
    const PointedCone k{LatticeVector::zero(g.size()), {g}};
    CHECK(sigma_pointed(k) - sigma_pointed(k, Closure::Interior) == RationalFunction(constant(g.size(), 1)));
  }
}

TEST_CASE("cone transforms on random cones") {
  std::mt19937 rng(21);
  for (const auto& p : test::random_corpus(16)) {
    const auto cone = cone_over(p);
    check_against_enumeration(cone, Closure::Closed, 3);
    check_against_enumeration(cone, Closure::Interior, 3);
    // reordering and repeating generators does not change the set
    auto gens = cone.generators;
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(gens.front() * Integer(2));
    CHECK(sigma_pointed(PointedCone{cone.apex, gens}) == sigma_pointed(cone));
    for (std::size_t i = 0; i < p.vertex_count(); ++i)
      check_against_enumeration(shifted_vertex_cone(p, i), Closure::Closed, 3);
  }
}

TEST_CASE("sigma of polytopes") {
  CHECK(sigma_polytope(test::unit_square()) == (constant(2, 1) + q(2, 0)) * (constant(2, 1) + q(2, 1)));
  CHECK(sigma_polytope(Polytope::from_points({LatticeVector{2, -1}})) == q(2, 0, 2) * q(2, 1, -1));
  CHECK(sigma_polytope(test::segment(0, 2)) == constant(1, 1) + q(1, 0) + q(1, 0, 2));
}

TEST_CASE("Brion's theorem") {
  CHECK(brion_sum(test::segment(0, 2)) == RationalFunction(constant(1, 1) + q(1, 0) + q(1, 0, 2)));
  CHECK(brion_sum(test::corner_simplex(2)) == RationalFunction(constant(2, 1) + q(2, 0) + q(2, 1)));
  std::mt19937 rng(23);
  for (const auto& p : test::random_corpus()) {
    CHECK(brion_sum(p) == RationalFunction(sigma_polytope(p)));
    const auto t = p.translated(test::random_nonzero_vector(rng, p.ambient_dim(), 3));
    CHECK(brion_sum(t) == RationalFunction(sigma_polytope(t)));
  }
}

TEST_CASE("vertex cone transforms of the corner triangle") {
  const auto vc = vertex_cone_transforms(test::corner_simplex(2));
  REQUIRE(vc.size() == 3);
  CHECK(vc[0] == over(constant(2, 1), {LatticeVector{1, 0}, LatticeVector{0, 1}}));
  CHECK(vc[1] == over(constant(2, 1), {LatticeVector{-1, 0}, LatticeVector{-1, 1}}));
}

TEST_CASE("Stanley reciprocity") {
  CHECK(stanley_reciprocity_check(PointedCone{LatticeVector{0}, {LatticeVector{1}}}));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(stanley_reciprocity_check(PointedCone{LatticeVector::zero(3), {LatticeVector::unit(3, i)}}));
  CHECK(stanley_reciprocity_check(PointedCone{LatticeVector{0, 0}, {LatticeVector{1, 0}, LatticeVector{0, 1}}}));
  CHECK(stanley_reciprocity_check(cone_over(test::unit_square())));
  CHECK_THROWS_AS(stanley_reciprocity_check(PointedCone{LatticeVector{1}, {LatticeVector{1}}}), Error);
  for (const auto& p : test::random_corpus(12))
    for (std::size_t i = 0; i < p.vertex_count(); ++i) CHECK(stanley_reciprocity_check(shifted_vertex_cone(p, i)));
}
