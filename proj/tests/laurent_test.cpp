#include <doctest.h>

#include <random>

#include "mbe/error.hpp"
#include "mbe/laurent.hpp"
#include "support.hpp"

using namespace mbe;
using mbe::test::constant;
using mbe::test::q;

TEST_CASE("addition cancels and collects") {
  CHECK((q(1, 0) + (-q(1, 0))).is_zero());
  const auto s = constant(2, 1) + q(2, 0) + q(2, 1);
  CHECK(s.size() == 3);
  CHECK(s.coefficient(LatticeVector{0, 0}) == 1);
  CHECK(s.coefficient(LatticeVector{1, 0}) == 1);
  CHECK(s.coefficient(LatticeVector{0, 1}) == 1);
  CHECK(s.coefficient(LatticeVector{1, 1}) == 0);
}

TEST_CASE("product of (1+q1)(1+q2) is the unit square transform") {
  const auto p = (constant(2, 1) + q(2, 0)) * (constant(2, 1) + q(2, 1));
  const std::vector<LatticeVector> pts{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  CHECK(p == LaurentPolynomial::sum_of_monomials(2, pts));
}

TEST_CASE("negative exponents multiply out") {
  const auto p = q(1, 0, -1) * q(1, 0, 1);
  CHECK(p.is_one());
  const auto r = (constant(1, 1) - q(1, 0, -2)) * (constant(1, 1) + q(1, 0, -2));
  CHECK(r == constant(1, 1) - q(1, 0, -4));
}

TEST_CASE("zero terms are dropped") {
  const auto p = LaurentPolynomial::from_terms(2, {{{1, 0}, 2}, {{1, 0}, -2}, {{0, 3}, 0}});
  CHECK(p.is_zero());
  CHECK(p == LaurentPolynomial(2));
}

TEST_CASE("arity mismatch is rejected") {
  CHECK_THROWS_AS(q(1, 0) + q(2, 0), Error);
  try {
    (void)(q(1, 0) * q(3, 0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("degree queries and coefficient extraction") {
  const auto p = q(2, 0, -2) + q(2, 0, 3) * q(2, 1, 1) + constant(2, 5);
  CHECK(p.max_degree(0) == 3);
  CHECK(p.min_degree(0) == -2);
  CHECK(p.max_degree(1) == 1);
  CHECK(p.coefficient_of(1, 1) == q(1, 0, 3));
  CHECK(p.coefficient_of(1, 0) == q(1, 0, -2) + constant(1, 5));
}

TEST_CASE("times_binomial multiplies by 1 - q^a") {
  const auto p = constant(2, 1) + q(2, 1);
  CHECK(p.times_binomial(LatticeVector{1, -1}) == p * (constant(2, 1) - q(2, 0) * q(2, 1, -1)));
  CHECK(constant(1, 1).times_binomial(LatticeVector{2}).pow(3) ==
        (constant(1, 1) - q(1, 0, 2)) * (constant(1, 1) - q(1, 0, 2)) * (constant(1, 1) - q(1, 0, 2)));
}

TEST_CASE("substitute t -> q1 t") {
  // 1 + t -> 1 + q1 t
  const auto p = constant(2, 1) + q(2, 1);
  CHECK(substitute_monomial(p, 1, LatticeVector{1, 0}) == constant(2, 1) + q(2, 0) * q(2, 1));
  CHECK(substitute_monomial(constant(2, 7), 1, LatticeVector{1, 0}) == constant(2, 7));
  CHECK_THROWS_AS(substitute_monomial(p, 1, LatticeVector{1, 1}), Error);
  CHECK_THROWS_AS(substitute_monomial(p, 2, LatticeVector{1, 0}), Error);
}

TEST_CASE("invert and specialize examples") {
  const auto p = q(2, 0) + q(2, 1, 2) + constant(2, 1);
  CHECK(invert_variables(p, {0}) == q(2, 0, -1) + q(2, 1, 2) + constant(2, 1));
  CHECK(specialize_ones(p, {0, 1}) == constant(2, 3));
  CHECK(specialize_ones(q(1, 0) - constant(1, 1), {0}).is_zero());
  CHECK(specialize_ones(p, {}) == p);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const auto a = test::random_laurent(rng, n), b = test::random_laurent(rng, n),
               c = test::random_laurent(rng, n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * LaurentPolynomial::one(n) == a);
    const auto vars = test::all_vars(n);
    CHECK(invert_variables(invert_variables(a, vars), vars) == a);
    CHECK(invert_variables(a * b, {0}) == invert_variables(a, {0}) * invert_variables(b, {0}));
    CHECK(specialize_ones(a * b, vars) == specialize_ones(a, vars) * specialize_ones(b, vars));
    CHECK(specialize_ones(a + b, {0}) == specialize_ones(a, {0}) + specialize_ones(b, {0}));
  }
}

TEST_CASE("terms stay sorted and graded order is total") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = test::random_laurent(rng, 3, 6) * test::random_laurent(rng, 3, 6);
    for (std::size_t i = 1; i < a.terms().size(); ++i)
      CHECK(a.terms()[i - 1].exponent < a.terms()[i].exponent);
    const auto g = a.graded_terms();
    for (std::size_t i = 1; i < g.size(); ++i)
      CHECK(graded_lex_less(g[i - 1].exponent, g[i].exponent));
  }
}
