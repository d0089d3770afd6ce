// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>

#include "closed_forms.hpp"
#include "mbe/cones.hpp"
#include "mbe/ehrhart.hpp"
#include "mbe/oracle.hpp"
#include "mbe/transforms.hpp"
#include "mbe/verify.hpp"
#include "support.hpp"

using namespace mbe;
using mbe::test::constant;
using mbe::test::q;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.passed = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds) {
    out.require(false, "runtime " + std::to_string(secs) + " s over the limit");
  }
  if (!out.passed) ++failures;
  std::printf("%s criterion %2d: %s [%.2f s%s]%s%s\n", out.passed ? "PASS" : "FAIL", number,
              title.c_str(), secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              out.detail.empty() ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
}

std::string name_of(const Polytope& p) {
  std::string s = "conv{";
  for (const auto& v : p.vertices()) s += v.to_string();
  return s + "}";
}

RationalFunction over(const LaurentPolynomial& num, std::vector<LatticeVector> factors) {
  return RationalFunction(num, factors);
}

}  // namespace

int main() {
  const std::vector<Polytope> corpus = test::random_corpus(24);
  std::printf("corpus: %zu polytopes, ambient dimension <= 3, coordinates in [0,4]\n", corpus.size());

  criterion(1, "interval series (1 + sum_{a<k<b} q^k t)/((1-q^a t)(1-q^b t))", 1, [](Outcome& o) {
    for (auto [a, b] : {std::pair{0LL, 1LL}, {0LL, 2LL}, {1LL, 3LL}, {2LL, 5LL}}) {
      LaurentPolynomial num = constant(2, 1);
      for (long long k = a + 1; k < b; ++k) num += q(2, 0, k) * q(2, 1);
      const auto expected = over(num, {LatticeVector{a, 1}, LatticeVector{b, 1}});
      o.require(series(test::segment(a, b)).to_rational_function() == expected,
                "[" + std::to_string(a) + "," + std::to_string(b) + "]");
    }
  });

  criterion(2, "standard simplex d=1..5: series 1/prod(1-q_i t), delta (1,0,...,0)", 5, [](Outcome& o) {
    for (std::size_t d = 1; d <= 5; ++d) {
      const auto p = test::standard_simplex(d);
      std::vector<LatticeVector> den;
      for (std::size_t i = 0; i <= d; ++i)
        den.push_back(LatticeVector::unit(d + 2, i) + LatticeVector::unit(d + 2, d + 1));
      o.require(series(p).to_rational_function() == over(constant(d + 2, 1), den),
                "series d=" + std::to_string(d));
      const auto dv = delta_vector(p);
      bool ok = dv.entries.size() == d + 1 && dv.entries[0].is_one();
      for (std::size_t k = 1; ok && k < dv.entries.size(); ++k) ok = dv.entries[k].is_zero();
      o.require(ok, "delta d=" + std::to_string(d));
    }
  });

  criterion(3, "closed-form Ehrhart polynomials of simplices and cubes, d=2,3,4", 10, [](Outcome& o) {
    for (std::size_t d = 2; d <= 4; ++d) {
      const std::string ds = " d=" + std::to_string(d);
      o.require(test::matches_simplex_formula(ehrhart_polynomial(test::standard_simplex(d)), d),
                "simplex in R^{d+1}" + ds);
      o.require(test::matches_corner_formula(ehrhart_polynomial(test::corner_simplex(d)), d),
                "corner simplex" + ds);
      o.require(test::matches_cube_formula(ehrhart_polynomial(test::unit_cube(d)), d), "cube" + ds);
    }
  });

  criterion(4, "L_P([n]_q) = sigma_{nP}(q) on the corpus, n=1..4", 120, [&](Outcome& o) {
    for (const auto& p : corpus) {
      const auto l = ehrhart_polynomial(p);
      for (long n = 1; n <= 4; ++n)
        o.require(evaluate_at_q_integers(l, n) == RationalFunction(oracle::sigma_brute(p, n)),
                  name_of(p) + " n=" + std::to_string(n));
    }
  });

  criterion(5, "series invariants on the corpus: numerator degree, delta_0, delta_1, truncation", 0,
            [&](Outcome& o) {
              for (const auto& p : corpus) {
                const auto s = series(p);
                const std::size_t t = s.t_index();
                o.require(s.numerator().max_degree(t) <= Integer(p.vertex_count() - 1), "degree " + name_of(p));
                const auto dv = delta_vector(s);
                o.require(dv.entries.at(0).is_one(), "delta_0 " + name_of(p));
                LaurentPolynomial d1 = oracle::sigma_brute(p, 1);
                for (const auto& v : p.vertices()) d1 -= LaurentPolynomial::monomial(v);
                const LaurentPolynomial got = dv.entries.size() > 1 ? dv.entries[1] : LaurentPolynomial(p.ambient_dim());
                o.require(got == d1, "delta_1 " + name_of(p));
                LatticeVector grading(p.ambient_dim() + 1);
                grading[t] = 1;
                const auto e = oracle::expand_truncated(s.to_rational_function(), grading, 4);
                for (long n = 1; n <= 4; ++n)
                  o.require(e.coefficient_of(t, n) == oracle::sigma_brute(p, n),
                            "truncation " + name_of(p) + " n=" + std::to_string(n));
              }
            });

  criterion(6, "Brion and vertex-cone sum identities on the corpus", 0, [&](Outcome& o) {
    for (const auto& p : corpus) {
      o.require(brion_sum(p) == RationalFunction(oracle::sigma_brute(p, 1)), "Brion " + name_of(p));
      o.require(vertex_cone_sum_check(p), "sum to one " + name_of(p));
    }
  });

  criterion(7, "Stanley reciprocity: rays, quadrant, square cone, corpus vertex cones", 0, [&](Outcome& o) {
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t i = 0; i < n; ++i) {
        o.require(stanley_reciprocity_check(PointedCone{LatticeVector::zero(n), {LatticeVector::unit(n, i)}}),
                  "ray e" + std::to_string(i + 1));
        o.require(stanley_reciprocity_check(PointedCone{LatticeVector::zero(n), {-LatticeVector::unit(n, i)}}),
                  "ray -e" + std::to_string(i + 1));
      }
    o.require(stanley_reciprocity_check(PointedCone{LatticeVector{0, 0}, {LatticeVector{1, 0}, LatticeVector{0, 1}}}),
              "quadrant");
    o.require(stanley_reciprocity_check(cone_over(test::unit_square())), "cone over the unit square");
    for (const auto& p : corpus)
      for (std::size_t i = 0; i < p.vertex_count(); ++i)
        o.require(stanley_reciprocity_check(shifted_vertex_cone(p, i)),
                  "vertex cone " + std::to_string(i) + " of " + name_of(p));
  });

  criterion(8, "reciprocity L_P([-n]_q) = (-1)^d sigma_{nP interior}(1/q) on the corpus, n=1..3", 0,
            [&](Outcome& o) {
              for (const auto& p : corpus) {
                const auto l = ehrhart_polynomial(p);
                for (long n = 1; n <= 3; ++n) {
                  LaurentPolynomial rhs =
                      invert_variables(oracle::sigma_brute(p, n, true), test::all_vars(p.ambient_dim()));
                  if (p.dim() % 2) rhs = -rhs;
                  o.require(evaluate_at_q_integers(l, -n) == RationalFunction(rhs),
                            name_of(p) + " n=" + std::to_string(n));
                }
              }
            });

  criterion(9, "series and polynomial translation, 5 random shifts per corpus polytope", 0, [&](Outcome& o) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> any(-3, 3), nonneg(0, 2);
    for (const auto& p : corpus)
      for (int k = 0; k < 5; ++k) {
        LatticeVector w(p.ambient_dim()), u(p.ambient_dim());
        for (std::size_t i = 0; i < w.size(); ++i) {
          w[i] = any(rng);
          u[i] = nonneg(rng);
        }
        o.require(translate_series_check(p, w), "series " + name_of(p) + " + " + w.to_string());
        o.require(translate_polynomial_check(p, u), "polynomial " + name_of(p) + " + " + u.to_string());
      }
  });

  criterion(10, "q=1 specialization gives classical counts n=1..5 of degree d", 0, [&](Outcome& o) {
    o.require(classical_counts_from_series(test::unit_square(), 5) == std::vector<Integer>{4, 9, 16, 25, 36},
              "unit square counts");
    for (const auto& p : corpus) {
      const auto counts = classical_counts_from_series(p, 5);
      for (long n = 1; n <= 5; ++n)
        o.require(counts.at(n - 1) == Integer(oracle::enumerate_dilate(p, n).size()),
                  name_of(p) + " n=" + std::to_string(n));
      if (p.dim() + 2 <= 5) o.require(test::finite_difference_degree(counts, p.dim()), "degree " + name_of(p));
    }
  });

  criterion(11, "(1 + q[n]_q - [n]_q) = q^n for n=-4..4", 0, [](Outcome& o) {
    for (long n = -4; n <= 4; ++n) o.require(q_integer_identity_check(n), "n=" + std::to_string(n));
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
