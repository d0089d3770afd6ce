#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "mbe/cones.hpp"
#include "mbe/laurent.hpp"
#include "mbe/lattice.hpp"
#include "mbe/polytope.hpp"
#include "mbe/rational_function.hpp"
#include "mbe/serialize.hpp"

namespace mbe::test {

inline Polytope segment(long long a, long long b) {
  return Polytope::from_points({LatticeVector{a}, LatticeVector{b}});
}

// conv{e_1..e_{d+1}} in R^{d+1}
inline Polytope standard_simplex(std::size_t d) {
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i <= d; ++i) pts.push_back(LatticeVector::unit(d + 1, i));
  return Polytope::from_points(pts);
}

// conv{0, e_1..e_d} in R^d
inline Polytope corner_simplex(std::size_t d) {
  std::vector<LatticeVector> pts{LatticeVector::zero(d)};
  for (std::size_t i = 0; i < d; ++i) pts.push_back(LatticeVector::unit(d, i));
  return Polytope::from_points(pts);
}

inline Polytope unit_cube(std::size_t d) {
  std::vector<LatticeVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticeVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (mask >> i) & 1;
    pts.push_back(v);
  }
  return Polytope::from_points(pts);
}

inline Polytope unit_square() { return unit_cube(2); }

inline std::set<std::size_t> all_vars(std::size_t n) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline LaurentPolynomial q(std::size_t arity, std::size_t var, long long power = 1) {
  LatticeVector e(arity);
  e[var] = power;
  return LaurentPolynomial::monomial(e);
}

inline LaurentPolynomial constant(std::size_t arity, long long c) {
  return LaurentPolynomial::constant(arity, c);
}

inline LaurentPolynomial random_laurent(std::mt19937& rng, std::size_t arity, int max_terms = 4,
                                        int range = 2) {
  std::uniform_int_distribution<int> terms(0, max_terms), exp(-range, range), coef(-3, 3);
  std::vector<Term> ts;
  for (int k = terms(rng); k > 0; --k) {
    LatticeVector e(arity);
    for (std::size_t i = 0; i < arity; ++i) e[i] = exp(rng);
    ts.push_back({e, coef(rng)});
  }
  return LaurentPolynomial::from_terms(arity, ts);
}

inline LatticeVector random_nonzero_vector(std::mt19937& rng, std::size_t dim, int range = 2) {
  std::uniform_int_distribution<int> d(-range, range);
  for (;;) {
    LatticeVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = d(rng);
    if (!v.is_zero()) return v;
  }
}

inline RationalFunction random_rational(std::mt19937& rng, std::size_t arity) {
  std::uniform_int_distribution<int> count(0, 2);
  std::vector<LatticeVector> factors;
  for (int k = count(rng); k > 0; --k) factors.push_back(random_nonzero_vector(rng, arity));
  return RationalFunction(random_laurent(rng, arity), factors);
}

// Drops every point lying in the convex hull of the remaining ones.
inline std::vector<LatticeVector> hull_vertices(std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (bool changed = true; changed && pts.size() > 1;) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<LatticeVector> others;
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (j != i) others.push_back(pts[j]);
      if (in_convex_hull(pts[i], others)) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

// Deterministic corpus: integral polytopes in the nonnegative orthant with
// ambient dimension <= 3, coordinates in [0,4], at most 8 vertices, some of
// them lower dimensional.
inline std::vector<Polytope> random_corpus(std::size_t count = 24, unsigned seed = 20261018) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coord(0, 4);
  std::vector<Polytope> out;
  for (std::size_t i = 0; out.size() < count; ++i) {
    const std::size_t n = 1 + i % 3;
    const bool flat = n >= 2 && i % 5 == 4;
    const std::size_t npts = n == 1 ? 2 : 2 + rng() % (n == 2 ? 5 : 6);
    std::vector<LatticeVector> pts;
    for (std::size_t k = 0; k < npts; ++k) {
      LatticeVector v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = coord(rng);
      if (flat) v[n - 1] = v[0];
      pts.push_back(v);
    }
    pts = hull_vertices(pts);
    if (pts.size() > 8) continue;
    out.push_back(Polytope::from_points(pts));
  }
  return out;
}

// Lattice-point counts of a d-polytope grow like a degree-d polynomial:
// the (d+1)-st forward difference vanishes and the d-th is a positive constant.
inline bool finite_difference_degree(const std::vector<Integer>& values, std::size_t d) {
  std::vector<Integer> diff = values;
  for (std::size_t k = 0; k < d; ++k) {
    if (diff.size() < 2) return false;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  if (diff.size() < 2) return false;
  for (const auto& x : diff)
    if (x != diff.front() || x <= 0) return false;
  return true;
}

}  // namespace mbe::test

namespace doctest {

template <>
struct StringMaker<mbe::LatticeVector> {
  static String convert(const mbe::LatticeVector& v) { return v.to_string().c_str(); }
};

template <>
struct StringMaker<std::vector<mbe::LatticeVector>> {
  static String convert(const std::vector<mbe::LatticeVector>& vs) {
    std::string s = "{";
    for (const auto& v : vs) s += v.to_string() + " ";
    return (s + "}").c_str();
  }
};

template <>
struct StringMaker<mbe::LaurentPolynomial> {
  static String convert(const mbe::LaurentPolynomial& p) { return mbe::io::to_json(p).dump().c_str(); }
};

template <>
struct StringMaker<mbe::RationalFunction> {
  static String convert(const mbe::RationalFunction& r) { return mbe::io::to_json(r).dump().c_str(); }
};

}  // namespace doctest
