#include "mbe/oracle.hpp"

#include <algorithm>
#include <set>

#include "mbe/error.hpp"
#include "mbe/linalg.hpp"

namespace mbe::oracle {

bool FacetSystem::contains(const LatticeVector& x, const Integer& dilation) const {
  for (const auto& e : equations)
    if (dot(e.normal, x) != e.offset * dilation) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) > h.offset * dilation) return false;
  return true;
}

bool FacetSystem::in_relative_interior(const LatticeVector& x, const Integer& dilation) const {
  for (const auto& e : equations)
    if (dot(e.normal, x) != e.offset * dilation) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) >= h.offset * dilation) return false;
  return true;
}

bool ConeFacets::contains(const LatticeVector& x) const {
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (const auto& h : inequalities)
    if (dot(h, x) < 0) return false;
  return true;
}

bool ConeFacets::in_relative_interior(const LatticeVector& x) const {
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  for (const auto& h : inequalities)
    if (dot(h, x) <= 0) return false;
  return true;
}

ConeFacets cone_facets(const std::vector<LatticeVector>& generators, std::size_t dim) {
  ConeFacets out;
  out.equations = linalg::orthogonal_complement(generators, dim);
  std::vector<std::size_t> basis_idx = linalg::independent_subset(generators);
  const std::size_t r = basis_idx.size();
  if (r == 0) return out;
  std::vector<LatticeVector> basis;
  for (auto i : basis_idx) basis.push_back(generators[i]);

  std::set<LatticeVector> seen;
  const std::size_t k = generators.size();
  std::vector<bool> mask(k, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r - 1), true);
  do {
    std::vector<LatticeVector> subset;
    for (std::size_t i = 0; i < k; ++i)
      if (mask[i]) subset.push_back(generators[i]);
    if (linalg::rank(subset) != r - 1) continue;
    // Normal h = sum_j c_j basis_j inside the span, orthogonal to the subset:
    // sum_j c_j <basis_j, s> = 0 for every s in the subset.
    std::vector<LatticeVector> constraints;
    for (const auto& s : subset) {
      LatticeVector row(r);
      for (std::size_t j = 0; j < r; ++j) row[j] = dot(basis[j], s);
      constraints.push_back(row);
    }
    auto kernel = linalg::orthogonal_complement(constraints, r);
    if (kernel.size() != 1) continue;
    LatticeVector h = LatticeVector::zero(dim);
    for (std::size_t j = 0; j < r; ++j) h += basis[j] * kernel[0][j];
    h = h.primitive();
    bool pos = false, neg = false;
    for (const auto& g : generators) {
      Integer v = dot(h, g);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) continue;
    if (neg) h = -h;
    if (seen.insert(h).second) out.inequalities.push_back(h);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

FacetSystem facet_system(const Polytope& p) {
  // Facets of P are the facets of the cone over P cut at height 1:
  // <(a, b), (x, 1)> >= 0  <=>  <-a, x> <= b.
  const std::size_t n = p.ambient_dim();
  PointedCone c = cone_over(p);
  ConeFacets cf = cone_facets(c.generators, n + 1);
  FacetSystem out;
  auto split = [n](const LatticeVector& h) {
    LatticeVector a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = -h[i];
    return Halfspace{a, h[n]};
  };
  for (const auto& h : cf.inequalities) out.inequalities.push_back(split(h));
  for (const auto& h : cf.equations) out.equations.push_back(split(h));
  return out;
}

namespace {

template <typename Visit>
void scan_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi, Visit&& visit) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  LatticeVector x(lo);
  for (;;) {
    visit(x);
    std::size_t i = 0;
    while (i < n) {
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

Integer floor_div(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) q -= 1;
  return q;
}

Integer ceil_div(const Rational& r) { return -floor_div(-r); }

}  // namespace

std::vector<LatticeVector> enumerate_dilate(const Polytope& p, const Integer& n,
                                            bool interior_only) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "dilation factor must be positive");
  const FacetSystem fs = facet_system(p);
  const std::size_t dim = p.ambient_dim();
  std::vector<Integer> lo(dim), hi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    lo[i] = hi[i] = p.vertex(0)[i];
    for (const auto& v : p.vertices()) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
    lo[i] *= n;
    hi[i] *= n;
  }
  std::vector<LatticeVector> out;
  scan_box(lo, hi, [&](const LatticeVector& x) {
    if (interior_only ? fs.in_relative_interior(x, n) : fs.contains(x, n)) out.push_back(x);
  });
  return out;
}

LaurentPolynomial sigma_brute(const Polytope& p, const Integer& n, bool interior_only) {
  auto pts = enumerate_dilate(p, n, interior_only);
  return LaurentPolynomial::sum_of_monomials(p.ambient_dim(), pts);
}

std::vector<LatticeVector> enumerate_cone(const PointedCone& cone, const LatticeVector& grading,
                                          const Integer& bound, bool interior_only) {
  if (!cone.apex.is_zero())
    throw Error(ErrorCode::InvalidArgument, "cone enumeration expects apex at the origin");
  const std::size_t dim = cone.ambient_dim();
  std::vector<Rational> lo(dim, Rational(0)), hi(dim, Rational(0));
  for (const auto& g : cone.generators) {
    const Integer h = dot(grading, g);
    if (h <= 0)
      throw Error(ErrorCode::ZeroHeightDenominatorFactor,
                  "grading must be positive on every generator", g.to_string());
    for (std::size_t i = 0; i < dim; ++i) {
      Rational x = Rational(g[i] * bound, h);
      lo[i] = std::min(lo[i], x);
      hi[i] = std::max(hi[i], x);
    }
  }
  std::vector<Integer> ilo(dim), ihi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ilo[i] = floor_div(lo[i]);
    ihi[i] = ceil_div(hi[i]);
  }
  const ConeFacets cf = cone_facets(cone.generators, dim);
  std::vector<LatticeVector> out;
  scan_box(ilo, ihi, [&](const LatticeVector& x) {
    if (dot(grading, x) > bound) return;
    if (interior_only ? cf.in_relative_interior(x) : cf.contains(x)) out.push_back(x);
  });
  return out;
}

std::vector<LatticeVector> parallelepiped_points_bruteforce(const SimplicialCone& c) {
  const auto& w = c.generators();
  const std::size_t n = c.ambient_dim();
  std::vector<Integer> lo(n, 0), hi(n, 0);
  for (const auto& g : w)
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] < 0) lo[i] += g[i];
      else hi[i] += g[i];
    }
  std::vector<LatticeVector> out;
  scan_box(lo, hi, [&](const LatticeVector& x) {
    auto r = linalg::coordinates_in_basis(w, x);
    if (!r) return;
    for (std::size_t i = 0; i < r->size(); ++i) {
      const Rational& ri = (*r)[i];
      if (c.open_facets()[i] ? (ri <= 0 || ri > 1) : (ri < 0 || ri >= 1)) return;
    }
    out.push_back(x);
  });
  std::sort(out.begin(), out.end());
  return out;
}

LaurentPolynomial truncate(const LaurentPolynomial& p, const LatticeVector& grading,
                           const Integer& bound) {
  std::vector<Term> kept;
  for (const auto& t : p.terms())
    if (dot(grading, t.exponent) <= bound) kept.push_back(t);
  return LaurentPolynomial::from_terms(p.arity(), std::move(kept));
}

LaurentPolynomial expand_truncated(const RationalFunction& r, const LatticeVector& grading,
                                   const Integer& bound) {
  if (grading.size() != r.arity())
    throw Error(ErrorCode::DimensionMismatch, "grading has wrong length", grading.to_string());
  LaurentPolynomial num = r.numerator();
  std::vector<std::pair<LatticeVector, Integer>> factors;  // exponent, positive height
  for (const auto& f : r.denominator()) {
    const Integer h = dot(grading, f.exponent);
    if (h == 0)
      throw Error(ErrorCode::ZeroHeightDenominatorFactor,
                  "denominator factor has height zero under the grading", f.exponent.to_string());
    LatticeVector a = f.exponent;
    for (unsigned k = 0; k < f.multiplicity; ++k) {
      if (h < 0) {
        // 1/(1 - q^a) = -q^{-a} / (1 - q^{-a})
        num = (-num).shifted(-a);
        factors.emplace_back(-a, -h);
      } else {
        factors.emplace_back(a, h);
      }
    }
  }
  if (num.is_zero()) return num;
  Integer lowest = dot(grading, num.terms().front().exponent);
  for (const auto& t : num.terms()) lowest = std::min(lowest, dot(grading, t.exponent));
  const Integer limit = bound - lowest;
  if (limit < 0) return LaurentPolynomial(r.arity());

  LaurentPolynomial series = LaurentPolynomial::one(r.arity());
  for (const auto& [a, h] : factors) {
    std::vector<Term> geo;
    LatticeVector e = LatticeVector::zero(r.arity());
    for (Integer height = 0; height <= limit; height += h) {
      geo.push_back(Term{e, 1});
      e += a;
    }
    series = truncate(series * LaurentPolynomial::from_terms(r.arity(), std::move(geo)), grading,
                      limit);
  }
  return truncate(num * series, grading, bound);
}

}  // namespace mbe::oracle
