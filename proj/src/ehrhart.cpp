#include "mbe/ehrhart.hpp"

#include <set>
#include <string>

#include "mbe/cones.hpp"
#include "mbe/error.hpp"
#include "mbe/oracle.hpp"
#include "mbe/transforms.hpp"

namespace mbe {

EhrhartSeries::EhrhartSeries(LaurentPolynomial numerator, std::vector<LatticeVector> vertices)
    : numerator_(std::move(numerator)), vertices_(std::move(vertices)) {
  if (numerator_.arity() == 0)
    throw Error(ErrorCode::DimensionMismatch, "series numerator needs the t variable");
  for (const auto& v : vertices_)
    if (v.size() + 1 != numerator_.arity())
      throw Error(ErrorCode::DimensionMismatch, "vertex length does not match the series",
                  v.to_string());
}

std::vector<LatticeVector> EhrhartSeries::denominator_exponents() const {
  std::vector<LatticeVector> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v.extended(1));
  return out;
}

RationalFunction EhrhartSeries::to_rational_function() const {
  return RationalFunction(numerator_, denominator_exponents());
}

EhrhartSeries series(const Polytope& p) {
  const RationalFunction cone_transform = sigma_pointed(cone_over(p));
  std::vector<LatticeVector> exponents;
  for (const auto& v : p.vertices()) exponents.push_back(v.extended(1));
  EhrhartSeries s(numerator_over(cone_transform, exponents), p.vertices());

  const std::size_t t = s.t_index();
  const Integer m = p.vertex_count();
  if (s.numerator().min_degree(t) < 0 || s.numerator().max_degree(t) > m - 1)
    throw Error(ErrorCode::InvariantViolation, "series numerator has t-degree outside [0, m-1]");
  if (!s.numerator().coefficient_of(t, 0).is_one())
    throw Error(ErrorCode::InvariantViolation, "constant term of the series numerator is not 1");
  return s;
}

DeltaVector delta_vector(const EhrhartSeries& s) {
  DeltaVector d;
  for (std::size_t k = 0; k < s.denominator_vertices().size(); ++k)
    d.entries.push_back(s.numerator().coefficient_of(s.t_index(), Integer(k)));
  return d;
}

DeltaVector delta_vector(const Polytope& p) {
  DeltaVector d = delta_vector(series(p));
  LaurentPolynomial expected = sigma_polytope(p);
  for (const auto& v : p.vertices()) expected -= LaurentPolynomial::monomial(v);
  const LaurentPolynomial delta1 =
      d.entries.size() > 1 ? d.entries[1] : LaurentPolynomial(p.ambient_dim());
  if (delta1 != expected)
    throw Error(ErrorCode::InvariantViolation,
                "delta_1 differs from sigma_P minus the vertex monomials");
  return d;
}

LaurentPolynomial QInteger::polynomial(std::size_t arity, std::size_t var) const {
  std::vector<Term> terms;
  if (n_ >= 0) {
    for (Integer j = 0; j < n_; ++j) {
      LatticeVector e(arity);
      e[var] = j;
      terms.push_back(Term{e, 1});
    }
  } else {
    for (Integer j = n_; j < 0; ++j) {
      LatticeVector e(arity);
      e[var] = j;
      terms.push_back(Term{e, -1});
    }
  }
  return LaurentPolynomial::from_terms(arity, std::move(terms));
}

RationalFunction QInteger::rational(std::size_t arity, std::size_t var) const {
  LatticeVector qn(arity);
  qn[var] = n_;
  const LaurentPolynomial num = LaurentPolynomial::one(arity) - LaurentPolynomial::monomial(qn);
  const LatticeVector factors[] = {LatticeVector::unit(arity, var)};
  return RationalFunction(num, factors);
}

RationalFunction EhrhartPolynomial::coefficient(const LatticeVector& monomial) const {
  auto it = coefficients_.find(monomial);
  if (it == coefficients_.end()) return RationalFunction(num_vars_);
  return it->second;
}

RationalFunction EhrhartPolynomial::constant_part() const {
  return coefficient(LatticeVector::zero(num_vars_));
}

Integer EhrhartPolynomial::total_degree() const {
  Integer best = 0;
  for (const auto& [mono, value] : coefficients_) best = std::max(best, mono.total_degree());
  return best;
}

void EhrhartPolynomial::add(const LatticeVector& monomial, const RationalFunction& value) {
  if (monomial.size() != num_vars_)
    throw Error(ErrorCode::DimensionMismatch, "monomial has wrong length", monomial.to_string());
  if (value.is_zero()) return;
  auto it = coefficients_.find(monomial);
  if (it == coefficients_.end()) {
    coefficients_.emplace(monomial, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) coefficients_.erase(it);
}

EhrhartPolynomial EhrhartPolynomial::times(
    const std::map<LatticeVector, LaurentPolynomial>& factor) const {
  EhrhartPolynomial out(num_vars_);
  for (const auto& [mono, value] : coefficients_)
    for (const auto& [fmono, fcoef] : factor) out.add(mono + fmono, value * fcoef);
  return out;
}

std::map<LatticeVector, LaurentPolynomial> q_binomial_product(const LatticeVector& exponent) {
  const std::size_t n = exponent.size();
  for (const auto& e : exponent)
    if (e < 0)
      throw Error(ErrorCode::NegativeOrthantViolation, "negative exponent in binomial product",
                  exponent.to_string());
  std::map<LatticeVector, LaurentPolynomial> out;
  out.emplace(LatticeVector::zero(n), LaurentPolynomial::one(n));
  for (std::size_t k = 0; k < n; ++k) {
    // (1 + (q_k - 1) x_k)^{e_k} = sum_j C(e_k, j) (q_k - 1)^j x_k^j
    const LaurentPolynomial qk_minus_one =
        LaurentPolynomial::monomial(LatticeVector::unit(n, k)) - LaurentPolynomial::one(n);
    std::map<LatticeVector, LaurentPolynomial> next;
    Integer binom = 1;
    LaurentPolynomial power = LaurentPolynomial::one(n);
    for (Integer j = 0; j <= exponent[k]; ++j) {
      const LaurentPolynomial term = power.scaled(binom);
      for (const auto& [mono, coef] : out) {
        LatticeVector m = mono;
        m[k] += j;
        next.emplace(m, coef * term);
      }
      binom = binom * (exponent[k] - j) / (j + 1);
      power *= qk_minus_one;
    }
    out = std::move(next);
  }
  return out;
}

namespace {

void require_orthant(const Polytope& p) {
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    for (const auto& c : p.vertex(i))
      if (c < 0)
        throw Error(ErrorCode::NegativeOrthantViolation,
                    "vertex " + std::to_string(i) + " " + p.vertex(i).to_string() +
                        " lies outside the nonnegative orthant",
                    std::to_string(i));
}

RationalFunction over(const LaurentPolynomial& num, const std::map<LatticeVector, unsigned>& den) {
  std::vector<BinomialFactor> factors;
  for (const auto& [e, k] : den) factors.push_back(BinomialFactor{e, k});
  return RationalFunction(num, factors);
}

}  // namespace

EhrhartPolynomial ehrhart_polynomial(const Polytope& p) {
  require_orthant(p);
  const std::size_t n = p.ambient_dim();
  const std::vector<RationalFunction> cones = vertex_cone_transforms(p);
  // Every coefficient is kept over one shared denominator so later sums
  // never rescale numerators.
  const auto common = common_denominator(cones);
  std::vector<LaurentPolynomial> numerators;
  for (const auto& c : cones) numerators.push_back(c.numerator_for(common));

  std::map<LatticeVector, LaurentPolynomial> sums;
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    for (const auto& [mono, coef] : q_binomial_product(p.vertex(i))) {
      auto it = sums.find(mono);
      if (it == sums.end()) sums.emplace(mono, numerators[i] * coef);
      else it->second += numerators[i] * coef;
    }
  EhrhartPolynomial l(n);
  for (const auto& [mono, num] : sums) l.add(mono, over(num, common));

  if (!(l.constant_part() == RationalFunction(LaurentPolynomial::one(n))))
    throw Error(ErrorCode::InvariantViolation, "constant part of the polynomial is not 1");
  Integer expected = 0;
  for (const auto& v : p.vertices()) expected = std::max(expected, v.total_degree());
  if (l.total_degree() != expected)
    throw Error(ErrorCode::InvariantViolation,
                "polynomial degree differs from the largest vertex coordinate sum");
  return l;
}

RationalFunction evaluate_at_q_integers(const EhrhartPolynomial& l, const Integer& n) {
  const std::size_t vars = l.num_vars();
  std::vector<RationalFunction> coefs;
  for (const auto& entry : l.coefficients()) coefs.push_back(entry.second);
  const auto common = common_denominator(coefs);

  // Horner in one variable at a time, last variable first; keys shrink to
  // the remaining exponent prefix.
  std::map<LatticeVector, LaurentPolynomial> level;
  for (const auto& [mono, coef] : l.coefficients()) level.emplace(mono, coef.numerator_for(common));
  const QInteger qn(n);
  for (std::size_t k = vars; k-- > 0;) {
    const LaurentPolynomial x = qn.polynomial(vars, k);
    std::map<LatticeVector, std::map<Integer, LaurentPolynomial>> groups;
    for (auto& [mono, num] : level) groups[mono.without(k)][mono[k]] = std::move(num);
    std::map<LatticeVector, LaurentPolynomial> next;
    for (auto& [prefix, by_degree] : groups) {
      LaurentPolynomial acc(vars);
      for (Integer j = by_degree.rbegin()->first; j >= 0; --j) {
        acc *= x;
        auto it = by_degree.find(j);
        if (it != by_degree.end()) acc += it->second;
      }
      next.emplace(prefix, std::move(acc));
    }
    level = std::move(next);
  }
  LaurentPolynomial num = level.empty() ? LaurentPolynomial(vars) : std::move(level.begin()->second);
  std::vector<BinomialFactor> factors;
  for (const auto& [e, k] : common) factors.push_back({e, k});
  return RationalFunction(std::move(num), std::span<const BinomialFactor>(factors));
}

RationalFunction evaluate_via_vertex_cones(const Polytope& p, const Integer& n) {
  std::vector<RationalFunction> cones = vertex_cone_transforms(p);
  for (std::size_t i = 0; i < cones.size(); ++i) cones[i] *= LaurentPolynomial::monomial(p.vertex(i) * n);
  return sum(cones, p.ambient_dim());
}

std::vector<LaurentPolynomial> interior_series(const Polytope& p, std::size_t bound) {
  std::vector<LaurentPolynomial> out;
  for (std::size_t n = 1; n <= bound; ++n) out.push_back(oracle::sigma_brute(p, n, true));
  return out;
}

RationalFunction specialize_classical(const EhrhartSeries& s) {
  const std::size_t t = s.t_index();
  return s.to_rational_function().map_exponents(1, [t](const LatticeVector& e) {
    return LatticeVector(std::vector<Integer>{e[t]});
  });
}

RationalFunction substitute_linear_form(const EhrhartSeries& s, const std::vector<Integer>& lambda) {
  const std::size_t n = s.ambient_dim();
  if (lambda.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "linear form needs " + std::to_string(n) + " entries",
                std::to_string(lambda.size()));
  return s.to_rational_function().map_exponents(2, [&](const LatticeVector& e) {
    Integer q = 0;
    for (std::size_t k = 0; k < n; ++k) q += lambda[k] * e[k];
    return LatticeVector(std::vector<Integer>{q, e[n]});
  });
}

RationalFunction specialize_q_ehrhart(const EhrhartSeries& s, const std::vector<Integer>& lambda) {
  if (lambda.size() != s.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch,
                "linear form needs " + std::to_string(s.ambient_dim()) + " entries",
                std::to_string(lambda.size()));
  const LatticeVector form(lambda);
  const auto& vs = s.denominator_vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (dot(form, vs[i]) == dot(form, vs[j]))
        throw Error(ErrorCode::NonGenericLinearForm,
                    "linear form takes the same value on vertices " + std::to_string(i) +
                        " and " + std::to_string(j),
                    "[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return substitute_linear_form(s, lambda);
}

bool translate_series_check(const Polytope& p, const LatticeVector& w) {
  const EhrhartSeries moved = series(p.translated(w));
  const EhrhartSeries base = series(p);
  const RationalFunction substituted =
      substitute_monomial(base.to_rational_function(), base.t_index(), w.extended(0));
  if (!(moved.to_rational_function() == substituted)) return false;
  const DeltaVector dm = delta_vector(moved), db = delta_vector(base);
  for (std::size_t k = 0; k < db.entries.size(); ++k)
    if (dm.entries[k] != db.entries[k].shifted(w * Integer(k))) return false;
  return true;
}

bool translate_polynomial_check(const Polytope& p, const LatticeVector& w) {
  const EhrhartPolynomial moved = ehrhart_polynomial(p.translated(w));
  const EhrhartPolynomial expected = ehrhart_polynomial(p).times(q_binomial_product(w));
  std::set<LatticeVector> keys;
  for (const auto& [m, c] : moved.coefficients()) keys.insert(m);
  for (const auto& [m, c] : expected.coefficients()) keys.insert(m);
  for (const auto& m : keys)
    if (!(moved.coefficient(m) == expected.coefficient(m))) return false;
  return true;
}

bool vertex_cone_sum_check(const Polytope& p) {
  const RationalFunction total = sum(vertex_cone_transforms(p), p.ambient_dim());
  return total == RationalFunction(LaurentPolynomial::one(p.ambient_dim()));
}

bool reciprocity_check(const Polytope& p, const Integer& n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "reciprocity needs n >= 1");
  const EhrhartPolynomial l = ehrhart_polynomial(p);
  const RationalFunction lhs = evaluate_at_q_integers(l, -n);
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < p.ambient_dim(); ++i) all.insert(i);
  LaurentPolynomial rhs = invert_variables(oracle::sigma_brute(p, n, true), all);
  if (p.dim() % 2) rhs = -rhs;
  return lhs == RationalFunction(rhs);
}

bool bilateral_cancellation_check(const Polytope& p, std::size_t bound) {
  for (const auto& v : p.vertices()) {
    const LatticeVector vt = v.extended(1);
    const RationalFunction negative_side = RationalFunction::geometric(-vt);
    const RationalFunction positive_side =
        RationalFunction::geometric(vt) * LaurentPolynomial::monomial(vt);
    if (!(negative_side + positive_side).is_zero()) return false;
  }
  if (!p.in_nonnegative_orthant()) return true;
  const EhrhartPolynomial l = ehrhart_polynomial(p);
  for (long k = -static_cast<long>(bound); k <= static_cast<long>(bound); ++k)
    if (!(evaluate_at_q_integers(l, k) == evaluate_via_vertex_cones(p, k))) return false;
  return true;
}

}  // namespace mbe
