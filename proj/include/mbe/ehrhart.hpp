#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "mbe/laurent.hpp"
#include "mbe/polytope.hpp"
#include "mbe/rational_function.hpp"

namespace mbe {

/// Multibasic Ehrhart series in the displayed form
///   (delta_0 + delta_1 t + ... + delta_{m-1} t^{m-1}) / prod_i (1 - q^{v_i} t).
/// The numerator lives in N+1 variables (q_1..q_N, t); t is the last one.
class EhrhartSeries {
 public:
  EhrhartSeries(LaurentPolynomial numerator, std::vector<LatticeVector> vertices);

  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  const std::vector<LatticeVector>& denominator_vertices() const noexcept { return vertices_; }
  std::size_t ambient_dim() const noexcept { return numerator_.arity() - 1; }
  std::size_t t_index() const noexcept { return ambient_dim(); }
  /// Exponents (v_i, 1) of the denominator factors, in vertex order.
  std::vector<LatticeVector> denominator_exponents() const;
  RationalFunction to_rational_function() const;

 private:
  LaurentPolynomial numerator_;
  std::vector<LatticeVector> vertices_;
};

/// The t-coefficients of the series numerator, delta_0..delta_{m-1}.
struct DeltaVector {
  std::vector<LaurentPolynomial> entries;
};

EhrhartSeries series(const Polytope& p);
DeltaVector delta_vector(const Polytope& p);
DeltaVector delta_vector(const EhrhartSeries& s);

/// [n]_q = (1 - q^n)/(1 - q) in variable `var` of an `arity`-variate ring.
class QInteger {
 public:
  explicit QInteger(Integer n) : n_(std::move(n)) {}

  const Integer& n() const noexcept { return n_; }
  /// 1 + q + ... + q^{n-1} for n >= 0; -(q^-1 + ... + q^n) for n < 0.
  LaurentPolynomial polynomial(std::size_t arity, std::size_t var) const;
  /// (1 - q^n) / (1 - q) kept as a factored rational function.
  RationalFunction rational(std::size_t arity, std::size_t var) const;

 private:
  Integer n_;
};

/// Polynomial in x_1..x_N whose coefficients are rational functions of q.
class EhrhartPolynomial {
 public:
  explicit EhrhartPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  /// Nonzero coefficients keyed by the exponent vector of the x-monomial.
  const std::map<LatticeVector, RationalFunction>& coefficients() const noexcept {
    return coefficients_;
  }
  RationalFunction coefficient(const LatticeVector& monomial) const;
  RationalFunction constant_part() const;
  /// Largest total degree among nonzero coefficients (0 for constants).
  Integer total_degree() const;

  void add(const LatticeVector& monomial, const RationalFunction& value);

  /// Product with a polynomial in x whose coefficients are Laurent
  /// polynomials in q (keyed like coefficients()).
  EhrhartPolynomial times(const std::map<LatticeVector, LaurentPolynomial>& factor) const;

 private:
  std::size_t num_vars_;
  std::map<LatticeVector, RationalFunction> coefficients_;
};

/// Coefficients of prod_k (1 + q_k x_k - x_k)^{exponent_k}, keyed by x-monomial.
std::map<LatticeVector, LaurentPolynomial> q_binomial_product(const LatticeVector& exponent);

/// sum_i sigma_{C_i}(q) prod_k (1 + q_k x_k - x_k)^{v_ik}. Requires every
/// vertex in the nonnegative orthant (NegativeOrthantViolation otherwise).
EhrhartPolynomial ehrhart_polynomial(const Polytope& p);

/// L([n]_{q_1}, ..., [n]_{q_N}) by substituting q-integers into the expanded polynomial.
RationalFunction evaluate_at_q_integers(const EhrhartPolynomial& l, const Integer& n);

/// sum_i sigma_{C_i}(q) q^{n v_i}: the same value computed from vertex cones.
RationalFunction evaluate_via_vertex_cones(const Polytope& p, const Integer& n);

/// sigma_{nP interior}(q) for n = 1..bound (entry n-1), by enumeration.
std::vector<LaurentPolynomial> interior_series(const Polytope& p, std::size_t bound);

/// All q_i -> 1: a rational function in t alone (arity 1).
RationalFunction specialize_classical(const EhrhartSeries& s);
/// q_i -> q^{lambda_i}: a rational function in (q, t). Throws
/// NonGenericLinearForm when two vertices share a value of lambda.
RationalFunction specialize_q_ehrhart(const EhrhartSeries& s, const std::vector<Integer>& lambda);
/// The same substitution without the genericity requirement.
RationalFunction substitute_linear_form(const EhrhartSeries& s, const std::vector<Integer>& lambda);

// Identity checks; each returns true when the identity holds exactly.

/// Series of P+w equals the series of P with t -> q^w t, and
/// delta_k(P+w) == delta_k(P) q^{kw}.
bool translate_series_check(const Polytope& p, const LatticeVector& w);
/// L_{P+w}(x) == L_P(x) prod_k (1 + q_k x_k - x_k)^{w_k}, coefficientwise.
bool translate_polynomial_check(const Polytope& p, const LatticeVector& w);
/// sum_i sigma_{C_i}(q) == 1.
bool vertex_cone_sum_check(const Polytope& p);
/// L([-n]_q) == (-1)^d sigma_{nP interior}(1/q).
bool reciprocity_check(const Polytope& p, const Integer& n);
/// Per vertex: 1/(1 - q^{-v} t^{-1}) + q^v t/(1 - q^v t) == 0. When P is in
/// the nonnegative orthant, additionally L([n]_q) == sum_i sigma_{C_i} q^{n v_i}
/// for |n| <= bound.
bool bilateral_cancellation_check(const Polytope& p, std::size_t bound);

}  // namespace mbe
