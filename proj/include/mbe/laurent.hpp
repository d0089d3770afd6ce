#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <set>
#include <span>
#include <vector>

#include "mbe/lattice.hpp"

namespace mbe {

struct Term {
  LatticeVector exponent;
  Integer coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial over Z in a fixed number of variables.
///
/// Terms are kept sorted lexicographically by exponent with no zero
/// coefficients, so structural equality is polynomial equality. The empty
/// term list is the zero polynomial. Display order (graded lexicographic)
/// is available through graded_terms().
class LaurentPolynomial {
 public:
  explicit LaurentPolynomial(std::size_t arity = 0) : arity_(arity) {}

  static LaurentPolynomial constant(std::size_t arity, const Integer& c);
  static LaurentPolynomial one(std::size_t arity) { return constant(arity, 1); }
  static LaurentPolynomial monomial(const LatticeVector& exponent, const Integer& c = 1);
  /// Sums duplicate exponents and drops zeros.
  static LaurentPolynomial from_terms(std::size_t arity, std::vector<Term> terms);
  /// The integer-point transform of a finite set: one monomial per point.
  static LaurentPolynomial sum_of_monomials(std::size_t arity,
                                            std::span<const LatticeVector> points);

  std::size_t arity() const noexcept { return arity_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::vector<Term> graded_terms() const;
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  Integer coefficient(const LatticeVector& exponent) const;

  /// Largest / smallest exponent of variable `var` among the terms.
  /// Both return 0 for the zero polynomial.
  Integer max_degree(std::size_t var) const;
  Integer min_degree(std::size_t var) const;

  /// Sum of the coefficients of terms whose exponent in `var` equals `k`,
  /// returned as a polynomial in the remaining variables.
  LaurentPolynomial coefficient_of(std::size_t var, const Integer& k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  LaurentPolynomial scaled(const Integer& c) const;
  /// Multiplication by the monomial q^shift.
  LaurentPolynomial shifted(const LatticeVector& shift) const;
  /// Multiplication by (1 - q^a).
  LaurentPolynomial times_binomial(const LatticeVector& a) const;
  LaurentPolynomial pow(unsigned k) const;

  /// Applies `map` to every exponent; `map` must send vectors of length
  /// arity() to vectors of length `new_arity`. Colliding images are summed.
  LaurentPolynomial map_exponents(std::size_t new_arity,
                                  const std::function<LatticeVector(const LatticeVector&)>& map) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void require_arity(const LaurentPolynomial& other) const;

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Each term c*q^e*t^k becomes c*q^(e + k*shift)*t^k, where t is variable
/// `var_index`. This realizes the substitution t -> q^shift * t. The shift
/// must have length arity() and a zero entry at `var_index`.
LaurentPolynomial substitute_monomial(const LaurentPolynomial& p, std::size_t var_index,
                                      const LatticeVector& shift);

/// q_i -> 1/q_i for every i in `vars`.
LaurentPolynomial invert_variables(const LaurentPolynomial& p, const std::set<std::size_t>& vars);

/// q_i -> 1 for every i in `vars` (arity is kept; the exponents are zeroed).
LaurentPolynomial specialize_ones(const LaurentPolynomial& p, const std::set<std::size_t>& vars);

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p);

}  // namespace mbe
