#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "mbe/laurent.hpp"

namespace mbe {

/// One factor (1 - q^exponent)^multiplicity of a denominator.
struct BinomialFactor {
  LatticeVector exponent;
  unsigned multiplicity = 1;

  friend bool operator==(const BinomialFactor&, const BinomialFactor&) = default;
};

/// A Laurent polynomial over a product of binomials (1 - q^a).
///
/// Denominators stay factored and are never reduced. Every stored factor
/// exponent is lexicographically positive: a factor (1 - q^a) with a
/// lexicographically negative `a` is rewritten as -q^a (1 - q^-a) and the
/// monomial moves into the numerator. Equality is decided by
/// cross-multiplication, so two representations of the same function
/// compare equal.
class RationalFunction {
 public:
  explicit RationalFunction(std::size_t arity = 0) : numerator_(arity) {}
  explicit RationalFunction(LaurentPolynomial numerator) : numerator_(std::move(numerator)) {}
  /// numerator / prod_i (1 - q^{factors[i]}); throws ZeroBinomialExponent
  /// when a factor exponent is the zero vector.
  RationalFunction(LaurentPolynomial numerator, std::span<const LatticeVector> factors);
  RationalFunction(LaurentPolynomial numerator, std::span<const BinomialFactor> factors);

  /// 1 / (1 - q^a).
  static RationalFunction geometric(const LatticeVector& a);

  std::size_t arity() const noexcept { return numerator_.arity(); }
  const LaurentPolynomial& numerator() const noexcept { return numerator_; }
  /// Factors in lexicographic order of their exponents.
  std::vector<BinomialFactor> denominator() const;
  const std::map<LatticeVector, unsigned>& factor_multiplicities() const noexcept {
    return factors_;
  }
  /// The denominator multiplied out.
  LaurentPolynomial expanded_denominator() const;
  bool is_zero() const noexcept { return numerator_.is_zero(); }

  /// Numerator of this function over `denominator`, which must contain every
  /// factor of this function with at least the same multiplicity.
  LaurentPolynomial numerator_for(const std::map<LatticeVector, unsigned>& denominator) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator*=(const LaurentPolynomial& p);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const LaurentPolynomial& p) { return a *= p; }
  RationalFunction operator-() const;

  /// Applies a linear map to every exponent of the numerator and of the
  /// denominator factors. Throws VanishingDenominatorFactor when a factor
  /// exponent maps to zero.
  /// Cancels denominator factors (1 - q^a) that divide the numerator exactly.
  RationalFunction reduced() const;

  RationalFunction map_exponents(std::size_t new_arity,
                                 const std::function<LatticeVector(const LatticeVector&)>& map) const;

  /// Semantic equality by cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  void add_factor(const LatticeVector& exponent, unsigned multiplicity);
  void drop_denominator_if_zero();

  LaurentPolynomial numerator_;
  std::map<LatticeVector, unsigned> factors_;
};

/// Numerators of `a` and `b` brought over the least common factored
/// denominator (per-exponent maximum multiplicity).
struct CommonForm {
  LaurentPolynomial a_numerator;
  LaurentPolynomial b_numerator;
  std::map<LatticeVector, unsigned> denominator;
};
CommonForm common_form(const RationalFunction& a, const RationalFunction& b);

/// Least common factored denominator of several functions.
std::map<LatticeVector, unsigned> common_denominator(std::span<const RationalFunction> fs);

/// Sum over one common denominator; cheaper than repeated += for many terms.
RationalFunction sum(std::span<const RationalFunction> terms, std::size_t arity);

/// p / (1 - q^a) when the division is exact.
std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const LatticeVector& a);

/// Numerator of `r` over the given (uncanonicalized) denominator
/// prod_i (1 - q^{factors[i]}). Each canonical factor of `r` must match one
/// of `factors` up to sign of the exponent; throws InvariantViolation if `r`
/// has a factor that cannot be matched.
LaurentPolynomial numerator_over(const RationalFunction& r, std::span<const LatticeVector> factors);

RationalFunction invert_variables(const RationalFunction& r, const std::set<std::size_t>& vars);
/// q_i -> 1 for i in `vars`; throws VanishingDenominatorFactor when a factor
/// exponent is supported inside `vars`.
RationalFunction specialize_ones(const RationalFunction& r, const std::set<std::size_t>& vars);
/// t -> q^shift * t where t is variable `var_index`.
RationalFunction substitute_monomial(const RationalFunction& r, std::size_t var_index,
                                     const LatticeVector& shift);

}  // namespace mbe
