#include "mbe/rational_function.hpp"

#include <string>

#include "mbe/error.hpp"

namespace mbe {

RationalFunction::RationalFunction(LaurentPolynomial numerator,
                                   std::span<const LatticeVector> factors)
    : numerator_(std::move(numerator)) {
  for (const auto& a : factors) add_factor(a, 1);
  drop_denominator_if_zero();
}

RationalFunction::RationalFunction(LaurentPolynomial numerator,
                                   std::span<const BinomialFactor> factors)
    : numerator_(std::move(numerator)) {
  for (const auto& f : factors) add_factor(f.exponent, f.multiplicity);
  drop_denominator_if_zero();
}

RationalFunction RationalFunction::geometric(const LatticeVector& a) {
  const LatticeVector factors[] = {a};
  return RationalFunction(LaurentPolynomial::one(a.size()), factors);
}

void RationalFunction::add_factor(const LatticeVector& exponent, unsigned multiplicity) {
  if (exponent.size() != arity())
    throw Error(ErrorCode::DimensionMismatch, "binomial exponent has wrong length",
                exponent.to_string());
  if (exponent.is_zero())
    throw Error(ErrorCode::ZeroBinomialExponent, "binomial factor 1 - q^0 vanishes",
                exponent.to_string());
  if (exponent.lex_sign() < 0) {
    // 1/(1 - q^a) = -q^{-a} / (1 - q^{-a})
    LaurentPolynomial flip = LaurentPolynomial::monomial(-exponent, multiplicity % 2 ? -1 : 1);
    for (unsigned k = 1; k < multiplicity; ++k) flip = flip.shifted(-exponent);
    numerator_ *= flip;
    factors_[-exponent] += multiplicity;
  } else {
    factors_[exponent] += multiplicity;
  }
}

void RationalFunction::drop_denominator_if_zero() {
  if (numerator_.is_zero()) factors_.clear();
}

std::vector<BinomialFactor> RationalFunction::denominator() const {
  std::vector<BinomialFactor> out;
  out.reserve(factors_.size());
  for (const auto& [e, k] : factors_) out.push_back(BinomialFactor{e, k});
  return out;
}

LaurentPolynomial RationalFunction::expanded_denominator() const {
  LaurentPolynomial d = LaurentPolynomial::one(arity());
  for (const auto& [e, k] : factors_)
    for (unsigned i = 0; i < k; ++i) d = d.times_binomial(e);
  return d;
}

namespace {

LaurentPolynomial raise_to(LaurentPolynomial num, const std::map<LatticeVector, unsigned>& have,
                           const std::map<LatticeVector, unsigned>& want) {
  for (const auto& [e, k] : want) {
    auto it = have.find(e);
    unsigned present = it == have.end() ? 0 : it->second;
    for (unsigned i = present; i < k; ++i) num = num.times_binomial(e);
  }
  return num;
}

}  // namespace

LaurentPolynomial RationalFunction::numerator_for(
    const std::map<LatticeVector, unsigned>& denominator) const {
  for (const auto& [e, k] : factors_) {
    auto it = denominator.find(e);
    if (it == denominator.end() || it->second < k)
      throw Error(ErrorCode::InvariantViolation,
                  "target denominator lacks a factor of the rational function", e.to_string());
  }
  return raise_to(numerator_, factors_, denominator);
}

std::map<LatticeVector, unsigned> common_denominator(std::span<const RationalFunction> fs) {
  std::map<LatticeVector, unsigned> common;
  for (const auto& f : fs)
    for (const auto& [e, k] : f.factor_multiplicities()) {
      auto& slot = common[e];
      if (slot < k) slot = k;
    }
  return common;
}

std::optional<LaurentPolynomial> divide_by_binomial(const LaurentPolynomial& p, const LatticeVector& a) {
  if (a.size() != p.arity())
    throw Error(ErrorCode::DimensionMismatch, "binomial exponent has wrong length", a.to_string());
  if (a.is_zero()) throw Error(ErrorCode::ZeroBinomialExponent, "binomial factor 1 - q^0 vanishes");
  if (p.is_zero()) return p;
  // Peel the lowest term, ordered by height along step and then lex; this
  // order is compatible with adding step, and an exact quotient never
  // rises above max height(p) - |step|^2.
  const bool up = a.lex_sign() > 0;
  const LatticeVector step = up ? a : -a;
  using Key = std::pair<Integer, LatticeVector>;
  std::map<Key, Integer> rest;
  Integer top = dot(step, p.terms().front().exponent);
  for (const auto& t : p.terms()) {
    Integer h = dot(step, t.exponent);
    if (h > top) top = h;
    rest.emplace(Key{std::move(h), t.exponent}, t.coefficient);
  }
  const Integer norm = dot(step, step);
  const Integer limit = top - norm;
  std::vector<Term> quotient;
  while (!rest.empty()) {
    auto it = rest.begin();
    if (it->first.first > limit) return std::nullopt;
    const Key key = it->first;
    const Integer c = it->second;
    rest.erase(it);
    quotient.push_back(Term{key.second, c});
    const Key next{key.first + norm, key.second + step};
    auto& slot = rest[next];
    slot += c;
    if (slot == 0) rest.erase(next);
  }
  // quotient is p / (1 - q^step); for the flipped direction
  // 1 - q^a = -q^a (1 - q^{-a})
  LaurentPolynomial q = LaurentPolynomial::from_terms(p.arity(), std::move(quotient));
  if (!up) q = (-q).shifted(step);
  return q;
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction r = *this;
  for (auto it = r.factors_.begin(); it != r.factors_.end();) {
    while (it->second > 0) {
      auto q = divide_by_binomial(r.numerator_, it->first);
      if (!q) break;
      r.numerator_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? r.factors_.erase(it) : std::next(it);
  }
  return r;
}

RationalFunction sum(std::span<const RationalFunction> terms, std::size_t arity) {
  const auto common = common_denominator(terms);
  LaurentPolynomial num(arity);
  for (const auto& t : terms) num += t.numerator_for(common);
  std::vector<BinomialFactor> factors;
  for (const auto& [e, k] : common) factors.push_back({e, k});
  return RationalFunction(std::move(num), std::span<const BinomialFactor>(factors));
}

CommonForm common_form(const RationalFunction& a, const RationalFunction& b) {
  if (a.arity() != b.arity())
    throw Error(ErrorCode::DimensionMismatch, "rational functions of different arity",
                "[" + std::to_string(a.arity()) + "," + std::to_string(b.arity()) + "]");
  std::map<LatticeVector, unsigned> common = a.factor_multiplicities();
  for (const auto& [e, k] : b.factor_multiplicities()) {
    auto& slot = common[e];
    if (slot < k) slot = k;
  }
  return CommonForm{raise_to(a.numerator(), a.factor_multiplicities(), common),
                    raise_to(b.numerator(), b.factor_multiplicities(), common), common};
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero() && other.arity() == arity()) return *this;
  CommonForm c = common_form(*this, other);
  numerator_ = std::move(c.a_numerator) + c.b_numerator;
  factors_ = std::move(c.denominator);
  drop_denominator_if_zero();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (other.arity() != arity())
    throw Error(ErrorCode::DimensionMismatch, "rational functions of different arity");
  numerator_ *= other.numerator_;
  for (const auto& [e, k] : other.factors_) factors_[e] += k;
  drop_denominator_if_zero();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const LaurentPolynomial& p) {
  numerator_ *= p;
  drop_denominator_if_zero();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.numerator_ = -r.numerator_;
  return r;
}

RationalFunction RationalFunction::map_exponents(
    std::size_t new_arity, const std::function<LatticeVector(const LatticeVector&)>& map) const {
  RationalFunction r(numerator_.map_exponents(new_arity, map));
  for (const auto& [e, k] : factors_) {
    LatticeVector image = map(e);
    if (image.is_zero())
      throw Error(ErrorCode::VanishingDenominatorFactor,
                  "denominator factor (1 - q^a) specializes to zero", e.to_string());
    r.add_factor(image, k);
  }
  r.drop_denominator_if_zero();
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  CommonForm c = common_form(a, b);
  return c.a_numerator == c.b_numerator;
}

LaurentPolynomial numerator_over(const RationalFunction& r,
                                 std::span<const LatticeVector> factors) {
  std::map<LatticeVector, unsigned> remaining = r.factor_multiplicities();
  LaurentPolynomial num = r.numerator();
  for (const auto& w : factors) {
    if (w.is_zero())
      throw Error(ErrorCode::ZeroBinomialExponent, "binomial factor 1 - q^0 vanishes",
                  w.to_string());
    const bool flipped = w.lex_sign() < 0;
    const LatticeVector key = flipped ? -w : w;
    auto it = remaining.find(key);
    if (it != remaining.end() && it->second > 0) {
      // (1 - q^w) = -q^w (1 - q^{-w}) when the stored factor is 1 - q^{-w}.
      if (flipped) num = (-num).shifted(w);
      if (--it->second == 0) remaining.erase(it);
    } else {
      num = num.times_binomial(w);
    }
  }
  if (!remaining.empty())
    throw Error(ErrorCode::InvariantViolation,
                "rational function has a denominator factor outside the requested denominator",
                remaining.begin()->first.to_string());
  return num;
}

RationalFunction invert_variables(const RationalFunction& r, const std::set<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= r.arity())
      throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(v));
  return r.map_exponents(r.arity(), [&](const LatticeVector& e) {
    LatticeVector x = e;
    for (auto v : vars) x[v] = -x[v];
    return x;
  });
}

RationalFunction specialize_ones(const RationalFunction& r, const std::set<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= r.arity())
      throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(v));
  return r.map_exponents(r.arity(), [&](const LatticeVector& e) {
    LatticeVector x = e;
    for (auto v : vars) x[v] = 0;
    return x;
  });
}

RationalFunction substitute_monomial(const RationalFunction& r, std::size_t var_index,
                                     const LatticeVector& shift) {
  if (var_index >= r.arity())
    throw Error(ErrorCode::IndexOutOfRange, "substitution variable out of range",
                std::to_string(var_index));
  if (shift.size() != r.arity() || shift[var_index] != 0)
    throw Error(ErrorCode::InvalidArgument, "invalid substitution monomial", shift.to_string());
  return r.map_exponents(r.arity(), [&](const LatticeVector& e) {
    return e + shift * e[var_index];
  });
}

}  // namespace mbe
