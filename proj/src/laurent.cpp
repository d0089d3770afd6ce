#include "mbe/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>

#include "mbe/error.hpp"

namespace mbe {
namespace {

bool lex_less(const Term& a, const Term& b) { return a.exponent < b.exponent; }

// Merges two lexicographically sorted term lists, summing coefficients.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    auto cmp = ia->exponent <=> ib->exponent;
    if (cmp < 0) {
      out.push_back(*ia++);
    } else if (cmp > 0) {
      out.push_back(*ib++);
    } else {
      Integer c = ia->coefficient + ib->coefficient;
      if (c != 0) out.push_back(Term{ia->exponent, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, a.end());
  out.insert(out.end(), ib, b.end());
  return out;
}

// Exponents small enough that sums of two never overflow.
constexpr long long kFlatLimit = 1LL << 40;

bool flatten(const std::vector<Term>& terms, std::size_t arity, std::vector<long long>& out) {
  out.resize(terms.size() * arity);
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t k = 0; k < arity; ++k) {
      const Integer& e = terms[i].exponent[k];
      if (e >= kFlatLimit || e <= -kFlatLimit) return false;
      out[i * arity + k] = e.convert_to<long long>();
    }
  return true;
}

bool small_coefficients(const std::vector<Term>& terms) {
  for (const auto& t : terms)
    if (t.coefficient >= (1LL << 31) || t.coefficient <= -(1LL << 31)) return false;
  return true;
}

// k-way merge of the rows small[i] + large[*], each already lex sorted.
template <typename Acc>
std::vector<Term> flat_product(const std::vector<Term>& small, const std::vector<Term>& large,
                               const std::vector<long long>& es, const std::vector<long long>& el,
                               std::size_t arity) {
  std::vector<Acc> cs(small.size()), cl(large.size());
  for (std::size_t i = 0; i < small.size(); ++i) cs[i] = static_cast<Acc>(small[i].coefficient);
  for (std::size_t j = 0; j < large.size(); ++j) cl[j] = static_cast<Acc>(large[j].coefficient);

  auto less = [&](std::size_t i1, std::size_t j1, std::size_t i2, std::size_t j2) {
    for (std::size_t k = 0; k < arity; ++k) {
      const long long x = es[i1 * arity + k] + el[j1 * arity + k];
      const long long y = es[i2 * arity + k] + el[j2 * arity + k];
      if (x != y) return x < y;
    }
    return false;
  };
  using Cursor = std::pair<std::size_t, std::size_t>;
  auto later = [&](const Cursor& a, const Cursor& b) { return less(b.first, b.second, a.first, a.second); };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < small.size(); ++i) heap.push({i, 0});

  std::vector<Term> out;
  std::vector<long long> current(arity);
  Acc acc = 0;
  bool open = false;
  auto flush = [&] {
    if (open && acc != 0) {
      LatticeVector e(arity);
      for (std::size_t k = 0; k < arity; ++k) e[k] = current[k];
      out.push_back(Term{std::move(e), Integer(acc)});
    }
  };
  while (!heap.empty()) {
    const auto [i, j] = heap.top();
    heap.pop();
    bool same = open;
    for (std::size_t k = 0; same && k < arity; ++k) same = current[k] == es[i * arity + k] + el[j * arity + k];
    if (!same) {
      flush();
      for (std::size_t k = 0; k < arity; ++k) current[k] = es[i * arity + k] + el[j * arity + k];
      acc = 0;
      open = true;
    }
    acc += Acc(cs[i]) * cl[j];
    if (j + 1 < large.size()) heap.push({i, j + 1});
  }
  flush();
  return out;
}

std::vector<Term> merge_all(std::vector<std::vector<Term>> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back(merge_terms(parts[i], parts[i + 1]));
    if (parts.size() % 2) next.push_back(std::move(parts.back()));
    parts = std::move(next);
  }
  return std::move(parts.front());
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(std::size_t arity, const Integer& c) {
  LaurentPolynomial p(arity);
  if (c != 0) p.terms_.push_back(Term{LatticeVector::zero(arity), c});
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const LatticeVector& exponent, const Integer& c) {
  LaurentPolynomial p(exponent.size());
  if (c != 0) p.terms_.push_back(Term{exponent, c});
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(std::size_t arity, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponent.size() != arity)
      throw Error(ErrorCode::DimensionMismatch, "term exponent has wrong length",
                  t.exponent.to_string());
  std::sort(terms.begin(), terms.end(), lex_less);
  LaurentPolynomial p(arity);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coefficient += t.coefficient;
      if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
    } else if (t.coefficient != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::sum_of_monomials(std::size_t arity,
                                                      std::span<const LatticeVector> points) {
  std::vector<Term> terms;
  terms.reserve(points.size());
  for (const auto& pt : points) terms.push_back(Term{pt, 1});
  return from_terms(arity, std::move(terms));
}

std::vector<Term> LaurentPolynomial::graded_terms() const {
  std::vector<Term> out = terms_;
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    return graded_lex_less(a.exponent, b.exponent);
  });
  return out;
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].coefficient == 1 && terms_[0].exponent.is_zero();
}

Integer LaurentPolynomial::coefficient(const LatticeVector& exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{exponent, 0}, lex_less);
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

Integer LaurentPolynomial::max_degree(std::size_t var) const {
  if (var >= arity_)
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(var));
  if (terms_.empty()) return 0;
  Integer m = terms_.front().exponent[var];
  for (const auto& t : terms_) m = std::max(m, t.exponent[var]);
  return m;
}

Integer LaurentPolynomial::min_degree(std::size_t var) const {
  if (var >= arity_)
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(var));
  if (terms_.empty()) return 0;
  Integer m = terms_.front().exponent[var];
  for (const auto& t : terms_) m = std::min(m, t.exponent[var]);
  return m;
}

LaurentPolynomial LaurentPolynomial::coefficient_of(std::size_t var, const Integer& k) const {
  if (var >= arity_)
    throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(var));
  std::vector<Term> picked;
  for (const auto& t : terms_)
    if (t.exponent[var] == k) picked.push_back(Term{t.exponent.without(var), t.coefficient});
  return from_terms(arity_ - 1, std::move(picked));
}

void LaurentPolynomial::require_arity(const LaurentPolynomial& other) const {
  if (arity_ != other.arity_)
    throw Error(ErrorCode::DimensionMismatch, "polynomials of different arity",
                "[" + std::to_string(arity_) + "," + std::to_string(other.arity_) + "]");
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  require_arity(other);
  terms_ = merge_terms(terms_, other.terms_);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  require_arity(other);
  terms_ = merge_terms(terms_, (-other).terms_);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.require_arity(b);
  const LaurentPolynomial& small = a.size() <= b.size() ? a : b;
  const LaurentPolynomial& large = a.size() <= b.size() ? b : a;
  LaurentPolynomial r(a.arity_);
  if (small.is_zero()) return r;
  std::vector<long long> es, el;
  if (flatten(small.terms_, a.arity_, es) && flatten(large.terms_, a.arity_, el)) {
    if (small_coefficients(small.terms_) && small_coefficients(large.terms_))
      r.terms_ = flat_product<__int128>(small.terms_, large.terms_, es, el, a.arity_);
    else
      r.terms_ = flat_product<Integer>(small.terms_, large.terms_, es, el, a.arity_);
    return r;
  }
  std::vector<std::vector<Term>> parts;
  parts.reserve(small.size());
  for (const auto& t : small.terms_) {
    std::vector<Term> part;
    part.reserve(large.size());
    for (const auto& u : large.terms_)
      part.push_back(Term{u.exponent + t.exponent, u.coefficient * t.coefficient});
    parts.push_back(std::move(part));
  }
  r.terms_ = merge_all(std::move(parts));
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

LaurentPolynomial LaurentPolynomial::scaled(const Integer& c) const {
  if (c == 0) return LaurentPolynomial(arity_);
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.coefficient *= c;
  return r;
}

LaurentPolynomial LaurentPolynomial::shifted(const LatticeVector& shift) const {
  if (shift.size() != arity_)
    throw Error(ErrorCode::DimensionMismatch, "shift has wrong length", shift.to_string());
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.exponent += shift;
  return r;
}

LaurentPolynomial LaurentPolynomial::times_binomial(const LatticeVector& a) const {
  LaurentPolynomial r(arity_);
  r.terms_ = merge_terms(terms_, (-shifted(a)).terms_);
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = one(arity_);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::map_exponents(
    std::size_t new_arity, const std::function<LatticeVector(const LatticeVector&)>& map) const {
  std::vector<Term> mapped;
  mapped.reserve(terms_.size());
  for (const auto& t : terms_) mapped.push_back(Term{map(t.exponent), t.coefficient});
  return from_terms(new_arity, std::move(mapped));
}

LaurentPolynomial substitute_monomial(const LaurentPolynomial& p, std::size_t var_index,
                                      const LatticeVector& shift) {
  if (var_index >= p.arity())
    throw Error(ErrorCode::IndexOutOfRange, "substitution variable out of range",
                std::to_string(var_index));
  if (shift.size() != p.arity())
    throw Error(ErrorCode::DimensionMismatch, "substitution monomial has wrong length",
                shift.to_string());
  if (shift[var_index] != 0)
    throw Error(ErrorCode::InvalidArgument,
                "substitution monomial must not involve the substituted variable",
                shift.to_string());
  return p.map_exponents(p.arity(), [&](const LatticeVector& e) {
    return e + shift * e[var_index];
  });
}

LaurentPolynomial invert_variables(const LaurentPolynomial& p, const std::set<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= p.arity())
      throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(v));
  return p.map_exponents(p.arity(), [&](const LatticeVector& e) {
    LatticeVector r = e;
    for (auto v : vars) r[v] = -r[v];
    return r;
  });
}

LaurentPolynomial specialize_ones(const LaurentPolynomial& p, const std::set<std::size_t>& vars) {
  for (auto v : vars)
    if (v >= p.arity())
      throw Error(ErrorCode::IndexOutOfRange, "variable index out of range", std::to_string(v));
  return p.map_exponents(p.arity(), [&](const LatticeVector& e) {
    LatticeVector r = e;
    for (auto v : vars) r[v] = 0;
    return r;
  });
}

}  // namespace mbe
