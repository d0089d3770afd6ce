#include "mbe/lattice.hpp"

#include <ostream>
#include <sstream>

#include "mbe/error.hpp"

namespace mbe {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NotAVertex: return "NotAVertex";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::VanishingDenominatorFactor: return "VanishingDenominatorFactor";
    case ErrorCode::ZeroBinomialExponent: return "ZeroBinomialExponent";
    case ErrorCode::ZeroHeightDenominatorFactor: return "ZeroHeightDenominatorFactor";
    case ErrorCode::NegativeOrthantViolation: return "NegativeOrthantViolation";
    case ErrorCode::NonGenericLinearForm: return "NonGenericLinearForm";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t dim, std::size_t index) {
  if (index >= dim)
    throw Error(ErrorCode::IndexOutOfRange, "unit vector index out of range",
                std::to_string(index));
  LatticeVector v(dim);
  v.coords_[index] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Integer LatticeVector::total_degree() const {
  Integer s = 0;
  for (const auto& c : coords_) s += c;
  return s;
}

int LatticeVector::lex_sign() const {
  for (const auto& c : coords_)
    if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) g = boost::multiprecision::gcd(g, abs(c));
  return g;
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g <= 1) return *this;
  LatticeVector r(*this);
  for (auto& c : r.coords_) c /= g;
  return r;
}

LatticeVector LatticeVector::without(std::size_t index) const {
  if (index >= size())
    throw Error(ErrorCode::IndexOutOfRange, "coordinate index out of range",
                std::to_string(index));
  LatticeVector r;
  r.coords_.reserve(size() - 1);
  for (std::size_t i = 0; i < size(); ++i)
    if (i != index) r.coords_.push_back(coords_[i]);
  return r;
}

LatticeVector LatticeVector::extended(const Integer& last) const {
  LatticeVector r(*this);
  r.coords_.push_back(last);
  return r;
}

void require_same_size(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "lattice vectors of different length",
                "[" + std::to_string(a.size()) + "," + std::to_string(b.size()) + "]");
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  require_same_size(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (b.coords_[i] < a.coords_[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool graded_lex_less(const LatticeVector& a, const LatticeVector& b) {
  Integer da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a < b;
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ']';
}

}  // namespace mbe
