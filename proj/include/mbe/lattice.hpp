#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mbe {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^N. Used both for lattice points and for exponent vectors of
/// Laurent monomials. The length is fixed at construction.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  static LatticeVector zero(std::size_t dim) { return LatticeVector(dim); }
  static LatticeVector unit(std::size_t dim, std::size_t index);

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  bool is_zero() const;
  /// Sum of the coordinates.
  Integer total_degree() const;
  /// Sign of the first nonzero coordinate (0 for the zero vector).
  int lex_sign() const;
  /// gcd of the absolute values of the coordinates (0 for the zero vector).
  Integer content() const;
  /// This vector divided by its content; the zero vector is returned unchanged.
  LatticeVector primitive() const;

  /// Drops coordinate `index`.
  LatticeVector without(std::size_t index) const;
  /// Appends one coordinate.
  LatticeVector extended(const Integer& last) const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(LatticeVector a, const Integer& s) { return a *= s; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  /// Plain lexicographic order.
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Graded lexicographic order: total degree first, then lexicographic.
/// This is the display order of polynomial terms.
bool graded_lex_less(const LatticeVector& a, const LatticeVector& b);

/// Throws DimensionMismatch unless both vectors have the same length.
void require_same_size(const LatticeVector& a, const LatticeVector& b);

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

}  // namespace mbe
