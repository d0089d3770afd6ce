#pragma once

#include <cstddef>
#include <vector>

#include "mbe/lattice.hpp"

namespace mbe {

/// An integral convex polytope given by its vertices. Construction through
/// Polytope::from_points guarantees that every listed point is a vertex.
class Polytope {
 public:
  /// Validates a V-representation. Throws EmptyInput, DimensionMismatch, or
  /// NotAVertex (datum: the index of the first redundant point).
  static Polytope from_points(std::vector<LatticeVector> points);

  const std::vector<LatticeVector>& vertices() const noexcept { return vertices_; }
  const LatticeVector& vertex(std::size_t i) const { return vertices_.at(i); }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  /// Dimension of the affine hull.
  std::size_t dim() const noexcept { return dim_; }
  /// True when every vertex coordinate is nonnegative.
  bool in_nonnegative_orthant() const;

  Polytope translated(const LatticeVector& w) const;

 private:
  Polytope(std::vector<LatticeVector> vertices, std::size_t ambient, std::size_t dim)
      : vertices_(std::move(vertices)), ambient_dim_(ambient), dim_(dim) {}

  std::vector<LatticeVector> vertices_;
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
};

inline Polytope validate_polytope(std::vector<LatticeVector> points) {
  return Polytope::from_points(std::move(points));
}

/// Is `point` a convex combination of `others`? Exact LP feasibility.
bool in_convex_hull(const LatticeVector& point, const std::vector<LatticeVector>& others);

}  // namespace mbe
