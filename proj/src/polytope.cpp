#include "mbe/polytope.hpp"

#include <string>

#include "mbe/error.hpp"
#include "mbe/linalg.hpp"

namespace mbe {

bool in_convex_hull(const LatticeVector& point, const std::vector<LatticeVector>& others) {
  if (others.empty()) return false;
  const std::size_t n = point.size();
  // sum_j lambda_j p_j = point, sum_j lambda_j = 1, lambda >= 0.
  linalg::RationalMatrix a(n + 1, std::vector<Rational>(others.size()));
  std::vector<Rational> b(n + 1);
  for (std::size_t j = 0; j < others.size(); ++j) {
    require_same_size(others[j], point);
    for (std::size_t i = 0; i < n; ++i) a[i][j] = Rational(others[j][i]);
    a[n][j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) b[i] = Rational(point[i]);
  b[n] = 1;
  return linalg::nonnegative_solution(a, b).has_value();
}

Polytope Polytope::from_points(std::vector<LatticeVector> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "polytope needs at least one point");
  const std::size_t n = points.front().size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "points must have positive length", "0");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "point " + std::to_string(i) + " has length " +
                      std::to_string(points[i].size()) + ", expected " + std::to_string(n),
                  std::to_string(i));
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<LatticeVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (in_convex_hull(points[i], others))
      throw Error(ErrorCode::NotAVertex,
                  "point " + std::to_string(i) + " " + points[i].to_string() +
                      " is a convex combination of the other points",
                  std::to_string(i));
  }
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  const std::size_t d = linalg::rank(diffs);
  return Polytope(std::move(points), n, d);
}

bool Polytope::in_nonnegative_orthant() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (c < 0) return false;
  return true;
}

Polytope Polytope::translated(const LatticeVector& w) const {
  if (w.size() != ambient_dim_)
    throw Error(ErrorCode::DimensionMismatch, "translation vector has wrong length", w.to_string());
  std::vector<LatticeVector> moved;
  moved.reserve(vertices_.size());
  for (const auto& v : vertices_) moved.push_back(v + w);
  return Polytope(std::move(moved), ambient_dim_, dim_);
}

}  // namespace mbe
