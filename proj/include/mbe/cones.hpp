#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mbe/lattice.hpp"
#include "mbe/polytope.hpp"

namespace mbe {

/// apex + cone(generators). Pointedness is checked where it matters
/// (triangulation); construction does not verify it.
struct PointedCone {
  LatticeVector apex;
  std::vector<LatticeVector> generators;

  std::size_t ambient_dim() const noexcept { return apex.size(); }
};

/// apex + {sum r_i w_i : r_i >= 0} with linearly independent generators.
/// open_facets[i] marks the facet opposite generator i as excluded, which
/// turns the condition on r_i into r_i > 0.
class SimplicialCone {
 public:
  SimplicialCone(LatticeVector apex, std::vector<LatticeVector> generators,
                 std::vector<bool> open_facets = {});

  const LatticeVector& apex() const noexcept { return apex_; }
  const std::vector<LatticeVector>& generators() const noexcept { return generators_; }
  const std::vector<bool>& open_facets() const noexcept { return open_facets_; }
  std::size_t dim() const noexcept { return generators_.size(); }
  std::size_t ambient_dim() const noexcept { return apex_.size(); }
  bool all_closed() const;

  SimplicialCone with_open_facets(std::vector<bool> flags) const;

 private:
  LatticeVector apex_;
  std::vector<LatticeVector> generators_;
  std::vector<bool> open_facets_;
};

/// Simplicial pieces of a pointed cone using only its own generators.
struct Triangulation {
  PointedCone source;
  std::vector<SimplicialCone> pieces;
  /// For each piece, the indices of its generators in source.generators.
  std::vector<std::vector<std::size_t>> piece_generators;
};

/// The cone over P: generators (v_i, 1) in R^{N+1}, apex at the origin.
/// Generators are kept verbatim (not primitivized).
PointedCone cone_over(const Polytope& p);

/// Primitive edge directions at vertex i: the extreme rays of the cone
/// spanned by {v_j - v_i}.
std::vector<LatticeVector> vertex_cone_generators(const Polytope& p, std::size_t i);

/// Vertex cone at v_i with apex v_i.
PointedCone vertex_cone(const Polytope& p, std::size_t i);
/// The same cone translated so that its apex is the origin.
PointedCone shifted_vertex_cone(const Polytope& p, std::size_t i);

/// Placing triangulation: generators are inserted in `insertion_order`
/// (default: input order); the initial simplex is the first maximal
/// independent subset in that order. Throws NotPointed.
Triangulation triangulate_pointed(const PointedCone& cone,
                                  const std::optional<std::vector<std::size_t>>& insertion_order = {});

enum class Closure {
  Closed,    // partition of the closed cone
  Interior,  // partition of the relative interior
};

/// Assigns open facets to the pieces of a triangulation so that the pieces'
/// lattice points partition the cone (or its relative interior), using a
/// generic reference point inside the first piece.
std::vector<SimplicialCone> half_open_decompose(const Triangulation& t,
                                                Closure closure = Closure::Closed);

/// Lattice points of {sum r_i w_i : 0 <= r_i < 1}, with 0 < r_i <= 1 for
/// open facets. The apex is not added. Enumerated through the diagonal
/// normal form of the generator matrix.
std::vector<LatticeVector> parallelepiped_points(const SimplicialCone& c);

/// Index of the generator sublattice in the lattice points of its span.
Integer cone_index(const SimplicialCone& c);

}  // namespace mbe
