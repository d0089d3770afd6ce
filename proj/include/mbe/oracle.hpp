#pragma once

#include <cstddef>
#include <vector>

#include "mbe/cones.hpp"
#include "mbe/laurent.hpp"
#include "mbe/polytope.hpp"
#include "mbe/rational_function.hpp"

// Brute-force ground truth. Everything here works by direct enumeration
// and exact integer tests, independently of the symbolic pipeline.
namespace mbe::oracle {

/// <normal, x> <= offset (inequality) or <normal, x> == offset (equation).
struct Halfspace {
  LatticeVector normal;
  Integer offset;
};

/// H-description of a polytope. Scaling every offset by n describes nP.
struct FacetSystem {
  std::vector<Halfspace> inequalities;
  std::vector<Halfspace> equations;

  bool contains(const LatticeVector& x, const Integer& dilation = 1) const;
  bool in_relative_interior(const LatticeVector& x, const Integer& dilation = 1) const;
};

/// H-description of a cone with apex at the origin: <h, x> >= 0 for each
/// inequality normal, <h, x> == 0 for each equation normal.
struct ConeFacets {
  std::vector<LatticeVector> inequalities;
  std::vector<LatticeVector> equations;

  bool contains(const LatticeVector& x) const;
  bool in_relative_interior(const LatticeVector& x) const;
};

/// Facets found by trying every subset of rank-1 generators as a candidate
/// supporting hyperplane.
ConeFacets cone_facets(const std::vector<LatticeVector>& generators, std::size_t dim);

FacetSystem facet_system(const Polytope& p);

/// Lattice points of nP (or of its relative interior), sorted.
std::vector<LatticeVector> enumerate_dilate(const Polytope& p, const Integer& n,
                                            bool interior_only = false);

/// sigma of nP (or of its relative interior) as an explicit sum of monomials.
LaurentPolynomial sigma_brute(const Polytope& p, const Integer& n, bool interior_only = false);

/// Lattice points x of a cone with apex at the origin with <grading, x> <= bound.
std::vector<LatticeVector> enumerate_cone(const PointedCone& cone, const LatticeVector& grading,
                                          const Integer& bound, bool interior_only = false);

/// Lattice points of a (half-open) fundamental parallelepiped by scanning its
/// bounding box and testing barycentric coordinates exactly.
std::vector<LatticeVector> parallelepiped_points_bruteforce(const SimplicialCone& c);

/// Terms of p with <grading, exponent> <= bound.
LaurentPolynomial truncate(const LaurentPolynomial& p, const LatticeVector& grading,
                           const Integer& bound);

/// Formal power series expansion of r, truncated at height `bound`. Each
/// denominator factor is expanded as a geometric series in the direction of
/// positive height; throws ZeroHeightDenominatorFactor for height-0 factors.
LaurentPolynomial expand_truncated(const RationalFunction& r, const LatticeVector& grading,
                                   const Integer& bound);

}  // namespace mbe::oracle
