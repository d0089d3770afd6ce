#pragma once

#include <cstddef>
#include <vector>

#include "mbe/cones.hpp"
#include "mbe/laurent.hpp"
#include "mbe/polytope.hpp"
#include "mbe/rational_function.hpp"

namespace mbe {

/// sigma of apex + Gamma: the parallelepiped points shifted by the apex.
LaurentPolynomial parallelepiped_transform(const SimplicialCone& c);

/// Integer-point transform of a (half-open) simplicial cone:
/// sigma_{v+Gamma}(q) / prod_i (1 - q^{w_i}). Requires an integral apex.
RationalFunction sigma_simplicial(const SimplicialCone& c);

/// Integer-point transform of a pointed cone (or of its relative interior)
/// through a half-open triangulation. Throws NotPointed.
RationalFunction sigma_pointed(const PointedCone& cone, Closure closure = Closure::Closed);

/// sigma of the polytope as an explicit Laurent polynomial.
LaurentPolynomial sigma_polytope(const Polytope& p);

/// sigma_{C_i}(q) for each vertex, with C_i the vertex cone moved to the origin.
std::vector<RationalFunction> vertex_cone_transforms(const Polytope& p);

/// Sum over vertices of sigma_{C_i}(q) q^{v_i}.
RationalFunction brion_sum(const Polytope& p);

/// sigma_K(1/q) == (-1)^dim(K) sigma_{K interior}(q) for a pointed cone with
/// apex at the origin.
bool stanley_reciprocity_check(const PointedCone& cone);

}  // namespace mbe
