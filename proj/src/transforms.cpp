#include "mbe/transforms.hpp"

#include <numeric>
#include <set>

#include "mbe/error.hpp"
#include "mbe/linalg.hpp"
#include "mbe/oracle.hpp"

namespace mbe {

LaurentPolynomial parallelepiped_transform(const SimplicialCone& c) {
  return LaurentPolynomial::sum_of_monomials(c.ambient_dim(), parallelepiped_points(c))
      .shifted(c.apex());
}

RationalFunction sigma_simplicial(const SimplicialCone& c) {
  return RationalFunction(parallelepiped_transform(c), c.generators());
}

RationalFunction sigma_pointed(const PointedCone& cone, Closure closure) {
  const Triangulation t = triangulate_pointed(cone);
  std::vector<RationalFunction> parts;
  for (const auto& piece : half_open_decompose(t, closure)) parts.push_back(sigma_simplicial(piece));
  return sum(parts, cone.ambient_dim());
}

LaurentPolynomial sigma_polytope(const Polytope& p) { return oracle::sigma_brute(p, 1); }

std::vector<RationalFunction> vertex_cone_transforms(const Polytope& p) {
  std::vector<RationalFunction> out;
  out.reserve(p.vertex_count());
  for (std::size_t i = 0; i < p.vertex_count(); ++i)
    out.push_back(sigma_pointed(shifted_vertex_cone(p, i)));
  return out;
}

RationalFunction brion_sum(const Polytope& p) {
  std::vector<RationalFunction> parts;
  for (std::size_t i = 0; i < p.vertex_count(); ++i) parts.push_back(sigma_pointed(vertex_cone(p, i)));
  return sum(parts, p.ambient_dim());
}

bool stanley_reciprocity_check(const PointedCone& cone) {
  if (!cone.apex.is_zero())
    throw Error(ErrorCode::InvalidArgument, "reciprocity check expects apex at the origin",
                cone.apex.to_string());
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < cone.ambient_dim(); ++i) all.insert(i);
  const RationalFunction inverted = invert_variables(sigma_pointed(cone), all);
  RationalFunction interior = sigma_pointed(cone, Closure::Interior);
  if (linalg::rank(cone.generators) % 2) interior = -interior;
  return inverted == interior;
}

}  // namespace mbe
