#include "mbe/cones.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "mbe/error.hpp"
#include "mbe/linalg.hpp"

namespace mbe {

SimplicialCone::SimplicialCone(LatticeVector apex, std::vector<LatticeVector> generators,
                               std::vector<bool> open_facets)
    : apex_(std::move(apex)), generators_(std::move(generators)), open_facets_(std::move(open_facets)) {
  if (open_facets_.empty()) open_facets_.assign(generators_.size(), false);
  if (open_facets_.size() != generators_.size())
    throw Error(ErrorCode::DimensionMismatch, "one open-facet flag per generator is required");
  for (const auto& g : generators_) require_same_size(g, apex_);
  if (linalg::rank(generators_) != generators_.size())
    throw Error(ErrorCode::DependentGenerators, "simplicial cone generators are dependent");
}

bool SimplicialCone::all_closed() const {
  return std::none_of(open_facets_.begin(), open_facets_.end(), [](bool b) { return b; });
}

SimplicialCone SimplicialCone::with_open_facets(std::vector<bool> flags) const {
  return SimplicialCone(apex_, generators_, std::move(flags));
}

PointedCone cone_over(const Polytope& p) {
  PointedCone c{LatticeVector::zero(p.ambient_dim() + 1), {}};
  for (const auto& v : p.vertices()) c.generators.push_back(v.extended(1));
  return c;
}

std::vector<LatticeVector> vertex_cone_generators(const Polytope& p, std::size_t i) {
  if (i >= p.vertex_count())
    throw Error(ErrorCode::IndexOutOfRange, "vertex index out of range", std::to_string(i));
  std::vector<LatticeVector> dirs;
  for (std::size_t j = 0; j < p.vertex_count(); ++j)
    if (j != i) dirs.push_back((p.vertex(j) - p.vertex(i)).primitive());
  std::vector<LatticeVector> extreme;
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    // dirs[j] is extreme iff it is not in the cone of the remaining directions.
    const std::size_t n = p.ambient_dim();
    linalg::RationalMatrix a(n, std::vector<Rational>(dirs.size() - 1));
    std::vector<Rational> b(n);
    std::size_t col = 0;
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      if (k == j) continue;
      for (std::size_t r = 0; r < n; ++r) a[r][col] = Rational(dirs[k][r]);
      ++col;
    }
    for (std::size_t r = 0; r < n; ++r) b[r] = Rational(dirs[j][r]);
    if (dirs.size() == 1 || !linalg::nonnegative_solution(a, b)) extreme.push_back(dirs[j]);
  }
  return extreme;
}

PointedCone vertex_cone(const Polytope& p, std::size_t i) {
  return PointedCone{p.vertex(i), vertex_cone_generators(p, i)};
}

PointedCone shifted_vertex_cone(const Polytope& p, std::size_t i) {
  return PointedCone{LatticeVector::zero(p.ambient_dim()), vertex_cone_generators(p, i)};
}

namespace {

using Facet = std::vector<std::size_t>;

Facet facet_without(const std::vector<std::size_t>& piece, std::size_t pos) {
  Facet f;
  for (std::size_t k = 0; k < piece.size(); ++k)
    if (k != pos) f.push_back(piece[k]);
  return f;
}

std::vector<LatticeVector> pick(const std::vector<LatticeVector>& gens,
                                const std::vector<std::size_t>& idx) {
  std::vector<LatticeVector> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(gens[i]);
  return out;
}

}  // namespace

Triangulation triangulate_pointed(const PointedCone& cone,
                                  const std::optional<std::vector<std::size_t>>& insertion_order) {
  const auto& gens = cone.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_size(gens[i], cone.apex);
    if (gens[i].is_zero())
      throw Error(ErrorCode::NotPointed, "zero generator", std::to_string(i));
  }
  if (!linalg::strictly_positive_functional(gens, cone.ambient_dim()))
    throw Error(ErrorCode::NotPointed, "cone contains a line");

  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (insertion_order) {
    order = *insertion_order;
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::size_t> expected(gens.size());
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    if (sorted != expected)
      throw Error(ErrorCode::InvalidArgument, "insertion order is not a permutation");
  }

  std::vector<LatticeVector> ordered = pick(gens, order);
  std::vector<std::size_t> basis_pos = linalg::independent_subset(ordered);
  std::vector<std::size_t> initial;
  for (auto p : basis_pos) initial.push_back(order[p]);
  std::sort(initial.begin(), initial.end());

  std::vector<std::vector<std::size_t>> pieces{initial};
  std::vector<bool> placed(gens.size(), false);
  for (auto i : initial) placed[i] = true;

  for (std::size_t idx : order) {
    if (placed[idx]) continue;
    placed[idx] = true;
    std::map<Facet, int> facet_count;
    for (const auto& piece : pieces)
      for (std::size_t k = 0; k < piece.size(); ++k) ++facet_count[facet_without(piece, k)];
    std::vector<std::vector<std::size_t>> added;
    for (const auto& piece : pieces) {
      auto lambda = linalg::coordinates_in_basis(pick(gens, piece), gens[idx]);
      if (!lambda)
        throw Error(ErrorCode::InvariantViolation, "generator outside the span of the cone");
      for (std::size_t k = 0; k < piece.size(); ++k) {
        if ((*lambda)[k] >= 0) continue;
        Facet f = facet_without(piece, k);
        if (facet_count[f] != 1) continue;
        f.push_back(idx);
        std::sort(f.begin(), f.end());
        added.push_back(std::move(f));
      }
    }
    pieces.insert(pieces.end(), added.begin(), added.end());
  }

  Triangulation t{cone, {}, pieces};
  for (const auto& piece : pieces) t.pieces.emplace_back(cone.apex, pick(gens, piece));
  return t;
}

std::vector<SimplicialCone> half_open_decompose(const Triangulation& t, Closure closure) {
  if (t.pieces.empty()) return {};
  const auto& first = t.pieces.front().generators();
  // Reference point sum_i s^i w_i over the first piece; each piece facet
  // hyperplane vanishes for at most dim-1 values of s.
  for (long s = 2;; ++s) {
    LatticeVector ref = LatticeVector::zero(t.source.ambient_dim());
    Integer power = 1;
    for (const auto& w : first) {
      ref += w * power;
      power *= s;
    }
    std::vector<std::vector<Rational>> coords;
    bool generic = true;
    for (const auto& piece : t.pieces) {
      auto lambda = linalg::coordinates_in_basis(piece.generators(), ref);
      if (!lambda) throw Error(ErrorCode::InvariantViolation, "reference point outside the span");
      for (const auto& l : *lambda)
        if (l == 0) generic = false;
      if (!generic) break;
      coords.push_back(std::move(*lambda));
    }
    if (!generic) continue;
    std::vector<SimplicialCone> out;
    for (std::size_t p = 0; p < t.pieces.size(); ++p) {
      std::vector<bool> flags;
      for (const auto& l : coords[p])
        flags.push_back(closure == Closure::Closed ? l < 0 : l > 0);
      out.push_back(t.pieces[p].with_open_facets(std::move(flags)));
    }
    return out;
  }
}

std::vector<LatticeVector> parallelepiped_points(const SimplicialCone& c) {
  const auto& w = c.generators();
  const std::size_t k = w.size();
  const std::size_t n = c.ambient_dim();
  if (k == 0) return {LatticeVector::zero(n)};
  const linalg::DiagonalForm form = linalg::diagonal_form(w);
  const auto& d = form.diagonal;
  const auto& q = form.column_transform;

  std::vector<LatticeVector> points;
  std::vector<Integer> z(k, 0);
  for (;;) {
    // r = Q (z / d), then reduced into the half-open unit box.
    std::vector<Rational> r(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < k; ++j) s += Rational(q[i][j] * z[j], d[j]);
      Integer fl = numerator(s) / denominator(s);
      if (numerator(s) < 0 && fl * denominator(s) != numerator(s)) fl -= 1;
      s -= fl;
      if (s == 0 && c.open_facets()[i]) s = 1;
      r[i] = s;
    }
    LatticeVector pt = LatticeVector::zero(n);
    for (std::size_t row = 0; row < n; ++row) {
      Rational x = 0;
      for (std::size_t i = 0; i < k; ++i) x += r[i] * w[i][row];
      if (denominator(x) != 1)
        throw Error(ErrorCode::InvariantViolation, "non-integral parallelepiped point");
      pt[row] = numerator(x);
    }
    points.push_back(std::move(pt));

    std::size_t pos = 0;
    while (pos < k) {
      if (++z[pos] < d[pos]) break;
      z[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  std::sort(points.begin(), points.end());
  return points;
}

Integer cone_index(const SimplicialCone& c) {
  if (c.generators().empty()) return 1;
  Integer idx = 1;
  for (const auto& d : linalg::diagonal_form(c.generators()).diagonal) idx *= d;
  return idx;
}

}  // namespace mbe
