#include "mbe/linalg.hpp"

#include <algorithm>
#include <utility>

#include "mbe/error.hpp"

namespace mbe::linalg {
namespace {

// Row-reduces `m` in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

RationalMatrix as_rows(std::span<const LatticeVector> vectors) {
  RationalMatrix m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) m.emplace_back(v.begin(), v.end());
  return m;
}

}  // namespace

std::size_t rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix m = as_rows(vectors);
  return row_reduce(m, vectors.front().size()).size();
}

std::vector<std::size_t> independent_subset(std::span<const LatticeVector> vectors) {
  std::vector<std::size_t> picked;
  std::vector<LatticeVector> chosen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    chosen.push_back(vectors[i]);
    if (rank(chosen) == chosen.size()) {
      picked.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  return picked;
}

std::optional<std::vector<Rational>> coordinates_in_basis(std::span<const LatticeVector> basis,
                                                          const LatticeVector& target) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  for (const auto& b : basis) require_same_size(b, target);
  // Augmented system: n equations, k unknowns.
  RationalMatrix m(n, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = Rational(basis[j][i]);
    m[i][k] = Rational(target[i]);
  }
  auto pivots = row_reduce(m, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k)
    throw Error(ErrorCode::DependentGenerators, "basis vectors are linearly dependent");
  std::vector<Rational> c(k);
  for (std::size_t r = 0; r < k; ++r) c[pivots[r]] = m[r][k];
  return c;
}

LatticeVector primitive_integer_multiple(std::span<const Rational> v) {
  Integer lcm = 1;
  for (const auto& x : v) {
    const Integer d = denominator(x);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  if (out.is_zero())
    throw Error(ErrorCode::InvalidArgument, "zero vector has no primitive multiple");
  return out.primitive();
}

std::vector<LatticeVector> orthogonal_complement(std::span<const LatticeVector> vectors,
                                                 std::size_t dim) {
  RationalMatrix m = as_rows(vectors);
  for (const auto& row : m)
    if (row.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "vector of wrong length in complement");
  auto pivots = row_reduce(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<LatticeVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> h(dim);
    h[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) h[pivots[r]] = -m[r][free];
    basis.push_back(primitive_integer_multiple(h));
  }
  return basis;
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && m[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(m[k], m[sel]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer maximal_minor_gcd(std::span<const LatticeVector> columns) {
  const std::size_t k = columns.size();
  if (k == 0) return 1;
  const std::size_t n = columns.front().size();
  Integer g = 0;
  std::vector<std::size_t> rows(k);
  // Enumerate k-subsets of the n rows.
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)), true);
  if (k > n) return 0;
  do {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) rows[idx++] = i;
    IntegerMatrix minor(k, std::vector<Integer>(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) minor[r][c] = columns[c][rows[r]];
    g = boost::multiprecision::gcd(g, abs(determinant(std::move(minor))));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return g;
}

DiagonalForm diagonal_form(std::span<const LatticeVector> columns) {
  const std::size_t k = columns.size();
  const std::size_t n = k ? columns.front().size() : 0;
  IntegerMatrix w(n, std::vector<Integer>(k));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) w[i][j] = columns[j][i];
  IntegerMatrix q(k, std::vector<Integer>(k, 0));
  for (std::size_t j = 0; j < k; ++j) q[j][j] = 1;

  auto swap_cols = [&](IntegerMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  auto col_axpy = [&](IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (auto& row : m) row[dst] -= f * row[src];
  };

  DiagonalForm out;
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t pi = n, pj = k;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < k; ++j)
          if (w[i][j] != 0 && (pi == n || abs(w[i][j]) < abs(w[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == n)
        throw Error(ErrorCode::DependentGenerators, "generators are linearly dependent");
      std::swap(w[t], w[pi]);
      swap_cols(w, t, pj);
      swap_cols(q, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (w[i][t] == 0) continue;
        const Integer f = w[i][t] / w[t][t];
        for (std::size_t j = t; j < k; ++j) w[i][j] -= f * w[t][j];
        if (w[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (w[t][j] == 0) continue;
        const Integer f = w[t][j] / w[t][t];
        col_axpy(w, j, t, f);
        col_axpy(q, j, t, f);
        if (w[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (w[t][t] < 0) {
      for (auto& row : w) row[t] = -row[t];
      for (auto& row : q) row[t] = -row[t];
    }
    out.diagonal.push_back(w[t][t]);
  }
  out.column_transform = std::move(q);
  return out;
}

std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a,
                                                          const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a.front().size() : 0;
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "LP right-hand side size");
  if (m == 0) return std::vector<Rational>(n);
  // Columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  RationalMatrix t(m + 1, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw Error(ErrorCode::DimensionMismatch, "ragged LP matrix");
    const bool neg = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? -a[i][j] : a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = neg ? -b[i] : b[i];
    basis[i] = n + i;
  }
  // Cost row: minimize the sum of artificials, expressed in nonbasic terms.
  auto& cost = t[m];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction; cannot happen in Phase I
    const Rational inv = 1 / t[leave][enter];
    for (auto& x : t[leave]) x *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (cost[width - 1] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][width - 1];
  return x;
}

std::optional<LatticeVector> strictly_positive_functional(std::span<const LatticeVector> generators,
                                                          std::size_t dim) {
  if (generators.empty()) return LatticeVector::zero(dim);
  // Variables: c+ (dim), c- (dim), slack s (one per generator).
  // <c+ - c-, g_i> - s_i = 1.
  const std::size_t k = generators.size();
  RationalMatrix a(k, std::vector<Rational>(2 * dim + k));
  std::vector<Rational> b(k, Rational(1));
  for (std::size_t i = 0; i < k; ++i) {
    require_same_size(generators[i], LatticeVector::zero(dim));
    for (std::size_t j = 0; j < dim; ++j) {
      a[i][j] = Rational(generators[i][j]);
      a[i][dim + j] = Rational(-generators[i][j]);
    }
    a[i][2 * dim + i] = -1;
  }
  auto x = nonnegative_solution(a, b);
  if (!x) return std::nullopt;
  std::vector<Rational> c(dim);
  for (std::size_t j = 0; j < dim; ++j) c[j] = (*x)[j] - (*x)[dim + j];
  // Scale by a positive integer so every value <c, g_i> stays >= 1.
  Integer lcm = 1;
  for (const auto& v : c) {
    const Integer d = denominator(v);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  LatticeVector out(dim);
  for (std::size_t j = 0; j < dim; ++j) out[j] = numerator(c[j]) * (lcm / denominator(c[j]));
  return out;
}

}  // namespace mbe::linalg
