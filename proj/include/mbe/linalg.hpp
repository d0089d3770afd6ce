#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mbe/lattice.hpp"

namespace mbe::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

std::size_t rank(std::span<const LatticeVector> vectors);

/// Indices of a maximal linearly independent subset, chosen greedily in input order.
std::vector<std::size_t> independent_subset(std::span<const LatticeVector> vectors);

/// Coefficients c with sum_i c_i basis[i] == target, or nullopt when target is
/// outside the span. `basis` must be linearly independent.
std::optional<std::vector<Rational>> coordinates_in_basis(std::span<const LatticeVector> basis,
                                                          const LatticeVector& target);

/// Primitive integer basis of {h in Q^dim : <h, v> = 0 for every v}.
std::vector<LatticeVector> orthogonal_complement(std::span<const LatticeVector> vectors,
                                                 std::size_t dim);

/// Positive multiple of a nonzero rational vector with coprime integer entries.
LatticeVector primitive_integer_multiple(std::span<const Rational> v);

Integer determinant(IntegerMatrix m);

/// gcd of all k x k minors of the matrix whose columns are the k given vectors.
Integer maximal_minor_gcd(std::span<const LatticeVector> columns);

/// Diagonal form P * W * Q = D of the matrix W whose columns are the given
/// (independent) vectors, with P and Q unimodular. Only Q is recorded.
struct DiagonalForm {
  std::vector<Integer> diagonal;  // positive entries d_1..d_k
  IntegerMatrix column_transform;  // Q, k x k
};
DiagonalForm diagonal_form(std::span<const LatticeVector> columns);

/// A nonnegative solution x of A x = b (A given by rows), or nullopt if none
/// exists. Exact Phase-I simplex with Bland's rule.
std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a,
                                                          const std::vector<Rational>& b);

/// An integer vector c with <c, g> >= 1 for every g, or nullopt if none
/// exists (exactly when the cone spanned by `generators` contains a line
/// or one of them is zero).
std::optional<LatticeVector> strictly_positive_functional(std::span<const LatticeVector> generators,
                                                          std::size_t dim);

}  // namespace mbe::linalg
