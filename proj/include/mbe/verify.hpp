#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mbe/polytope.hpp"

namespace mbe {

struct CheckResult {
  std::string name;       // short identifier, e.g. "brion"
  std::string statement;  // the identity being checked, by name
  bool passed = false;
  std::string detail;     // failure or skip reason
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs every identity check against the enumeration oracle; series and
/// polynomial comparisons use dilations 1..bound.
VerificationReport verify(const Polytope& p, std::size_t bound);

/// (1 + q [n]_q - [n]_q) == q^n, both with [n]_q as a Laurent polynomial
/// and as the factored rational function (1 - q^n)/(1 - q).
bool q_integer_identity_check(long n);

/// Classical lattice-point counts |nP ∩ Z^N| read off the q = 1
/// specialization of the series, n = 1..bound.
std::vector<Integer> classical_counts_from_series(const Polytope& p, std::size_t bound);

}  // namespace mbe
