#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mbe/ehrhart.hpp"
#include "mbe/laurent.hpp"
#include "mbe/polytope.hpp"
#include "mbe/rational_function.hpp"

// Canonical JSON and human-readable renderings.
//
// JSON: a Laurent polynomial is {"arity": N, "terms": [[[e1,...,eN], "c"], ...]}
// with terms in graded lexicographic order and coefficients as decimal
// strings. A rational function adds "denominator": [[[a1,...,aN], k], ...].
namespace mbe::io {

using Json = nlohmann::ordered_json;

Json to_json(const LatticeVector& v);
Json to_json(const LaurentPolynomial& p);
Json to_json(const RationalFunction& r);
Json to_json(const EhrhartSeries& s);
Json to_json(const DeltaVector& d);
Json to_json(const EhrhartPolynomial& l);

LatticeVector lattice_vector_from_json(const Json& j);
LaurentPolynomial laurent_from_json(const Json& j);
RationalFunction rational_from_json(const Json& j);

/// Parses {"vertices": [[int, ...], ...]} and validates the polytope.
Polytope polytope_from_json(const Json& j);
Polytope read_polytope(const std::string& path);

/// q1..qN, optionally followed by t.
std::vector<std::string> variable_names(std::size_t num_q, bool with_t);

std::string pretty(const LaurentPolynomial& p, const std::vector<std::string>& names);
std::string pretty(const RationalFunction& r, const std::vector<std::string>& names);
std::string pretty(const EhrhartSeries& s);
std::string pretty(const DeltaVector& d);
std::string pretty(const EhrhartPolynomial& l);

}  // namespace mbe::io
