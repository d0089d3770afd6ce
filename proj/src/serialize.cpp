#include "mbe/serialize.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "mbe/error.hpp"

namespace mbe::io {
namespace {

Json integer_to_json(const Integer& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    return x.str();
  return x.convert_to<long long>();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "not an integer", s);
    return Integer(s);
  }
  throw Error(ErrorCode::ParseError, "expected an integer", j.dump());
}

std::string monomial_text(const LatticeVector& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names.at(i);
    if (e[i] != 1) out += "^" + e[i].str();
  }
  return out;
}

}  // namespace

Json to_json(const LatticeVector& v) {
  Json arr = Json::array();
  for (const auto& c : v) arr.push_back(integer_to_json(c));
  return arr;
}

Json to_json(const LaurentPolynomial& p) {
  Json terms = Json::array();
  for (const auto& t : p.graded_terms())
    terms.push_back(Json::array({to_json(t.exponent), t.coefficient.str()}));
  return Json{{"arity", p.arity()}, {"terms", terms}};
}

Json to_json(const RationalFunction& r) {
  Json den = Json::array();
  for (const auto& f : r.denominator())
    den.push_back(Json::array({to_json(f.exponent), f.multiplicity}));
  return Json{{"arity", r.arity()}, {"numerator", to_json(r.numerator())}, {"denominator", den}};
}

Json to_json(const EhrhartSeries& s) {
  Json verts = Json::array();
  for (const auto& v : s.denominator_vertices()) verts.push_back(to_json(v));
  return Json{{"type", "multibasic_ehrhart_series"},
              {"ambient_dim", s.ambient_dim()},
              {"variables", variable_names(s.ambient_dim(), true)},
              {"numerator", to_json(s.numerator())},
              {"denominator_vertices", verts}};
}

Json to_json(const DeltaVector& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries) entries.push_back(to_json(e));
  return Json{{"type", "multibasic_delta_vector"}, {"delta", entries}};
}

Json to_json(const EhrhartPolynomial& l) {
  std::vector<LatticeVector> monos;
  for (const auto& [m, c] : l.coefficients()) monos.push_back(m);
  std::stable_sort(monos.begin(), monos.end(), graded_lex_less);
  Json coeffs = Json::array();
  for (const auto& m : monos)
    coeffs.push_back(Json{{"monomial", to_json(m)}, {"value", to_json(l.coefficient(m))}});
  return Json{{"type", "multibasic_ehrhart_polynomial"},
              {"num_vars", l.num_vars()},
              {"total_degree", integer_to_json(l.total_degree())},
              {"coefficients", coeffs}};
}

LatticeVector lattice_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an integer array", j.dump());
  std::vector<Integer> coords;
  for (const auto& c : j) coords.push_back(integer_from_json(c));
  return LatticeVector(std::move(coords));
}

LaurentPolynomial laurent_from_json(const Json& j) {
  try {
    const auto arity = j.at("arity").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& t : j.at("terms"))
      terms.push_back(Term{lattice_vector_from_json(t.at(0)), integer_from_json(t.at(1))});
    return LaurentPolynomial::from_terms(arity, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

RationalFunction rational_from_json(const Json& j) {
  try {
    std::vector<BinomialFactor> factors;
    for (const auto& f : j.at("denominator"))
      factors.push_back(BinomialFactor{lattice_vector_from_json(f.at(0)), f.at(1).get<unsigned>()});
    return RationalFunction(laurent_from_json(j.at("numerator")), factors);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Polytope polytope_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array())
    throw Error(ErrorCode::ParseError, "polytope input must be {\"vertices\": [[int,...],...]}");
  std::vector<LatticeVector> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(lattice_vector_from_json(v));
  return Polytope::from_points(std::move(pts));
}

Polytope read_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open input file", path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what(), path);
  }
  return polytope_from_json(j);
}

std::vector<std::string> variable_names(std::size_t num_q, bool with_t) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= num_q; ++i) names.push_back("q" + std::to_string(i));
  if (with_t) names.push_back("t");
  return names;
}

std::string pretty(const LaurentPolynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.graded_terms()) {
    const std::string mono = monomial_text(t.exponent, names);
    Integer c = t.coefficient;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (mono.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

std::string pretty(const RationalFunction& r, const std::vector<std::string>& names) {
  const auto den = r.denominator();
  if (den.empty()) return pretty(r.numerator(), names);
  std::string out = "(" + pretty(r.numerator(), names) + ") / (";
  for (const auto& f : den) {
    out += "(1 - " + monomial_text(f.exponent, names) + ")";
    if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out + ")";
}

std::string pretty(const EhrhartSeries& s) {
  const auto names = variable_names(s.ambient_dim(), true);
  std::string den;
  for (const auto& e : s.denominator_exponents())
    den += "(1 - " + monomial_text(e, names) + ")";
  return "(" + pretty(s.numerator(), names) + ") / (" + den + ")";
}

std::string pretty(const DeltaVector& d) {
  std::string out = "(";
  for (std::size_t k = 0; k < d.entries.size(); ++k) {
    if (k) out += ", ";
    const auto& e = d.entries[k];
    out += pretty(e, variable_names(e.arity(), false));
  }
  return out + ")";
}

std::string pretty(const EhrhartPolynomial& l) {
  const auto qnames = variable_names(l.num_vars(), false);
  std::vector<std::string> xnames;
  for (std::size_t i = 1; i <= l.num_vars(); ++i) xnames.push_back("x" + std::to_string(i));
  std::vector<LatticeVector> monos;
  for (const auto& [m, c] : l.coefficients()) monos.push_back(m);
  std::stable_sort(monos.begin(), monos.end(), graded_lex_less);
  if (monos.empty()) return "0";
  std::string out;
  for (const auto& m : monos) {
    if (!out.empty()) out += "\n+ ";
    out += "[" + pretty(l.coefficient(m), qnames) + "]";
    const std::string xm = monomial_text(m, xnames);
    if (!xm.empty()) out += "*" + xm;
  }
  return out;
}

}  // namespace mbe::io

namespace mbe {

std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
  return os << io::pretty(p, io::variable_names(p.arity(), false));
}

}  // namespace mbe
