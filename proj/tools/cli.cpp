#include "cli.hpp"

#include <sstream>

#include "mbe/ehrhart.hpp"
#include "mbe/error.hpp"
#include "mbe/oracle.hpp"
#include "mbe/serialize.hpp"
#include "mbe/verify.hpp"

namespace mbe::cli {
namespace {

using io::Json;

void validate(const JobSpec& spec) {
  auto invalid = [](const std::string& msg, const std::string& datum = {}) {
    throw Error(ErrorCode::InvalidArgument, msg, datum);
  };
  if (spec.input_path.empty()) invalid("an input file is required");
  switch (spec.command) {
    case Command::Eval:
      if (!spec.n) invalid("eval requires --n");
      break;
    case Command::Reciprocity:
      if (!spec.n) invalid("reciprocity requires --n");
      if (*spec.n < 1) invalid("reciprocity requires n >= 1", std::to_string(*spec.n));
      break;
    case Command::Verify:
      if (spec.bound && *spec.bound < 1) invalid("--bound must be positive", std::to_string(*spec.bound));
      break;
    default:
      break;
  }
  if (spec.lambda && spec.command != Command::Specialize)
    invalid("--lambda only applies to specialize");
  if (spec.interior && spec.command != Command::Eval) invalid("--interior only applies to eval");
}

std::string render(const Json& j, Format format, const std::string& text) {
  return format == Format::Json ? j.dump(2) + "\n" : text + "\n";
}

JobResult execute(const JobSpec& spec) {
  validate(spec);
  const Polytope p = io::read_polytope(spec.input_path);
  const std::size_t n = p.ambient_dim();
  const auto qnames = io::variable_names(n, false);

  switch (spec.command) {
    case Command::Series: {
      const EhrhartSeries s = series(p);
      return {0, render(io::to_json(s), spec.format, "Ehr(t;q) = " + io::pretty(s))};
    }
    case Command::Delta: {
      const DeltaVector d = delta_vector(p);
      return {0, render(io::to_json(d), spec.format, "delta = " + io::pretty(d))};
    }
    case Command::Poly: {
      const EhrhartPolynomial raw = ehrhart_polynomial(p);
      EhrhartPolynomial l(raw.num_vars());
      for (const auto& [mono, coef] : raw.coefficients()) l.add(mono, coef.reduced());
      return {0, render(io::to_json(l), spec.format, "L(x) = " + io::pretty(l))};
    }
    case Command::Eval: {
      const Integer k = *spec.n;
      const RationalFunction value = evaluate_at_q_integers(ehrhart_polynomial(p), k).reduced();
      Json j{{"type", "evaluation"}, {"n", *spec.n}, {"value", io::to_json(value)}};
      std::string text = "L([" + k.str() + "]_q) = " + io::pretty(value, qnames);
      if (k >= 1) {
        const bool equal = value == RationalFunction(oracle::sigma_brute(p, k));
        j["oracle_equal"] = equal;
        text += "\noracle agreement: " + std::string(equal ? "yes" : "no");
      }
      if (spec.interior) {
        if (k < 1) throw Error(ErrorCode::InvalidArgument, "--interior needs n >= 1");
        const LaurentPolynomial inner = oracle::sigma_brute(p, k, true);
        j["interior_sigma"] = io::to_json(inner);
        text += "\nsigma(nP interior) = " + io::pretty(inner, qnames);
      }
      return {0, render(j, spec.format, text)};
    }
    case Command::Reciprocity: {
      const Integer k = *spec.n;
      const RationalFunction lhs = evaluate_at_q_integers(ehrhart_polynomial(p), -k).reduced();
      std::set<std::size_t> all;
      for (std::size_t i = 0; i < n; ++i) all.insert(i);
      LaurentPolynomial rhs = invert_variables(oracle::sigma_brute(p, k, true), all);
      if (p.dim() % 2) rhs = -rhs;
      const bool holds = lhs == RationalFunction(rhs);
      Json j{{"type", "reciprocity"},
             {"n", *spec.n},
             {"holds", holds},
             {"lhs", io::to_json(lhs)},
             {"rhs", io::to_json(rhs)}};
      std::string text = "L([-" + k.str() + "]_q) = " + io::pretty(lhs, qnames) +
                         "\n(-1)^d sigma(nP interior)(1/q) = " + io::pretty(rhs, qnames) +
                         "\nholds: " + (holds ? "yes" : "no");
      return {holds ? 0 : 1, render(j, spec.format, text)};
    }
    case Command::Specialize: {
      const EhrhartSeries s = series(p);
      if (!spec.lambda) {
        const RationalFunction c = specialize_classical(s).reduced();
        Json j{{"type", "classical_ehrhart_series"}, {"variables", {"t"}}, {"value", io::to_json(c)}};
        return {0, render(j, spec.format, "Ehr(t) = " + io::pretty(c, {"t"}))};
      }
      const RationalFunction qe = specialize_q_ehrhart(s, *spec.lambda).reduced();
      Json j{{"type", "q_ehrhart_series"},
             {"lambda", io::to_json(LatticeVector(*spec.lambda))},
             {"variables", {"q", "t"}},
             {"value", io::to_json(qe)}};
      return {0, render(j, spec.format, "Ehr(t,q) = " + io::pretty(qe, {"q", "t"}))};
    }
    case Command::Verify: {
      const std::size_t bound = static_cast<std::size_t>(spec.bound.value_or(3));
      const VerificationReport report = verify(p, bound);
      Json checks = Json::array();
      std::ostringstream text;
      for (const auto& c : report.checks) {
        checks.push_back(Json{{"name", c.name},
                              {"statement", c.statement},
                              {"passed", c.passed},
                              {"detail", c.detail}});
        text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.statement;
        if (!c.detail.empty()) text << " (" << c.detail << ")";
        text << "\n";
      }
      text << (report.all_passed() ? "all checks passed" : "some checks failed");
      Json j{{"type", "verification_report"},
             {"bound", bound},
             {"checks", checks},
             {"all_passed", report.all_passed()}};
      return {report.all_passed() ? 0 : 1, render(j, spec.format, text.str())};
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command");
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  if (name == "series") return Command::Series;
  if (name == "delta") return Command::Delta;
  if (name == "poly") return Command::Poly;
  if (name == "eval") return Command::Eval;
  if (name == "reciprocity") return Command::Reciprocity;
  if (name == "specialize") return Command::Specialize;
  if (name == "verify") return Command::Verify;
  return std::nullopt;
}

std::vector<Integer> parse_integer_list(const std::string& csv) {
  std::vector<Integer> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    const bool ok = !item.empty() &&
                    item.find_first_not_of("0123456789", item[0] == '-' ? 1 : 0) == std::string::npos &&
                    item != "-";
    if (!ok) throw Error(ErrorCode::InvalidArgument, "not an integer list", csv);
    out.emplace_back(item);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "empty integer list", csv);
  return out;
}

JobResult run(const JobSpec& spec) {
  try {
    return execute(spec);
  } catch (const Error& e) {
    Json j{{"error", {{"code", to_string(e.code())}, {"message", e.what()}, {"datum", e.datum()}}}};
    return {2, j.dump(2) + "\n"};
  }
}

}  // namespace mbe::cli
