#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "cli.hpp"
#include "mbe/serialize.hpp"

using namespace mbe;
using namespace mbe::cli;

namespace {

struct InputFile {
  std::string path;
  InputFile(const std::string& name, const std::string& body) : path(name) { std::ofstream(path) << body; }
  ~InputFile() { std::remove(path.c_str()); }
};

io::Json run_json(const JobSpec& spec, int expected_status = 0) {
  const JobResult r = run(spec);
  CHECK(r.exit_status == expected_status);
  return io::Json::parse(r.output);
}

JobSpec job(Command c, const std::string& path) {
  JobSpec s;
  s.command = c;
  s.input_path = path;
  return s;
}

}  // namespace

TEST_CASE("series on the standard 2-simplex") {
  InputFile f("cli_simplex.json", R"({"vertices": [[1,0,0],[0,1,0],[0,0,1]]})");
  const auto j = run_json(job(Command::Series, f.path));
  CHECK(j["type"] == "multibasic_ehrhart_series");
  CHECK(j["numerator"]["terms"].dump() == R"([[[0,0,0,0],"1"]])");
  CHECK(j["denominator_vertices"].dump() == "[[1,0,0],[0,1,0],[0,0,1]]");
  // byte-for-byte deterministic
  CHECK(run(job(Command::Series, f.path)).output == run(job(Command::Series, f.path)).output);
}

TEST_CASE("eval at n = 0 is one") {
  InputFile f("cli_square.json", R"({"vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  auto spec = job(Command::Eval, f.path);
  spec.n = 0;
  const auto j = run_json(spec);
  CHECK(j["value"]["numerator"]["terms"].dump() == R"([[[0,0],"1"]])");
  CHECK(j["value"]["denominator"].empty());
  CHECK_FALSE(j.contains("oracle_equal"));
  spec.n = 2;
  spec.interior = true;
  const auto k = run_json(spec);
  CHECK(k["oracle_equal"] == true);
  CHECK(k["interior_sigma"]["terms"].dump() == R"([[[1,1],"1"]])");
}

TEST_CASE("verify on the unit square") {
  InputFile f("cli_square_verify.json", R"({"vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  auto spec = job(Command::Verify, f.path);
  spec.bound = 3;
  const auto j = run_json(spec);
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() >= 10);
  for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
}

TEST_CASE("other commands") {
  InputFile f("cli_segment.json", R"({"vertices": [[0],[2]]})");
  CHECK(run_json(job(Command::Delta, f.path))["delta"].size() == 2);
  CHECK(run_json(job(Command::Poly, f.path))["total_degree"] == 2);
  auto rec = job(Command::Reciprocity, f.path);
  rec.n = 1;
  const auto r = run_json(rec);
  CHECK(r["holds"] == true);
  CHECK(r["rhs"]["terms"].dump() == R"([[[-1],"-1"]])");
  auto spec = job(Command::Specialize, f.path);
  CHECK(run_json(spec)["type"] == "classical_ehrhart_series");
  spec.lambda = std::vector<Integer>{1};
  CHECK(run_json(spec)["type"] == "q_ehrhart_series");
  spec.format = Format::Pretty;
  CHECK(run(spec).output == "Ehr(t,q) = (1 + q*t) / ((1 - t)(1 - q^2*t))\n");
}

TEST_CASE("errors are reported as JSON") {
  InputFile bad("cli_bad.json", R"({"vertices": [[0],[1],[2]]})");
  const auto e = run_json(job(Command::Series, bad.path), 2);
  CHECK(e["error"]["code"] == "NotAVertex");
  CHECK(e["error"]["datum"] == "1");
  CHECK(run_json(job(Command::Series, "missing.json"), 2)["error"]["code"] == "ParseError");

  InputFile neg("cli_negative.json", R"({"vertices": [[-1],[1]]})");
  CHECK(run_json(job(Command::Poly, neg.path), 2)["error"]["code"] == "NegativeOrthantViolation");
  auto rec = job(Command::Reciprocity, neg.path);
  rec.n = 0;
  CHECK(run_json(rec, 2)["error"]["code"] == "InvalidArgument");

  InputFile sq("cli_square_err.json", R"({"vertices": [[0,0],[1,0],[0,1],[1,1]]})");
  auto spec = job(Command::Specialize, sq.path);
  spec.lambda = std::vector<Integer>{0, 0};
  CHECK(run_json(spec, 2)["error"]["code"] == "NonGenericLinearForm");
  auto ev = job(Command::Eval, sq.path);
  CHECK(run_json(ev, 2)["error"]["code"] == "InvalidArgument");
}

TEST_CASE("argument helpers") {
  CHECK(parse_command("verify") == Command::Verify);
  CHECK_FALSE(parse_command("frobnicate"));
  CHECK(parse_integer_list("1, -2,3") == std::vector<Integer>{1, -2, 3});
  CHECK_THROWS(parse_integer_list("1,,2"));
  CHECK_THROWS(parse_integer_list("a"));
}
