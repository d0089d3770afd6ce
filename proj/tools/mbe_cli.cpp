#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli.hpp"
#include "mbe/error.hpp"

int main(int argc, char** argv) {
  using namespace mbe::cli;
  CLI::App app{"Multibasic Ehrhart series, delta-vectors and polynomials of lattice polytopes"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string format = "json";
  std::string lambda;
  long n = 0, bound = 3;

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"series", "multibasic Ehrhart series", Command::Series},
      {"delta", "multibasic delta-vector", Command::Delta},
      {"poly", "multibasic Ehrhart polynomial", Command::Poly},
      {"eval", "evaluate the polynomial at q-integers [n]_q", Command::Eval},
      {"reciprocity", "check reciprocity at dilation n", Command::Reciprocity},
      {"specialize", "classical (default) or q-Ehrhart series via --lambda", Command::Specialize},
      {"verify", "run every identity check against lattice-point enumeration", Command::Verify},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("input", spec.input_path, "polytope JSON file {\"vertices\": [[...], ...]}")
        ->required();
    sub->add_option("--format", format, "json or pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    if (e.command == Command::Eval || e.command == Command::Reciprocity)
      sub->add_option("--n", n, "dilation / q-integer argument")->required();
    if (e.command == Command::Eval)
      sub->add_flag("--interior", spec.interior, "also report sigma of the interior of nP");
    if (e.command == Command::Specialize)
      sub->add_option("--lambda", lambda, "linear form as comma-separated integers");
    if (e.command == Command::Verify)
      sub->add_option("--bound", bound, "largest dilation used by the checks");
    const Command command = e.command;
    sub->callback([&spec, command] { spec.command = command; });
  }

  CLI11_PARSE(app, argc, argv);

  spec.format = format == "pretty" ? Format::Pretty : Format::Json;
  if (spec.command == Command::Eval || spec.command == Command::Reciprocity) spec.n = n;
  if (spec.command == Command::Verify) spec.bound = bound;
  if (!lambda.empty()) {
    try {
      spec.lambda = parse_integer_list(lambda);
    } catch (const mbe::Error& e) {
      std::cout << "{\n  \"error\": {\"code\": \"InvalidArgument\", \"message\": \"" << e.what()
                << "\", \"datum\": \"" << e.datum() << "\"}\n}\n";
      return 2;
    }
  }
  const JobResult result = run(spec);
  std::cout << result.output;
  return result.exit_status;
}
