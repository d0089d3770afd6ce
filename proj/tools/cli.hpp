#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mbe/lattice.hpp"

namespace mbe::cli {

enum class Command { Series, Delta, Poly, Eval, Reciprocity, Specialize, Verify };
enum class Format { Json, Pretty };

struct JobSpec {
  Command command = Command::Series;
  std::string input_path;
  std::optional<long> n;
  std::optional<std::vector<Integer>> lambda;
  std::optional<long> bound;
  Format format = Format::Json;
  bool interior = false;
};

struct JobResult {
  int exit_status = 0;
  std::string output;
};

std::optional<Command> parse_command(const std::string& name);

/// Comma-separated integers, e.g. "1,-2,3".
std::vector<Integer> parse_integer_list(const std::string& csv);

/// Runs one job. Errors from any stage become a JSON error object
/// {"error": {"code", "message", "datum"}} with exit status 2; checks that
/// evaluate to false give exit status 1.
JobResult run(const JobSpec& spec);

}  // namespace mbe::cli
