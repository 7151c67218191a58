#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/exact.hpp"

namespace sturmian {

struct RunConfig {
  std::string command;
  std::string alpha;  // empty: the command's default
  std::optional<std::string> tail;
  std::string x;
  std::optional<std::int64_t> N;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> m;
  std::string rho = "1/5";
  std::string sigma = "1/10";
  std::string C;
  std::uint64_t seed = 1;
  std::optional<std::int64_t> samples;
  unsigned jobs = 1;
  std::string format;
  std::string out;
  std::string dump_per_j;
  std::string plot_data;
  std::int64_t oracle_max = 2000;
  std::vector<std::string> checkpoints;
  bool oscillation = false;
  bool growth = false;
};

/// Parses arguments (without the program name) and fills per-command
/// defaults.  Throws ConfigError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Options that determine the payload, in a fixed order, as a command line
/// that parses back to the same string.  Output paths and --jobs are left
/// out since they do not change results.
std::string canonical(const RunConfig& cfg);

/// Runs a command line.  Returns 0 on success, 1 when a verification fails,
/// 2 on a configuration error; errors go to `err` as "error[CODE]: ...".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sturmian
