#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qkac::cli {

struct RunConfig {
  std::string command;
  std::string preset;
  std::string datum_file;
  std::optional<int> height;
  /// Rational specializations as text ("2", "1/3"); empty means {2, 1/3}.
  std::vector<std::string> zs;
  std::optional<std::uint64_t> prime;
  /// Pairings <lambda, h_i> as "1,0".
  std::string weight;
  /// Restricts `pairing` to one component, as "1,1".
  std::string gamma;
  std::string out_dir;
};

struct Check {
  std::string name;
  std::string status;  // pass, fail, skipped
  std::string detail;
};

/// Exit status: 0 when every check passes, 1 on a failed check, 2 on invalid
/// input. Tables go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and calls run().
int main_entry(int argc, char** argv);

const std::vector<std::string>& commands();

}  // namespace qkac::cli
