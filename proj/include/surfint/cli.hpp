#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "surfint/geometry.hpp"

namespace surfint {

enum class OutputFormat { text, json, csv };

struct RunConfig {
  std::string surface;                  // catalog name or definition file path
  std::vector<std::string> fields;      // preset/definition names or inline "vx,vy,vz"
  std::vector<std::string> scalars;     // preset/definition names or inline expressions
  std::vector<std::string> identities;  // checker ids, or "all"
  std::optional<int> panels;
  std::optional<int> nodes;
  std::optional<int> boundary_panels;
  std::optional<double> tolerance;
  std::optional<Vec3> direction;  // Liouville reference direction C
  std::uint64_t seed = 1;
  bool serial = false;
  OutputFormat format = OutputFormat::text;
  std::string out;  // empty: write to `out` stream
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses command-line flags into config. Returns an exit code when the
/// process should stop (help, --list or a usage error), nullopt to continue.
std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err);

/// Runs the selected checkers and writes the report. Exit code 0 when no
/// checker failed (hypothesis-violated records do not count as failures),
/// 1 on identity failures, 2 on usage or schema errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int verify_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace surfint
