#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "detset/caps.hpp"
#include "detset/report.hpp"

namespace detset {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResourceCap = 3;

struct CliOptions {
  ReportFormat format = ReportFormat::text;
  std::optional<std::size_t> max_order;
  std::optional<std::uint64_t> aut_cap;
  std::optional<std::uint64_t> node_budget;
  unsigned workers = 1;
  bool seedless = false;  // reserved: no randomized heuristics exist
  bool timing = false;    // fill millis; off by default for byte-stable output
  std::string families;   // comma-separated catalog families, empty for all
  bool no_products = false;
  std::string caps_env;   // DETSET_CAPS contents
};

// Caps after DETSET_CAPS overrides and explicit flags, in that order.
Caps effective_caps(const CliOptions& options);

// Runs one command (alpha, gamma, aut, deg, info, verify, catalog) and writes
// the report to `out`. Diagnostics go to `err`. Returns the exit code.
int run_command(const std::string& command, const std::string& expr, const CliOptions& options,
                std::ostream& out, std::ostream& err);

// Full command line entry point, including flag parsing.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detset
