#pragma once

// The analyses behind the command-line tool. Each command turns a parsed
// algebra description into a Report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csheaf/report.hpp"
#include "csheaf/spec_parser.hpp"

namespace csheaf {

/// Command-line overrides; unset fields fall back to the `option` lines and
/// then to the defaults (budget 2, jmax 2, seed 1).
struct RunOptions {
  std::optional<Index> budget;
  std::optional<Index> jmax;
  std::optional<std::uint64_t> seed;
};

struct EffectiveOptions {
  Index budget = 2;
  Index jmax = kDefaultJMax;
  std::uint64_t seed = 1;
};

EffectiveOptions resolve_options(const AlgebraSpec& spec, const RunOptions& overrides);

/// spectrum, topology, sheaf, center, recollement, verify-all.
const std::vector<std::string>& command_names();

/// Runs one command. Throws InvalidArgument for an unknown command and lets
/// input-level errors from the library through; a TheoremViolation or
/// Undecided raised mid-run becomes a failed or undecided check instead.
Report run_command(const std::string& command, const AlgebraSpec& spec, const std::string& spec_label,
                   const RunOptions& overrides = {});

}  // namespace csheaf
