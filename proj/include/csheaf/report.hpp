#pragma once

// The report every command produces: a flat list of key/value pairs, some
// tables and the verification outcomes. It renders either as text or as
// JSON; both forms are deterministic, and the timing section only appears
// when it was requested.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csheaf/check.hpp"

namespace csheaf {

struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<ReportTable> tables;
  std::vector<Check> checks;
  /// Wall-clock seconds, filled in only on request.
  std::optional<double> seconds;

  void input(std::string key, std::string value) { inputs.emplace_back(std::move(key), std::move(value)); }
  void value(std::string key, std::string v) { values.emplace_back(std::move(key), std::move(v)); }
  const std::string* find_value(const std::string& key) const;

  Outcome outcome() const { return combine_outcomes(checks); }
};

std::string render_text(const Report& r);
std::string render_json(const Report& r);

/// 0 all pass, 1 any fail, 2 any undecided (and no fail).
int exit_status(const Report& r);

}  // namespace csheaf
