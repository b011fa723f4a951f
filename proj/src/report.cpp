#include "csheaf/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace csheaf {

const std::string* Report::find_value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

namespace {

std::string fixed_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

// Tables are pipe-separated with columns padded to their widest cell.
void render_table(std::ostringstream& out, const ReportTable& t) {
  std::vector<std::size_t> width(t.columns.size(), 0);
  for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    out << ' ';
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out << ' ' << cells[c];
      if (c + 1 < cells.size()) out << std::string(width[c] - cells[c].size(), ' ') << " |";
    }
    out << '\n';
  };
  out << "table " << t.name << " (" << t.rows.size() << " rows)\n";
  line(t.columns);
  for (const auto& row : t.rows) line(row);
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  for (const auto& [k, v] : r.inputs) out << "input." << k << ": " << v << '\n';
  for (const auto& [k, v] : r.values) out << "value." << k << ": " << v << '\n';
  for (const auto& t : r.tables) render_table(out, t);
  for (const auto& c : r.checks) {
    out << "check " << c.name << ": " << outcome_name(c.outcome) << " (" << c.cases << " cases)";
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << '\n';
  }
  out << "outcome: " << outcome_name(r.outcome()) << '\n';
  if (r.seconds) out << "timing.seconds: " << fixed_seconds(*r.seconds) << '\n';
  return out.str();
}

std::string render_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["command"] = r.command;
  ordered_json inputs = ordered_json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  j["inputs"] = inputs;
  ordered_json values = ordered_json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  j["values"] = values;
  ordered_json tables = ordered_json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  j["tables"] = tables;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"outcome", outcome_name(c.outcome)}, {"cases", c.cases}, {"detail", c.detail}});
  j["checks"] = checks;
  j["outcome"] = outcome_name(r.outcome());
  if (r.seconds) j["timing"] = {{"seconds", std::stod(fixed_seconds(*r.seconds))}};
  return j.dump(2) + "\n";
}

int exit_status(const Report& r) {
  switch (r.outcome()) {
    case Outcome::pass: return 0;
    case Outcome::fail: return 1;
    case Outcome::undecided: return 2;
  }
  return 1;
}

}  // namespace csheaf
