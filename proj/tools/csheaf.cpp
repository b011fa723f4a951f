// csheaf <command> <specfile> [--budget N] [--jmax N] [--seed N] [--json] [--timing]

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "csheaf/commands.hpp"
#include "csheaf/error.hpp"

namespace {

constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw csheaf::InvalidArgument("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central sheaf computations on bound quiver algebras"};
  std::string command, path;
  csheaf::RunOptions overrides;
  bool json = false, timing = false;
  std::string commands;
  for (const auto& c : csheaf::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "One of: " + commands)->required();
  app.add_option("specfile", path, "Algebra description")->required();
  app.add_option("--budget", overrides.budget, "Per-vertex dimension bound for enumerated modules");
  app.add_option("--jmax", overrides.jmax, "Largest Ext degree checked");
  app.add_option("--seed", overrides.seed, "Seed for randomized isomorphism searches");
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_flag("--timing", timing, "Append wall-clock time to the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const auto spec = csheaf::parse_spec(read_file(path));
    auto report = csheaf::run_command(command, spec, path, overrides);
    if (timing) report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (json ? csheaf::render_json(report) : csheaf::render_text(report));
    return csheaf::exit_status(report);
  } catch (const csheaf::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return kInputError;
  } catch (const csheaf::TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return 1;
  } catch (const csheaf::Undecided& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return 2;
  } catch (const csheaf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
