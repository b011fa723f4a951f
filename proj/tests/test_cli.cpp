#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "csheaf/commands.hpp"
#include "csheaf/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

using namespace csheaf;

namespace {

const char* kA2 = "# 1 -> 2\nfield 2\nvertices 1 2\narrow a : 1 -> 2\n";
const char* kA3 = "field 2\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrelation b*a\n";

std::string fixture_path(const std::string& name) { return std::string(CSHEAF_FIXTURE_DIR) + "/" + name + ".quiver"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AlgebraSpec fixture_spec(const std::string& name) { return parse_spec(slurp(fixture_path(name))); }

// line and column of the ParseError raised by `text`
std::pair<std::size_t, std::size_t> error_position(const std::string& text, const std::string& needle) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(std::string(e.what()).find(needle) != std::string::npos, e.what());
    return {e.line(), e.column()};
  }
  FAIL("no ParseError for: " << text);
  return {0, 0};
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CSHEAF_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

}  // namespace

TEST_CASE("parse_spec examples") {
  auto a2 = parse_spec(kA2);
  CHECK(a2.characteristic == 2);
  CHECK(a2.vertices.size() == 2);
  CHECK(a2.arrows.size() == 1);
  CHECK(a2.relations.empty());

  auto a3 = parse_spec(kA3);
  REQUIRE(a3.relations.size() == 1);
  REQUIRE(a3.relations[0].terms.size() == 1);
  CHECK(a3.relations[0].terms[0].coefficient == 1);
  CHECK(a3.relations[0].terms[0].arrows == std::vector<std::string>{"b", "a"});
  CHECK(a3.relations[0].line == 5);

  auto mixed = parse_spec(
      "field 5\nvertices p\narrow x : p -> p\narrow y : p -> p   # two loops\n"
      "relation 2*x*x - y*y\nrelation -x*y+3*y*x\noption budget 3\noption seed 9\n");
  REQUIRE(mixed.relations.size() == 2);
  CHECK(mixed.relations[0].terms[0].coefficient == 2);
  CHECK(mixed.relations[0].terms[1].coefficient == -1);
  CHECK(mixed.relations[1].terms[0].coefficient == -1);
  CHECK(mixed.relations[1].terms[1].coefficient == 3);
  CHECK(mixed.options.budget == Index{3});
  CHECK(mixed.options.seed == std::uint64_t{9});
  CHECK_FALSE(mixed.options.jmax.has_value());
}

TEST_CASE("parse_spec errors carry positions") {
  CHECK(error_position("field 4\nvertices 1\n", "characteristic must be prime") == std::pair<std::size_t, std::size_t>{1, 7});
  CHECK(error_position("field 2\nvertices 1 2\narrow a : 1 -> 3\n", "unknown vertex '3'") ==
        std::pair<std::size_t, std::size_t>{3, 16});
  CHECK(error_position(kA3 + std::string("relation c*a\n"), "unknown arrow 'c'") == std::pair<std::size_t, std::size_t>{6, 10});
  CHECK(error_position(kA3 + std::string("relation a*b\n"), "does not start where") ==
        std::pair<std::size_t, std::size_t>{6, 10});
  CHECK(error_position("field 2\nvertices 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\narrow c : 2 -> 2\nrelation c*a + b\n",
                       "length at least 2")
            .first == 6);
  CHECK(error_position("field 2\nvertices 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 2 -> 2\n"
                       "relation b*a + c*a\n",
                       "not parallel") == std::pair<std::size_t, std::size_t>{6, 16});
  CHECK(error_position(kA3 + std::string("relation b*a +\n"), "missing").first == 6);
  CHECK(error_position(kA3 + std::string("relation 2 b*a\n"), "followed by '*'").first == 6);
  CHECK(error_position(kA3 + std::string("relation b*2\n"), "coefficients go in front").first == 6);
  CHECK(error_position(kA3 + std::string("relation b*a b*a\n"), "expected '+' or '-'").first == 6);
  CHECK(error_position(kA3 + std::string("relation\n"), "empty relation").first == 6);
  CHECK(error_position("field 2\nvertices 1 1\n", "duplicate vertex").first == 2);
  CHECK(error_position("field 2\nvertices 1\nedge a : 1 -> 1\n", "unknown directive") ==
        std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_position("field 2\nvertices 1\noption depth 3\n", "unknown option").first == 3);
  CHECK(error_position("vertices 1\n", "missing 'field'").first == 2);
  CHECK(error_position("field 2\n", "missing 'vertices'").first == 2);
  CHECK(error_position("field 2\nfield 3\nvertices 1\n", "field declared twice").first == 2);
  CHECK(error_position("field 2\nvertices 1\narrow a 1 -> 1\n", "expected").first == 3);
  CHECK(error_position("field 2\nvertices 1 $\n", "unexpected character").first == 2);
}

TEST_CASE("format_spec round-trips") {
  for (const char* name : {"a2", "a3", "loop2", "kron", "2pt"}) {
    CAPTURE(name);
    auto spec = fixture_spec(name);
    auto again = parse_spec(format_spec(spec));
    CHECK(format_spec(again) == format_spec(spec));
  }
  auto mixed = parse_spec("field 5\nvertices p\narrow x : p -> p\nrelation 2*x*x*x - x*x\noption jmax 1\n");
  CHECK(format_spec(mixed) == "field 5\nvertices p\narrow x : p -> p\nrelation 2*x*x*x - x*x\noption jmax 1\n");
}

TEST_CASE("fixture files build the shared test algebras") {
  struct Case {
    const char* file;
    BoundAlgebra (*make)();
    Index dimension;  // path basis counted by hand
  };
  const Case cases[] = {{"a2", fx::a2, 3}, {"a3", fx::a3, 5}, {"loop2", fx::loop2, 2}, {"kron", fx::kron, 4}, {"2pt", fx::two_point, 2}};
  for (const auto& c : cases) {
    CAPTURE(c.file);
    auto built = build_algebra(fixture_spec(c.file));
    auto reference = c.make();
    CHECK(built.dimension() == c.dimension);
    CHECK(reference.dimension() == c.dimension);
    CHECK(built.modulus() == reference.modulus());
    CHECK(built.vertex_count() == reference.vertex_count());
    for (Index i = 0; i < built.dimension(); ++i)
      CHECK(path_name(built.quiver(), built.path_basis()[i]) == path_name(reference.quiver(), reference.path_basis()[i]));
  }
  CHECK_THROWS_AS(build_algebra(parse_spec("field 2\nvertices 1\narrow x : 1 -> 1\n")), NotFiniteDimensional);
}

TEST_CASE("options: command line over spec over defaults") {
  auto spec = parse_spec(std::string(kA2) + "option budget 1\noption jmax 1\n");
  auto e = resolve_options(spec, {});
  CHECK(e.budget == 1);
  CHECK(e.jmax == 1);
  CHECK(e.seed == 1);
  RunOptions o;
  o.budget = 3;
  o.seed = 7;
  e = resolve_options(spec, o);
  CHECK(e.budget == 3);
  CHECK(e.jmax == 1);
  CHECK(e.seed == 7);
  CHECK(resolve_options(parse_spec(kA2), {}).budget == 2);
  o.budget = 0;
  CHECK_THROWS_AS(resolve_options(spec, o), InvalidArgument);
}

TEST_CASE("topology on A2 lists three opens") {
  auto r = run_command("topology", fixture_spec("a2"), "a2");
  REQUIRE(r.find_value("open_count") != nullptr);
  CHECK(*r.find_value("open_count") == "3");
  REQUIRE(r.tables.size() == 1);
  CHECK(r.tables[0].rows.size() == 3);
  CHECK(r.tables[0].rows[1][0] == "{I(2)}");
  CHECK(exit_status(r) == 0);
}

TEST_CASE("spectrum on A2 reports the Hom matrix") {
  auto r = run_command("spectrum", fixture_spec("a2"), "a2");
  REQUIRE(r.tables.size() == 2);
  // Hom(I(2), I(1)) != 0 and Hom(I(1), I(2)) = 0
  CHECK(r.tables[1].rows[0] == std::vector<std::string>{"I(1)", "1", "0"});
  CHECK(r.tables[1].rows[1] == std::vector<std::string>{"I(2)", "1", "1"});
}

TEST_CASE("center on LOOP2: dims (2, 2) and a match") {
  auto r = run_command("center", fixture_spec("loop2"), "loop2");
  CHECK(*r.find_value("algebra_center_dim") == "2");
  CHECK(*r.find_value("sections_dim") == "2");
  CHECK(*r.find_value("match") == "true");
  CHECK(exit_status(r) == 0);
}

TEST_CASE("sheaf and recollement commands pass on the fixtures") {
  for (const char* name : {"a2", "loop2", "kron", "2pt"}) {
    CAPTURE(name);
    auto spec = fixture_spec(name);
    CHECK(exit_status(run_command("sheaf", spec, name)) == 0);
    CHECK(exit_status(run_command("recollement", spec, name)) == 0);
  }
}

TEST_CASE("verify-all on 2PT passes every check") {
  auto r = run_command("verify-all", fixture_spec("2pt"), "2pt");
  CHECK(r.checks.size() >= 20);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.outcome == Outcome::pass);
    CHECK(c.cases > 0);
  }
  CHECK(exit_status(r) == 0);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  auto spec = fixture_spec("a3");
  auto a = run_command("recollement", spec, "a3");
  auto b = run_command("recollement", spec, "a3");
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));
  CHECK(render_text(a).find("timing") == std::string::npos);
  a.seconds = 0.25;
  CHECK(render_text(a).find("timing.seconds: 0.250") != std::string::npos);
}

TEST_CASE("JSON schema") {
  auto r = run_command("topology", fixture_spec("a3"), "a3");
  auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["command"] == "topology");
  CHECK(j["inputs"]["field"] == "2");
  CHECK(j["values"]["open_count"] == "4");
  CHECK(j["tables"][0]["rows"].size() == 4);
  CHECK(j["checks"][0]["outcome"] == "pass");
  CHECK(j["outcome"] == "pass");
  CHECK_FALSE(j.contains("timing"));
}

TEST_CASE("exit status follows the worst outcome") {
  Report r;
  CHECK(exit_status(r) == 0);
  Check undecided("u");
  undecided.undecided("budget");
  r.checks.push_back(undecided);
  CHECK(exit_status(r) == 2);
  Check failed("f");
  failed.fail("counterexample");
  r.checks.push_back(failed);
  CHECK(exit_status(r) == 1);
  CHECK_THROWS_AS(run_command("frobnicate", fixture_spec("a2"), "a2"), InvalidArgument);
}

TEST_CASE("tool exit codes") {
  CHECK(run_tool("topology " + fixture_path("a2")) == 0);
  CHECK(run_tool("verify-all " + fixture_path("2pt") + " --json") == 0);
  CHECK(run_tool("topology /nonexistent.quiver") == 3);
  CHECK(run_tool("frobnicate " + fixture_path("a2")) == 3);
  CHECK(run_tool("topology") == 3);
  const std::string bad = std::string(CSHEAF_BINARY_DIR) + "/bad_field.quiver";
  std::ofstream(bad) << "field 4\nvertices 1\n";
  CHECK(run_tool("topology " + bad) == 3);
  // budget 1 cannot reach I(1) of LOOP2, which is 2-dimensional
  CHECK(run_tool("center " + fixture_path("loop2") + " --budget 1") == 2);
}
