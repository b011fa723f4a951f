#include "csheaf/error.hpp"
#include "csheaf/suites.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace csheaf;

TEST_CASE("stable_subcategories matches the hand lists") {
  auto a3 = fx::a3();
  std::vector<VertexSet> got;
  for (const auto& l : stable_subcategories(a3)) got.push_back(l.vertices());
  CHECK(got == std::vector<VertexSet>{VertexSet{}, VertexSet{0}, VertexSet{0, 1}, VertexSet{0, 1, 2}});
  CHECK(stable_subcategories(fx::two_point()).size() == 4);
}

TEST_CASE("module_samples: iso classes then the basic modules") {
  // 2PT over F2 with dims <= 1: 0, S1, S2, S1+S2
  auto two = fx::two_point();
  auto s = module_samples(two, 1);
  CHECK(s.size() == 4 + 3 * 2);
  CHECK(s.front().is_zero());
  CHECK_THROWS_AS(enumerate_representations(fx::kron(), 3, 10), InvalidArgument);
}

TEST_CASE("absorb keeps the worst outcome and the first failure") {
  Check total("total");
  Check ok("a");
  ok.expect(true, [] { return std::string(); });
  absorb(total, ok, "x");
  CHECK(total.passed());
  CHECK(total.cases == 1);
  Check u("u");
  u.undecided("too big");
  absorb(total, u, "y");
  CHECK(total.outcome == Outcome::undecided);
  CHECK(total.detail == "y: too big");
  Check bad("b");
  bad.expect(false, [] { return std::string("boom"); });
  absorb(total, bad, "z");
  CHECK(total.outcome == Outcome::fail);
  CHECK(total.detail == "z: boom");
  Check worse("c");
  worse.fail("later");
  absorb(total, worse, "w");
  CHECK(total.detail == "z: boom");
  CHECK(total.cases == 2);
}

TEST_CASE("recollement_suite merges per-pair checks by name") {
  auto two = fx::two_point();
  CentralSheaf sheaf(two);
  auto pairs = recollement_suite(sheaf, {});
  CHECK(pairs.size() == 16);
  auto merged = merge_pair_checks(pairs);
  REQUIRE(merged.size() == 7);
  CHECK(merged[0].name == "unit X -> VR(X) is an isomorphism after closure");
  CHECK(merged[6].name == "center exact sequence");
  for (const auto& c : merged) {
    CAPTURE(c.name);
    CHECK(c.passed());
  }
  Index unit_cases = 0;
  for (const auto& p : pairs) unit_cases += p.checks[0].cases;
  CHECK(merged[0].cases == unit_cases);
}

TEST_CASE("oracle_suite on every fixture") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    CentralSheaf sheaf(f.make());
    for (const auto& row : oracle_suite(sheaf, 2)) {
      CAPTURE(row.check.detail);
      CHECK(row.check.passed());
      CHECK(row.oracle_dim == row.sections_dim);
    }
  }
  // LOOP2's injective is 2-dimensional, so budget 1 leaves the open row undecided
  CentralSheaf loop(fx::loop2());
  auto rows = oracle_suite(loop, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].check.outcome == Outcome::undecided);
  CHECK(rows[1].check.passed());
}

TEST_CASE("the per-fixture suites pass") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    auto samples = module_samples(alg, 1);
    CHECK(torsion_calculus_check(alg, samples).passed());
    CHECK(injective_splitting_suite(alg, samples).passed());
    CHECK(ext_orthogonality_suite(alg, samples, 2).passed());
  }
}
