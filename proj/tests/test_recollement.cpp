#include "csheaf/error.hpp"
#include "csheaf/recollement.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "modules.hpp"

using namespace csheaf;

namespace {

LocalizingSubcategory sub(const BoundAlgebra& alg, std::initializer_list<Index> vs) { return {alg, VertexSet(vs)}; }

std::vector<LocalizingSubcategory> stable_subcategories(const BoundAlgebra& alg) {
  std::vector<LocalizingSubcategory> out;
  for (auto s : all_subsets(alg.vertex_count()))
    if (is_stable({alg, s})) out.emplace_back(alg, s);
  return out;
}

}  // namespace

TEST_CASE("recollement requires stable subcategories") {
  auto a2 = fx::a2();
  CHECK_THROWS_AS(Recollement(sub(a2, {1}), sub(a2, {0})), HypothesisViolation);
  CHECK_NOTHROW(Recollement(sub(a2, {0}), LocalizingSubcategory::zero(a2)));
}

TEST_CASE("functor_R examples") {
  auto a3 = fx::a3();
  Recollement none(LocalizingSubcategory::zero(a3), LocalizingSubcategory::zero(a3));
  auto x = indecomposable_injective(a3, 1);
  auto rx = functor_R(none, x);
  CHECK(rx.object.x0 == x);
  CHECK(rx.object.x1 == x);
  CHECK(rx.object.sigma == ModuleMap::identity(x));

  Recollement everything(LocalizingSubcategory::everything(a3), LocalizingSubcategory::everything(a3));
  auto killed = functor_R(everything, x);
  CHECK(killed.object.x0.is_zero());
  CHECK(killed.object.x1.is_zero());

  // S0 = {1}, S1 = {1,2}: I(2) has socle S(2), so it survives in both quotients
  Recollement r(sub(a3, {0}), sub(a3, {0, 1}));
  auto ri = functor_R(r, x);
  CHECK(is_isomorphic(ri.object.x0, x).has_value());
  CHECK(ri.object.x1.is_zero());
  CHECK(ri.object.sigma.is_isomorphism());
}

TEST_CASE("functor_R on maps is functorial") {
  auto a3 = fx::a3();
  Recollement r(sub(a3, {0}), sub(a3, {0, 1}));
  auto mods = fx::basic_modules(a3);
  for (const auto& x : mods)
    for (const auto& y : mods)
      for (const auto& z : mods) {
        auto rx = functor_R(r, x), ry = functor_R(r, y), rz = functor_R(r, z);
        for (const auto& f : hom_space(x, y))
          for (const auto& g : hom_space(y, z)) {
            auto rf = functor_R(f, rx, ry), rg = functor_R(g, ry, rz), rgf = functor_R(compose(g, f), rx, rz);
            CHECK(compose(rg.g0, rf.g0) == rgf.g0);
            CHECK(compose(rg.g1, rf.g1) == rgf.g1);
            CHECK(is_recollement_morphism(rx.object, ry.object, rf));
          }
      }
}

TEST_CASE("functor_V examples") {
  auto a3 = fx::a3();
  Recollement none(LocalizingSubcategory::zero(a3), LocalizingSubcategory::zero(a3));
  auto x = indecomposable_injective(a3, 1);
  auto v = functor_V(none, functor_R(none, x).object);
  CHECK(is_isomorphic(v.object, x).has_value());
  CHECK(v.pi0.is_isomorphism());

  Recollement everything(LocalizingSubcategory::everything(a3), LocalizingSubcategory::everything(a3));
  CHECK(functor_V(everything, functor_R(everything, x).object).object.is_zero());

  // S(2) on A3 glued over {1} and {1,2}: the meet is {1}, and S(2) is not
  // closed there, so V recovers its closure I(2)
  Recollement r(sub(a3, {0}), sub(a3, {0, 1}));
  auto s2 = simple(a3, 1);
  auto vs = functor_V(r, functor_R(r, s2).object);
  CHECK(is_isomorphic(vs.object, localize(r.meet(), s2).closure).has_value());
  CHECK(is_isomorphic(vs.object, x).has_value());
}

TEST_CASE("functor_V rejects a non-invertible sigma") {
  auto a2 = fx::a2();
  Recollement r(LocalizingSubcategory::zero(a2), LocalizingSubcategory::zero(a2));
  auto rx = functor_R(r, simple(a2, 0)).object;
  rx.sigma = ModuleMap::zero(rx.c0.closure, rx.c1.closure);
  CHECK_THROWS_AS(functor_V(r, rx), InvalidArgument);
  CHECK_THROWS_AS(make_recollement_object(r, rx.x0, rx.x1, rx.sigma), InvalidArgument);
  CHECK_THROWS_AS(make_recollement_object(Recollement(sub(a2, {0}), sub(a2, {0})), simple(a2, 0), simple(a2, 0),
                                          ModuleMap::identity(simple(a2, 0))),
                  InvalidArgument);
}

TEST_CASE("glued Hom of R(X), R(Y) has the dimension of Hom between closures for the meet") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    auto stable = stable_subcategories(alg);
    auto mods = fx::basic_modules(alg);
    for (const auto& l0 : stable)
      for (const auto& l1 : stable) {
        Recollement r(l0, l1);
        for (const auto& x : mods)
          for (const auto& y : mods) {
            auto cx = localize(r.meet(), x).closure, cy = localize(r.meet(), y).closure;
            CHECK(recollement_hom(functor_R(r, x).object, functor_R(r, y).object).size() == hom_dim(cx, cy));
          }
      }
  }
}

TEST_CASE("verify_equivalence on small cases") {
  auto two = fx::two_point();
  Recollement r(sub(two, {0}), sub(two, {1}));
  for (const auto& c : verify_equivalence(r)) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed());
    CHECK(c.cases > 0);
  }
  auto a3 = fx::a3();
  Recollement trivial(LocalizingSubcategory::zero(a3), sub(a3, {0}));
  for (const auto& c : verify_equivalence(trivial, {1})) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed());
  }
}

TEST_CASE("verify_equivalence flags an exhausted budget as undecided") {
  auto loop = fx::loop2();
  Recollement r(LocalizingSubcategory::zero(loop), LocalizingSubcategory::zero(loop));
  EquivalenceOptions opts;
  opts.iso_search_limit = 2;
  auto checks = verify_equivalence(r, opts);
  CHECK(checks[1].outcome == Outcome::undecided);
  CHECK(combine_outcomes(checks) == Outcome::undecided);
}

TEST_CASE("center exact sequence") {
  auto a2 = fx::a2();
  CentralSheaf sheaf(a2);
  CHECK(center_exact_sequence(sheaf, sub(a2, {0}), sub(a2, {0})).passed());
  CHECK(center_exact_sequence(sheaf, sub(a2, {0}), sub(a2, {0, 1})).passed());
  auto two = fx::two_point();
  CHECK(center_exact_sequence(CentralSheaf(two), sub(two, {0}), sub(two, {1})).passed());
  CHECK_THROWS_AS(center_exact_sequence(sheaf, sub(a2, {1}), sub(a2, {0})), HypothesisViolation);
}

TEST_CASE("center exact sequence agrees with the sheaf check under the dictionary") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    CentralSheaf sheaf(alg);
    auto stable = stable_subcategories(alg);
    for (const auto& l1 : stable)
      for (const auto& l2 : stable) {
        auto c = center_exact_sequence(sheaf, l1, l2);
        CAPTURE(c.detail);
        CHECK(c.passed());
        const auto a1 = A_of(sheaf.spectrum(), l1), a2 = A_of(sheaf.spectrum(), l2);
        CHECK(sheaf.sheaf_check(a1 | a2, {a1, a2}).passed());
      }
  }
}
