#include "csheaf/central.hpp"
#include "csheaf/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "modules.hpp"

using namespace csheaf;

namespace {

std::uint64_t power(std::uint64_t p, Index e) {
  std::uint64_t out = 1;
  while (e--) out *= p;
  return out;
}

// Every combination of the given maps with coefficients in F_p.
std::vector<ModuleMap> all_combinations(const std::vector<ModuleMap>& maps, const Representation& m,
                                        const Representation& n) {
  std::vector<ModuleMap> out;
  const Residue p = m.modulus();
  Vec c(maps.size(), 0);
  while (true) {
    out.push_back(combine(maps, c, m, n));
    Index k = 0;
    while (k < c.size() && (c[k] = (c[k] + 1) % p) == 0) ++k;
    if (k == c.size()) break;
  }
  return out;
}

// Number of endomorphisms commuting with every endomorphism, by enumeration.
std::uint64_t count_central(const Representation& e) {
  const auto ends = hom_space(e, e);
  std::uint64_t n = 0;
  for (const auto& z : all_combinations(ends, e, e)) {
    bool central = true;
    for (const auto& w : ends) central = central && compose(z, w) == compose(w, z);
    n += central;
  }
  return n;
}

// Number of compatible families over A: tuples of central endomorphisms,
// tested against every Hom basis element.
std::uint64_t count_families(const Spectrum& sp, SpectrumSubset a) {
  const auto pts = a.members();
  std::vector<std::vector<ModuleMap>> choices;
  for (Index x : pts) {
    const auto& e = sp.point(x).injective;
    std::vector<ModuleMap> central;
    const auto ends = hom_space(e, e);
    for (const auto& z : all_combinations(ends, e, e)) {
      bool ok = true;
      for (const auto& w : ends) ok = ok && compose(z, w) == compose(w, z);
      if (ok) central.push_back(z);
    }
    choices.push_back(std::move(central));
  }
  std::uint64_t n = 0;
  std::vector<Index> pick(pts.size(), 0);
  while (true) {
    bool ok = true;
    for (Index i = 0; i < pts.size() && ok; ++i)
      for (Index j = 0; j < pts.size() && ok; ++j) {
        if (i == j) continue;
        for (const auto& v : hom_space(sp.point(pts[i]).injective, sp.point(pts[j]).injective))
          ok = ok && compose(choices[j][pick[j]], v) == compose(v, choices[i][pick[i]]);
      }
    n += ok;
    Index k = 0;
    while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
  }
  return n;
}

Index count_idempotents(const AlgebraPresentation& r) {
  Index n = 0;
  Vec x(r.dimension(), 0);
  while (true) {
    n += r.multiply(x, x) == x;
    Index k = 0;
    while (k < x.size() && (x[k] = (x[k] + 1) % r.modulus()) == 0) ++k;
    if (k == x.size()) break;
  }
  return n;
}

bool has_nonzero_square_zero(const AlgebraPresentation& r) {
  Vec x(r.dimension(), 0);
  while (true) {
    Index k = 0;
    while (k < x.size() && (x[k] = (x[k] + 1) % r.modulus()) == 0) ++k;
    if (k == x.size()) return false;
    const Vec sq = r.multiply(x, x);
    if (std::all_of(sq.begin(), sq.end(), [](Residue c) { return c == 0; })) return true;
  }
}

}  // namespace

TEST_CASE("endo_center examples") {
  auto a2 = fx::a2();
  for (Index v = 0; v < 2; ++v) CHECK(endo_center(indecomposable_injective(a2, v)).ring.dimension() == 1);
  auto loop = fx::loop2();
  CHECK(endo_center(indecomposable_projective(loop, 0)).ring.dimension() == 2);
  auto i2 = indecomposable_injective(a2, 1);
  CHECK(endo_center(direct_sum({i2, i2}).object).ring.dimension() == 1);
  auto z = endo_center(Representation::zero(a2));
  CHECK(z.ring.dimension() == 0);
}

TEST_CASE("endo_center matches enumeration and is a commutative unital ring") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    auto mods = fx::basic_modules(alg);
    mods.push_back(direct_sum({mods[0], mods[1]}).object);
    mods.push_back(direct_sum({mods.back(), mods[2]}).object);
    for (const auto& m : mods) {
      auto z = endo_center(m);
      CHECK(power(alg.modulus(), z.ring.dimension()) == count_central(m));
      CHECK(z.ring.is_commutative());
      CHECK(z.ring.is_associative());
      CHECK(z.ring.unit_is_identity());
      CHECK(center_coordinates(z, ModuleMap::identity(m)) == z.ring.unit());
    }
  }
}

TEST_CASE("section algebra examples") {
  CentralSheaf a2(fx::a2());
  CHECK(a2.sections(VertexSet{}).dimension() == 0);
  CHECK(a2.sections(VertexSet{0, 1}).dimension() == 1);
  CentralSheaf two(fx::two_point());
  CHECK(two.sections(VertexSet{0, 1}).dimension() == 2);
  CHECK_THROWS_AS(a2.sections(VertexSet{4}), InvalidArgument);
}

TEST_CASE("section algebras match enumerated families and are commutative") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    CentralSheaf sheaf(f.make());
    const auto& sp = sheaf.spectrum();
    for (auto a : all_subsets(sp.size())) {
      const auto& fa = sheaf.sections(a);
      CHECK(power(sp.algebra().modulus(), fa.dimension()) == count_families(sp, a));
      CHECK(fa.ring.is_commutative());
      CHECK(fa.ring.is_associative());
      CHECK(fa.ring.unit_is_identity());
      // every basis family really intertwines
      for (Index r = 0; r < fa.dimension(); ++r) {
        const Vec fam = fa.basis.row_vec(r);
        for (Index x : fa.points)
          for (Index y : fa.points)
            for (const auto& v : hom_space(sp.point(x).injective, sp.point(y).injective))
              CHECK(compose(sheaf.component(fa, fam, y), v) == compose(v, sheaf.component(fa, fam, x)));
      }
    }
  }
}

TEST_CASE("restriction") {
  CentralSheaf a2(fx::a2());
  VertexSet all{0, 1};
  CHECK(a2.restriction(all, all).is_identity());
  CHECK(a2.restriction(all, VertexSet{}).rows() == 0);
  auto r = a2.restriction(all, VertexSet{1});
  CHECK(inverse(r).has_value());
  CHECK(a2.restrict_element(all, VertexSet{1}, a2.sections(all).ring.unit()) == a2.sections(VertexSet{1}).ring.unit());
  CHECK_THROWS_AS(a2.restriction(VertexSet{1}, all), InvalidArgument);
}

TEST_CASE("restrictions are unital ring maps and compose") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    CentralSheaf sheaf(f.make());
    const auto subsets = all_subsets(sheaf.spectrum().size());
    for (auto c : subsets)
      for (auto b : subsets) {
        if (!b.is_subset_of(c)) continue;
        const Mat rcb = sheaf.restriction(c, b);
        CHECK(is_unital_ring_map(sheaf.sections(c).ring, sheaf.sections(b).ring, rcb));
        for (auto a : subsets) {
          if (!a.is_subset_of(b)) continue;
          const Mat composed = sheaf.restriction(b, a) * rcb;
          CHECK(composed == sheaf.restriction(c, a));
        }
      }
  }
}

TEST_CASE("sheaf_check examples") {
  CentralSheaf a2(fx::a2());
  VertexSet all{0, 1};
  CHECK(a2.sheaf_check(all, {all}).passed());
  auto c = a2.sheaf_check(all, {VertexSet{1}, all});
  CHECK(c.passed());
  CHECK(c.cases == 3);
  CentralSheaf two(fx::two_point());
  CHECK(two.sheaf_check(all, {VertexSet{0}, VertexSet{1}}).passed());
  CHECK(two.sheaf_check(VertexSet{}, {VertexSet{}}).passed());

  CHECK_THROWS_AS(a2.sheaf_check(VertexSet{0}, {VertexSet{0}}), InvalidArgument);
  CHECK_THROWS_AS(a2.sheaf_check(all, {VertexSet{1}}), InvalidArgument);
  CHECK_THROWS_AS(a2.sheaf_check(all, {VertexSet{0}, all}), InvalidArgument);
  CHECK_THROWS_AS(a2.sheaf_check(all, {}), InvalidArgument);
}

TEST_CASE("gluing fails for an unstable cover, which sheaf_check refuses") {
  // On A2 the subsets {1} and {2} cover Sp, but {1} is not open: the product
  // F({1}) x F({2}) has dimension 2 while F(Sp) has dimension 1.
  CentralSheaf a2(fx::a2());
  CHECK(a2.sections(VertexSet{0}).dimension() + a2.sections(VertexSet{1}).dimension() == 2);
  CHECK(a2.sections(VertexSet{0, 1}).dimension() == 1);
  CHECK_THROWS_AS(a2.sheaf_check(VertexSet{0, 1}, {VertexSet{0}, VertexSet{1}}), InvalidArgument);
}

TEST_CASE("stable coverings") {
  Spectrum a3(fx::a3());
  // opens are a chain, so a family covers A exactly when it contains A
  CHECK(stable_coverings(a3, VertexSet{0, 1, 2}).size() == 8);
  CHECK(stable_coverings(a3, VertexSet{}).size() == 1);
  Spectrum two(fx::two_point());
  CHECK(stable_coverings(two, VertexSet{0, 1}).size() == 10);
}

TEST_CASE("sheaf condition holds for every stable covering") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    CentralSheaf sheaf(f.make());
    auto c = sheaf.all_coverings_check();
    CAPTURE(c.detail);
    CHECK(c.passed());
    CHECK(c.cases > 0);
  }
  CentralSheaf a3(fx::a3());
  CHECK(a3.all_coverings_check(4).outcome == Outcome::undecided);
}

TEST_CASE("the center of End of a sum of spectrum points equals F") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    CentralSheaf sheaf(f.make());
    for (auto a : all_subsets(sheaf.spectrum().size())) {
      auto c = sheaf.direct_sum_center_check(a);
      CAPTURE(c.detail);
      CHECK(c.passed());
    }
  }
}

TEST_CASE("category center") {
  const std::pair<const char*, Index> expected[] = {{"A2", 1}, {"A3", 1}, {"LOOP2", 2}, {"KRON", 1}, {"2PT", 2}};
  for (Index i = 0; i < 5; ++i) {
    const auto& f = fx::all[i];
    CAPTURE(f.name);
    REQUIRE(std::string(f.name) == expected[i].first);
    CentralSheaf sheaf(f.make());
    auto cc = category_center(sheaf);
    CHECK(cc.algebra_center.ring.dimension() == expected[i].second);
    CHECK(cc.sections.dimension() == expected[i].second);
    CHECK(cc.checks.size() == 3);
    for (const auto& c : cc.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed());
    }
    CHECK(find_ring_isomorphism(cc.algebra_center.ring, cc.sections.ring).has_value());
  }
  auto loop = category_center(CentralSheaf(fx::loop2()));
  CHECK(has_nonzero_square_zero(loop.algebra_center.ring));
  CHECK(has_nonzero_square_zero(loop.sections.ring));
  auto two = category_center(CentralSheaf(fx::two_point()));
  CHECK(count_idempotents(two.algebra_center.ring) == 4);
  CHECK(count_idempotents(two.sections.ring) == 4);
}

TEST_CASE("quotient center oracle examples") {
  auto a2 = fx::a2();
  CHECK(quotient_center_oracle(LocalizingSubcategory::zero(a2), 2).ring.dimension() == 1);
  auto l1 = quotient_center_oracle({a2, VertexSet{0}}, 2);
  CHECK(l1.ring.dimension() == 1);
  // closed objects for L = {1} are the sums of copies of I(2)
  for (const auto& x : l1.objects) CHECK(x.dims()[0] == x.dims()[1]);
  auto loop = fx::loop2();
  CHECK(quotient_center_oracle(LocalizingSubcategory::zero(loop), 2).ring.dimension() == 2);
  CHECK(quotient_center_oracle(LocalizingSubcategory::everything(loop), 2).ring.dimension() == 0);

  CHECK_THROWS_AS(quotient_center_oracle({a2, VertexSet{1}}, 2), HypothesisViolation);
  CHECK_THROWS_AS(quotient_center_oracle(LocalizingSubcategory::zero(loop), 1), InvalidArgument);
}

TEST_CASE("oracle agrees with F(A(L)) and restrictions commute with it") {
  for (auto make : {fx::a2, fx::loop2, fx::two_point}) {
    auto alg = make();
    CentralSheaf sheaf(alg);
    std::vector<QuotientCenter> oracles;
    for (auto s : all_subsets(alg.vertex_count())) {
      LocalizingSubcategory l(alg, s);
      if (!is_stable(l)) continue;
      oracles.push_back(quotient_center_oracle(l, 2));
      auto c = oracle_check(sheaf, oracles.back());
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed());
    }
    for (const auto& big : oracles)
      for (const auto& small : oracles) {
        const auto s = big.subcategory.vertices(), t = small.subcategory.vertices();
        if (!s.is_subset_of(t)) continue;
        const auto a = A_of(sheaf.spectrum(), big.subcategory), b = A_of(sheaf.spectrum(), small.subcategory);
        const Mat lhs = oracle_restriction(big, small) * family_action(sheaf, big);
        const Mat rhs = family_action(sheaf, small) * sheaf.restriction(a, b);
        CHECK(lhs == rhs);
      }
  }
}
