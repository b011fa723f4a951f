#include "csheaf/error.hpp"
#include "csheaf/rep.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace csheaf;

namespace {

Representation kron_rep(const BoundAlgebra& kron, int a, int b) {
  return Representation(kron, {1, 1}, {Mat(2, {{a}}), Mat(2, {{b}})});
}

// Counts module maps by trying every choice of blocks.
std::uint64_t brute_force_hom_count(const Representation& m, const Representation& n) {
  const Index verts = m.dims().size();
  const Residue p = m.modulus();
  Index entries = 0;
  for (Index v = 0; v < verts; ++v) entries += m.dim(v) * n.dim(v);
  Vec values(entries, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<Mat> blocks;
    Index pos = 0;
    for (Index v = 0; v < verts; ++v) {
      Mat b(n.dim(v), m.dim(v), p);
      for (Index r = 0; r < b.rows(); ++r)
        for (Index c = 0; c < b.cols(); ++c) b(r, c) = values[pos++];
      blocks.push_back(std::move(b));
    }
    bool ok = true;
    const auto& q = m.algebra().quiver();
    for (Index a = 0; a < q.arrows().size() && ok; ++a) {
      const auto& ar = q.arrow(a);
      ok = n.action(a) * blocks[ar.source] == blocks[ar.target] * m.action(a);
    }
    count += ok;
    Index k = 0;
    while (k < entries) {
      values[k] = (values[k] + 1) % p;
      if (values[k] != 0) break;
      ++k;
    }
    if (k == entries) break;
  }
  return count;
}

std::uint64_t power(Residue p, Index e) {
  std::uint64_t out = 1;
  while (e--) out *= p;
  return out;
}

std::vector<Representation> small_modules(const BoundAlgebra& alg) {
  std::vector<Representation> out;
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    out.push_back(simple(alg, v));
    out.push_back(indecomposable_projective(alg, v));
    out.push_back(indecomposable_injective(alg, v));
  }
  return out;
}

}  // namespace

TEST_CASE("simple, projective and injective dimension vectors") {
  auto a2 = fx::a2();
  CHECK(simple(a2, 0).dims() == std::vector<Index>{1, 0});
  CHECK(simple(a2, 1).dims() == std::vector<Index>{0, 1});
  CHECK(simple(fx::loop2(), 0).action(0).rows() == 1);
  CHECK(simple(fx::loop2(), 0).action(0).is_zero());
  CHECK_THROWS_AS(simple(a2, 2), InvalidArgument);

  CHECK(indecomposable_injective(a2, 0) == simple(a2, 0));
  auto i2 = indecomposable_injective(a2, 1);
  CHECK(i2.dims() == std::vector<Index>{1, 1});
  CHECK(i2.action(0) == Mat(2, {{1}}));
  CHECK(indecomposable_injective(fx::a3(), 1).dims() == std::vector<Index>{1, 1, 0});

  CHECK(indecomposable_projective(a2, 1) == simple(a2, 1));
  CHECK(indecomposable_projective(a2, 0).dims() == std::vector<Index>{1, 1});
  CHECK(indecomposable_projective(fx::loop2(), 0).total_dimension() == 2);
}

TEST_CASE("projectives and injectives satisfy the relations") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    for (Index v = 0; v < alg.vertex_count(); ++v) {
      auto pv = indecomposable_projective(alg, v);
      auto iv = indecomposable_injective(alg, v);
      CHECK_NOTHROW(Representation(alg, pv.dims(), pv.actions()));
      CHECK_NOTHROW(Representation(alg, iv.dims(), iv.actions()));
    }
  }
}

TEST_CASE("injective dimensions add up to dim A and socles are simple") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    Index total = 0;
    for (Index v = 0; v < alg.vertex_count(); ++v) {
      auto iv = indecomposable_injective(alg, v);
      total += iv.total_dimension();
      std::vector<Index> expected(alg.vertex_count(), 0);
      expected[v] = 1;
      CHECK(socle_multiplicities(iv) == expected);
      CHECK(is_injective(iv));
      CHECK(has_local_endomorphism_ring(iv));
      auto soc = socle(iv);
      CHECK(soc.inclusion.apply(Vec{1}) == injective_socle_vector(alg, v));
    }
    CHECK(total == alg.dimension());
  }
}

TEST_CASE("local endomorphism ring via the socle criterion") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    for (Index v = 0; v < alg.vertex_count(); ++v) CHECK(has_local_endomorphism_ring(indecomposable_injective(alg, v), 1));
  }
  auto two = fx::two_point();
  CHECK_FALSE(has_local_endomorphism_ring(direct_sum({simple(two, 0), simple(two, 1)}).object));
  CHECK_FALSE(has_local_endomorphism_ring(Representation::zero(two)));
}

TEST_CASE("hom_space examples") {
  auto a2 = fx::a2();
  auto i1 = indecomposable_injective(a2, 0);
  auto i2 = indecomposable_injective(a2, 1);
  CHECK(hom_space(i1, i2).empty());
  auto back = hom_space(i2, i1);
  CHECK(back.size() == 1);
  for (const auto& m : small_modules(a2)) {
    auto ends = hom_space(m, m);
    Mat basis = hom_basis_matrix(m, m);
    CHECK(subspace_contains(basis, Mat::from_rows(basis.cols(), 2, {ModuleMap::identity(m).coordinates()})));
  }
  CHECK_THROWS_AS(hom_space(simple(a2, 0), simple(fx::a3(), 0)), InvalidArgument);
}

TEST_CASE("hom dimensions agree with brute-force counting") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    auto mods = small_modules(alg);
    for (const auto& m : mods)
      for (const auto& n : mods) CHECK(brute_force_hom_count(m, n) == power(alg.modulus(), hom_dim(m, n)));
  }
}

TEST_CASE("hom is additive over direct sums") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    auto mods = small_modules(alg);
    auto sum = direct_sum(mods).object;
    for (const auto& n : mods) {
      Index parts = 0;
      for (const auto& m : mods) parts += hom_dim(m, n);
      CHECK(hom_dim(sum, n) == parts);
    }
  }
}

TEST_CASE("kernel, image and cokernel") {
  auto a2 = fx::a2();
  auto i2 = indecomposable_injective(a2, 1);
  CHECK(kernel(ModuleMap::identity(i2)).object.is_zero());
  auto z = ModuleMap::zero(simple(a2, 0), i2);
  CHECK(cokernel(z).object == i2);
  auto f = hom_space(i2, indecomposable_injective(a2, 0)).front();
  CHECK(image(f).object.dims() == simple(a2, 0).dims());

  for (const auto& fxt : fx::all) {
    CAPTURE(fxt.name);
    auto alg = fxt.make();
    auto mods = small_modules(alg);
    for (const auto& m : mods)
      for (const auto& n : mods)
        for (const auto& g : hom_space(m, n)) {
          auto k = kernel(g), im = image(g);
          auto c = cokernel(g);
          CHECK(m.total_dimension() == k.object.total_dimension() + im.object.total_dimension());
          CHECK(n.total_dimension() == im.object.total_dimension() + c.object.total_dimension());
          CHECK(compose(g, k.inclusion).is_zero());
          CHECK(compose(c.projection, g).is_zero());
          // every inclusion/projection is a genuine module map
          CHECK_NOTHROW(ModuleMap(k.object, m, k.inclusion.blocks()));
          CHECK_NOTHROW(ModuleMap(n, c.object, c.projection.blocks()));
          CHECK_NOTHROW(Representation(alg, c.object.dims(), c.object.actions()));
          // composition factors add up along 0 -> ker -> m -> im -> 0
          auto cm = composition_multiplicities(m);
          auto ck = composition_multiplicities(k.object);
          auto ci = composition_multiplicities(im.object);
          for (Index v = 0; v < cm.size(); ++v) CHECK(cm[v] == ck[v] + ci[v]);
        }
  }
}

TEST_CASE("socle examples") {
  auto two = fx::two_point();
  auto ss = direct_sum({simple(two, 0), simple(two, 1)}).object;
  CHECK(socle(ss).object == ss);
  auto a2 = fx::a2();
  CHECK(socle(indecomposable_injective(a2, 1)).object.dims() == std::vector<Index>{0, 1});
  auto loop = fx::loop2();
  auto soc = socle(indecomposable_projective(loop, 0));
  CHECK(soc.object.total_dimension() == 1);
  CHECK(soc.inclusion.apply(Vec{1}) == Vec{0, 1});
}

TEST_CASE("composition multiplicities") {
  auto a2 = fx::a2();
  CHECK(composition_multiplicities(simple(a2, 1)) == std::vector<Index>{0, 1});
  CHECK(composition_multiplicities(indecomposable_injective(a2, 1)) == std::vector<Index>{1, 1});
  auto sum = direct_sum({indecomposable_injective(a2, 1), simple(a2, 0)}).object;
  CHECK(composition_multiplicities(sum) == std::vector<Index>{2, 1});
}

TEST_CASE("injective hull examples and invariants") {
  auto a2 = fx::a2();
  auto i2 = indecomposable_injective(a2, 1);
  auto h = injective_hull(simple(a2, 1));
  CHECK(is_isomorphic(h.object, i2).has_value());
  auto hp = injective_hull(indecomposable_projective(a2, 0));
  CHECK(is_isomorphic(hp.object, i2).has_value());
  auto hi = injective_hull(i2);
  CHECK(hi.object == i2);
  CHECK(hi.embedding.is_isomorphism());

  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    for (const auto& m : enumerate_representations(alg, 1)) {
      auto hull = injective_hull(m);
      CHECK(hull.embedding.is_injective());
      CHECK(is_injective(hull.object));
      CHECK(socle_multiplicities(hull.object) == socle_multiplicities(m));
      CHECK_NOTHROW(ModuleMap(m, hull.object, hull.embedding.blocks()));
      // the embedding restricts to an isomorphism of socles
      auto soc = socle(m);
      auto restricted = compose(hull.embedding, soc.inclusion);
      CHECK(restricted.is_injective());
      CHECK(restricted.rank() == socle(hull.object).object.total_dimension());
    }
  }
}

TEST_CASE("submodules, quotients and direct sums") {
  auto a2 = fx::a2();
  auto p1 = indecomposable_projective(a2, 0);
  auto gen = submodule_generated(p1, {Vec{1, 0}});
  CHECK(gen.object == p1);
  auto bottom = submodule_generated(p1, {Vec{0, 1}});
  CHECK(bottom.object.dims() == std::vector<Index>{0, 1});
  auto q = quotient(p1, bottom);
  CHECK(q.object == simple(a2, 0));
  CHECK(quotient(p1, gen).object.is_zero());

  auto one = direct_sum({p1});
  CHECK(one.injections.front().is_isomorphism());
  CHECK(one.injections.front() == ModuleMap::identity(p1));
  auto two = fx::two_point();
  CHECK(direct_sum({simple(two, 0), simple(two, 1)}).object.dims() == std::vector<Index>{1, 1});

  // projections after injections compose to identity / zero
  auto s = direct_sum({p1, simple(a2, 1)});
  CHECK(compose(s.projections[0], s.injections[0]) == ModuleMap::identity(p1));
  CHECK(compose(s.projections[1], s.injections[0]).is_zero());
  CHECK_THROWS_AS(subrepresentation(p1, {Mat(2, {{1}}), Mat(0, 1, 2)}), InvalidArgument);
}

TEST_CASE("is_isomorphic") {
  auto a2 = fx::a2();
  auto i2 = indecomposable_injective(a2, 1);
  auto iso = is_isomorphic(i2, i2);
  REQUIRE(iso);
  CHECK(iso->is_isomorphism());
  CHECK_FALSE(is_isomorphic(indecomposable_injective(a2, 0), i2).has_value());

  auto kron = fx::kron();
  CHECK_FALSE(is_isomorphic(kron_rep(kron, 1, 0), kron_rep(kron, 0, 1)).has_value());
  CHECK(is_isomorphic(kron_rep(kron, 1, 1), kron_rep(kron, 1, 1)).has_value());

  // a base change is found
  auto loop = fx::loop2();
  Representation m(loop, {2}, {Mat(3, {{0, 1}, {0, 0}})});
  Representation n(loop, {2}, {Mat(3, {{0, 0}, {2, 0}})});
  auto found = is_isomorphic(m, n);
  REQUIRE(found);
  CHECK_NOTHROW(ModuleMap(m, n, found->blocks()));
  CHECK(found->is_isomorphism());
}

TEST_CASE("isomorphism search reports undecided instead of guessing") {
  auto loop = fx::loop2();
  Representation m(loop, {2}, {Mat(3, {{0, 1}, {0, 0}})});
  Representation n(loop, {2}, {Mat(3, {{0, 0}, {1, 0}})});
  CHECK_THROWS_AS(is_isomorphic(m, n, IsoSearchOptions{1, 0, 1}), Undecided);
  CHECK(is_isomorphic(m, n, IsoSearchOptions{9, 0, 1}).has_value());
}

TEST_CASE("ext_dim examples") {
  auto a2 = fx::a2();
  auto s1 = simple(a2, 0), s2 = simple(a2, 1);
  CHECK(ext_dim(s1, s2, 1) == 1);
  CHECK(ext_dim(s2, s1, 1) == 0);
  CHECK(ext_dim(indecomposable_projective(a2, 0), s2, 1) == 0);
  CHECK_THROWS_AS(ext_dim(s1, s2, 3), InvalidArgument);
  CHECK(ext_dim(s1, s2, 3, 3) == 0);
}

TEST_CASE("Ext between simples counts arrows and relations") {
  // dim Ext^0 = [i == j], Ext^1(S_i, S_j) = #arrows i -> j,
  // Ext^2(S_i, S_j) = #minimal relations i -> j for these monomial fixtures
  auto a3 = fx::a3();
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(ext_dim(simple(a3, i), simple(a3, j), 0) == (i == j ? 1u : 0u));
      CHECK(ext_dim(simple(a3, i), simple(a3, j), 1) == ((j == i + 1) ? 1u : 0u));
      CHECK(ext_dim(simple(a3, i), simple(a3, j), 2) == ((i == 0 && j == 2) ? 1u : 0u));
    }
  auto kron = fx::kron();
  CHECK(ext_dim(simple(kron, 0), simple(kron, 1), 1) == 2);
  auto loop = fx::loop2();
  // k[x]/x^2 is self-injective: every Ext^j(S, S) is 1-dimensional
  for (Index j = 0; j <= 2; ++j) CHECK(ext_dim(simple(loop, 0), simple(loop, 0), j) == 1);
}

TEST_CASE("projective resolutions are exact") {
  for (const auto& f : fx::all) {
    CAPTURE(f.name);
    auto alg = f.make();
    for (const auto& m : small_modules(alg)) {
      auto res = projective_resolution(m, 2);
      CHECK(compose(res.augmentation, res.differentials[0]).is_zero());
      CHECK(kernel(res.augmentation).object.total_dimension() == res.differentials[0].rank());
      for (Index i = 0; i + 1 < res.differentials.size(); ++i) {
        CHECK(compose(res.differentials[i], res.differentials[i + 1]).is_zero());
        CHECK(kernel(res.differentials[i]).object.total_dimension() == res.differentials[i + 1].rank());
      }
    }
  }
}

TEST_CASE("enumeration and iso classes") {
  auto a2 = fx::a2();
  auto reps = enumerate_representations(a2, 1);
  // dims (0,0),(1,0),(0,1),(1,1) with a in {0,1} for the last
  CHECK(reps.size() == 5);
  auto classes = iso_class_representatives(reps);
  CHECK(classes.size() == 5);
  auto loop = fx::loop2();
  // 2x2 nilpotent matrices over F3: 9 of them, in two classes (0 and a Jordan block)
  auto loop_reps = enumerate_representations(loop, 2);
  CHECK(loop_reps.size() == 1 + 1 + 9);
  CHECK(iso_class_representatives(loop_reps).size() == 1 + 1 + 2);
  CHECK_THROWS_AS(enumerate_representations(fx::kron(), 3, 1000), InvalidArgument);
}

TEST_CASE("element actions") {
  auto loop = fx::loop2();
  auto p = indecomposable_projective(loop, 0);
  auto x_action = element_action(p, Vec{0, 1});
  CHECK(x_action == Mat(3, {{0, 0}, {1, 0}}));
  CHECK(element_endomorphism(p, loop.unit()) == ModuleMap::identity(p));
  auto a2 = fx::a2();
  CHECK_THROWS_AS(element_endomorphism(indecomposable_injective(a2, 1), Vec{0, 0, 1}), InvalidArgument);
}
