#include "csheaf/spectrum.hpp"

#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

Spectrum::Spectrum(BoundAlgebra alg) : alg_(std::move(alg)) {
  if (!alg_.valid()) throw InvalidArgument("spectrum of an empty algebra");
  const Index n = alg_.vertex_count();
  if (n > kPowersetVertexCap) {
    throw InvalidArgument("spectrum: " + std::to_string(n) + " vertices exceeds the cap of " +
                          std::to_string(kPowersetVertexCap));
  }
  for (Index v = 0; v < n; ++v) points_.push_back({v, indecomposable_injective(alg_, v)});
  hom_.resize(n * n);
  simple_hom_.resize(n * n);
  for (Index x = 0; x < n; ++x) {
    const auto sx = simple(alg_, x);
    for (Index y = 0; y < n; ++y) {
      hom_[x * n + y] = csheaf::hom_dim(points_[x].injective, points_[y].injective);
      simple_hom_[x * n + y] = csheaf::hom_dim(sx, points_[y].injective);
    }
  }
}

SpectrumSubset A_of(const Spectrum& sp, const LocalizingSubcategory& l) {
  if (!(sp.algebra() == l.algebra())) throw InvalidArgument("A_of: subcategory of a different algebra");
  SpectrumSubset out;
  for (Index x = 0; x < sp.size(); ++x) {
    bool orthogonal = true;
    for (Index v : l.vertices().members()) orthogonal = orthogonal && sp.simple_hom_dim(v, x) == 0;
    if (orthogonal) out.insert(x);
  }
  return out;
}

LocalizingSubcategory L_of(const Spectrum& sp, SpectrumSubset a) {
  if (!a.is_subset_of(sp.everything())) throw InvalidArgument("L_of: subset names a point outside the spectrum");
  VertexSet s;
  for (Index v = 0; v < sp.size(); ++v) {
    bool killed = true;
    for (Index x : a.members()) killed = killed && sp.simple_hom_dim(v, x) == 0;
    if (killed) s.insert(v);
  }
  return {sp.algebra(), s};
}

SpectrumSubset closure(const Spectrum& sp, SpectrumSubset a) { return A_of(sp, L_of(sp, a)); }

bool is_stable_subset(const Spectrum& sp, SpectrumSubset a) {
  if (!a.is_subset_of(sp.everything())) throw InvalidArgument("is_stable_subset: subset names a point outside the spectrum");
  for (Index x : a.members()) {
    for (Index y = 0; y < sp.size(); ++y) {
      if (sp.hom_dim(y, x) != 0 && !a.contains(y)) return false;
    }
  }
  return true;
}

std::vector<SpectrumSubset> stable_topology(const Spectrum& sp) {
  std::vector<SpectrumSubset> out;
  for (auto a : all_subsets(sp.size())) {
    if (is_stable_subset(sp, a)) out.push_back(a);
  }
  return out;
}

namespace {

std::string family_name(const Quiver& q, const std::vector<VertexSet>& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? ", " : "") + format_vertices(q, family[i]);
  return out + "}";
}

VertexSet intersect_all(const std::vector<VertexSet>& family, VertexSet start) {
  for (auto s : family) start = start & s;
  return start;
}

// Coverings of a stable S in the lattice of stable subcategories: nonempty
// families of stable supersets of S intersecting to S.
std::vector<std::vector<VertexSet>> coverings(const std::vector<VertexSet>& stable, VertexSet s, Index n) {
  std::vector<VertexSet> above;
  for (auto t : stable)
    if (s.is_subset_of(t)) above.push_back(t);
  std::vector<std::vector<VertexSet>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << above.size()); ++mask) {
    std::vector<VertexSet> family;
    for (std::size_t i = 0; i < above.size(); ++i)
      if ((mask >> i) & 1u) family.push_back(above[i]);
    if (intersect_all(family, VertexSet::full(n)) == s) out.push_back(std::move(family));
  }
  return out;
}

}  // namespace

std::vector<Check> verify_lattice(const Spectrum& sp, std::uint64_t budget) {
  const auto& alg = sp.algebra();
  const auto& q = alg.quiver();
  const Index n = sp.size();
  const auto subsets = all_subsets(n);
  const std::uint64_t count = subsets.size();
  auto cat = [&](VertexSet s) { return LocalizingSubcategory(alg, s); };
  auto name = [&](VertexSet s) { return format_vertices(q, s); };
  std::vector<Check> out;

  Check dist("distributivity");
  if (count * count * count > budget) {
    dist.undecided("more than " + std::to_string(budget) + " triples");
  } else {
    for (auto a : subsets)
      for (auto b : subsets)
        for (auto c : subsets) {
          const auto la = cat(a), lb = cat(b), lc = cat(c);
          dist.expect(meet(la, join(lb, lc)) == join(meet(la, lb), meet(la, lc)) &&
                          join(la, meet(lb, lc)) == meet(join(la, lb), join(la, lc)),
                      [&] { return "fails for " + name(a) + ", " + name(b) + ", " + name(c); });
        }
  }
  out.push_back(std::move(dist));

  Check exchange("A exchanges meet and join");
  for (auto a : subsets)
    for (auto b : subsets) {
      const auto la = cat(a), lb = cat(b);
      exchange.expect(A_of(sp, meet(la, lb)) == (A_of(sp, la) | A_of(sp, lb)) &&
                          A_of(sp, join(la, lb)) == (A_of(sp, la) & A_of(sp, lb)),
                      [&] { return "fails for " + name(a) + ", " + name(b); });
    }
  out.push_back(std::move(exchange));

  Check roundtrip("L = L_{A(L)}");
  for (auto s : subsets) {
    roundtrip.expect(L_of(sp, A_of(sp, cat(s))) == cat(s), [&] {
      return "L_{A(L)} = " + name(L_of(sp, A_of(sp, cat(s))).vertices()) + " for L = " + name(s);
    });
  }
  out.push_back(std::move(roundtrip));

  Check agree("stability criteria agree");
  for (auto s : subsets) {
    const bool by_support = is_stable(cat(s));
    const bool by_hom = is_stable_subset(sp, A_of(sp, cat(s)));
    agree.expect(by_support == by_hom, [&] {
      return "S = " + name(s) + ": composition factors say " + (by_support ? "stable" : "unstable") +
             ", Hom closure says " + (by_hom ? "stable" : "unstable");
    });
  }
  out.push_back(std::move(agree));

  const auto opens = stable_topology(sp);
  Check topology("stable subsets form a topology");
  topology.expect(!opens.empty() && opens.front().empty() && opens.back() == sp.everything(),
                  [] { return std::string("empty set or whole spectrum missing"); });
  for (auto a : opens)
    for (auto b : opens) {
      topology.expect(is_stable_subset(sp, a | b) && is_stable_subset(sp, a & b),
                      [&] { return "union or intersection of " + name(a) + " and " + name(b) + " is not stable"; });
    }
  out.push_back(std::move(topology));

  Check axioms("closure axioms");
  axioms.expect(closure(sp, VertexSet{}).empty(), [] { return std::string("closure of the empty set is nonempty"); });
  for (auto a : subsets) {
    const auto ca = closure(sp, a);
    axioms.expect(a.is_subset_of(ca), [&] { return name(a) + " is not inside its closure"; });
    axioms.expect(closure(sp, ca) == ca, [&] { return "closure of " + name(a) + " is not idempotent"; });
    for (auto b : subsets) {
      axioms.expect(closure(sp, a | b) == (ca | closure(sp, b)),
                    [&] { return "closure does not commute with the union of " + name(a) + " and " + name(b); });
    }
  }
  out.push_back(std::move(axioms));

  // Coverings live among stable subcategories, which are the complements of the opens.
  std::vector<VertexSet> stable;
  for (auto s : subsets)
    if (is_stable(cat(s))) stable.push_back(s);
  Check site("coverings form a site");
  if ((std::uint64_t{1} << stable.size()) * stable.size() > budget) {
    site.undecided("more than " + std::to_string(budget) + " covering families");
  } else {
    for (auto s : stable) {
      site.expect(!coverings(stable, s, n).empty(), [&] { return "no covering of " + name(s); });
      const auto covers = coverings(stable, s, n);
      for (const auto& family : covers) {
        for (auto k : stable) {
          if (!s.is_subset_of(k)) continue;
          std::vector<VertexSet> moved;
          bool all_stable = true;
          for (auto t : family) {
            moved.push_back(t | k);
            all_stable = all_stable && is_stable(cat(t | k));
          }
          site.expect(all_stable && intersect_all(moved, VertexSet::full(n)) == k, [&] {
            return "base change of " + family_name(q, family) + " along " + name(k) + " is not a covering";
          });
        }
        for (std::size_t i = 0; i < family.size(); ++i) {
          for (const auto& refinement : coverings(stable, family[i], n)) {
            std::vector<VertexSet> composed = refinement;
            for (std::size_t j = 0; j < family.size(); ++j)
              if (j != i) composed.push_back(family[j]);
            site.expect(intersect_all(composed, VertexSet::full(n)) == s, [&] {
              return "refining " + family_name(q, family) + " by " + family_name(q, refinement) +
                     " is not a covering of " + name(s);
            });
          }
        }
      }
    }
  }
  out.push_back(std::move(site));
  return out;
}

}  // namespace csheaf
