#include "csheaf/suites.hpp"

#include "csheaf/error.hpp"

namespace csheaf {

std::vector<LocalizingSubcategory> stable_subcategories(const BoundAlgebra& alg) {
  std::vector<LocalizingSubcategory> out;
  for (auto s : all_subsets(alg.vertex_count())) {
    LocalizingSubcategory l(alg, s);
    if (is_stable(l)) out.push_back(std::move(l));
  }
  return out;
}

std::vector<Representation> module_samples(const BoundAlgebra& alg, Index max_dim, std::uint64_t seed) {
  IsoSearchOptions iso;
  iso.seed = seed;
  auto out = iso_class_representatives(enumerate_representations(alg, max_dim), iso);
  for (Index v = 0; v < alg.vertex_count(); ++v) {
    out.push_back(simple(alg, v));
    out.push_back(indecomposable_projective(alg, v));
    out.push_back(indecomposable_injective(alg, v));
  }
  return out;
}

void absorb(Check& into, const Check& part, const std::string& label) {
  into.cases += part.cases;
  const std::string prefix = label.empty() ? "" : label + ": ";
  if (part.outcome == Outcome::fail) into.fail(prefix + part.detail);
  if (part.outcome == Outcome::undecided) into.undecided(prefix + part.detail);
}

std::string pair_label(const LocalizingSubcategory& l0, const LocalizingSubcategory& l1) {
  const auto& q = l0.algebra().quiver();
  return "S0=" + format_vertices(q, l0.vertices()) + " S1=" + format_vertices(q, l1.vertices());
}

namespace {

std::vector<std::pair<LocalizingSubcategory, LocalizingSubcategory>> disjoint_stable_pairs(const BoundAlgebra& alg) {
  std::vector<std::pair<LocalizingSubcategory, LocalizingSubcategory>> out;
  const auto stable = stable_subcategories(alg);
  for (const auto& a : stable)
    for (const auto& b : stable)
      if ((a.vertices() & b.vertices()).empty()) out.emplace_back(a, b);
  return out;
}

}  // namespace

Check torsion_calculus_check(const BoundAlgebra& alg, const std::vector<Representation>& samples) {
  Check c("torsion calculus on disjoint stable pairs");
  for (const auto& [l1, l2] : disjoint_stable_pairs(alg)) {
    const auto lj = join(l1, l2);
    const auto label = pair_label(l1, l2);
    for (const auto& m : samples) {
      const auto t1 = torsion_radical(l1, m), t2 = torsion_radical(l2, m), tj = torsion_radical(lj, m);
      c.expect(tj.object.total_dimension() == t1.object.total_dimension() + t2.object.total_dimension(), [&] {
        return label + ": dim t_join(M) != dim t1(M) + dim t2(M) for M = " + describe(m);
      });
      c.expect(torsion_radical(l1, t2.object).object.is_zero(),
               [&] { return label + ": t1(t2(M)) != 0 for M = " + describe(m); });
      if (!is_member(lj, m)) continue;
      try {
        const auto d = decompose_disjoint(l1, l2, m);
        c.expect(d.iso.is_isomorphism() && d.first.object.dims() == t1.object.dims() &&
                     d.second.object.dims() == t2.object.dims(),
                 [&] { return label + ": decomposition not verified for M = " + describe(m); });
      } catch (const HypothesisViolation& e) {
        c.fail(label + ": " + e.what());
      }
    }
  }
  return c;
}

Check injective_splitting_suite(const BoundAlgebra& alg, const std::vector<Representation>& samples) {
  Check c("injective splitting Y = t(Y) + ST(Y)");
  std::vector<Representation> hulls;
  for (const auto& m : samples)
    if (!m.is_zero()) hulls.push_back(injective_hull(m).object);
  for (const auto& l : stable_subcategories(alg)) {
    const auto label = "S=" + format_vertices(alg.quiver(), l.vertices());
    for (const auto& y : hulls) {
      try {
        const auto s = injective_splitting_check(l, y);
        c.expect(s.iso.is_isomorphism() && s.torsion.object.dims() == torsion_radical(l, y).object.dims() &&
                     is_torsion_free(l, s.section.closure),
                 [&] { return label + ": splitting not verified for Y = " + describe(y); });
      } catch (const TheoremViolation& e) {
        c.fail(label + ": " + e.what());
      }
    }
  }
  return c;
}

Check ext_orthogonality_suite(const BoundAlgebra& alg, const std::vector<Representation>& samples, Index jmax) {
  Check c("Ext^j vanishes between disjoint stable subcategories");
  for (const auto& [l0, l1] : disjoint_stable_pairs(alg))
    absorb(c, ext_orthogonality_check(l0, l1, samples, jmax), pair_label(l0, l1));
  return c;
}

std::vector<PairVerification> recollement_suite(const CentralSheaf& sheaf, const EquivalenceOptions& options) {
  std::vector<PairVerification> out;
  const auto stable = stable_subcategories(sheaf.algebra());
  for (const auto& l0 : stable)
    for (const auto& l1 : stable) {
      PairVerification row{l0, l1, verify_equivalence(Recollement(l0, l1), options)};
      row.checks.push_back(center_exact_sequence(sheaf, l0, l1));
      out.push_back(std::move(row));
    }
  return out;
}

std::vector<Check> merge_pair_checks(const std::vector<PairVerification>& pairs) {
  std::vector<Check> merged;
  for (const auto& row : pairs) {
    for (std::size_t i = 0; i < row.checks.size(); ++i) {
      if (merged.size() == i) {
        auto name = row.checks[i].name;
        for (const char* tail : {" (L0 = ", " for L1 = "}) {
          const auto cut = name.find(tail);
          if (cut != std::string::npos) name.resize(cut);
        }
        merged.emplace_back(name);
      }
      absorb(merged[i], row.checks[i], pair_label(row.l0, row.l1));
    }
  }
  return merged;
}

std::vector<OracleComparison> oracle_suite(const CentralSheaf& sheaf, Index budget) {
  std::vector<OracleComparison> out;
  for (const auto& l : stable_subcategories(sheaf.algebra())) {
    OracleComparison row{l, A_of(sheaf.spectrum(), l)};
    row.sections_dim = sheaf.sections(row.open).dimension();
    row.check = Check("quotient center oracle for L = " + format_vertices(sheaf.algebra().quiver(), l.vertices()));
    try {
      const auto oracle = quotient_center_oracle(l, budget);
      row.oracle_dim = oracle.ring.dimension();
      row.check = oracle_check(sheaf, oracle);
    } catch (const InvalidArgument& e) {
      row.check.undecided(e.what());
    } catch (const Undecided& e) {
      row.check.undecided(e.what());
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace csheaf
