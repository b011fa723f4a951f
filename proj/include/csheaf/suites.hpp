#pragma once

// Whole-algebra verification runs: each one sweeps every stable
// subcategory (or pair of them) of an algebra and folds the results into a
// few checks. The command-line tool and the acceptance runner share these.

#include <cstdint>
#include <string>
#include <vector>

#include "csheaf/central.hpp"
#include "csheaf/localization.hpp"
#include "csheaf/recollement.hpp"

namespace csheaf {

std::vector<LocalizingSubcategory> stable_subcategories(const BoundAlgebra& alg);

/// One module per isomorphism class with per-vertex dimension at most
/// `max_dim`, followed by the simples, projectives and injectives.
/// Throws InvalidArgument when the enumeration is too large.
std::vector<Representation> module_samples(const BoundAlgebra& alg, Index max_dim, std::uint64_t seed = 1);

/// Adds `part` to `into`: cases add up, the worse outcome wins and the
/// first failure detail is kept, prefixed by `label`.
void absorb(Check& into, const Check& part, const std::string& label);

/// For every ordered pair of disjoint stable subcategories and every sample:
/// t of the join has the dimension of t1 + t2, t1(t2(M)) = 0, and members of
/// the join pass through decompose_disjoint with a verified isomorphism.
Check torsion_calculus_check(const BoundAlgebra& alg, const std::vector<Representation>& samples);

/// Y = t(Y) + ST(Y) for every stable L and the injective hull Y of every sample.
Check injective_splitting_suite(const BoundAlgebra& alg, const std::vector<Representation>& samples);

/// ext_orthogonality_check over every ordered pair of disjoint stable subcategories.
Check ext_orthogonality_suite(const BoundAlgebra& alg, const std::vector<Representation>& samples, Index jmax);

struct PairVerification {
  LocalizingSubcategory l0;
  LocalizingSubcategory l1;
  std::vector<Check> checks;  // verify_equivalence, then the center exact sequence
};

/// verify_equivalence and center_exact_sequence for every ordered pair of
/// stable subcategories.
std::vector<PairVerification> recollement_suite(const CentralSheaf& sheaf, const EquivalenceOptions& options);
/// The per-pair checks merged position by position.
std::vector<Check> merge_pair_checks(const std::vector<PairVerification>& pairs);

struct OracleComparison {
  LocalizingSubcategory subcategory;
  SpectrumSubset open;
  Index sections_dim = 0;
  /// Zero when the oracle could not run within the budget.
  Index oracle_dim = 0;
  Check check{"oracle"};
};

/// quotient_center_oracle against F(A(L)) for every stable L. An oracle that
/// does not fit in the budget makes its row undecided.
std::vector<OracleComparison> oracle_suite(const CentralSheaf& sheaf, Index budget);

/// Short label "S0={1} S1={1,2}" for a pair.
std::string pair_label(const LocalizingSubcategory& l0, const LocalizingSubcategory& l1);

}  // namespace csheaf
