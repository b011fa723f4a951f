#pragma once

// The injective spectrum: one point per vertex, represented by I(v). Subsets
// of the spectrum are vertex sets. The A(L) / L_A dictionary is computed
// from Hom vanishing rather than by taking complements, so the tests can
// compare the two.

#include <vector>

#include "csheaf/check.hpp"
#include "csheaf/localization.hpp"

namespace csheaf {

using SpectrumSubset = VertexSet;

struct SpectrumPoint {
  Index vertex = 0;
  Representation injective;
};

class Spectrum {
 public:
  /// Throws InvalidArgument beyond kPowersetVertexCap vertices.
  explicit Spectrum(BoundAlgebra alg);

  const BoundAlgebra& algebra() const noexcept { return alg_; }
  Index size() const noexcept { return points_.size(); }
  const std::vector<SpectrumPoint>& points() const noexcept { return points_; }
  const SpectrumPoint& point(Index x) const { return points_.at(x); }
  SpectrumSubset everything() const { return VertexSet::full(size()); }

  /// dim Hom(E_x, E_y).
  Index hom_dim(Index x, Index y) const { return hom_[x * size() + y]; }
  /// dim Hom(S(v), E_x).
  Index simple_hom_dim(Index v, Index x) const { return simple_hom_[v * size() + x]; }

 private:
  BoundAlgebra alg_;
  std::vector<SpectrumPoint> points_;
  std::vector<Index> hom_;
  std::vector<Index> simple_hom_;
};

/// Points x with Hom(V, E_x) = 0 for every V in L, tested on the simples of L.
SpectrumSubset A_of(const Spectrum& sp, const LocalizingSubcategory& l);
/// The subcategory cogenerated by the E_x with x in A: simples S(v) with
/// Hom(S(v), E_x) = 0 for all x in A.
LocalizingSubcategory L_of(const Spectrum& sp, SpectrumSubset a);
/// A(L_A).
SpectrumSubset closure(const Spectrum& sp, SpectrumSubset a);

/// Backward closed under nonzero Homs: x in A and Hom(E_y, E_x) != 0 imply y in A.
bool is_stable_subset(const Spectrum& sp, SpectrumSubset a);
/// Every stable subset, in increasing bit order.
std::vector<SpectrumSubset> stable_topology(const Spectrum& sp);

/// Distributivity, the A(L) exchange identities, L = L_{A(L)}, topology
/// axioms, closure axioms and covering base change, each exhaustively.
/// Sweeps over triples or families that would exceed `budget` cases are
/// reported as undecided.
std::vector<Check> verify_lattice(const Spectrum& sp, std::uint64_t budget = std::uint64_t{1} << 22);

}  // namespace csheaf
