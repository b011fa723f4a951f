#pragma once

// Localizing subcategories of Mod(A), torsion radicals and the quotient
// category C/L, which is only ever touched through L-closed representatives.
//
// A localizing subcategory is given by the set S of simple modules
// (vertices) it contains: M lies in L exactly when every composition
// factor of M is some S(v) with v in S.

#include <vector>

#include "csheaf/check.hpp"
#include "csheaf/rep.hpp"
#include "csheaf/vertex_set.hpp"

namespace csheaf {

class LocalizingSubcategory {
 public:
  LocalizingSubcategory() = default;
  /// Throws InvalidArgument when `torsion_vertices` names a vertex outside the quiver.
  LocalizingSubcategory(BoundAlgebra alg, VertexSet torsion_vertices);
  static LocalizingSubcategory zero(const BoundAlgebra& alg) { return {alg, VertexSet{}}; }
  static LocalizingSubcategory everything(const BoundAlgebra& alg) {
    return {alg, VertexSet::full(alg.vertex_count())};
  }

  const BoundAlgebra& algebra() const noexcept { return alg_; }
  VertexSet vertices() const noexcept { return vertices_; }

  friend bool operator==(const LocalizingSubcategory& a, const LocalizingSubcategory& b) {
    return a.alg_ == b.alg_ && a.vertices_ == b.vertices_;
  }

 private:
  BoundAlgebra alg_;
  VertexSet vertices_;
};

/// t_L(M): the largest submodule of M lying in L.
Subobject torsion_radical(const LocalizingSubcategory& l, const Representation& m);
bool is_member(const LocalizingSubcategory& l, const Representation& m);
bool is_torsion_free(const LocalizingSubcategory& l, const Representation& m);

LocalizingSubcategory meet(const LocalizingSubcategory& a, const LocalizingSubcategory& b);
LocalizingSubcategory join(const LocalizingSubcategory& a, const LocalizingSubcategory& b);

struct DisjointDecomposition {
  Subobject first;   // t_{L1}(M)
  Subobject second;  // t_{L2}(M)
  DirectSum sum;     // first.object + second.object
  ModuleMap iso;     // sum.object -> M
};

/// M = t_{L1}(M) + t_{L2}(M) for M in L1 v L2 with disjoint vertex sets.
/// Throws InvalidArgument when the sets meet or M is not in the join, and
/// HypothesisViolation when the two torsion parts do not split M (this
/// happens for pairs that are not stable).
DisjointDecomposition decompose_disjoint(const LocalizingSubcategory& l1, const LocalizingSubcategory& l2,
                                         const Representation& m);

/// Closed under injective hulls: every I(v) with v in S has support in S.
bool is_stable(const LocalizingSubcategory& l);

struct LocalizedObject {
  Representation closure;
  /// The canonical map M -> closure.
  ModuleMap unit;
};

/// The L-closure of M: M / t_L(M), embedded in its injective hull E, then
/// enlarged to the preimage of t_L(E / (M / t_L(M))).
LocalizedObject localize(const LocalizingSubcategory& l, const Representation& m);
/// Torsion-free with an isomorphic closure unit.
bool is_closed(const LocalizingSubcategory& l, const Representation& m);

struct QuotientHom {
  LocalizedObject source;
  LocalizedObject target;
  std::vector<ModuleMap> basis;  // of Hom(source.closure, target.closure)
};

/// Hom in C/L between the images of m and n, computed between their closures.
QuotientHom quotient_hom(const LocalizingSubcategory& l, const Representation& m, const Representation& n);

/// The unique map g between closures with g after lm.unit equal to ln.unit after f.
ModuleMap localize_map(const ModuleMap& f, const LocalizedObject& lm, const LocalizedObject& ln);

struct InjectiveSplitting {
  Subobject torsion;        // t_L(Y)
  LocalizedObject section;  // ST(Y) with the unit Y -> ST(Y)
  ModuleMap retraction;     // Y -> t_L(Y), left inverse of the inclusion
  DirectSum sum;            // t_L(Y) + ST(Y)
  ModuleMap iso;            // Y -> sum.object
};

/// Y = t_L(Y) + ST(Y) for injective Y and stable L. Throws InvalidArgument
/// if Y is not injective, HypothesisViolation if L is not stable and
/// TheoremViolation if the splitting cannot be exhibited.
InjectiveSplitting injective_splitting_check(const LocalizingSubcategory& l, const Representation& y);

/// Ext^j(X0, X1) = 0 for every sampled X0 in L0, X1 in L1 and j <= jmax.
/// Samples outside their subcategory are skipped. Throws
/// HypothesisViolation unless the vertex sets are disjoint and both stable.
Check ext_orthogonality_check(const LocalizingSubcategory& l0, const LocalizingSubcategory& l1,
                              const std::vector<Representation>& samples, Index jmax = kDefaultJMax);

}  // namespace csheaf
