#pragma once

// Gluing two quotient categories C/L0 and C/L1 along C/(L0 v L1). Every
// quotient category is handled through closed representatives, so the
// comparison isomorphism between the two composite functors into
// C/(L0 v L1) is the identity.

#include <vector>

#include "csheaf/central.hpp"
#include "csheaf/check.hpp"
#include "csheaf/localization.hpp"

namespace csheaf {

/// The pair of stable subcategories being glued, with their meet and join.
class Recollement {
 public:
  /// Throws HypothesisViolation unless both subcategories are stable.
  Recollement(LocalizingSubcategory l0, LocalizingSubcategory l1);

  const LocalizingSubcategory& l0() const noexcept { return l0_; }
  const LocalizingSubcategory& l1() const noexcept { return l1_; }
  const LocalizingSubcategory& join() const noexcept { return join_; }
  const LocalizingSubcategory& meet() const noexcept { return meet_; }
  const BoundAlgebra& algebra() const noexcept { return l0_.algebra(); }

 private:
  LocalizingSubcategory l0_, l1_, join_, meet_;
};

/// (X0, X1, sigma): X_i closed for L_i, sigma an isomorphism between the
/// (L0 v L1)-closures, which are kept with their units.
struct RecollementObject {
  Representation x0;
  Representation x1;
  LocalizedObject c0;  // closure of x0 for the join
  LocalizedObject c1;  // closure of x1 for the join
  ModuleMap sigma;     // c0.closure -> c1.closure
};

/// Validates closedness and that sigma is an isomorphism between the closures.
/// Throws InvalidArgument otherwise.
RecollementObject make_recollement_object(const Recollement& r, const Representation& x0, const Representation& x1,
                                          const ModuleMap& sigma);

struct RecollementImage {
  RecollementObject object;
  LocalizedObject q0;  // X -> x0
  LocalizedObject q1;  // X -> x1
};

/// R(X) = (Q0 X, Q1 X, sigma) with sigma induced by both closures being closures of X.
RecollementImage functor_R(const Recollement& r, const Representation& x);

struct RecollementMorphism {
  ModuleMap g0;
  ModuleMap g1;
};

/// R on a map f : X -> Y, given R(X) and R(Y).
RecollementMorphism functor_R(const ModuleMap& f, const RecollementImage& rx, const RecollementImage& ry);

/// The (L0 v L1)-closure of g0 : x0 -> y0, as a map c0(x0) -> c0(y0).
ModuleMap join_closure_0(const RecollementObject& a, const RecollementObject& b, const ModuleMap& g0);
ModuleMap join_closure_1(const RecollementObject& a, const RecollementObject& b, const ModuleMap& g1);
/// sigma_b after closure(g0) equals closure(g1) after sigma_a.
bool is_recollement_morphism(const RecollementObject& a, const RecollementObject& b, const RecollementMorphism& g);

/// Hom in the glued category: a basis of pairs (g0, g1).
std::vector<RecollementMorphism> recollement_hom(const RecollementObject& a, const RecollementObject& b);

struct GluedObject {
  /// Closed for the meet.
  Representation object;
  ModuleMap pi0;  // object -> x0
  ModuleMap pi1;  // object -> x1
  /// The fiber product before closing up.
  Representation fiber_product;
};

/// V(theta): the fiber product of x0 -> c1 <- x1, closed up for L0 ^ L1.
GluedObject functor_V(const Recollement& r, const RecollementObject& theta);

struct EquivalenceOptions {
  /// Per-vertex dimension bound for the enumerated objects.
  Index budget = 2;
  /// Largest Hom(c0, c1) (as p^dim) searched for gluing isomorphisms.
  std::uint64_t iso_search_limit = 4096;
  /// Largest number of glued objects examined.
  std::uint64_t object_limit = 20000;
};

/// Unit, counit, Q_i(pi_i), faithfulness, fullness and exactness of R on
/// every enumerated object, each as one check. Exhausted budgets are
/// reported as undecided.
std::vector<Check> verify_equivalence(const Recollement& r, const EquivalenceOptions& options = {});

/// 0 -> Z(C/(L1 ^ L2)) -> Z(C/L1) x Z(C/L2) => Z(C/(L1 v L2)) with
/// Z(C/L) = F(A(L)), plus the dictionary A(L1 ^ L2) = A(L1) u A(L2).
Check center_exact_sequence(const CentralSheaf& sheaf, const LocalizingSubcategory& l1, const LocalizingSubcategory& l2);

}  // namespace csheaf
