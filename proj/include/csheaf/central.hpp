#pragma once

// Centers of endomorphism rings, the ring F(A) of compatible families of
// central endomorphisms of the spectrum injectives, its restriction maps and
// sheaf condition, and the comparison with Z(A) and with a brute-force center
// of the quotient category.

#include <map>
#include <vector>

#include "csheaf/check.hpp"
#include "csheaf/ring.hpp"
#include "csheaf/spectrum.hpp"

namespace csheaf {

/// Z(End(E)).
struct EndoCenter {
  Representation object;
  /// Canonical basis, one map-coordinate vector per row.
  Mat coordinates;
  std::vector<ModuleMap> basis;
  AlgebraPresentation ring;
};

EndoCenter endo_center(const Representation& e);
/// Coordinates of a central endomorphism in the center basis; nullopt if not central.
std::optional<Vec> center_coordinates(const EndoCenter& z, const ModuleMap& f);

/// F(A). An element is a coordinate vector in `basis`; each basis row lists,
/// point by point, the center coordinates of z_x (the "family vector").
struct SectionAlgebra {
  SpectrumSubset subset;
  std::vector<Index> points;
  /// Offset of each point's block inside a family vector.
  std::vector<Index> offsets;
  Mat basis;
  AlgebraPresentation ring;

  Index dimension() const { return ring.dimension(); }
};

class CentralSheaf {
 public:
  explicit CentralSheaf(Spectrum sp);
  explicit CentralSheaf(const BoundAlgebra& alg) : CentralSheaf(Spectrum(alg)) {}

  const Spectrum& spectrum() const noexcept { return sp_; }
  const BoundAlgebra& algebra() const noexcept { return sp_.algebra(); }
  const EndoCenter& point_center(Index x) const { return centers_.at(x); }

  /// F(A), computed once per subset.
  const SectionAlgebra& sections(SpectrumSubset a) const;
  /// The endomorphism z_x of E_x carried by a family vector.
  ModuleMap component(const SectionAlgebra& f, const Vec& family, Index x) const;
  /// Family vector of an element of F(A).
  Vec family(const SectionAlgebra& f, const Vec& element) const;

  /// Matrix of F(B) -> F(A), shape dim F(A) x dim F(B). Throws
  /// InvalidArgument unless A is inside B.
  Mat restriction(SpectrumSubset b, SpectrumSubset a) const;
  Vec restrict_element(SpectrumSubset b, SpectrumSubset a, const Vec& element) const;

  /// Exactness of 0 -> F(A) -> prod F(A_i) => prod F(A_i & A_j). Throws
  /// InvalidArgument unless A and every A_i are stable and the A_i cover A.
  Check sheaf_check(SpectrumSubset a, const std::vector<SpectrumSubset>& covering) const;
  /// sheaf_check for every stable A and every family of stable subsets
  /// covering it; undecided beyond `budget` families.
  Check all_coverings_check(std::uint64_t budget = std::uint64_t{1} << 16) const;

  /// Z(End(E_A)) with E_A the direct sum of the E_x, x in A, compared with
  /// F(A) through the diagonal map.
  Check direct_sum_center_check(SpectrumSubset a) const;

 private:
  Spectrum sp_;
  std::vector<EndoCenter> centers_;
  mutable std::map<SpectrumSubset, SectionAlgebra> cache_;
};

/// Every family of stable subsets of A whose union is A (A itself stable).
std::vector<std::vector<SpectrumSubset>> stable_coverings(const Spectrum& sp, SpectrumSubset a);

struct CategoryCenter {
  AlgebraCenter algebra_center;
  SectionAlgebra sections;  // F(Sp)
  /// Z(A) -> F(Sp), shape dim F(Sp) x dim Z(A): central elements acting on every I(v).
  Mat evaluation;
  /// Evaluation is a ring isomorphism onto F(Sp), onto Z(End(E^+)), and onto
  /// Z(End(E^+ + I(v0))) for the padded cogenerator.
  std::vector<Check> checks;
};

CategoryCenter category_center(const CentralSheaf& sheaf);

/// Z(C/L) by brute force: the closed objects with per-vertex dimension at
/// most `budget` (one per isomorphism class) and families of endomorphisms
/// commuting with every map between them.
struct QuotientCenter {
  LocalizingSubcategory subcategory;
  std::vector<Representation> objects;
  /// Offsets of each object's block of End coordinates inside a family vector.
  std::vector<Index> offsets;
  std::vector<std::vector<ModuleMap>> end_bases;
  std::vector<Mat> end_coordinates;  // hom_basis_matrix(X, X) per object
  Mat basis;
  AlgebraPresentation ring;
};

/// Throws HypothesisViolation for unstable L and InvalidArgument when some
/// E_x with x in A(L) does not fit in the budget.
QuotientCenter quotient_center_oracle(const LocalizingSubcategory& l, Index budget);

/// F(A(L)) -> Z(C/L): z acts on a closed X by restricting the diagonal action
/// on the injective hull of X. Shape dim oracle x dim F.
Mat family_action(const CentralSheaf& sheaf, const QuotientCenter& oracle);
/// Z(C/L) -> Z(C/L') for L inside L', restricting to the L'-closed objects.
/// Shape dim small x dim large.
Mat oracle_restriction(const QuotientCenter& large, const QuotientCenter& small);

/// The oracle agrees with F(A(L)): family_action is a ring isomorphism.
Check oracle_check(const CentralSheaf& sheaf, const QuotientCenter& oracle);

}  // namespace csheaf
