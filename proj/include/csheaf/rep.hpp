#pragma once

// Finite-dimensional representations of a bound quiver algebra and the maps
// between them.
//
// A representation stores one vector space F_p^{dim(v)} per vertex and one
// matrix per arrow (target-dim x source-dim). Elements are written as
// "total" vectors: the concatenation of the per-vertex components in vertex
// order. A module map is stored as its per-vertex blocks; its coordinate
// vector is the concatenation of the blocks, each flattened row-major.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "csheaf/algebra.hpp"
#include "csheaf/vertex_set.hpp"

namespace csheaf {

class Representation {
 public:
  Representation() = default;
  /// Validates shapes and that every relation acts as zero.
  Representation(BoundAlgebra alg, std::vector<Index> dims, std::vector<Mat> action);
  /// Skips validation; for callers that build representations known to be valid.
  static Representation unchecked(BoundAlgebra alg, std::vector<Index> dims, std::vector<Mat> action);
  static Representation zero(const BoundAlgebra& alg);

  bool valid() const noexcept { return data_ != nullptr; }
  const BoundAlgebra& algebra() const;
  const std::vector<Index>& dims() const;
  Index dim(Index v) const { return dims().at(v); }
  Index total_dimension() const;
  /// Position of vertex v's block inside a total vector.
  Index offset(Index v) const;
  const Mat& action(Index arrow) const;
  const std::vector<Mat>& actions() const;
  Residue modulus() const { return algebra().modulus(); }
  VertexSet support() const;
  bool is_zero() const { return total_dimension() == 0; }

  /// Literal equality of dimension vectors and arrow matrices.
  friend bool operator==(const Representation& a, const Representation& b);

  struct Data;

 private:
  std::shared_ptr<const Data> data_;
};

/// Matrix by which a path acts, shape dim(target) x dim(source).
Mat path_action(const Representation& m, const Path& p);

class ModuleMap {
 public:
  ModuleMap() = default;
  /// Validates block shapes and every commuting square.
  ModuleMap(Representation source, Representation target, std::vector<Mat> blocks);
  static ModuleMap unchecked(Representation source, Representation target, std::vector<Mat> blocks);
  static ModuleMap zero(Representation source, Representation target);
  static ModuleMap identity(Representation m);
  /// Inverse of coordinates().
  static ModuleMap from_coordinates(Representation source, Representation target, const Vec& coords);

  const Representation& source() const noexcept { return source_; }
  const Representation& target() const noexcept { return target_; }
  const Mat& block(Index v) const { return blocks_.at(v); }
  const std::vector<Mat>& blocks() const noexcept { return blocks_; }

  Vec coordinates() const;
  /// Block-diagonal matrix on total vectors.
  Mat total_matrix() const;
  Vec apply(const Vec& total) const;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  Index rank() const;

  friend bool operator==(const ModuleMap& a, const ModuleMap& b);

 private:
  Representation source_;
  Representation target_;
  std::vector<Mat> blocks_;
};

/// g after f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
ModuleMap operator+(const ModuleMap& a, const ModuleMap& b);
ModuleMap operator-(const ModuleMap& a, const ModuleMap& b);
ModuleMap scale(const ModuleMap& f, Residue c);
/// sum_i coeffs[i] * maps[i]; all maps must share source and target.
ModuleMap combine(const std::vector<ModuleMap>& maps, const Vec& coeffs, const Representation& source,
                  const Representation& target);
/// Inverse of an isomorphism; throws InvalidArgument otherwise.
ModuleMap inverse(const ModuleMap& f);

void require_same_algebra(const Representation& a, const Representation& b, const char* where);

// ---------------------------------------------------------------- building blocks

Representation simple(const BoundAlgebra& alg, Index v);
/// P(v) = A e_v: basis of P(v)_w is the residues of paths v -> w.
Representation indecomposable_projective(const BoundAlgebra& alg, Index v);
/// I(v): I(v)_w is the dual of the span of paths w -> v; its socle is S(v).
Representation indecomposable_injective(const BoundAlgebra& alg, Index v);
/// Total vector spanning the socle of indecomposable_injective(alg, v).
Vec injective_socle_vector(const BoundAlgebra& alg, Index v);

/// Action of an algebra element (path-basis coordinates) on total vectors.
Mat element_action(const Representation& m, const Vec& element);
/// Same as an endomorphism; the element must be a sum of cycles, i.e. lie in
/// the span of the paths v -> v (central elements always do).
ModuleMap element_endomorphism(const Representation& m, const Vec& element);

// ---------------------------------------------------------------- Hom

/// Canonical basis of Hom(m, n), one coordinate vector per row.
Mat hom_basis_matrix(const Representation& m, const Representation& n);
std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n);
Index hom_dim(const Representation& m, const Representation& n);

// ---------------------------------------------------------------- subquotients

struct Subobject {
  Representation object;
  ModuleMap inclusion;
};

struct QuotientObject {
  Representation object;
  ModuleMap projection;
};

/// The subrepresentation with the given per-vertex subspaces (row bases).
/// Throws InvalidArgument if the subspaces are not closed under the arrows.
Subobject subrepresentation(const Representation& m, const std::vector<Mat>& subspaces);
/// Per-vertex canonical row bases of the image of an injective map's blocks.
std::vector<Mat> image_subspaces(const ModuleMap& f);

Subobject kernel(const ModuleMap& f);
Subobject image(const ModuleMap& f);
QuotientObject cokernel(const ModuleMap& f);
QuotientObject quotient(const Representation& m, const std::vector<Mat>& subspaces);
QuotientObject quotient(const Representation& m, const Subobject& sub);

/// g with sub.inclusion after g equal to f; throws InvalidArgument when the
/// image of f is not inside the subobject.
ModuleMap factor_through(const ModuleMap& f, const Subobject& sub);
/// g with g after q.projection equal to f; throws InvalidArgument when f
/// does not vanish on the kernel of the projection.
ModuleMap factor_through(const ModuleMap& f, const QuotientObject& q);

/// Smallest subrepresentation containing the given total vectors.
Subobject submodule_generated(const Representation& m, const std::vector<Vec>& vectors);

Subobject socle(const Representation& m);
/// Socle restricted to the vertices in `s`.
Subobject socle_in(const Representation& m, VertexSet s);
std::vector<Index> socle_multiplicities(const Representation& m);
/// Jordan-Holder multiplicities, which for a bound quiver algebra are the dimension vector.
std::vector<Index> composition_multiplicities(const Representation& m);
/// rad(m)_w = sum of the images of the arrows ending at w.
std::vector<Mat> radical_subspaces(const Representation& m);

struct DirectSum {
  Representation object;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<Representation>& summands, const BoundAlgebra& alg);
DirectSum direct_sum(const std::vector<Representation>& summands);
/// The map into a direct sum with the given components.
ModuleMap map_into_sum(const DirectSum& sum, const std::vector<ModuleMap>& components);
/// The map out of a direct sum with the given components.
ModuleMap map_out_of_sum(const DirectSum& sum, const std::vector<ModuleMap>& components);

// ---------------------------------------------------------------- hulls, iso, Ext

struct InjectiveHull {
  Representation object;
  ModuleMap embedding;
  /// Vertex of each indecomposable summand, in block order.
  std::vector<Index> summand_vertices;
};

/// E = sum of I(v) over the socle of m, with an essential monomorphism m -> E.
/// Throws TheoremViolation if the certification of either property fails.
InjectiveHull injective_hull(const Representation& m);
bool is_injective(const Representation& m);

struct IsoSearchOptions {
  /// Exhaustive search when p^dim Hom(m, n) is at most this.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 16;
  Index random_trials = 256;
  std::uint64_t seed = 1;
};

/// An isomorphism m -> n, or nullopt when none exists. Throws Undecided when
/// no certificate either way was found within the budget.
std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n,
                                       const IsoSearchOptions& options = {});

inline constexpr Index kDefaultJMax = 2;

struct ProjectiveResolution {
  std::vector<Representation> terms;    // P_0, P_1, ...
  std::vector<ModuleMap> differentials;  // d_1 : P_1 -> P_0, d_2 : P_2 -> P_1, ...
  ModuleMap augmentation;                // P_0 -> m
};

/// Minimal projective resolution truncated after `length` + 1 terms.
ProjectiveResolution projective_resolution(const Representation& m, Index length);

/// dim Ext^j(m, n). Throws InvalidArgument when j > jmax.
Index ext_dim(const Representation& m, const Representation& n, Index j, Index jmax = kDefaultJMax);

/// Whether End(m) is a local ring. Exhaustive over End(m) when it has at
/// most `budget` elements; otherwise uses the socle restriction, throwing
/// Undecided if that is inconclusive.
bool has_local_endomorphism_ring(const Representation& m, std::uint64_t budget = std::uint64_t{1} << 16);

// ---------------------------------------------------------------- enumeration

/// Every representation whose dimension at each vertex is at most
/// `max_dim`, one matrix choice at a time. Throws InvalidArgument when more
/// than `limit` candidates would have to be examined.
std::vector<Representation> enumerate_representations(const BoundAlgebra& alg, Index max_dim,
                                                      std::uint64_t limit = 2000000);

/// One representative per isomorphism class, in first-seen order.
std::vector<Representation> iso_class_representatives(const std::vector<Representation>& reps,
                                                       const IsoSearchOptions& options = {});

}  // namespace csheaf
