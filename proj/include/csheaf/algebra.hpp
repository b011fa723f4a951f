#pragma once

// Finite-dimensional bound quiver algebras A = kQ/I over a prime field.
//
// Paths compose like functions: the product q*p of two paths is "p, then q"
// and is nonzero only when target(p) == source(q). A module over A is a
// representation of Q in which every relation acts as zero.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csheaf/exactlin.hpp"
#include "csheaf/ring.hpp"

namespace csheaf {

struct Arrow {
  std::string name;
  Index source = 0;
  Index target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  /// Vertices named "1", ..., "n".
  explicit Quiver(Index vertex_count);
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  Index add_vertex(std::string name);
  Index add_arrow(std::string name, Index source, Index target);

  Index vertex_count() const noexcept { return vertex_names_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
  const std::string& vertex_name(Index v) const;
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(Index a) const;
  std::optional<Index> find_vertex(const std::string& name) const;
  std::optional<Index> find_arrow(const std::string& name) const;
  std::vector<Index> arrows_from(Index v) const;

  /// Throws InvalidArgument on dangling endpoints or duplicate names.
  void validate() const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
};

struct Path {
  Index source = 0;
  Index target = 0;
  /// Traversal order: arrows.front() is applied first.
  std::vector<Index> arrows;

  static Path trivial(Index v) { return Path{v, v, {}}; }
  Index length() const noexcept { return arrows.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// `first` followed by `second`; requires first.target == second.source.
Path concatenate(const Path& first, const Path& second);

/// Path from arrow indices written right to left, e.g. {b, a} for b*a.
Path path_from_written(const Quiver& q, const std::vector<Index>& written);

/// "e<vertex>" for trivial paths, otherwise arrow names joined right to left ("b*a").
std::string path_name(const Quiver& q, const Path& p);

/// Order used for path bases: by length, then lexicographically by the
/// written arrow-name sequence; trivial paths by vertex index.
bool path_less(const Quiver& q, const Path& a, const Path& b);

struct RelationTerm {
  std::int64_t coefficient = 1;
  Path path;
};

struct Relation {
  std::vector<RelationTerm> terms;
};

struct AlgebraOptions {
  Index max_path_length = 32;
  /// Guard against exponential path growth while searching for the bound.
  Index max_enumerated_paths = 200000;
};

class BoundAlgebra {
 public:
  BoundAlgebra() = default;

  const Quiver& quiver() const;
  Index vertex_count() const { return quiver().vertex_count(); }
  Residue modulus() const;
  const std::vector<Relation>& relations() const;
  Index max_path_length() const;
  /// Finite-dimensionality certificate: every path of this length lies in the ideal.
  Index vanishing_length() const;

  const std::vector<Path>& path_basis() const;
  Index dimension() const { return path_basis().size(); }
  /// Basis indices of the residues of paths source -> target.
  const std::vector<Index>& basis_between(Index source, Index target) const;
  /// Basis index of the trivial path at v.
  Index idempotent(Index v) const;

  /// Coordinates of the residue class of `p` in the path basis.
  Vec normal_form(const Path& p) const;
  /// Coordinates of b_i * b_j (b_j first, then b_i).
  const Vec& product(Index i, Index j) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec unit() const;

  bool valid() const noexcept { return impl_ != nullptr; }
  friend bool operator==(const BoundAlgebra& a, const BoundAlgebra& b) { return a.impl_ == b.impl_; }

  struct Impl;

 private:
  explicit BoundAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& impl() const;
  std::shared_ptr<const Impl> impl_;

  friend BoundAlgebra build_algebra(const Quiver&, Residue, std::vector<Relation>, AlgebraOptions);
};

/// Builds kQ/I. Throws InvalidArgument (bad quiver, non-prime modulus),
/// NonAdmissible (a relation is not a combination of parallel paths of
/// length >= 2) or NotFiniteDimensional (no vanishing length within the bound).
BoundAlgebra build_algebra(const Quiver& q, Residue p, std::vector<Relation> relations,
                           AlgebraOptions options = {});

/// Z(A): basis elements as path-basis coordinate vectors, with the ring
/// structure expressed in that basis.
struct AlgebraCenter {
  std::vector<Vec> elements;
  AlgebraPresentation ring;
};

/// Solves z*b = b*z for every path-basis element b.
AlgebraCenter algebra_center(const BoundAlgebra& alg);

}  // namespace csheaf
