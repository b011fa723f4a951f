#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "csheaf/exactlin.hpp"

namespace csheaf {

/// A finite-dimensional unital F_p-algebra given by structure constants:
/// b_i * b_j = sum_k product(i, j)[k] b_k.
class AlgebraPresentation {
 public:
  AlgebraPresentation() = default;
  AlgebraPresentation(Residue modulus, Index dimension, std::vector<Vec> products, Vec unit);

  /// The zero ring (dimension 0, where 1 = 0).
  static AlgebraPresentation zero_ring(Residue modulus);

  Residue modulus() const noexcept { return modulus_; }
  Index dimension() const noexcept { return dimension_; }
  const Vec& product(Index i, Index j) const { return products_[i * dimension_ + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;
  const Vec& unit() const noexcept { return unit_; }

  bool is_commutative() const;
  bool is_associative() const;
  bool unit_is_identity() const;

  friend bool operator==(const AlgebraPresentation&, const AlgebraPresentation&) = default;

 private:
  Residue modulus_ = 2;
  Index dimension_ = 0;
  std::vector<Vec> products_;
  Vec unit_;
};

/// Structure constants of the subalgebra whose canonical basis is the rows
/// of `basis`, inside an ambient algebra with the given product and unit.
/// Throws TheoremViolation if the span is not closed under the product or
/// misses the unit.
AlgebraPresentation subalgebra_presentation(const Mat& basis, const std::function<Vec(const Vec&, const Vec&)>& multiply,
                                            const Vec& unit);

/// `map` has shape target.dimension() x source.dimension(); column j is the
/// image of source basis vector j.
bool is_unital_ring_map(const AlgebraPresentation& source, const AlgebraPresentation& target,
                        const Mat& map);
bool is_ring_isomorphism(const AlgebraPresentation& source, const AlgebraPresentation& target,
                         const Mat& map);

/// Exhaustive backtracking search for a ring isomorphism. Throws Undecided
/// when more than `budget` partial assignments would be needed.
std::optional<Mat> find_ring_isomorphism(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                         std::size_t budget = std::size_t{1} << 20);

}  // namespace csheaf
