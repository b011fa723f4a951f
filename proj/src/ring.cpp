#include "csheaf/ring.hpp"

#include <algorithm>
#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

AlgebraPresentation::AlgebraPresentation(Residue modulus, Index dimension, std::vector<Vec> products,
                                         Vec unit)
    : modulus_(modulus), dimension_(dimension), products_(std::move(products)), unit_(std::move(unit)) {
  if (products_.size() != dimension_ * dimension_) {
    throw DimensionMismatch("structure constants: expected " + std::to_string(dimension_ * dimension_) +
                            " products");
  }
  for (const auto& v : products_) {
    if (v.size() != dimension_) throw DimensionMismatch("structure constants: product length");
  }
  if (unit_.size() != dimension_) throw DimensionMismatch("structure constants: unit length");
}

AlgebraPresentation AlgebraPresentation::zero_ring(Residue modulus) {
  return AlgebraPresentation(modulus, 0, {}, {});
}

Vec AlgebraPresentation::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != dimension_ || y.size() != dimension_) throw DimensionMismatch("multiply: length");
  Vec out(dimension_, 0);
  for (Index i = 0; i < dimension_; ++i) {
    if (x[i] == 0) continue;
    for (Index j = 0; j < dimension_; ++j) {
      if (y[j] == 0) continue;
      const Residue c = modp::mul(x[i], y[j], modulus_);
      const auto& pij = product(i, j);
      for (Index k = 0; k < dimension_; ++k) {
        if (pij[k] != 0) out[k] = modp::add(out[k], modp::mul(c, pij[k], modulus_), modulus_);
      }
    }
  }
  return out;
}

bool AlgebraPresentation::is_commutative() const {
  for (Index i = 0; i < dimension_; ++i)
    for (Index j = i + 1; j < dimension_; ++j)
      if (product(i, j) != product(j, i)) return false;
  return true;
}

bool AlgebraPresentation::is_associative() const {
  for (Index i = 0; i < dimension_; ++i) {
    for (Index j = 0; j < dimension_; ++j) {
      for (Index k = 0; k < dimension_; ++k) {
        Vec ek(dimension_, 0), ei(dimension_, 0);
        ek[k] = 1;
        ei[i] = 1;
        if (multiply(product(i, j), ek) != multiply(ei, product(j, k))) return false;
      }
    }
  }
  return true;
}

bool AlgebraPresentation::unit_is_identity() const {
  for (Index i = 0; i < dimension_; ++i) {
    Vec ei(dimension_, 0);
    ei[i] = 1;
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei) return false;
  }
  return true;
}

bool is_unital_ring_map(const AlgebraPresentation& source, const AlgebraPresentation& target,
                        const Mat& map) {
  if (source.modulus() != target.modulus() || map.modulus() != source.modulus()) {
    throw ModulusMismatch("ring map across fields");
  }
  if (map.rows() != target.dimension() || map.cols() != source.dimension()) {
    throw DimensionMismatch("ring map shape");
  }
  if (map.apply(source.unit()) != target.unit()) return false;
  const Index n = source.dimension();
  std::vector<Vec> images(n);
  for (Index j = 0; j < n; ++j) images[j] = map.column(j);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (map.apply(source.product(i, j)) != target.multiply(images[i], images[j])) return false;
  return true;
}

bool is_ring_isomorphism(const AlgebraPresentation& source, const AlgebraPresentation& target,
                         const Mat& map) {
  if (source.dimension() != target.dimension()) return false;
  if (rank(map) != source.dimension()) return false;
  return is_unital_ring_map(source, target, map);
}

namespace {

struct IsoSearch {
  const AlgebraPresentation& a;
  const AlgebraPresentation& b;
  std::size_t budget;
  std::size_t visited = 0;
  std::vector<Vec> images;
  std::optional<Mat> found;

  bool consistent(Index upto) const {
    // check products b_i b_j with i, j <= upto whose support is already assigned
    const Index n = a.dimension();
    const Residue p = a.modulus();
    for (Index i = 0; i <= upto; ++i) {
      for (Index j = 0; j <= upto; ++j) {
        if (i != upto && j != upto) continue;
        const auto& pij = a.product(i, j);
        bool assigned = true;
        for (Index k = upto + 1; k < n && assigned; ++k) assigned = pij[k] == 0;
        if (!assigned) continue;
        Vec lhs(n, 0);
        for (Index k = 0; k <= upto; ++k) {
          if (pij[k] == 0) continue;
          for (Index t = 0; t < n; ++t) lhs[t] = modp::add(lhs[t], modp::mul(pij[k], images[k][t], p), p);
        }
        if (lhs != b.multiply(images[i], images[j])) return false;
      }
    }
    return true;
  }

  void run(Index next) {
    if (found) return;
    const Index n = a.dimension();
    if (next == n) {
      Mat m = Mat::from_columns(n, a.modulus(), images);
      if (is_ring_isomorphism(a, b, m)) found = std::move(m);
      return;
    }
    Vec candidate(n, 0);
    while (true) {
      if (++visited > budget) {
        throw Undecided("ring isomorphism search exceeded budget of " + std::to_string(budget));
      }
      images[next] = candidate;
      if (consistent(next)) run(next + 1);
      if (found) return;
      Index k = 0;
      while (k < n) {
        candidate[k] = (candidate[k] + 1) % a.modulus();
        if (candidate[k] != 0) break;
        ++k;
      }
      if (k == n) return;
    }
  }
};

}  // namespace

std::optional<Mat> find_ring_isomorphism(const AlgebraPresentation& a, const AlgebraPresentation& b,
                                         std::size_t budget) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch("ring isomorphism across fields");
  if (a.dimension() != b.dimension()) return std::nullopt;
  if (a.dimension() == 0) return Mat(0, 0, a.modulus());
  IsoSearch search{a, b, budget, 0, std::vector<Vec>(a.dimension()), std::nullopt};
  search.run(0);
  return search.found;
}

AlgebraPresentation subalgebra_presentation(const Mat& basis, const std::function<Vec(const Vec&, const Vec&)>& multiply,
                                            const Vec& unit) {
  const Residue p = basis.modulus();
  const Index r = basis.rows();
  if (r == 0) {
    if (std::any_of(unit.begin(), unit.end(), [](Residue x) { return x != 0; })) {
      throw TheoremViolation("subalgebra_presentation: the unit is not in the span");
    }
    return AlgebraPresentation::zero_ring(p);
  }
  std::vector<Vec> elements;
  for (Index i = 0; i < r; ++i) elements.push_back(basis.row_vec(i));
  std::vector<Vec> products;
  products.reserve(r * r);
  for (Index i = 0; i < r; ++i) {
    for (Index j = 0; j < r; ++j) {
      auto coords = rref_coordinates(basis, multiply(elements[i], elements[j]));
      if (!coords) throw TheoremViolation("subalgebra_presentation: span is not closed under multiplication");
      products.push_back(std::move(*coords));
    }
  }
  auto u = rref_coordinates(basis, unit);
  if (!u) throw TheoremViolation("subalgebra_presentation: the unit is not in the span");
  return AlgebraPresentation(p, r, std::move(products), std::move(*u));
}

}  // namespace csheaf
