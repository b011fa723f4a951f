#pragma once

// Dense exact linear algebra over prime fields F_p.
//
// Conventions used throughout the library:
//  * a matrix acts on column vectors, so a map F^n -> F^m is an m x n Mat;
//  * a subspace of F^n is stored as a matrix whose rows span it; every
//    subspace-valued function returns the canonical basis, i.e. the nonzero
//    rows of the reduced row-echelon form, so equal subspaces compare equal.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace csheaf {

using Index = std::size_t;
using Residue = std::uint32_t;
using Vec = std::vector<Residue>;

bool is_prime(std::uint64_t n);

namespace modp {

inline Residue reduce(std::int64_t v, Residue p) {
  const auto m = static_cast<std::int64_t>(p);
  auto r = v % m;
  return static_cast<Residue>(r < 0 ? r + m : r);
}
inline Residue add(Residue a, Residue b, Residue p) {
  const std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= p ? s - p : s);
}
inline Residue sub(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + (p - b); }
inline Residue neg(Residue a, Residue p) { return a == 0 ? 0 : p - a; }
inline Residue mul(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((std::uint64_t{a} * b) % p);
}
Residue inv(Residue a, Residue p);

}  // namespace modp

/// An element of F_p carrying its modulus.
class Scalar {
 public:
  Scalar(std::int64_t value, Residue modulus);

  Residue value() const noexcept { return value_; }
  Residue modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }

  Scalar inverse() const;

  friend Scalar operator+(Scalar a, Scalar b);
  friend Scalar operator-(Scalar a, Scalar b);
  friend Scalar operator*(Scalar a, Scalar b);
  friend Scalar operator/(Scalar a, Scalar b);
  Scalar operator-() const { return Scalar(modp::neg(value_, modulus_), modulus_); }
  friend bool operator==(Scalar a, Scalar b) = default;

 private:
  Residue value_;
  Residue modulus_;
};

class Mat {
 public:
  Mat() = default;
  Mat(Index rows, Index cols, Residue modulus);
  Mat(Residue modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Mat identity(Index n, Residue modulus);
  static Mat from_rows(Index cols, Residue modulus, const std::vector<Vec>& rows);
  static Mat from_columns(Index rows, Residue modulus, const std::vector<Vec>& columns);

  Index rows() const noexcept { return rows_; }
  Index cols() const noexcept { return cols_; }
  Residue modulus() const noexcept { return modulus_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue operator()(Index r, Index c) const { return data_[r * cols_ + c]; }
  Residue& operator()(Index r, Index c) { return data_[r * cols_ + c]; }
  Scalar at(Index r, Index c) const;
  void set(Index r, Index c, std::int64_t value);

  std::span<const Residue> row(Index r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(Index r) const;
  Vec column(Index c) const;
  std::span<const Residue> entries() const { return data_; }

  Mat transposed() const;
  Mat scaled(Residue factor) const;
  Mat submatrix(Index r0, Index c0, Index nrows, Index ncols) const;
  Mat select_rows(const std::vector<Index>& rows) const;
  Vec apply(std::span<const Residue> x) const;

  bool is_zero() const;
  bool is_identity() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  Residue modulus_ = 2;
  std::vector<Residue> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
/// Block-diagonal sum.
Mat diagonal_sum(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;
  std::vector<Index> pivot_columns;
  Index rank = 0;
};

RrefResult rref(const Mat& m);
Index rank(const Mat& m);

/// Rows form a basis of {x : m x = 0}: one row per free column f (ascending),
/// with a 1 at f and the negated reduced entries at the pivot columns.
Mat kernel_basis(const Mat& m);

/// Some x with a x = b, free variables set to 0, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, std::span<const Residue> b);

/// Column-wise solve of a X = b; nullopt when some column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

/// Canonical basis (nonzero RREF rows) of the row space.
Mat row_space(const Mat& m);
/// Canonical basis of the column space, written as rows.
Mat column_space(const Mat& m);

Mat subspace_intersection(const Mat& u, const Mat& w);
Mat subspace_sum(const Mat& u, const Mat& w);
/// Canonical basis of {x : a x in rowspace(w)}.
Mat preimage(const Mat& a, const Mat& w);

/// True when every row of `vectors` lies in rowspace(space).
bool subspace_contains(const Mat& space, const Mat& vectors);
bool same_subspace(const Mat& u, const Mat& w);

/// Coordinates of `v` in a canonical (RREF) basis; nullopt if v is outside the span.
std::optional<Vec> rref_coordinates(const Mat& canonical_basis, std::span<const Residue> v);

}  // namespace csheaf
