#include "csheaf/exactlin.hpp"

#include <algorithm>
#include <string>

#include "csheaf/error.hpp"

namespace csheaf {

namespace {

void require_same_modulus(const Mat& a, const Mat& b, const char* what) {
  if (a.modulus() != b.modulus()) {
    throw ModulusMismatch(std::string(what) + ": moduli " + std::to_string(a.modulus()) +
                          " and " + std::to_string(b.modulus()));
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Residue modp::inv(Residue a, Residue p) {
  if (a % p == 0) throw InvalidArgument("zero has no inverse modulo " + std::to_string(p));
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    const auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return reduce(t, p);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(std::int64_t value, Residue modulus) : value_(0), modulus_(modulus) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
  value_ = modp::reduce(value, modulus);
}

Scalar Scalar::inverse() const { return Scalar(modp::inv(value_, modulus_), modulus_); }

static void check_pair(Scalar a, Scalar b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch("scalar arithmetic across fields");
}

Scalar operator+(Scalar a, Scalar b) {
  check_pair(a, b);
  return Scalar(modp::add(a.value_, b.value_, a.modulus_), a.modulus_);
}
Scalar operator-(Scalar a, Scalar b) {
  check_pair(a, b);
  return Scalar(modp::sub(a.value_, b.value_, a.modulus_), a.modulus_);
}
Scalar operator*(Scalar a, Scalar b) {
  check_pair(a, b);
  return Scalar(modp::mul(a.value_, b.value_, a.modulus_), a.modulus_);
}
Scalar operator/(Scalar a, Scalar b) { return a * b.inverse(); }

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(Index rows, Index cols, Residue modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols, 0) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
}

Mat::Mat(Residue modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : Mat(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size(), modulus) {
  Index r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    Index c = 0;
    for (auto v : row) (*this)(r, c++) = modp::reduce(v, modulus);
    ++r;
  }
}

Mat Mat::identity(Index n, Residue modulus) {
  Mat m(n, n, modulus);
  for (Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Index cols, Residue modulus, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols, modulus);
  for (Index r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: row length");
    for (Index c = 0; c < cols; ++c) m(r, c) = rows[r][c] % modulus;
  }
  return m;
}

Mat Mat::from_columns(Index rows, Residue modulus, const std::vector<Vec>& columns) {
  Mat m(rows, columns.size(), modulus);
  for (Index c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("from_columns: column length");
    for (Index r = 0; r < rows; ++r) m(r, c) = columns[c][r] % modulus;
  }
  return m;
}

Scalar Mat::at(Index r, Index c) const {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("Mat::at out of range");
  return Scalar((*this)(r, c), modulus_);
}

void Mat::set(Index r, Index c, std::int64_t value) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("Mat::set out of range");
  (*this)(r, c) = modp::reduce(value, modulus_);
}

Vec Mat::row_vec(Index r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Mat::column(Index c) const {
  Vec v(rows_);
  for (Index r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_, modulus_);
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Mat Mat::scaled(Residue factor) const {
  Mat m = *this;
  for (auto& x : m.data_) x = modp::mul(x, factor % modulus_, modulus_);
  return m;
}

Mat Mat::submatrix(Index r0, Index c0, Index nrows, Index ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw DimensionMismatch("submatrix out of range");
  Mat m(nrows, ncols, modulus_);
  for (Index r = 0; r < nrows; ++r)
    for (Index c = 0; c < ncols; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

Mat Mat::select_rows(const std::vector<Index>& rows) const {
  Mat m(rows.size(), cols_, modulus_);
  for (Index i = 0; i < rows.size(); ++i)
    for (Index c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Vec Mat::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length");
  Vec y(rows_, 0);
  for (Index r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (Index c = 0; c < cols_; ++c) {
      acc += std::uint64_t{(*this)(r, c)} * x[c];
      if (acc >= (std::uint64_t{1} << 62)) acc %= modulus_;
    }
    y[r] = static_cast<Residue>(acc % modulus_);
  }
  return y;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (Index r = 0; r < rows_; ++r)
    for (Index c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_modulus(a, b, "matrix product");
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                            std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                            std::to_string(b.cols_));
  }
  const Residue p = a.modulus_;
  Mat c(a.rows_, b.cols_, p);
  std::vector<std::uint64_t> acc(b.cols_);
  for (Index i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (Index k = 0; k < a.cols_; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      for (Index j = 0; j < b.cols_; ++j) {
        acc[j] += aik * b(k, j);
        if (acc[j] >= (std::uint64_t{1} << 62)) acc[j] %= p;
      }
    }
    for (Index j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Residue>(acc[j] % p);
  }
  return c;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_modulus(a, b, "matrix sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum shape");
  Mat c = a;
  for (Index i = 0; i < c.data_.size(); ++i) c.data_[i] = modp::add(a.data_[i], b.data_[i], a.modulus_);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same_modulus(a, b, "matrix difference");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference shape");
  Mat c = a;
  for (Index i = 0; i < c.data_.size(); ++i) c.data_[i] = modp::sub(a.data_[i], b.data_[i], a.modulus_);
  return c;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (Index r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << "] mod " << m.modulus();
}

Mat vstack(const Mat& top, const Mat& bottom) {
  require_same_modulus(top, bottom, "vstack");
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
  Mat m(top.rows() + bottom.rows(), top.cols(), top.modulus());
  for (Index r = 0; r < top.rows(); ++r)
    for (Index c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (Index r = 0; r < bottom.rows(); ++r)
    for (Index c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

Mat hstack(const Mat& left, const Mat& right) {
  require_same_modulus(left, right, "hstack");
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row counts differ");
  Mat m(left.rows(), left.cols() + right.cols(), left.modulus());
  for (Index r = 0; r < left.rows(); ++r) {
    for (Index c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (Index c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

Mat diagonal_sum(const Mat& a, const Mat& b) {
  require_same_modulus(a, b, "diagonal_sum");
  Mat m(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (Index r = 0; r < b.rows(); ++r)
    for (Index c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Mat& m) {
  RrefResult out{m, {}, 0};
  Mat& a = out.reduced;
  const Residue p = a.modulus();
  Index pivot_row = 0;
  for (Index col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    Index sel = pivot_row;
    while (sel < a.rows() && a(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (Index c = col; c < a.cols(); ++c) std::swap(a(sel, c), a(pivot_row, c));
    }
    const Residue inv = modp::inv(a(pivot_row, col), p);
    for (Index c = col; c < a.cols(); ++c) a(pivot_row, c) = modp::mul(a(pivot_row, c), inv, p);
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      const Residue f = a(r, col);
      if (f == 0) continue;
      for (Index c = col; c < a.cols(); ++c) {
        a(r, c) = modp::sub(a(r, c), modp::mul(f, a(pivot_row, c), p), p);
      }
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.rank = out.pivot_columns.size();
  return out;
}

Index rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  const auto r = rref(m);
  const Residue p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  Mat k(m.cols() - r.rank, m.cols(), p);
  Index row = 0;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    k(row, f) = 1;
    for (Index i = 0; i < r.rank; ++i) k(row, r.pivot_columns[i]) = modp::neg(r.reduced(i, f), p);
    ++row;
  }
  return k;
}

std::optional<Vec> solve(const Mat& a, std::span<const Residue> b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("solve: right-hand side has length " + std::to_string(b.size()) +
                            ", expected " + std::to_string(a.rows()));
  }
  Mat aug(a.rows(), a.cols() + 1, a.modulus());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r] % a.modulus();
  }
  const auto red = rref(aug);
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (Index i = 0; i < red.rank; ++i) x[red.pivot_columns[i]] = red.reduced(i, a.cols());
  return x;
}

std::optional<Mat> solve_matrix(const Mat& a, const Mat& b) {
  require_same_modulus(a, b, "solve_matrix");
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_matrix: row counts differ");
  const auto red = rref(hstack(a, b));
  Index rank_a = 0;
  while (rank_a < red.rank && red.pivot_columns[rank_a] < a.cols()) ++rank_a;
  if (rank_a != red.rank) return std::nullopt;
  Mat x(a.cols(), b.cols(), a.modulus());
  for (Index i = 0; i < rank_a; ++i)
    for (Index c = 0; c < b.cols(); ++c) x(red.pivot_columns[i], c) = red.reduced(i, a.cols() + c);
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const auto red = rref(hstack(m, Mat::identity(m.rows(), m.modulus())));
  if (red.rank < m.rows() || (m.rows() > 0 && red.pivot_columns[m.rows() - 1] >= m.cols())) {
    return std::nullopt;
  }
  return red.reduced.submatrix(0, m.cols(), m.rows(), m.rows());
}

Mat row_space(const Mat& m) {
  auto red = rref(m);
  return red.reduced.submatrix(0, 0, red.rank, m.cols());
}

Mat column_space(const Mat& m) { return row_space(m.transposed()); }

Mat subspace_sum(const Mat& u, const Mat& w) { return row_space(vstack(u, w)); }

Mat subspace_intersection(const Mat& u, const Mat& w) {
  require_same_modulus(u, w, "subspace_intersection");
  if (u.cols() != w.cols()) throw DimensionMismatch("subspace_intersection: ambient dimensions");
  if (u.rows() == 0 || w.rows() == 0) return Mat(0, u.cols(), u.modulus());
  // a*u = b*w  <=>  [a b] * [u; -w] = 0
  const Mat stacked = vstack(u, w.scaled(u.modulus() - 1));
  const Mat coeffs = kernel_basis(stacked.transposed());
  if (coeffs.rows() == 0) return Mat(0, u.cols(), u.modulus());
  return row_space(coeffs.submatrix(0, 0, coeffs.rows(), u.rows()) * u);
}

Mat preimage(const Mat& a, const Mat& w) {
  require_same_modulus(a, w, "preimage");
  if (a.rows() != w.cols()) throw DimensionMismatch("preimage: codomain of map vs subspace ambient");
  // y^T x = 0 for all rows y of the annihilator cuts out rowspace(w) exactly
  const Mat annihilator = kernel_basis(w.rows() == 0 ? Mat(0, a.rows(), a.modulus()) : w);
  if (annihilator.rows() == 0) return Mat::identity(a.cols(), a.modulus());
  return row_space(kernel_basis(annihilator * a));
}

std::optional<Vec> rref_coordinates(const Mat& canonical_basis, std::span<const Residue> v) {
  if (v.size() != canonical_basis.cols()) throw DimensionMismatch("rref_coordinates: vector length");
  const Residue p = canonical_basis.modulus();
  Vec coords(canonical_basis.rows(), 0);
  Vec rest(v.begin(), v.end());
  for (Index r = 0; r < canonical_basis.rows(); ++r) {
    Index pivot = 0;
    while (pivot < canonical_basis.cols() && canonical_basis(r, pivot) == 0) ++pivot;
    if (pivot == canonical_basis.cols()) throw InvalidArgument("rref_coordinates: zero basis row");
    const Residue c = rest[pivot];
    coords[r] = c;
    if (c == 0) continue;
    for (Index j = pivot; j < canonical_basis.cols(); ++j) {
      rest[j] = modp::sub(rest[j], modp::mul(c, canonical_basis(r, j), p), p);
    }
  }
  if (std::any_of(rest.begin(), rest.end(), [](Residue x) { return x != 0; })) return std::nullopt;
  return coords;
}

bool subspace_contains(const Mat& space, const Mat& vectors) {
  require_same_modulus(space, vectors, "subspace_contains");
  if (vectors.rows() == 0) return true;
  if (space.cols() != vectors.cols()) throw DimensionMismatch("subspace_contains: ambient dimensions");
  return rank(vstack(space, vectors)) == rank(space);
}

bool same_subspace(const Mat& u, const Mat& w) {
  require_same_modulus(u, w, "same_subspace");
  if (u.cols() != w.cols()) throw DimensionMismatch("same_subspace: ambient dimensions");
  return row_space(u) == row_space(w);
}

}  // namespace csheaf
