#include <random>

#include "csheaf/error.hpp"
#include "csheaf/exactlin.hpp"
#include "csheaf/vertex_set.hpp"
#include "doctest.h"

using namespace csheaf;

namespace {

Mat random_mat(std::mt19937& rng, Index r, Index c, Residue p) {
  Mat m(r, c, p);
  std::uniform_int_distribution<Residue> d(0, p - 1);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over F_p") {
  Scalar a(5, 7), b(4, 7);
  CHECK((a + b).value() == 2);
  CHECK((a - b).value() == 1);
  CHECK((a * b).value() == 6);
  CHECK((a * a.inverse()).value() == 1);
  CHECK((-a).value() == 2);
  CHECK_THROWS_AS(Scalar(0, 7).inverse(), InvalidArgument);
  CHECK_THROWS_AS(a + Scalar(1, 5), ModulusMismatch);
}

TEST_CASE("rref examples") {
  CHECK(rref(Mat(2, 2, 2)).rank == 0);

  auto same_rows = rref(Mat(2, {{1, 1}, {1, 1}}));
  CHECK(same_rows.rank == 1);
  CHECK(same_rows.pivot_columns == std::vector<Index>{0});

  auto f3 = rref(Mat(3, {{1, 2}, {2, 1}}));
  CHECK(f3.rank == 1);
  CHECK(f3.reduced == Mat(3, {{1, 2}, {0, 0}}));
}

TEST_CASE("mixed moduli are rejected") {
  CHECK_THROWS_AS(Mat(2, {{1}}) * Mat(3, {{1}}), ModulusMismatch);
  CHECK_THROWS_AS(vstack(Mat(2, {{1}}), Mat(3, {{1}})), ModulusMismatch);
  CHECK_THROWS_AS(subspace_sum(Mat(2, {{1}}), Mat(3, {{1}})), ModulusMismatch);
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Mat::identity(3, 5)).rows() == 0);
  CHECK(kernel_basis(Mat(2, 3, 2)).rows() == 3);
  CHECK(kernel_basis(Mat(2, {{1, 1}})) == Mat(2, {{1, 1}}));
}

TEST_CASE("solve examples") {
  Vec b{1, 0, 2};
  CHECK(solve(Mat::identity(3, 3), b) == b);
  CHECK_FALSE(solve(Mat(2, 2, 2), Vec{1, 0}).has_value());
  CHECK(solve(Mat(2, {{1, 1}, {0, 1}}), Vec{0, 1}) == Vec{1, 1});
  CHECK_THROWS_AS(solve(Mat::identity(2, 2), Vec{1, 0, 0}), DimensionMismatch);
}

TEST_CASE("subspace examples") {
  Mat any(2, {{1, 1, 0}, {0, 1, 1}});
  CHECK(preimage(any, Mat::identity(2, 2)) == Mat::identity(3, 2));
  Mat u(3, {{1, 2, 0}, {2, 1, 1}});
  CHECK(subspace_intersection(u, u) == row_space(u));
  CHECK(preimage(Mat::identity(2, 2), Mat(2, {{1, 0}})) == Mat(2, {{1, 0}}));
  CHECK_THROWS_AS(preimage(Mat::identity(2, 2), Mat(2, {{1, 0, 0}})), DimensionMismatch);
}

TEST_CASE("inverse and rref_coordinates") {
  Mat m(3, {{1, 2}, {0, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK((m * *inv).is_identity());
  CHECK_FALSE(inverse(Mat(2, {{1, 1}, {1, 1}})).has_value());
  Mat basis = row_space(Mat(3, {{1, 1, 0}, {0, 1, 2}}));
  auto c = rref_coordinates(basis, Vec{2, 1, 1});
  REQUIRE(c);
  Vec back(3, 0);
  for (Index i = 0; i < basis.rows(); ++i)
    for (Index j = 0; j < 3; ++j) back[j] = modp::add(back[j], modp::mul((*c)[i], basis(i, j), 3), 3);
  CHECK(back == Vec{2, 1, 1});
  CHECK_FALSE(rref_coordinates(basis, Vec{0, 0, 1}).has_value());
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(11);
  for (Residue p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      Index r = rng() % 6, c = 1 + rng() % 6;
      Mat m = random_mat(rng, r, c, p);
      Mat k = kernel_basis(m);
      CHECK(rank(m) + k.rows() == c);
      if (k.rows() > 0) CHECK((m * k.transposed()).is_zero());
    }
  }
}

TEST_CASE("dimension formula for sum and intersection") {
  std::mt19937 rng(12);
  for (Residue p : {2u, 3u}) {
    for (int trial = 0; trial < 60; ++trial) {
      Index n = 1 + rng() % 6;
      Mat u = random_mat(rng, rng() % 5, n, p);
      Mat w = random_mat(rng, rng() % 5, n, p);
      CHECK(subspace_intersection(u, w).rows() + subspace_sum(u, w).rows() == rank(u) + rank(w));
      CHECK(subspace_contains(subspace_sum(u, w), u));
      CHECK(subspace_contains(w, subspace_intersection(u, w)));
    }
  }
}

TEST_CASE("solve returns exact solutions when they exist") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Residue p = trial % 2 ? 3 : 2;
    Index r = 1 + rng() % 5, c = 1 + rng() % 5;
    Mat a = random_mat(rng, r, c, p);
    Vec x(c);
    for (auto& e : x) e = rng() % p;
    Vec b = a.apply(x);
    auto sol = solve(a, b);
    REQUIRE(sol);
    CHECK(a.apply(*sol) == b);
  }
}

TEST_CASE("preimage matches brute force") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = random_mat(rng, 3, 3, 2);
    Mat w = random_mat(rng, rng() % 3, 3, 2);
    Mat pre = preimage(a, w);
    Index count = 0;
    for (unsigned bits = 0; bits < 8; ++bits) {
      Vec x{bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u};
      Mat img = Mat::from_rows(3, 2, {a.apply(x)});
      bool in = subspace_contains(w, img);
      CHECK(in == subspace_contains(pre, Mat::from_rows(3, 2, {x})));
      count += in;
    }
    CHECK(count == (1u << pre.rows()));
  }
}

TEST_CASE("vertex sets") {
  VertexSet s{0, 2};
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.complement(3) == VertexSet{1});
  CHECK(all_subsets(3).size() == 8);
  CHECK_THROWS_AS(all_subsets(13), InvalidArgument);
}
