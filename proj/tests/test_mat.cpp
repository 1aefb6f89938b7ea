#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sdmc/mat.hpp"

using namespace sdmc;

namespace {

Mat random_mat(const FieldPtr& f, int r, int c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, f->q() - 1);
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = felem(d(rng));
  return m;
}

Mat random_invertible(const FieldPtr& f, int n, std::mt19937_64& rng) {
  while (true) {
    Mat m = random_mat(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace

TEST_CASE("product, transpose, identity basics") {
  auto f3 = Field::make(3, 1);
  Mat a = parse_mat(f3, "1 0 1 1;0 1 1 2");
  CHECK(mul(Mat::identity(f3, 2), a) == a);
  CHECK(transpose(transpose(a)) == a);
  CHECK(is_zero(mul(a, transpose(a))));  // rows pairwise orthogonal mod 3
  CHECK_THROWS_AS(mul(a, a), Error);
  CHECK_THROWS_AS(mul(a, parse_mat(Field::make(2, 1), "1 0;0 1")), Error);
}

TEST_CASE("rref pinned examples") {
  auto f2 = Field::make(2, 1);
  auto id = Mat::identity(f2, 3);
  CHECK(rref(id).r == id);
  CHECK(rref(id).rank == 3);
  Mat z(f2, 2, 4);
  CHECK(rref(z).r == z);
  CHECK(rref(z).rank == 0);

  Mat a = parse_mat(f2, "1 1 1 1;1 0 1 0");
  RrefResult rr = rref(a);
  CHECK(rr.rank == 2);
  CHECK(rr.r == parse_mat(f2, "1 0 1 0;0 1 0 1"));
  CHECK(rr.pivots == std::vector<int>{0, 1});
}

TEST_CASE("rref idempotence and rank inequalities, randomized") {
  std::mt19937_64 rng(20240811);
  for (int q : {2, 3, 4, 5}) {
    auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    for (int trial = 0; trial < 200; ++trial) {
      Mat a = random_mat(f, 3, 5, rng);
      RrefResult rr = rref(a);
      CHECK(rref(rr.r).r == rr.r);
      Mat b = random_mat(f, 5, 4, rng);
      CHECK(rank(mul(a, b)) <= std::min(rank(a), rank(b)));
      Mat p = random_invertible(f, 3, rng), qq = random_invertible(f, 5, rng);
      CHECK(rank(mul(mul(p, a), qq)) == rank(a));
    }
  }
}

TEST_CASE("kernel basis") {
  auto f3 = Field::make(3, 1);
  CHECK(kernel_basis(Mat::identity(f3, 4)).rows() == 0);
  Mat z(f3, 1, 5);
  Mat k = kernel_basis(z);
  CHECK(k.rows() == 5);
  CHECK(k == Mat::identity(f3, 5));

  // kernel of [I_k | M] has dimension cols - k, rows orthogonal to input
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a(f3, 2, 6);
    a(0, 0) = a(1, 1) = 1;
    for (int j = 2; j < 6; ++j) {
      a(0, j) = felem(trial % 3);
      a(1, j) = felem((trial + j) % 3);
    }
    Mat k2 = kernel_basis(a);
    CHECK(k2.rows() == 4);
    CHECK(is_zero(mul(a, transpose(k2))));
    CHECK(rref(k2).r == k2);  // returned in RREF
  }
}

TEST_CASE("kronecker structure") {
  auto f3 = Field::make(3, 1);
  CHECK(kronecker(Mat::identity(f3, 2), Mat::identity(f3, 3)) == Mat::identity(f3, 6));
  // the 4x4 block matrix with [[1,-1],[1,1]] in each diagonal block
  Mat b = parse_mat(f3, "1 2;1 1");
  Mat k = kronecker(Mat::identity(f3, 2), b);
  CHECK(k == parse_mat(f3, "1 2 0 0;1 1 0 0;0 0 1 2;0 0 1 1"));

  std::mt19937_64 rng(99);
  for (int q : {2, 3, 5}) {
    auto f = Field::make(q, 1);
    for (int trial = 0; trial < 30; ++trial) {
      Mat a = random_mat(f, 2, 3, rng), c = random_mat(f, 3, 2, rng);
      Mat d = random_mat(f, 2, 2, rng), e = random_mat(f, 2, 3, rng);
      // mixed product (A (x) D)(C (x) E) = AC (x) DE
      CHECK(mul(kronecker(a, d), kronecker(c, e)) == kronecker(mul(a, c), mul(d, e)));
    }
  }
}

TEST_CASE("transposition matrix") {
  auto f2 = Field::make(2, 1);
  CHECK(transposition_matrix(f2, 1) == Mat::identity(f2, 1));
  Mat t = transposition_matrix(f2, 2);
  CHECK(t == parse_mat(f2, "1 0 0 0;0 0 1 0;0 1 0 0;0 0 0 1"));
  for (int m : {2, 3, 4}) {
    for (int q : {2, 3, 5}) {
      auto f = Field::make(q, 1);
      Mat tm = transposition_matrix(f, m);
      CHECK(tm == transpose(tm));
      CHECK(mul(tm, tm) == Mat::identity(f, m * m));
    }
  }
}

TEST_CASE("inverse") {
  std::mt19937_64 rng(5);
  auto f5 = Field::make(5, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a = random_invertible(f5, 4, rng);
    CHECK(mul(a, inverse(a)) == Mat::identity(f5, 4));
  }
  Mat s(f5, 2, 2);
  s(0, 0) = 1;
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("matrix literal round trip") {
  auto f4 = Field::make(2, 2);
  Mat a = parse_mat(f4, "0 1 2 3;3 2 1 0");
  CHECK(format_mat(a) == "0 1 2 3;3 2 1 0");
  CHECK(parse_mat(f4, format_mat(a)) == a);
  CHECK_THROWS_AS(parse_mat(f4, "0 1;2"), Error);
  CHECK_THROWS_AS(parse_mat(f4, "4 0"), Error);
  CHECK_THROWS_AS(parse_mat(f4, ""), Error);

  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 100; ++trial) {
    Mat m = random_mat(f4, 1 + trial % 4, 1 + (trial / 4) % 5, rng);
    CHECK(parse_mat(f4, format_mat(m)) == m);
  }
}
