#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdmc/field.hpp"

using namespace sdmc;

TEST_CASE("construction and default moduli") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->q() == 2);
  auto f4 = Field::make(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<felem>{1, 1, 1});  // x^2 + x + 1
  CHECK_THROWS_AS(Field::make(6, 1), Error);
  CHECK_THROWS_AS(Field::make(2, 9), Error);  // 512 > 256
  CHECK(Field::make(3, 1).get() == Field::make(3, 1).get());
}

TEST_CASE("pinned arithmetic examples") {
  auto f3 = Field::make(3, 1);
  CHECK(f3->add(2, 2) == 1);
  auto f4 = Field::make(2, 2);
  CHECK(f4->mul(2, 2) == 3);  // a * a = a + 1
  auto f5 = Field::make(5, 1);
  CHECK(f5->inv(2) == 3);
}

TEST_CASE("field axioms, exhaustive over every supported q") {
  // Every prime power up to 256.
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int e = 1; ; ++e) {
      long long q = 1;
      for (int i = 0; i < e; ++i) q *= p;
      if (q > 256) break;
      auto f = Field::make(p, e);
      for (int a = 0; a < f->q(); ++a) {
        CHECK(f->add(felem(a), f->neg(felem(a))) == 0);
        if (a != 0) CHECK(f->mul(felem(a), f->inv(felem(a))) == 1);
        CHECK(f->mul(felem(a), 1) == felem(a));
        CHECK(f->add(felem(a), 0) == felem(a));
      }
      // spot-check associativity and distributivity on a subsample
      for (int a = 0; a < f->q(); a += 3)
        for (int b = 0; b < f->q(); b += 5)
          for (int c = 0; c < f->q(); c += 7) {
            felem x = felem(a), y = felem(b), z = felem(c);
            CHECK(f->mul(x, f->mul(y, z)) == f->mul(f->mul(x, y), z));
            CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
          }
    }
  }
  for (int p : {17, 251}) {
    auto f = Field::make(p, 1);
    for (int a = 1; a < f->q(); ++a) CHECK(f->mul(felem(a), f->inv(felem(a))) == 1);
  }
}

TEST_CASE("Frobenius is additive in characteristic p") {
  for (auto [p, e] : {std::pair{2, 3}, {3, 2}, {5, 2}, {2, 4}}) {
    auto f = Field::make(p, e);
    for (int a = 0; a < f->q(); ++a)
      for (int b = 0; b < f->q(); ++b) {
        felem lhs = f->pow(f->add(felem(a), felem(b)), std::uint64_t(p));
        felem rhs = f->add(f->pow(felem(a), std::uint64_t(p)), f->pow(felem(b), std::uint64_t(p)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (auto [p, e] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
    auto f = Field::make(p, e);
    felem g = f->primitive_element();
    int ord = 1;
    felem x = g;
    while (x != 1) {
      x = f->mul(x, g);
      ++ord;
    }
    CHECK(ord == f->q() - 1);
  }
}

TEST_CASE("sqrt of -1") {
  CHECK(sqrt_of_minus_one(*Field::make(5, 1)) == 2);
  CHECK(sqrt_of_minus_one(*Field::make(2, 1)) == 1);
  CHECK_THROWS_AS(sqrt_of_minus_one(*Field::make(3, 1)), Error);
  // oracle: exhaustive search in every field where the spec admits one
  for (auto [p, e] : {std::pair{5, 1}, {13, 1}, {3, 2}, {2, 2}}) {
    auto f = Field::make(p, e);
    felem a = sqrt_of_minus_one(*f);
    CHECK(f->mul(a, a) == f->neg(1));
    for (int c = 0; c < a; ++c) CHECK(f->mul(felem(c), felem(c)) != f->neg(1));
  }
}

TEST_CASE("two-square decomposition") {
  auto f3 = Field::make(3, 1);
  CHECK(two_square_decomposition(*f3, 2) == std::pair<felem, felem>{1, 1});
  auto f7 = Field::make(7, 1);
  CHECK(two_square_decomposition(*f7, 6) == std::pair<felem, felem>{2, 3});
  CHECK(two_square_decomposition(*f7, 0) == std::pair<felem, felem>{0, 0});

  // exhaustive property for every odd q <= 9 and every alpha
  for (auto [p, e] : {std::pair{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    auto f = Field::make(p, e);
    for (int alpha = 0; alpha < f->q(); ++alpha) {
      auto [a, b] = two_square_decomposition(*f, felem(alpha));
      CHECK(f->add(f->mul(a, a), f->mul(b, b)) == felem(alpha));
    }
  }
}
