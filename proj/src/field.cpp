#include "sdmc/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace sdmc {
namespace {

// Conway polynomials for every (p, e) with e >= 2 and p^e <= 256,
// coefficients low degree first.
const std::map<std::pair<int, int>, std::vector<felem>> kConwayModuli = {
    {{2, 2}, {1, 1, 1}},
    {{2, 3}, {1, 1, 0, 1}},
    {{2, 4}, {1, 1, 0, 0, 1}},
    {{2, 5}, {1, 0, 1, 0, 0, 1}},
    {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
    {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
    {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
    {{3, 2}, {2, 2, 1}},
    {{3, 3}, {1, 2, 0, 1}},
    {{3, 4}, {2, 0, 0, 2, 1}},
    {{3, 5}, {1, 2, 0, 0, 0, 1}},
    {{5, 2}, {2, 4, 1}},
    {{5, 3}, {3, 3, 0, 1}},
    {{7, 2}, {3, 6, 1}},
    {{11, 2}, {2, 7, 1}},
    {{13, 2}, {2, 12, 1}},
};

using Poly = std::vector<int>;  // coefficients mod p, low degree first

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

// a mod b, b monic.
Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = ((a[i + shift] - lead * b[i]) % p + p * p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, int p) {
  int e = int(m.size()) - 1;
  if (e < 1) return false;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (int d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= std::uint64_t(p);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly div(d + 1, 0);
      div[d] = 1;
      std::uint64_t x = t;
      for (int i = 0; i < d; ++i) {
        div[i] = int(x % p);
        x /= p;
      }
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(int p, int e, std::vector<felem> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < e_; ++i) q_ *= p_;

  // Index <-> digit vectors.
  std::vector<Poly> digits(q_);
  for (int v = 0; v < q_; ++v) {
    Poly d(e_, 0);
    int x = v;
    for (int i = 0; i < e_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    digits[v] = d;
  }
  auto to_index = [&](const Poly& a) {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + (i < int(a.size()) ? a[i] : 0);
    return felem(v);
  };

  Poly mod_poly(modulus_.begin(), modulus_.end());
  add_.assign(std::size_t(q_) * q_, 0);
  mul_.assign(std::size_t(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      Poly s(e_, 0);
      for (int i = 0; i < e_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[idx(felem(a), felem(b))] = to_index(s);
      Poly m = poly_mod(poly_mul(digits[a], digits[b], p_), mod_poly, p_);
      mul_[idx(felem(a), felem(b))] = to_index(m);
    }
  }
  for (int a = 0; a < q_; ++a) {
    Poly n(e_, 0);
    for (int i = 0; i < e_; ++i) n[i] = (p_ - digits[a][i]) % p_;
    neg_[a] = to_index(n);
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[idx(felem(a), felem(b))] == 1) inv_[a] = felem(b);

  primitive_ = 0;
  for (int g = 1; g < q_ && primitive_ == 0; ++g) {
    int ord = 1;
    felem x = felem(g);
    while (x != 1) {
      x = mul_[idx(x, felem(g))];
      ++ord;
    }
    if (ord == q_ - 1) primitive_ = felem(g);
  }
}

FieldPtr Field::make(int p, int e) {
  if (!is_prime(p)) fail(Err::invalid_argument, "characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) fail(Err::invalid_argument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    q *= std::uint64_t(p);
    if (q > kMaxFieldSize) fail(Err::invalid_argument, "field size p^e exceeds 256");
  }

  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, e});
  if (it != cache.end()) return it->second;

  std::vector<felem> modulus;
  if (e == 1) {
    // x - g for the smallest primitive root g; unused by prime-field arithmetic.
    int g = 1;
    for (int cand = 2; cand < p; ++cand) {
      int ord = 1, x = cand;
      while (x != 1) {
        x = x * cand % p;
        ++ord;
      }
      if (ord == p - 1) {
        g = cand;
        break;
      }
    }
    modulus = {felem((p - g % p) % p), 1};
  } else {
    auto mit = kConwayModuli.find({p, e});
    if (mit == kConwayModuli.end()) fail(Err::invalid_argument, "no modulus shipped for this (p, e)");
    modulus = mit->second;
    Poly m(modulus.begin(), modulus.end());
    if (!is_irreducible(m, p)) fail(Err::internal, "shipped modulus is reducible");
  }

  FieldPtr f(new Field(p, e, std::move(modulus)));
  cache[{p, e}] = f;
  return f;
}

felem Field::pow(felem a, std::uint64_t k) const {
  felem r = 1, base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

felem sqrt_of_minus_one(const Field& f) {
  felem minus_one = f.neg(1);
  for (int a = 0; a < f.q(); ++a)
    if (f.mul(felem(a), felem(a)) == minus_one) return felem(a);
  fail(Err::no_solution, "no square root of -1 in " + f.name());
}

std::pair<felem, felem> two_square_decomposition(const Field& f, felem alpha) {
  if (f.p() == 2) fail(Err::invalid_argument, "two-square decomposition requires odd q");
  for (int a = 0; a < f.q(); ++a) {
    felem aa = f.mul(felem(a), felem(a));
    for (int b = 0; b < f.q(); ++b) {
      if (f.add(aa, f.mul(felem(b), felem(b))) == alpha) return {felem(a), felem(b)};
    }
  }
  fail(Err::internal, "two-square decomposition must exist for odd q");
}

felem smallest_non_square(const Field& f) {
  if (f.p() == 2) fail(Err::invalid_argument, "every element is a square for even q");
  std::vector<bool> sq(f.q(), false);
  for (int a = 1; a < f.q(); ++a) sq[f.mul(felem(a), felem(a))] = true;
  for (int a = 1; a < f.q(); ++a)
    if (!sq[a]) return felem(a);
  fail(Err::no_solution, "no non-square in " + f.name());
}

}  // namespace sdmc
