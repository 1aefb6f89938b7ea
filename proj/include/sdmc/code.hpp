#pragma once

#include <string>
#include <vector>

#include "sdmc/mat.hpp"

namespace sdmc {

struct WeightDistribution {
  std::vector<long long> counts;  // A_0 .. A_r

  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
    return a.counts == b.counts;
  }
  friend bool operator<(const WeightDistribution& a, const WeightDistribution& b) {
    return a.counts < b.counts;
  }
};

// A linear matrix code C in F_q^{l x m}, stored as the unique RREF generator
// matrix of its extended block code rho(C). Two codes are equal iff their
// generators are byte-identical, which makes the generator key the dedup
// and ordering key for the whole enumeration pipeline.
//
// Block codes are the l = 1 case.
class MatrixCode {
 public:
  // Rows of gen span rho(C); the stored generator is its RREF with zero rows
  // dropped. Callers with l > m get the transposed code (l <= m convention).
  static MatrixCode from_generator(int l, int m, const Mat& gen);

  const FieldPtr& field() const { return gen_.field(); }
  int l() const { return l_; }
  int m() const { return m_; }
  int n() const { return l_ * m_; }
  int k() const { return gen_.rows(); }
  const Mat& gen() const { return gen_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const MatrixCode& a, const MatrixCode& b) {
    return a.l_ == b.l_ && a.m_ == b.m_ && a.key_ == b.key_ && same_field(a.field(), b.field());
  }

 private:
  MatrixCode(int l, int m, Mat gen) : l_(l), m_(m), gen_(std::move(gen)), key_(gen_.key()) {}
  int l_, m_;
  Mat gen_;
  std::string key_;
};

// Extended row vector: the 1 x lm matrix of X's rows concatenated.
Mat rho(const Mat& x);
// Inverse: reshape a 1 x lm row vector into an l x m matrix.
Mat rho_inv(const Mat& v, int l, int m);

// Matrix dual code rho^-1((rho C)^perp); dim n - k.
MatrixCode dual(const MatrixCode& c);

// k = n/2 and gen gen^T = 0.
bool is_self_dual(const MatrixCode& c);

// A_i = #{codewords X : rank(X) = i}, i = 0..min(l,m). Guarded by
// kMaxEnumerableWords.
WeightDistribution rank_weight_distribution(const MatrixCode& c);

// A_i = #{codewords of Hamming weight i in rho(C)}, i = 0..n.
WeightDistribution hamming_weight_distribution(const MatrixCode& c);

int min_rank_distance(const MatrixCode& c);  // smallest i >= 1 with A_i > 0

// Meets the rank-metric Singleton bound k = max(l,m) * (min(l,m) - d + 1).
bool is_mrd(const MatrixCode& c);

// The code generated by gen * A for invertible n x n A, re-canonicalized.
MatrixCode apply_map(const MatrixCode& c, const Mat& a);

// Enumerate all q^k codewords as rows, invoking fn(word) for each; word is a
// 1 x n Mat. Deterministic order. Guarded by kMaxEnumerableWords.
template <typename Fn>
void for_each_codeword(const MatrixCode& c, Fn&& fn);

// --- implementation ---

template <typename Fn>
void for_each_codeword(const MatrixCode& c, Fn&& fn) {
  const Field& f = *c.field();
  const int q = f.q();
  std::uint64_t total = 1;
  for (int i = 0; i < c.k(); ++i) {
    total *= std::uint64_t(q);
    if (total > kMaxEnumerableWords) fail(Err::size_guard, "q^k exceeds the codeword enumeration guard");
  }
  Mat word(c.field(), 1, c.n());
  fn(static_cast<const Mat&>(word));
  // Base-q odometer over the generator-row coefficients; each digit step
  // adjusts the word by (new - old) times that row, so the word always equals
  // sum_i digits[i] * row_i.
  std::vector<felem> digits(c.k(), 0);
  for (std::uint64_t t = 1; t < total; ++t) {
    for (int i = 0; i < c.k(); ++i) {
      felem old = digits[i];
      felem next = felem((old + 1) % q);
      digits[i] = next;
      felem delta = f.sub(next, old);
      const felem* g = c.gen().row(i);
      felem* w = word.row(0);
      for (int j = 0; j < c.n(); ++j) w[j] = f.add(w[j], f.mul(delta, g[j]));
      if (next != 0) break;  // no carry
    }
    fn(static_cast<const Mat&>(word));
  }
}

}  // namespace sdmc
