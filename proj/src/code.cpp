#include "sdmc/code.hpp"

namespace sdmc {

MatrixCode MatrixCode::from_generator(int l, int m, const Mat& gen) {
  if (l < 1 || m < 1) fail(Err::invalid_argument, "code dimensions must be positive");
  if (gen.cols() != l * m) fail(Err::dimension_mismatch, "generator width must be l*m");
  Mat g = gen;
  if (l > m) {
    // l <= m convention: store the transposed code.
    Mat t(gen.field(), gen.rows(), gen.cols());
    for (int r = 0; r < gen.rows(); ++r) {
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < m; ++j) t(r, j * l + i) = gen(r, i * m + j);
    }
    g = t;
    std::swap(l, m);
  }
  int rank = rref_in_place(g);
  Mat trimmed(g.field(), rank, g.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < g.cols(); ++j) trimmed(i, j) = g(i, j);
  return MatrixCode(l, m, std::move(trimmed));
}

Mat rho(const Mat& x) {
  Mat v(x.field(), 1, x.rows() * x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) v(0, i * x.cols() + j) = x(i, j);
  return v;
}

Mat rho_inv(const Mat& v, int l, int m) {
  if (v.rows() != 1 || v.cols() != l * m) fail(Err::dimension_mismatch, "rho_inv length mismatch");
  Mat x(v.field(), l, m);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < m; ++j) x(i, j) = v(0, i * m + j);
  return x;
}

MatrixCode dual(const MatrixCode& c) {
  return MatrixCode::from_generator(c.l(), c.m(), kernel_basis(c.gen()));
}

bool is_self_dual(const MatrixCode& c) {
  if (2 * c.k() != c.n()) return false;
  // Full row rank is guaranteed, so gen gen^T = 0 suffices.
  return is_zero(mul(c.gen(), transpose(c.gen())));
}

namespace {

int rank_of_word(const Mat& word, int l, int m) {
  Mat x = rho_inv(word, l, m);
  return rank(x);
}

}  // namespace

WeightDistribution rank_weight_distribution(const MatrixCode& c) {
  WeightDistribution d;
  d.counts.assign(std::min(c.l(), c.m()) + 1, 0);
  for_each_codeword(c, [&](const Mat& w) { ++d.counts[rank_of_word(w, c.l(), c.m())]; });
  return d;
}

WeightDistribution hamming_weight_distribution(const MatrixCode& c) {
  WeightDistribution d;
  d.counts.assign(c.n() + 1, 0);
  for_each_codeword(c, [&](const Mat& w) {
    int wt = 0;
    for (int j = 0; j < c.n(); ++j) wt += w(0, j) != 0;
    ++d.counts[wt];
  });
  return d;
}

int min_rank_distance(const MatrixCode& c) {
  if (c.k() == 0) fail(Err::invalid_argument, "minimum distance of the zero code");
  WeightDistribution d = rank_weight_distribution(c);
  for (std::size_t i = 1; i < d.counts.size(); ++i)
    if (d.counts[i] > 0) return int(i);
  fail(Err::internal, "nonzero code with no nonzero weight");
}

bool is_mrd(const MatrixCode& c) {
  int d = min_rank_distance(c);
  return c.k() == std::max(c.l(), c.m()) * (std::min(c.l(), c.m()) - d + 1);
}

MatrixCode apply_map(const MatrixCode& c, const Mat& a) {
  if (a.rows() != c.n() || a.cols() != c.n()) fail(Err::dimension_mismatch, "map must be n x n");
  if (!is_invertible(a)) fail(Err::singular_matrix, "apply_map requires an invertible map");
  MatrixCode mapped = MatrixCode::from_generator(c.l(), c.m(), mul(c.gen(), a));
  if (mapped.k() != c.k()) fail(Err::internal, "invertible map changed the code dimension");
  return mapped;
}

}  // namespace sdmc
