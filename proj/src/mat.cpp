#include "sdmc/mat.hpp"

#include <sstream>

namespace sdmc {
namespace {

void require_same_field(const Mat& a, const Mat& b) {
  if (!same_field(a.field(), b.field())) fail(Err::field_mismatch, "operands in different fields");
}

}  // namespace

Mat Mat::identity(FieldPtr f, int n) {
  Mat m(std::move(f), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) fail(Err::dimension_mismatch, "matrix product dimensions");
  const Field& f = *a.field();
  Mat c(a.field(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    felem* ci = c.row(i);
    for (int j = 0; j < a.cols(); ++j) {
      felem aij = a(i, j);
      if (aij == 0) continue;
      const felem* bj = b.row(j);
      for (int k = 0; k < b.cols(); ++k) ci[k] = f.add(ci[k], f.mul(aij, bj[k]));
    }
  }
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Err::dimension_mismatch, "matrix sum dimensions");
  const Field& f = *a.field();
  Mat c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.add(c(i, j), b(i, j));
  return c;
}

Mat transpose(const Mat& a) {
  Mat t(a.field(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat scalar_mul(felem c, const Mat& a) {
  const Field& f = *a.field();
  Mat r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = f.mul(c, a(i, j));
  return r;
}

bool is_zero(const Mat& a) {
  for (felem v : a.data())
    if (v != 0) return false;
  return true;
}

int rref_in_place(Mat& m, std::vector<int>* pivots) {
  const Field& f = *m.field();
  int r = 0;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    felem inv = f.inv(m(r, col));
    if (inv != 1) {
      felem* rr = m.row(r);
      for (int j = col; j < m.cols(); ++j) rr[j] = f.mul(inv, rr[j]);
    }
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      felem factor = m(i, col);
      if (factor == 0) continue;
      felem* ri = m.row(i);
      const felem* rr = m.row(r);
      for (int j = col; j < m.cols(); ++j) ri[j] = f.sub(ri[j], f.mul(factor, rr[j]));
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return r;
}

RrefResult rref(const Mat& a) {
  RrefResult res{a, 0, {}};
  res.rank = rref_in_place(res.r, &res.pivots);
  return res;
}

int rank(const Mat& a) {
  Mat tmp = a;
  return rref_in_place(tmp);
}

Mat kernel_basis(const Mat& a) {
  RrefResult rr = rref(a);
  const Field& f = *a.field();
  int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : rr.pivots) is_pivot[p] = true;

  Mat k(a.field(), n - rr.rank, n);
  int row = 0;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    k(row, free_col) = 1;
    for (int i = 0; i < rr.rank; ++i) k(row, rr.pivots[i]) = f.neg(rr.r(i, free_col));
    ++row;
  }
  rref_in_place(k);
  return k;
}

Mat kronecker(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  const Field& f = *a.field();
  Mat k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      felem aij = a(i, j);
      if (aij == 0) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int s = 0; s < b.cols(); ++s)
          k(i * b.rows() + r, j * b.cols() + s) = f.mul(aij, b(r, s));
    }
  return k;
}

Mat transposition_matrix(const FieldPtr& f, int m) {
  if (m < 1) fail(Err::invalid_argument, "transposition matrix needs m >= 1");
  // Block (i, j) is E_ji, so entry ((i,r),(j,c)) = [r == j][c == i].
  Mat t(f, m * m, m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) t(i * m + j, j * m + i) = 1;
  return t;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) fail(Err::dimension_mismatch, "inverse of non-square matrix");
  int n = a.rows();
  Mat aug(a.field(), n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  // invertible iff the pivots stay inside the left block
  if (int(pivots.size()) < n || pivots[n - 1] >= n) fail(Err::singular_matrix, "matrix is singular");
  Mat inv(a.field(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

bool is_invertible(const Mat& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

std::string format_mat(const Mat& a) {
  std::string out;
  for (int i = 0; i < a.rows(); ++i) {
    if (i) out += ';';
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += std::to_string(int(a(i, j)));
    }
  }
  return out;
}

Mat parse_mat(const FieldPtr& f, std::string_view text) {
  std::vector<std::vector<felem>> rows;
  std::string s(text);
  std::stringstream ss(s);
  std::string row_text;
  while (std::getline(ss, row_text, ';')) {
    std::stringstream rs(row_text);
    std::vector<felem> row;
    long long v;
    while (rs >> v) {
      if (v < 0 || v >= f->q()) fail(Err::invalid_argument, "matrix entry out of range for " + f->name());
      row.push_back(felem(v));
    }
    if (!rs.eof()) fail(Err::invalid_argument, "bad matrix literal");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(Err::invalid_argument, "empty matrix literal");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) fail(Err::invalid_argument, "ragged matrix literal");
  Mat m(f, int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace sdmc
