#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sdmc/field.hpp"

namespace sdmc {

// Dense row-major matrix over GF(q). Entries are field element indices.
// Value semantics; all operations below are pure.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(FieldPtr f, int rows, int cols)
      : f_(std::move(f)), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

  static Mat identity(FieldPtr f, int n);

  const FieldPtr& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  felem operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
  felem& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const felem* row(int i) const { return a_.data() + std::size_t(i) * cols_; }
  felem* row(int i) { return a_.data() + std::size_t(i) * cols_; }
  const std::vector<felem>& data() const { return a_; }

  // Raw entry bytes; the canonical dedup/ordering key used everywhere.
  std::string key() const { return std::string(a_.begin(), a_.end()); }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && same_field(x.f_, y.f_) && x.a_ == y.a_;
  }

 private:
  FieldPtr f_;
  int rows_, cols_;
  std::vector<felem> a_;
};

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat scalar_mul(felem c, const Mat& a);
bool is_zero(const Mat& a);

struct RrefResult {
  Mat r;
  int rank;
  std::vector<int> pivots;  // strictly increasing pivot columns
};

// Unique reduced row echelon form: pivots are the first nonzero entry in
// scan order, normalized to 1, with their columns cleared.
RrefResult rref(const Mat& a);

// In-place reduction; returns the rank and fills pivot columns.
int rref_in_place(Mat& a, std::vector<int>* pivots = nullptr);

int rank(const Mat& a);

// Basis of the right null space {b : A b^T = 0}, returned in RREF with
// cols - rank rows.
Mat kernel_basis(const Mat& a);

// Standard Kronecker product: block (i, j) equals a(i,j) * b.
Mat kronecker(const Mat& a, const Mat& b);

// The m^2 x m^2 permutation matrix T with rho(X^T) = rho(X) T for every
// m x m matrix X. Symmetric, and T^2 = I.
Mat transposition_matrix(const FieldPtr& f, int m);

// Inverse of a square matrix; throws Err::singular_matrix.
Mat inverse(const Mat& a);

bool is_invertible(const Mat& a);

// Matrix literal: rows separated by ';', entries by spaces, elements as
// integer indices. Round-trips bit-exactly through parse_mat.
std::string format_mat(const Mat& a);
Mat parse_mat(const FieldPtr& f, std::string_view text);

}  // namespace sdmc
