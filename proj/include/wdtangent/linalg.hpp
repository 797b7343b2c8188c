#pragma once

// Exact dense linear algebra over Scalar: reduced echelon forms, subspace
// calculus (kernel/image/sum/intersection/quotient), Kronecker products and
// characteristic polynomials.  Everything is deterministic: echelon forms
// normalize leading entries to 1 and pivot on the first nonzero column.

#include <optional>
#include <vector>

#include "wdtangent/scalar.hpp"

namespace wdt {

using Vec = std::vector<Scalar>;

class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(long rows, long cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows * cols), Scalar(0)) {}
  static Mat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Scalar& at(long i, long j) { return e_[static_cast<size_t>(i * cols_ + j)]; }
  const Scalar& at(long i, long j) const { return e_[static_cast<size_t>(i * cols_ + j)]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Scalar& s) const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  Mat pow(long e) const;  // negative exponents via inverse()

  Vec apply(const Vec& v) const;   // matrix * column vector
  Vec row(long i) const;
  Vec col(long j) const;
  void set_col(long j, const Vec& v);

  // Exact inverse; nullopt when singular.
  std::optional<Mat> inverse() const;
  Scalar det() const;

 private:
  long rows_, cols_;
  std::vector<Scalar> e_;
};

Mat kron(const Mat& A, const Mat& B);

// Exact characteristic polynomial det(X*I - M) by Faddeev-LeVerrier.
Poly char_poly(const Mat& M);

// Row-reduce in place; returns pivot column indices.  Rows of zeroes sink to
// the bottom and are removed when strip_zero_rows is requested.
std::vector<long> rref(Mat& M, bool strip_zero_rows = false);

class Subspace {
 public:
  explicit Subspace(long ambient_dim) : ambient_(ambient_dim) {}
  // Span of the given vectors, reduced to echelon basis.
  static Subspace span(long ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(long ambient_dim);

  long ambient_dim() const { return ambient_; }
  long dim() const { return static_cast<long>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<long>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  // Express v in basis coordinates; nullopt when v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  long ambient_;
  std::vector<Vec> basis_;   // reduced echelon, pivots strictly increasing
  std::vector<long> pivots_;
};

Subspace kernel(const Mat& M);
Subspace image(const Mat& M);
Subspace sum(const Subspace& U, const Subspace& V);
Subspace intersect(const Subspace& U, const Subspace& V);
long quotient_dim(const Subspace& U, const Subspace& V);  // requires V subset of U

// Columns of M restricted/expressed: convenience builders.
Mat mat_from_cols(long rows, const std::vector<Vec>& cols);

// Solve M x = b exactly; nullopt when inconsistent.  When the solution is not
// unique, free variables are set to zero (the lexicographically smallest
// echelon solution), which keeps downstream constructions deterministic.
std::optional<Vec> solve(const Mat& M, const Vec& b);

long rank(const Mat& M);

}  // namespace wdt
