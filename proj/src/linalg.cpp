#include "wdtangent/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdt {

Mat Mat::identity(long n) {
  Mat I(n, n);
  for (long i = 0; i < n; ++i) I.at(i, i) = Scalar(1);
  return I;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat+: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat-: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat*: shape mismatch");
  Mat r(rows_, o.cols_);
  for (long i = 0; i < rows_; ++i)
    for (long k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (long j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

Mat Mat::operator*(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Mat::trace() const {
  Scalar t(0);
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::pow(long e) const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::pow: non-square");
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw std::domain_error("Mat::pow: singular matrix, negative power");
    return inv->pow(-e);
  }
  Mat acc = identity(rows_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<long>(v.size()) != cols_) throw std::invalid_argument("Mat::apply: size");
  Vec r(rows_, Scalar(0));
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Vec Mat::row(long i) const {
  Vec r(cols_);
  for (long j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec Mat::col(long j) const {
  Vec r(rows_);
  for (long i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

void Mat::set_col(long j, const Vec& v) {
  for (long i = 0; i < rows_; ++i) at(i, j) = v[i];
}

std::vector<long> rref(Mat& M, bool strip_zero_rows) {
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < M.cols() && r < M.rows(); ++c) {
    long p = -1;
    for (long i = r; i < M.rows(); ++i)
      if (!M.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (long j = 0; j < M.cols(); ++j) std::swap(M.at(p, j), M.at(r, j));
    Scalar inv = M.at(r, c).inverse();
    for (long j = c; j < M.cols(); ++j) M.at(r, j) *= inv;
    for (long i = 0; i < M.rows(); ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      Scalar f = M.at(i, c);
      for (long j = c; j < M.cols(); ++j) M.at(i, j) -= f * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (strip_zero_rows && r < M.rows()) {
    Mat S(r, M.cols());
    for (long i = 0; i < r; ++i)
      for (long j = 0; j < M.cols(); ++j) S.at(i, j) = M.at(i, j);
    M = std::move(S);
  }
  return pivots;
}

long rank(const Mat& M) {
  Mat C = M;
  return static_cast<long>(rref(C).size());
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: non-square");
  Mat aug(rows_, 2 * cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar(1);
  }
  auto piv = rref(aug);
  if (static_cast<long>(piv.size()) != rows_ || piv.back() >= cols_) return std::nullopt;
  Mat inv(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Scalar Mat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Mat::det: non-square");
  Mat M = *this;
  Scalar d(1);
  long r = 0;
  for (long c = 0; c < cols_ && r < rows_; ++c) {
    long p = -1;
    for (long i = r; i < rows_; ++i)
      if (!M.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar(0);
    if (p != r) {
      for (long j = 0; j < cols_; ++j) std::swap(M.at(p, j), M.at(r, j));
      d = -d;
    }
    d *= M.at(r, c);
    Scalar inv = M.at(r, c).inverse();
    for (long i = r + 1; i < rows_; ++i) {
      if (M.at(i, c).is_zero()) continue;
      Scalar f = M.at(i, c) * inv;
      for (long j = c; j < cols_; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    ++r;
  }
  return (r == rows_) ? d : Scalar(0);
}

Mat kron(const Mat& A, const Mat& B) {
  Mat r(A.rows() * B.rows(), A.cols() * B.cols());
  for (long i = 0; i < A.rows(); ++i)
    for (long j = 0; j < A.cols(); ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (long k = 0; k < B.rows(); ++k)
        for (long l = 0; l < B.cols(); ++l)
          if (!B.at(k, l).is_zero())
            r.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
    }
  return r;
}

Poly char_poly(const Mat& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("char_poly: non-square");
  long n = M.rows();
  // Faddeev-LeVerrier: c_n = 1; M_1 = M; c_{n-k} = -tr(M M_{k-1} + c .. )/k
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  c[n] = Scalar(1);
  Mat Mk = Mat::identity(n);
  for (long k = 1; k <= n; ++k) {
    Mk = M * Mk;
    Scalar ck = Mk.trace() * Scalar(Rational(-1, k));
    c[n - k] = ck;
    for (long i = 0; i < n; ++i) Mk.at(i, i) += ck;
  }
  return Poly(std::move(c));
}

Subspace Subspace::span(long ambient_dim, const std::vector<Vec>& vectors) {
  Mat M(static_cast<long>(vectors.size()), ambient_dim);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<long>(vectors[i].size()) != ambient_dim)
      throw std::invalid_argument("Subspace::span: ambient dimension mismatch");
    for (long j = 0; j < ambient_dim; ++j) M.at(static_cast<long>(i), j) = vectors[i][j];
  }
  Subspace S(ambient_dim);
  S.pivots_ = rref(M, true);
  for (long i = 0; i < M.rows(); ++i) S.basis_.push_back(M.row(i));
  return S;
}

Subspace Subspace::full(long ambient_dim) {
  std::vector<Vec> vs;
  for (long i = 0; i < ambient_dim; ++i) {
    Vec v(ambient_dim, Scalar(0));
    v[i] = Scalar(1);
    vs.push_back(std::move(v));
  }
  return span(ambient_dim, vs);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<long>(v.size()) != ambient_) throw std::invalid_argument("Subspace: dim");
  Vec r = v;
  Vec coords(basis_.size(), Scalar(0));
  for (size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    coords[i] = c;
    for (long j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  for (const auto& x : r)
    if (!x.is_zero()) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace kernel(const Mat& M) {
  Mat R = M;
  auto piv = rref(R, true);
  std::vector<bool> is_piv(M.cols(), false);
  for (long p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (long c = 0; c < M.cols(); ++c) {
    if (is_piv[c]) continue;
    Vec v(M.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -R.at(static_cast<long>(r), c);
    basis.push_back(std::move(v));
  }
  return Subspace::span(M.cols(), basis);
}

Subspace image(const Mat& M) {
  std::vector<Vec> cols;
  for (long j = 0; j < M.cols(); ++j) cols.push_back(M.col(j));
  return Subspace::span(M.rows(), cols);
}

Subspace sum(const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != V.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> vs = U.basis();
  for (const auto& v : V.basis()) vs.push_back(v);
  return Subspace::span(U.ambient_dim(), vs);
}

Subspace intersect(const Subspace& U, const Subspace& V) {
  if (U.ambient_dim() != V.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  // Zassenhaus: row-reduce [U U; V 0]; rows with zero left half carry the
  // intersection in the right half.
  long n = U.ambient_dim();
  long m = U.dim() + V.dim();
  Mat Z(m, 2 * n);
  for (long i = 0; i < U.dim(); ++i)
    for (long j = 0; j < n; ++j) {
      Z.at(i, j) = U.basis()[i][j];
      Z.at(i, n + j) = U.basis()[i][j];
    }
  for (long i = 0; i < V.dim(); ++i)
    for (long j = 0; j < n; ++j) Z.at(U.dim() + i, j) = V.basis()[i][j];
  rref(Z);
  std::vector<Vec> basis;
  for (long i = 0; i < m; ++i) {
    bool left_zero = true;
    for (long j = 0; j < n && left_zero; ++j)
      if (!Z.at(i, j).is_zero()) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    bool nonzero = false;
    for (long j = 0; j < n; ++j) {
      v[j] = Z.at(i, n + j);
      nonzero = nonzero || !v[j].is_zero();
    }
    if (nonzero) basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

long quotient_dim(const Subspace& U, const Subspace& V) {
  if (!U.contains(V)) throw std::invalid_argument("quotient_dim: V is not a subspace of U");
  return U.dim() - V.dim();
}

Mat mat_from_cols(long rows, const std::vector<Vec>& cols) {
  Mat M(rows, static_cast<long>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (static_cast<long>(cols[j].size()) != rows)
      throw std::invalid_argument("mat_from_cols: row mismatch");
    M.set_col(static_cast<long>(j), cols[j]);
  }
  return M;
}

std::optional<Vec> solve(const Mat& M, const Vec& b) {
  if (static_cast<long>(b.size()) != M.rows()) throw std::invalid_argument("solve: size");
  Mat aug(M.rows(), M.cols() + 1);
  for (long i = 0; i < M.rows(); ++i) {
    for (long j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    aug.at(i, M.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == M.cols()) return std::nullopt;  // inconsistent
  Vec x(M.cols(), Scalar(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(static_cast<long>(r), M.cols());
  return x;
}

}  // namespace wdt
