#include "wdtangent/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace wdt {

namespace {

// Basis of a single gl/sl block of size n at the given offset inside a
// std_dim realization: e_ij (i != j, row-major), h_i = e_ii - e_{i+1,i+1},
// then the block identity for gl.
std::vector<Mat> block_basis(long std_dim, long off, long n, bool det_one) {
  std::vector<Mat> basis;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat e(std_dim, std_dim);
      e.at(off + i, off + j) = Scalar(1);
      basis.push_back(std::move(e));
    }
  for (long i = 0; i + 1 < n; ++i) {
    Mat h(std_dim, std_dim);
    h.at(off + i, off + i) = Scalar(1);
    h.at(off + i + 1, off + i + 1) = Scalar(-1);
    basis.push_back(std::move(h));
  }
  if (!det_one) {
    Mat id(std_dim, std_dim);
    for (long i = 0; i < n; ++i) id.at(off + i, off + i) = Scalar(1);
    basis.push_back(std::move(id));
  }
  return basis;
}

}  // namespace

GroupModel GroupModel::matrix_group(std::string name, std::vector<BlockSpec> blocks) {
  GroupModel G;
  G.name_ = std::move(name);
  G.kind_ = GroupKind::Matrix;
  G.blocks_ = std::move(blocks);
  long off = 0;
  for (const auto& b : G.blocks_) {
    if (b.n < 1) throw std::invalid_argument("catalog: block size must be >= 1");
    if (b.det_one && b.n < 2) throw std::invalid_argument("catalog: SL(n) needs n >= 2");
    G.block_offsets_.push_back(off);
    off += b.n;
  }
  G.std_dim_ = off;
  G.n_param_ = (G.blocks_.size() == 1) ? G.blocks_[0].n : 0;
  for (size_t bi = 0; bi < G.blocks_.size(); ++bi) {
    const auto& b = G.blocks_[bi];
    long sl_dim = b.n * b.n - 1;
    long start = static_cast<long>(G.lie_basis_.size());
    for (auto& m : block_basis(G.std_dim_, G.block_offsets_[bi], b.n, b.det_one))
      G.lie_basis_.push_back(std::move(m));
    for (long i = 0; i < sl_dim; ++i) G.derived_idx_.push_back(start + i);
    G.rank_ += b.det_one ? b.n - 1 : b.n;
  }
  G.group_dim_ = static_cast<long>(G.lie_basis_.size());
  G.component_reps_ = {G.identity_element()};
  return G;
}

GroupModel GroupModel::GL(long n) {
  return matrix_group("GL(" + std::to_string(n) + ")", {{n, false}});
}

GroupModel GroupModel::SL(long n) {
  return matrix_group("SL(" + std::to_string(n) + ")", {{n, true}});
}

GroupModel GroupModel::product(const std::vector<GroupModel>& factors) {
  if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
  std::vector<BlockSpec> blocks;
  std::string name = "product(";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].kind_ != GroupKind::Matrix)
      throw std::invalid_argument("product: only matrix-kind factors are supported");
    for (const auto& b : factors[i].blocks_) blocks.push_back(b);
    name += (i ? "," : "") + factors[i].name_;
  }
  return matrix_group(name + ")", std::move(blocks));
}

GroupModel GroupModel::calG(long n) {
  if (n < 1) throw std::invalid_argument("calG: n >= 1 required");
  GroupModel G;
  G.name_ = "calG(" + std::to_string(n) + ")";
  G.kind_ = GroupKind::CalG;
  G.n_param_ = n;
  G.std_dim_ = n + 1;  // block-diagonal realization diag(X, y) of (X, y)
  G.group_dim_ = n * n + 1;
  G.rank_ = n + 1;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Mat e(n + 1, n + 1);
      e.at(i, j) = Scalar(1);
      G.lie_basis_.push_back(std::move(e));
      G.derived_idx_.push_back(i * n + j);  // g^0 = gl_n + 0
    }
  Mat y(n + 1, n + 1);
  y.at(n, n) = Scalar(1);
  G.lie_basis_.push_back(std::move(y));
  G.component_reps_ = {G.identity_element(),
                       G.element_calG(Mat::identity(n), Scalar(1), 1)};
  return G;
}

GroupElement GroupModel::identity_element() const {
  if (kind_ == GroupKind::CalG)
    return GroupElement{Mat::identity(n_param_), Scalar(1), 0};
  return GroupElement{Mat::identity(std_dim_), Scalar(1), 0};
}

GroupElement GroupModel::element(const Mat& m) const {
  if (kind_ != GroupKind::Matrix)
    throw std::invalid_argument("element: use element_calG for calG groups");
  GroupElement g{m, Scalar(1), 0};
  check_membership(g);
  return g;
}

GroupElement GroupModel::element_calG(const Mat& g, const Scalar& a, int component) const {
  if (kind_ != GroupKind::CalG) throw std::invalid_argument("element_calG: not a calG group");
  GroupElement e{g, a, component};
  check_membership(e);
  return e;
}

GroupElement GroupModel::mul(const GroupElement& x, const GroupElement& y) const {
  if (kind_ == GroupKind::Matrix) return GroupElement{x.mat * y.mat, Scalar(1), 0};
  // (g,a,1)(h,b,eps) = (gh, ab, eps); (g,a,jay)(h,b,eps) = (g*b*(h^t)^-1, ab, jay*eps)
  if (x.component == 0) return GroupElement{x.mat * y.mat, x.a * y.a, y.component};
  auto hti = y.mat.transpose().inverse();
  if (!hti) throw std::domain_error("calG mul: singular g-part");
  return GroupElement{x.mat * (*hti) * y.a, x.a * y.a, 1 ^ y.component};
}

GroupElement GroupModel::inv(const GroupElement& x) const {
  if (kind_ == GroupKind::Matrix) {
    auto i = x.mat.inverse();
    if (!i) throw std::domain_error("inv: singular element");
    return GroupElement{*i, Scalar(1), 0};
  }
  if (x.component == 0) {
    auto i = x.mat.inverse();
    if (!i) throw std::domain_error("inv: singular g-part");
    return GroupElement{*i, x.a.inverse(), 0};
  }
  // (g,a,jay)^-1 = (a^-1 g^t, a^-1, jay)
  return GroupElement{x.mat.transpose() * x.a.inverse(), x.a.inverse(), 1};
}

GroupElement GroupModel::pow(const GroupElement& x, long e) const {
  if (e < 0) return pow(inv(x), -e);
  GroupElement acc = identity_element(), base = x;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool GroupModel::is_member(const GroupElement& x) const {
  try {
    check_membership(x);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void GroupModel::check_membership(const GroupElement& x) const {
  if (kind_ == GroupKind::CalG) {
    if (x.mat.rows() != n_param_ || x.mat.cols() != n_param_)
      throw std::invalid_argument("membership: g-part has wrong shape");
    if (x.mat.det().is_zero()) throw std::invalid_argument("membership: g-part singular");
    if (x.a.is_zero()) throw std::invalid_argument("membership: a-part is zero");
    if (x.component != 0 && x.component != 1)
      throw std::invalid_argument("membership: bad component index");
    return;
  }
  if (x.component != 0) throw std::invalid_argument("membership: connected group");
  if (x.mat.rows() != std_dim_ || x.mat.cols() != std_dim_)
    throw std::invalid_argument("membership: wrong realization size");
  for (size_t bi = 0; bi < blocks_.size(); ++bi) {
    long off = block_offsets_[bi], n = blocks_[bi].n;
    Mat blk(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) blk.at(i, j) = x.mat.at(off + i, off + j);
    Scalar d = blk.det();
    if (d.is_zero()) throw std::invalid_argument("membership: singular block");
    if (blocks_[bi].det_one && d != Scalar(1))
      throw std::invalid_argument("membership: SL block with det != 1");
  }
  // off-block entries must vanish
  for (long i = 0; i < std_dim_; ++i)
    for (long j = 0; j < std_dim_; ++j) {
      bool same_block = false;
      for (size_t bi = 0; bi < blocks_.size(); ++bi) {
        long off = block_offsets_[bi], n = blocks_[bi].n;
        if (i >= off && i < off + n && j >= off && j < off + n) same_block = true;
      }
      if (!same_block && !x.mat.at(i, j).is_zero())
        throw std::invalid_argument("membership: off-block entry nonzero");
    }
}

Mat GroupModel::lie_realization(const Vec& v) const {
  if (static_cast<long>(v.size()) != group_dim_)
    throw std::invalid_argument("lie_realization: coordinate size mismatch");
  Mat m(std_dim_, std_dim_);
  for (long i = 0; i < group_dim_; ++i)
    if (!v[i].is_zero()) m = m + lie_basis_[i] * v[i];
  return m;
}

Vec GroupModel::lie_coords(const Mat& m) const {
  if (m.rows() != std_dim_ || m.cols() != std_dim_)
    throw std::invalid_argument("lie_coords: wrong realization size");
  Vec v(group_dim_, Scalar(0));
  if (kind_ == GroupKind::CalG) {
    for (long i = 0; i < n_param_; ++i)
      for (long j = 0; j < n_param_; ++j) v[i * n_param_ + j] = m.at(i, j);
    v[n_param_ * n_param_] = m.at(n_param_, n_param_);
  } else {
    long idx = 0;
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
      long off = block_offsets_[bi], n = blocks_[bi].n;
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          if (i != j) v[idx++] = m.at(off + i, off + j);
      // diagonal: d_k = t + (c_k - c_{k-1}) with t = trace/n (0 for SL)
      Scalar t(0);
      if (!blocks_[bi].det_one) {
        for (long i = 0; i < n; ++i) t += m.at(off + i, off + i);
        t = t / Scalar(Rational(n));
      }
      Scalar c(0);
      for (long i = 0; i + 1 < n; ++i) {
        c += m.at(off + i, off + i) - t;
        v[idx++] = c;
      }
      if (!blocks_[bi].det_one) v[idx++] = t;
    }
  }
  if (lie_realization(v) != m)
    throw std::invalid_argument("lie_coords: matrix not in span(lie_basis)");
  return v;
}

Vec GroupModel::bracket(const Vec& u, const Vec& v) const {
  Mat mu = lie_realization(u), mv = lie_realization(v);
  return lie_coords(mu * mv - mv * mu);
}

Mat GroupModel::ad_matrix_kind(const Mat& g) const {
  auto gi = g.inverse();
  if (!gi) throw std::domain_error("ad: singular element");
  Mat A(group_dim_, group_dim_);
  for (long j = 0; j < group_dim_; ++j)
    A.set_col(j, lie_coords(g * lie_basis_[j] * (*gi)));
  return A;
}

Mat GroupModel::ad(const GroupElement& g) const {
  check_membership(g);
  if (kind_ == GroupKind::Matrix) return ad_matrix_kind(g.mat);
  long n = n_param_;
  auto gi = g.mat.inverse();
  if (!gi) throw std::domain_error("ad: singular g-part");
  Mat A(group_dim_, group_dim_);
  for (long j = 0; j < group_dim_; ++j) {
    // coordinate j realizes (X, y)
    Mat X(n, n);
    Scalar y(0);
    if (j < n * n)
      X.at(j / n, j % n) = Scalar(1);
    else
      y = Scalar(1);
    if (g.component == 1) {
      // Ad(jay)(X, y) = (y*1 - X^t, y)
      Mat Xt = X.transpose();
      Mat Xn(n, n);
      for (long i = 0; i < n; ++i) Xn.at(i, i) = y;
      X = Xn - Xt;
    }
    Mat gXgi = g.mat * X * (*gi);
    Vec col(group_dim_, Scalar(0));
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) col[r * n + c] = gXgi.at(r, c);
    col[n * n] = y;
    A.set_col(j, col);
  }
  return A;
}

Mat GroupModel::ad_n(const Vec& N) const {
  Mat A(group_dim_, group_dim_);
  Mat mn = lie_realization(N);
  for (long j = 0; j < group_dim_; ++j)
    A.set_col(j, lie_coords(mn * lie_basis_[j] - lie_basis_[j] * mn));
  return A;
}

bool GroupModel::lie_nilpotent(const Vec& N) const {
  Mat m = lie_realization(N);
  if (!m.pow(std_dim_).is_zero()) return false;
  return ad_n(N).pow(group_dim_).is_zero();
}

Subspace GroupModel::fixed_lie(const std::vector<GroupElement>& elements) const {
  if (elements.empty()) return Subspace::full(group_dim_);
  Mat stacked(group_dim_ * static_cast<long>(elements.size()), group_dim_);
  for (size_t k = 0; k < elements.size(); ++k) {
    Mat D = ad(elements[k]) - Mat::identity(group_dim_);
    for (long i = 0; i < group_dim_; ++i)
      for (long j = 0; j < group_dim_; ++j)
        stacked.at(static_cast<long>(k) * group_dim_ + i, j) = D.at(i, j);
  }
  return kernel(stacked);
}

namespace {
constexpr long kWeightScanBound = 64;
}

std::map<long, Subspace> GroupModel::realization_weights(const Vec& H) const {
  Mat m = lie_realization(H);
  std::map<long, Subspace> out;
  long total = 0;
  for (long k = -kWeightScanBound; k <= kWeightScanBound && total < std_dim_; ++k) {
    Subspace ker_k = kernel(m - Mat::identity(std_dim_) * Scalar(k));
    if (ker_k.dim() > 0) {
      total += ker_k.dim();
      out.emplace(k, std::move(ker_k));
    }
  }
  if (total != std_dim_)
    throw std::domain_error(
        "realization_weights: H is not integrally diagonalizable (weights must be "
        "integers within the scan bound)");
  return out;
}

std::map<long, Subspace> GroupModel::dynamic_decomposition(const Vec& H) const {
  Mat A = ad_n(H);
  // candidate eigenvalues: differences of realization weights (always
  // integral for genuine cocharacter derivatives)
  auto rw = realization_weights(H);
  std::vector<long> keys;
  for (const auto& [k, _] : rw) keys.push_back(k);
  std::vector<long> cands;
  for (long a : keys)
    for (long b : keys) cands.push_back(a - b);
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::map<long, Subspace> out;
  long total = 0;
  for (long k : cands) {
    Subspace ker_k = kernel(A - Mat::identity(group_dim_) * Scalar(k));
    if (ker_k.dim() > 0) {
      total += ker_k.dim();
      out.emplace(k, std::move(ker_k));
    }
  }
  if (total != group_dim_)
    throw std::domain_error("dynamic_decomposition: non-integer ad_H weight detected");
  return out;
}

GroupElement GroupModel::cocharacter_eval(const Vec& H, const Scalar& s) const {
  if (kind_ == GroupKind::CalG) {
    // split (X, y): evaluate the X-part inside GL(n), and the a-part as s^y
    long n = n_param_;
    Vec v = H;
    Scalar y = v[n * n];
    if (!y.is_rational() || y.rat_part().get_den() != 1)
      throw std::domain_error("cocharacter_eval: calG y-weight must be an integer");
    long yk = static_cast<long>(y.rat_part().get_num().get_si());
    GroupModel gl = GroupModel::GL(n);
    Mat X(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) X.at(i, j) = v[i * n + j];
    GroupElement gx = gl.cocharacter_eval(gl.lie_coords(X), s);
    return element_calG(gx.mat, s.pow(yk), 0);
  }
  auto rw = realization_weights(H);
  Mat P(std_dim_, std_dim_);
  Mat D(std_dim_, std_dim_);
  long c = 0;
  for (const auto& [k, space] : rw)
    for (const auto& vbasis : space.basis()) {
      P.set_col(c, vbasis);
      D.at(c, c) = s.pow(k);
      ++c;
    }
  auto Pi = P.inverse();
  if (!Pi) throw std::logic_error("cocharacter_eval: eigenbasis not invertible");
  return element(P * D * (*Pi));
}

GroupElement GroupModel::exp_nilpotent(const Vec& N) const {
  if (!lie_nilpotent(N)) throw std::invalid_argument("exp_nilpotent: N not nilpotent");
  Mat m = lie_realization(N);
  Mat acc = Mat::identity(std_dim_), term = Mat::identity(std_dim_);
  for (long k = 1; k <= std_dim_; ++k) {
    term = term * m * Scalar(Rational(1, k));
    if (term.is_zero()) break;
    acc = acc + term;
  }
  if (kind_ == GroupKind::CalG) {
    // nilpotent (X, y) requires y = 0; exp lands in the identity component
    long n = n_param_;
    if (!N[n * n].is_zero())
      throw std::invalid_argument("exp_nilpotent: calG y-part must vanish");
    Mat g(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) g.at(i, j) = acc.at(i, j);
    return element_calG(g, Scalar(1), 0);
  }
  return element(acc);
}

Vec lie_unit(const GroupModel& G, long index) {
  Vec v(G.group_dim(), Scalar(0));
  v[index] = Scalar(1);
  return v;
}

namespace {

void validate_morphism(const Morphism& f) {
  const GroupModel& S = f.source;
  const GroupModel& T = f.target;
  if (f.lie_map.rows() != T.group_dim() || f.lie_map.cols() != S.group_dim())
    throw std::invalid_argument("morphism: lie_map shape mismatch");
  // bracket intertwining on all basis pairs
  for (long i = 0; i < S.group_dim(); ++i)
    for (long j = 0; j < S.group_dim(); ++j) {
      Vec bi = lie_unit(S, i), bj = lie_unit(S, j);
      Vec lhs = f.lie_map.apply(S.bracket(bi, bj));
      Vec rhs = T.bracket(f.lie_map.apply(bi), f.lie_map.apply(bj));
      if (lhs != rhs) throw std::invalid_argument("morphism: bracket intertwining fails");
    }
}

}  // namespace

Morphism morphism_tensor(long n, long m) {
  Morphism f;
  f.source = GroupModel::product({GroupModel::GL(n), GroupModel::GL(m)});
  f.target = GroupModel::GL(n * m);
  f.name = "tensor(" + std::to_string(n) + "," + std::to_string(m) + ")";
  GroupModel S = f.source, T = f.target;
  f.elt_map = [n, m, S, T](const GroupElement& g) {
    S.check_membership(g);
    Mat A(n, n), B(m, m);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) A.at(i, j) = g.mat.at(i, j);
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) B.at(i, j) = g.mat.at(n + i, n + j);
    return T.element(kron(A, B));
  };
  f.lie_map = Mat(f.target.group_dim(), f.source.group_dim());
  for (long j = 0; j < f.source.group_dim(); ++j) {
    Mat x = f.source.lie_realization(lie_unit(f.source, j));
    Mat A(n, n), B(m, m);
    for (long i = 0; i < n; ++i)
      for (long k = 0; k < n; ++k) A.at(i, k) = x.at(i, k);
    for (long i = 0; i < m; ++i)
      for (long k = 0; k < m; ++k) B.at(i, k) = x.at(n + i, n + k);
    Mat image = kron(A, Mat::identity(m)) + kron(Mat::identity(n), B);
    f.lie_map.set_col(j, f.target.lie_coords(image));
  }
  validate_morphism(f);
  return f;
}

Morphism morphism_det(long n) {
  Morphism f;
  f.source = GroupModel::GL(n);
  f.target = GroupModel::GL(1);
  f.name = "det(" + std::to_string(n) + ")";
  GroupModel T = f.target;
  f.elt_map = [T](const GroupElement& g) {
    Mat d(1, 1);
    d.at(0, 0) = g.mat.det();
    return T.element(d);
  };
  f.lie_map = Mat(1, f.source.group_dim());
  for (long j = 0; j < f.source.group_dim(); ++j)
    f.lie_map.at(0, j) = f.source.lie_realization(lie_unit(f.source, j)).trace();
  validate_morphism(f);
  return f;
}

Morphism morphism_incl_block(long n, long k) {
  Morphism f;
  f.source = GroupModel::GL(n);
  f.target = GroupModel::GL(n + k);
  f.name = "incl_block(" + std::to_string(n) + "," + std::to_string(k) + ")";
  GroupModel T = f.target;
  f.elt_map = [n, k, T](const GroupElement& g) {
    Mat m = Mat::identity(n + k);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = g.mat.at(i, j);
    return T.element(m);
  };
  f.lie_map = Mat(f.target.group_dim(), f.source.group_dim());
  for (long j = 0; j < f.source.group_dim(); ++j) {
    Mat x = f.source.lie_realization(lie_unit(f.source, j));
    Mat big(n + k, n + k);
    for (long i = 0; i < n; ++i)
      for (long c = 0; c < n; ++c) big.at(i, c) = x.at(i, c);
    f.lie_map.set_col(j, f.target.lie_coords(big));
  }
  validate_morphism(f);
  return f;
}

Morphism morphism_sl2_from_triple(const GroupModel& G, const Vec& N, const Vec& H,
                                  const Vec& Y) {
  auto scale = [&](const Vec& v, const Scalar& c) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
  };
  if (G.bracket(H, N) != scale(N, Scalar(2)) || G.bracket(H, Y) != scale(Y, Scalar(-2)) ||
      G.bracket(N, Y) != H)
    throw std::invalid_argument("sl2_from_triple: (N,H,Y) is not an sl2-triple");
  Morphism f;
  f.source = GroupModel::SL(2);
  f.target = G;
  f.name = "sl2_from_triple";
  GroupModel T = G;
  // exp of the two nilpotent directions generate the image of SL(2): any
  // g = [[a,b],[c,d]] with c != 0 factors as u(x1) l(c) u(x2), and c = 0 is
  // reduced to that case by one extra lower transvection.
  auto exp_e = [T, N](const Scalar& x) {
    Vec v = N;
    for (auto& t : v) t *= x;
    return T.exp_nilpotent(v);
  };
  auto exp_f = [T, Y](const Scalar& x) {
    Vec v = Y;
    for (auto& t : v) t *= x;
    return T.exp_nilpotent(v);
  };
  auto map_mat = [T, exp_e, exp_f](Mat g) {
    if (g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0) != Scalar(1))
      throw std::invalid_argument("sl2_from_triple: determinant != 1");
    bool premultiplied = false;
    if (g.at(1, 0).is_zero()) {
      // l(1) g has nonzero lower-left entry (= a != 0); undo with exp_f(-1)
      Mat l1 = Mat::identity(2);
      l1.at(1, 0) = Scalar(1);
      g = l1 * g;
      premultiplied = true;
    }
    Scalar a = g.at(0, 0), c = g.at(1, 0), d = g.at(1, 1);
    Scalar x1 = (a - Scalar(1)) / c, x2 = (d - Scalar(1)) / c;
    GroupElement out = T.mul(T.mul(exp_e(x1), exp_f(c)), exp_e(x2));
    if (premultiplied) out = T.mul(exp_f(Scalar(-1)), out);
    return out;
  };
  GroupModel Ssrc = f.source;
  f.elt_map = [Ssrc, map_mat](const GroupElement& g) {
    Ssrc.check_membership(g);
    return map_mat(g.mat);
  };
  // SL(2) basis order: e12, e21, h  ->  N, Y, H
  f.lie_map = Mat(G.group_dim(), 3);
  f.lie_map.set_col(0, N);
  f.lie_map.set_col(1, Y);
  f.lie_map.set_col(2, H);
  validate_morphism(f);
  return f;
}

OddnessReport oddness_fixed_dim(const GroupModel& G, const GroupElement& c,
                                long borel_dim) {
  if (borel_dim < 0) {
    if (G.kind() != GroupKind::CalG)
      throw std::invalid_argument(
          "oddness_fixed_dim: borel_dim must be supplied outside the calG catalog");
    long n = G.n_param();
    borel_dim = n * (n + 1) / 2 + 1;
  }
  if (!(G.pow(c, 2) == G.identity_element()))
    throw std::invalid_argument("oddness_fixed_dim: c is not an involution");
  Mat D = G.ad(c) - Mat::identity(G.group_dim());
  Subspace fixed = kernel(D);
  std::vector<Vec> derived_basis;
  for (long i : G.derived_idx()) derived_basis.push_back(lie_unit(G, i));
  Subspace g0 = Subspace::span(G.group_dim(), derived_basis);
  long fixed_dim = intersect(fixed, g0).dim();
  long target = G.group_dim() - borel_dim;
  return OddnessReport{fixed_dim, target, fixed_dim == target};
}

}  // namespace wdt
