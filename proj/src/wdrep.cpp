#include "wdtangent/wdrep.hpp"

#include <random>
#include <stdexcept>

namespace wdt {

InertialData InertialData::trivial(const GroupModel& G) {
  InertialData I;
  I.table = {{0}};
  I.identity = 0;
  I.tau = {G.identity_element()};
  I.theta = {0};
  I.d = 1;
  return I;
}

InertialData InertialData::cyclic(const GroupModel& G, long n, const GroupElement& g,
                                  long d) {
  InertialData I;
  I.table.assign(n, std::vector<long>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) I.table[i][j] = (i + j) % n;
  I.identity = 0;
  for (long i = 0; i < n; ++i) I.tau.push_back(G.pow(g, i));
  I.theta.resize(n);
  for (long i = 0; i < n; ++i) I.theta[i] = i;
  I.d = d;
  if (!(G.pow(g, n) == G.identity_element()))
    throw std::invalid_argument("InertialData::cyclic: generator order does not divide n");
  I.validate(G);
  return I;
}

void InertialData::validate(const GroupModel& G) const {
  long n = order();
  if (n < 1) throw std::invalid_argument("inertia: empty group");
  if (static_cast<long>(tau.size()) != n || static_cast<long>(theta.size()) != n)
    throw std::invalid_argument("inertia: tau/theta size mismatch");
  if (identity < 0 || identity >= n) throw std::invalid_argument("inertia: bad identity");
  if (d < 1) throw std::invalid_argument("inertia: d must be >= 1");
  for (long i = 0; i < n; ++i) {
    if (static_cast<long>(table[i].size()) != n)
      throw std::invalid_argument("inertia: ragged multiplication table");
    if (table[identity][i] != i || table[i][identity] != i)
      throw std::invalid_argument("inertia: identity row/column broken");
  }
  // theta is a permutation and an automorphism
  std::vector<bool> seen(n, false);
  for (long i = 0; i < n; ++i) {
    if (theta[i] < 0 || theta[i] >= n || seen[theta[i]])
      throw std::invalid_argument("inertia: theta is not a permutation");
    seen[theta[i]] = true;
  }
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (table[theta[i]][theta[j]] != theta[table[i][j]])
        throw std::invalid_argument("inertia: theta is not an automorphism");
  // tau is a homomorphism into G with tau(e) = 1
  if (!(tau[identity] == G.identity_element()))
    throw std::invalid_argument("inertia: tau(identity) != 1");
  for (long i = 0; i < n; ++i) {
    G.check_membership(tau[i]);
    for (long j = 0; j < n; ++j)
      if (!(G.mul(tau[i], tau[j]) == tau[table[i][j]]))
        throw std::invalid_argument("inertia: tau is not a homomorphism");
  }
  for (long i = 0; i < n; ++i)
    if (!(G.pow(tau[i], n) == G.identity_element()))
      throw std::invalid_argument("inertia: tau value of infinite order");
}

std::vector<std::string> validate(const WDPoint& x) {
  std::vector<std::string> out;
  try {
    x.inertia.validate(x.G);
  } catch (const std::exception& e) {
    out.push_back(std::string("inertial data invalid: ") + e.what());
    return out;
  }
  if (!x.G.is_member(x.Phi)) {
    out.push_back("Phi fails membership");
    return out;
  }
  if (static_cast<long>(x.N.size()) != x.G.group_dim()) {
    out.push_back("N has wrong coordinate size");
    return out;
  }
  Vec qN = x.N;
  for (auto& c : qN) c *= x.q();
  if (x.G.ad(x.Phi).apply(x.N) != qN) out.push_back("Ad(Phi)(N) != p^fK * N");
  for (long g = 0; g < x.inertia.order(); ++g) {
    if (!(x.G.mul(x.G.mul(x.Phi, x.inertia.tau[g]), x.G.inv(x.Phi)) ==
          x.inertia.tau[x.inertia.theta[g]])) {
      out.push_back("Phi tau(g) Phi^-1 != tau(theta(g))");
      break;
    }
  }
  for (long g = 0; g < x.inertia.order(); ++g) {
    if (x.G.ad(x.inertia.tau[g]).apply(x.N) != x.N) {
      out.push_back("Ad(tau(g))(N) != N");
      break;
    }
  }
  if (!x.G.lie_nilpotent(x.N)) out.push_back("N is not nilpotent");
  return out;
}

void require_valid(const WDPoint& x) {
  auto v = validate(x);
  if (v.empty()) return;
  std::string msg = "invalid WDPoint:";
  for (const auto& s : v) msg += " [" + s + "]";
  throw std::invalid_argument(msg);
}

Subspace invariants_subspace(const WDPoint& x) {
  require_valid(x);
  return x.G.fixed_lie(x.inertia.tau);
}

WDPoint restrict_unramified(const WDPoint& x, long m) {
  if (m < 1) throw std::invalid_argument("restrict_unramified: m >= 1 required");
  WDPoint y = x;
  y.fK = x.fK * m;
  y.Phi = x.G.pow(x.Phi, m);
  for (long i = 0; i < x.inertia.order(); ++i) {
    long t = i;
    for (long k = 0; k < m; ++k) t = x.inertia.theta[t];
    y.inertia.theta[i] = t;
  }
  require_valid(y);
  return y;
}

TrivializedDatum trivialize_inertia(const WDPoint& x) {
  require_valid(x);
  long M = cyclotomic_bound(x.G.group_dim()) * x.inertia.d * x.inertia.order();
  return TrivializedDatum{M, x.G.pow(x.Phi, M), M * x.fK};
}

namespace {

// Rational r with r^n = value, if one exists (used to renormalize SL-block
// determinants).
std::optional<Rational> rational_nth_root(const Rational& value, long n) {
  if (value == 0) return std::nullopt;
  bool neg = value < 0;
  if (neg && n % 2 == 0) return std::nullopt;
  mpz_class num = abs(value.get_num()), den = value.get_den();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  Rational r(rn, rd);
  if (neg) r = -r;
  return r;
}

// Basis of the associative commutant of the tau values and N inside the
// block-diagonal matrix algebra (Matrix kind) / gl_n (CalG kind).
std::vector<Mat> commutant_basis(const GroupModel& G, const InertialData& inertia,
                                 const Mat& Nreal) {
  long n = (G.kind() == GroupKind::CalG) ? G.n_param() : G.std_dim();
  std::vector<Mat> mats;  // matrices z must commute with
  for (const auto& t : inertia.tau) {
    if (G.kind() == GroupKind::CalG) {
      if (t.component != 0)
        throw std::invalid_argument(
            "sample_fiber: calG inertial values must lie in the identity component");
      mats.push_back(t.mat);
    } else {
      mats.push_back(t.mat);
    }
  }
  Mat Nmat(n, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) Nmat.at(i, j) = Nreal.at(i, j);
  mats.push_back(Nmat);

  // unknown z as n^2 vector; rows: [z, m] = 0 entrywise, plus block-structure
  std::vector<Vec> rows;
  auto idx = [n](long i, long j) { return i * n + j; };
  for (const auto& m : mats)
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Vec row(n * n, Scalar(0));
        // (z m - m z)_{ij} = sum_k z_ik m_kj - m_ik z_kj
        for (long k = 0; k < n; ++k) {
          row[idx(i, k)] += m.at(k, j);
          row[idx(k, j)] -= m.at(i, k);
        }
        rows.push_back(std::move(row));
      }
  if (G.kind() == GroupKind::Matrix) {
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        bool same_block = false;
        long off = 0;
        for (const auto& b : G.blocks()) {
          if (i >= off && i < off + b.n && j >= off && j < off + b.n) same_block = true;
          off += b.n;
        }
        if (!same_block) {
          Vec row(n * n, Scalar(0));
          row[idx(i, j)] = Scalar(1);
          rows.push_back(std::move(row));
        }
      }
  }
  Mat sys(static_cast<long>(rows.size()), n * n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (long c = 0; c < n * n; ++c) sys.at(static_cast<long>(r), c) = rows[r][c];
  std::vector<Mat> basis;
  Subspace ker = kernel(sys);
  for (const auto& v : ker.basis()) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m.at(i, j) = v[idx(i, j)];
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

std::vector<WDPoint> sample_fiber(const GroupModel& G, const InertialData& inertia,
                                  const Vec& N, long p, long fK, long count,
                                  std::uint64_t seed) {
  inertia.validate(G);
  Subspace Z = G.fixed_lie(inertia.tau);
  if (!Z.contains(N))
    throw std::invalid_argument("sample_fiber: N is not in Lie Z_G(tau)");
  Cocharacter lam = associated_cocharacter(G, N, Z);
  Scalar s = sqrt_power(p, fK);
  GroupElement Phi0 = cocharacter_at(G, lam, s);

  WDPoint base{G, p, fK, Phi0, N, inertia};
  require_valid(base);

  auto basis = commutant_basis(G, inertia, G.lie_realization(N));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  long n = (G.kind() == GroupKind::CalG) ? G.n_param() : G.std_dim();

  std::vector<WDPoint> out;
  long attempts = 0, max_attempts = 200 * count + 200;
  while (static_cast<long>(out.size()) < count && attempts++ < max_attempts) {
    Mat z(n, n);
    for (const auto& b : basis) z = z + b * Scalar(coef(rng));
    if (z.det().is_zero()) continue;
    GroupElement ze;
    if (G.kind() == GroupKind::CalG) {
      long a = coef(rng);
      if (a == 0) continue;
      ze = GroupElement{z, Scalar(a), 0};
    } else {
      // renormalize SL blocks to determinant 1 when a rational root exists
      long off = 0;
      bool ok = true;
      for (const auto& b : G.blocks()) {
        if (b.det_one) {
          Mat blk(b.n, b.n);
          for (long i = 0; i < b.n; ++i)
            for (long j = 0; j < b.n; ++j) blk.at(i, j) = z.at(off + i, off + j);
          Scalar d = blk.det();
          if (!d.is_rational()) {
            ok = false;
            break;
          }
          auto root = rational_nth_root(d.rat_part(), b.n);
          if (!root) {
            ok = false;
            break;
          }
          Scalar inv = Scalar(*root).inverse();
          for (long i = 0; i < b.n; ++i)
            for (long j = 0; j < b.n; ++j) z.at(off + i, off + j) *= inv;
        }
        off += b.n;
      }
      if (!ok || !G.is_member(GroupElement{z, Scalar(1), 0})) continue;
      ze = GroupElement{z, Scalar(1), 0};
    }
    WDPoint x = base;
    x.Phi = G.mul(ze, Phi0);
    if (!validate(x).empty()) continue;
    out.push_back(std::move(x));
  }
  if (static_cast<long>(out.size()) < count)
    throw std::domain_error("sample_fiber: could not draw enough valid points");
  return out;
}

}  // namespace wdt
