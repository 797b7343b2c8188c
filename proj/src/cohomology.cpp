#include "wdtangent/cohomology.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace wdt {

namespace {

// Matrix of a g-endomorphism (given in ambient coordinates) on a basis of an
// invariant subspace; throws when the subspace is not preserved.
Mat restrict_to(const Mat& op, const Subspace& V, const char* what) {
  long v = V.dim();
  Mat out(v, v);
  for (long j = 0; j < v; ++j) {
    auto c = V.coordinates(op.apply(V.basis()[j]));
    if (!c) throw std::logic_error(std::string("operator does not preserve V: ") + what);
    out.set_col(j, *c);
  }
  return out;
}

struct Operators {
  Mat A;  // Ad(Phi) on V
  Mat B;  // ad_N on V
  long v;
};

Operators operators_on_invariants(const WDPoint& x) {
  Subspace V = invariants_subspace(x);  // validates x
  Mat A = restrict_to(x.G.ad(x.Phi), V, "Ad(Phi)");
  Mat B = restrict_to(x.G.ad_n(x.N), V, "ad_N");
  return Operators{std::move(A), std::move(B), V.dim()};
}

Mat stack_vert(const Mat& top, const Mat& bot) {
  Mat out(top.rows() + bot.rows(), top.cols());
  for (long i = 0; i < top.rows(); ++i)
    for (long j = 0; j < top.cols(); ++j) out.at(i, j) = top.at(i, j);
  for (long i = 0; i < bot.rows(); ++i)
    for (long j = 0; j < bot.cols(); ++j) out.at(top.rows() + i, j) = bot.at(i, j);
  return out;
}

Mat stack_horiz(const Mat& left, const Mat& right) {
  Mat out(left.rows(), left.cols() + right.cols());
  for (long i = 0; i < left.rows(); ++i) {
    for (long j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
    for (long j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
  }
  return out;
}

WDComplex build_complex(const Subspace& V, const Mat& A, const Mat& B, const Scalar& q) {
  long v = V.dim();
  Mat I = Mat::identity(v);
  WDComplex C{V, stack_vert(I - A, B), stack_horiz(B, A * q.inverse() - I)};
  if (!(C.d1 * C.d0).is_zero())
    throw std::logic_error("complex_of: d1 * d0 != 0");
  (void)v;
  return C;
}

// dim ker of [B^T; A^T - q I] -- functionals killed by ad_N with
// phi(Ad(Phi) .) = q phi(.).
long twisted_dual_dim(const Mat& A, const Mat& B, const Scalar& q) {
  Mat At = A.transpose(), Bt = B.transpose();
  return kernel(stack_vert(Bt, At - Mat::identity(At.rows()) * q)).dim();
}

// Word-size modular arithmetic used to certify full rank of the power-test
// matrix without forming Phi^M exactly (rank mod p <= rank over Q, so full
// rank mod p is an exact certificate).
struct ModP {
  std::uint64_t p;  // < 2^63
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
};

using ModMat = std::vector<std::vector<std::uint64_t>>;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) d >>= 1, ++r;
  ModP m{n};
  // deterministic Miller-Rabin base set for 64-bit inputs
  for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    std::uint64_t x = m.pow(a % n, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = m.mul(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

// Tonelli-Shanks; returns false when a is not a quadratic residue mod m.p
bool sqrt_modp(const ModP& m, std::uint64_t a, std::uint64_t& root) {
  a %= m.p;
  if (a == 0) {
    root = 0;
    return true;
  }
  if (m.pow(a, (m.p - 1) / 2) != 1) return false;
  if (m.p % 4 == 3) {
    root = m.pow(a, (m.p + 1) / 4);
    return true;
  }
  std::uint64_t q = m.p - 1;
  int s = 0;
  while ((q & 1) == 0) q >>= 1, ++s;
  std::uint64_t z = 2;
  while (m.pow(z, (m.p - 1) / 2) == 1) ++z;
  std::uint64_t c = m.pow(z, q), x = m.pow(a, (q + 1) / 2), t = m.pow(a, q);
  int rr = s;
  while (t != 1) {
    std::uint64_t t2 = t;
    int i = 0;
    while (t2 != 1) t2 = m.mul(t2, t2), ++i;
    std::uint64_t b = m.pow(c, std::uint64_t(1) << (rr - i - 1));
    x = m.mul(x, b);
    c = m.mul(b, b);
    t = m.mul(t, c);
    rr = i;
  }
  root = x;
  return true;
}

// modular image of a + b*sqrt(d) given a residue sqrt_d of d
struct ModCtx {
  ModP m;
  long d = 1;          // surd tag this context can reduce (1: rationals only)
  std::uint64_t sqrt_d = 0;
};

bool scalar_mod(const ModCtx& ctx, const Scalar& s, std::uint64_t& out) {
  auto rat_mod = [&](const Rational& r, std::uint64_t& v) {
    std::uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), ctx.m.p);
    if (den == 0) return false;
    std::uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), ctx.m.p);
    v = ctx.m.mul(num, ctx.m.inv(den));
    return true;
  };
  std::uint64_t a;
  if (!rat_mod(s.rat_part(), a)) return false;
  if (s.is_rational()) {
    out = a;
    return true;
  }
  if (s.d_tag() != ctx.d) return false;
  std::uint64_t b;
  if (!rat_mod(s.surd_part(), b)) return false;
  out = ctx.m.add(a, ctx.m.mul(b, ctx.sqrt_d));
  return true;
}

bool mat_mod(const ModCtx& ctx, const Mat& a, ModMat& out) {
  out.assign(a.rows(), std::vector<std::uint64_t>(a.cols(), 0));
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      if (!scalar_mod(ctx, a.at(i, j), out[i][j])) return false;
  return true;
}

ModMat mod_matmul(const ModP& m, const ModMat& a, const ModMat& b) {
  size_t n = a.size(), k = b.size(), c = b[0].size();
  ModMat out(n, std::vector<std::uint64_t>(c, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < c; ++j)
        out[i][j] = m.add(out[i][j], m.mul(a[i][t], b[t][j]));
    }
  return out;
}

long mod_rank(const ModP& m, ModMat a) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  long r = 0;
  for (size_t col = 0; col < cols && static_cast<size_t>(r) < rows; ++col) {
    size_t piv = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::uint64_t s = m.inv(a[r][col]);
    for (size_t j = col; j < cols; ++j) a[r][j] = m.mul(a[r][j], s);
    for (size_t i = 0; i < rows; ++i) {
      if (i == static_cast<size_t>(r) || a[i][col] == 0) continue;
      std::uint64_t f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] = m.sub(a[i][j], m.mul(f, a[r][j]));
    }
    ++r;
  }
  return r;
}

// rank of [B | q_M^{-1} A^M - I] modulo a word-size prime; -1 when the
// entries cannot be reduced (unsupported surd tag or vanishing denominators)
long power_rank_modp(const ModCtx& ctx, const Mat& A, const Mat& B, long p_char,
                     long fK, long M) {
  const ModP& m = ctx.m;
  ModMat Am, Bm;
  if (!mat_mod(ctx, A, Am) || !mat_mod(ctx, B, Bm)) return -1;
  size_t g = Am.size();
  ModMat Apow(g, std::vector<std::uint64_t>(g, 0));
  for (size_t i = 0; i < g; ++i) Apow[i][i] = 1;
  for (std::uint64_t e = static_cast<std::uint64_t>(M); e; e >>= 1) {
    if (e & 1) Apow = mod_matmul(m, Apow, Am);
    Am = mod_matmul(m, Am, Am);
  }
  std::uint64_t q = m.pow(static_cast<std::uint64_t>(p_char) % m.p,
                          static_cast<std::uint64_t>(M) * fK);
  if (q == 0) return -1;
  std::uint64_t qi = m.inv(q);
  ModMat d1(g, std::vector<std::uint64_t>(2 * g, 0));
  for (size_t i = 0; i < g; ++i)
    for (size_t j = 0; j < g; ++j) {
      d1[i][j] = Bm[i][j];
      d1[i][g + j] = m.sub(m.mul(qi, Apow[i][j]), (i == j) ? 1u : 0u);
    }
  return mod_rank(m, std::move(d1));
}

}  // namespace

WDComplex complex_of(const WDPoint& x) {
  Subspace V = invariants_subspace(x);
  Mat A = restrict_to(x.G.ad(x.Phi), V, "Ad(Phi)");
  Mat B = restrict_to(x.G.ad_n(x.N), V, "ad_N");
  return build_complex(V, A, B, x.q());
}

CohomologyReport cohomology_dims(const WDPoint& x) {
  WDComplex C = complex_of(x);
  long v = C.V.dim();
  long r0 = rank(C.d0), r1 = rank(C.d1);
  CohomologyReport rep;
  rep.h0 = v - r0;
  rep.h1 = (2 * v - r1) - r0;
  rep.h2 = v - r1;
  rep.dual_h0 = dual_h0_twisted(x);
  rep.smooth = (rep.h2 == 0);
  rep.tangent_dim_framed = x.G.group_dim() + rep.h2;
  if (rep.h0 - rep.h1 + rep.h2 != 0)
    throw std::logic_error("cohomology_dims: Euler characteristic is nonzero");
  return rep;
}

long dual_h0_twisted(const WDPoint& x) {
  Operators op = operators_on_invariants(x);
  return twisted_dual_dim(op.A, op.B, x.q());
}

Mat pairing_matrix(const WDPoint& x) {
  WDComplex C = complex_of(x);
  Operators op = operators_on_invariants(x);
  long v = op.v;

  // dual side: basis of { phi : phi B = 0, phi A = q phi }
  Subspace dual = kernel(stack_vert(op.B.transpose(),
                                    op.A.transpose() - Mat::identity(v) * x.q()));

  // H^2 representatives: standard coordinates not pivotal for im d1
  Subspace im1 = image(C.d1);
  std::vector<long> rep_idx;
  {
    auto piv = im1.pivots();
    size_t k = 0;
    for (long j = 0; j < v; ++j) {
      if (k < piv.size() && piv[k] == j) {
        ++k;
        continue;
      }
      rep_idx.push_back(j);
    }
  }

  Mat P(dual.dim(), static_cast<long>(rep_idx.size()));
  for (long i = 0; i < dual.dim(); ++i)
    for (size_t j = 0; j < rep_idx.size(); ++j)
      P.at(i, static_cast<long>(j)) = dual.basis()[i][rep_idx[j]];
  return P;
}

bool is_smooth(const WDPoint& x) { return cohomology_dims(x).h2 == 0; }

bool is_very_smooth(const WDPoint& x) {
  require_valid(x);
  long g = x.G.group_dim();
  long n0 = cyclotomic_bound(g);
  long M = n0 * x.inertia.d * x.inertia.order();
  Mat A = x.G.ad(x.Phi);
  Mat B = x.G.ad_n(x.N);

  // power test: h2 of the complex over the degree-M unramified extension,
  // where inertia acts trivially, so V = g.  Full rank of
  // [B | q_M^{-1} Ad(Phi)^M - I] modulo a word-size prime already certifies
  // h2 = 0 exactly; only rank-deficient reductions pay for exact Phi^M.
  long tag = 1;
  auto scan_tag = [&tag](const Mat& m) {
    for (long i = 0; i < m.rows(); ++i)
      for (long j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_rational()) tag = m.at(i, j).d_tag();
  };
  scan_tag(A);
  scan_tag(B);

  bool power_smooth = false, power_known = false;
  if (tag == 1) {
    for (std::uint64_t prime : {2305843009213693951ULL, 9223372036854775783ULL}) {
      if (power_rank_modp(ModCtx{ModP{prime}, 1, 0}, A, B, x.p, x.fK, M) == g) {
        power_smooth = power_known = true;
        break;
      }
    }
  } else {
    // surd entries: use primes where the tag is a quadratic residue so the
    // reduction sqrt(d) -> r extends to the coefficient ring
    std::mt19937_64 rng(0x5d1c0ffe);
    for (int tries = 0, used = 0; tries < 4096 && used < 2 && !power_known; ++tries) {
      std::uint64_t cand = (rng() >> 3) | (std::uint64_t(1) << 60) | 1;
      if (!is_prime_u64(cand)) continue;
      ModCtx ctx{ModP{cand}, tag, 0};
      if (!sqrt_modp(ctx.m, static_cast<std::uint64_t>(tag), ctx.sqrt_d)) continue;
      ++used;
      if (power_rank_modp(ctx, A, B, x.p, x.fK, M) == g) power_smooth = power_known = true;
    }
  }
  if (!power_known) {
    TrivializedDatum t = trivialize_inertia(x);
    Mat AM = x.G.ad(t.PhiM);
    Scalar qM = Scalar(Rational(x.p)).pow(t.fK);
    Mat d1 = stack_horiz(B, AM * qM.inverse() - Mat::identity(g));
    power_smooth = (rank(d1) == g);
  }

  // eigenvalue test: T = p^{fK} Ad(Phi)^{-T} on S = ker(ad_N^T); very
  // smoothness fails exactly when T|_S has a root-of-unity eigenvalue of
  // order dividing n0
  auto Ainv_t = A.inverse();
  if (!Ainv_t) throw std::logic_error("is_very_smooth: Ad(Phi) singular");
  Mat T = Ainv_t->transpose() * x.q();
  Subspace S = kernel(B.transpose());
  Mat Ts = restrict_to(T, S, "q Ad(Phi)^{-T} on ker(ad_N^T)");
  bool eigen_smooth = gcd_with_unity(char_poly(Ts), n0).degree() <= 0;

  if (power_smooth != eigen_smooth)
    throw std::logic_error("is_very_smooth: power test and eigenvalue test disagree");
  return power_smooth;
}

std::pair<long, long> cohomology_N0(const WDPoint& x) {
  for (const auto& c : x.N)
    if (!c.is_zero()) throw std::invalid_argument("cohomology_N0: N != 0 required");
  Operators op = operators_on_invariants(x);
  Mat D = Mat::identity(op.v) - op.A;
  long r = rank(D);
  return {op.v - r, op.v - r};
}

}  // namespace wdt
