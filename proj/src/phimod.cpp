#include "wdtangent/phimod.hpp"

#include <stdexcept>

namespace wdt {

namespace {

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace

long PhiModule::q_index(long i, long k) const {
  for (size_t idx = 0; idx < galois.size(); ++idx)
    if (galois[idx].i == i && galois[idx].k == k) return static_cast<long>(idx);
  throw std::invalid_argument("PhiModule: Galois element (i,k) missing");
}

void PhiModule::validate() const {
  long nI = static_cast<long>(itable.size());
  if (fK < 1 || d < 1 || fL != d * fK)
    throw std::invalid_argument("PhiModule: fL != d * fK");
  if (static_cast<long>(Phis.size()) != fL || static_cast<long>(Ns.size()) != fL)
    throw std::invalid_argument("PhiModule: Phis/Ns must have length fL");
  if (static_cast<long>(galois.size()) != nI * d)
    throw std::invalid_argument("PhiModule: expected |I| * d Galois elements");
  for (long i = 0; i < nI; ++i) {
    long t = i;
    for (long j = 0; j < d; ++j) t = theta[t];
    if (t != i) throw std::invalid_argument("PhiModule: theta^d != id");
  }

  for (const auto& e : Phis) G.check_membership(e);
  Scalar pp{Rational(p)};
  for (long e = 0; e < fL; ++e) {
    if (!G.lie_nilpotent(Ns[e]))
      throw std::invalid_argument("PhiModule: N_e not nilpotent");
    if (Ns[e] != scaled(G.ad(Phis[e]).apply(Ns[(e + 1) % fL]), pp))
      throw std::invalid_argument("PhiModule: N transport N_e = p Ad(Phi_e) N_{e+1} fails");
  }

  // Galois structure checks
  for (const auto& g : galois) {
    if (g.i < 0 || g.i >= nI || g.k < 0 || g.k >= d)
      throw std::invalid_argument("PhiModule: Galois index out of range");
    if (g.shift != (g.k * fK) % fL)
      throw std::invalid_argument("PhiModule: wrong degree shift");
    if (static_cast<long>(g.comps.size()) != fL)
      throw std::invalid_argument("PhiModule: Galois element needs fL components");
    for (const auto& c : g.comps) G.check_membership(c);
  }
  const GaloisElt& one = galois[q_index(iidentity, 0)];
  for (const auto& c : one.comps)
    if (!(c == G.identity_element()))
      throw std::invalid_argument("PhiModule: tau(identity) != 1");

  auto theta_pow = [&](long i, long k) {
    long t = i;
    for (long j = 0; j < k; ++j) t = theta[t];
    return t;
  };

  for (const auto& g1 : galois)
    for (const auto& g2 : galois) {
      // (i1,k1)(i2,k2) = (i1 * theta^{k1}(i2), k1+k2 mod d)
      long pi = itable[g1.i][theta_pow(g2.i, g1.k)];
      long pk = (g1.k + g2.k) % d;
      const GaloisElt& g12 = galois[q_index(pi, pk)];
      for (long e = 0; e < fL; ++e) {
        GroupElement lhs = g12.comps[e];
        GroupElement rhs = G.mul(g1.comps[e], g2.comps[(e + g1.shift) % fL]);
        if (!(lhs == rhs))
          throw std::invalid_argument("PhiModule: Galois cocycle condition fails");
      }
    }

  for (const auto& g : galois)
    for (long e = 0; e < fL; ++e) {
      // tau(g) o g* Phi = Phi o phi* tau(g)
      GroupElement lhs = G.mul(g.comps[e], Phis[(e + g.shift) % fL]);
      GroupElement rhs = G.mul(Phis[e], g.comps[(e + 1) % fL]);
      if (!(lhs == rhs))
        throw std::invalid_argument("PhiModule: Phi-Galois compatibility fails");
      if (Ns[e] != G.ad(g.comps[e]).apply(Ns[(e + g.shift) % fL]))
        throw std::invalid_argument("PhiModule: N-Galois compatibility fails");
    }
}

std::pair<GroupElement, Vec> collapse(const PhiModule& M, long sigma) {
  M.validate();
  if (sigma < 0 || sigma >= M.fL) throw std::invalid_argument("collapse: bad sigma");
  GroupElement prod = M.G.identity_element();
  for (long j = 0; j < M.fL; ++j) prod = M.G.mul(prod, M.Phis[(sigma + j) % M.fL]);
  return {prod, M.Ns[sigma]};
}

namespace {

// (Phi^s)_0 = Phi_0 Phi_1 ... Phi_{s-1} : D_s -> D_0.
GroupElement phi_power_at0(const PhiModule& M, long s) {
  GroupElement prod = M.G.identity_element();
  for (long j = 0; j < s; ++j) prod = M.G.mul(prod, M.Phis[j % M.fL]);
  return prod;
}

// r(g) = tau(g)_0 o ((Phi^{shift})_0)^{-1}, a linear automorphism of D_0.
GroupElement r_of(const PhiModule& M, const GaloisElt& g) {
  return M.G.mul(g.comps[0], M.G.inv(phi_power_at0(M, g.shift)));
}

}  // namespace

WDPoint fontaine_to_wd(const PhiModule& M) {
  M.validate();
  WDPoint x;
  x.G = M.G;
  x.p = M.p;
  x.fK = M.fK;
  x.N = M.Ns[0];

  x.inertia.table = M.itable;
  x.inertia.identity = M.iidentity;
  x.inertia.theta = M.theta;
  x.inertia.d = M.d;
  long nI = static_cast<long>(M.itable.size());
  x.inertia.tau.clear();
  for (long i = 0; i < nI; ++i) x.inertia.tau.push_back(r_of(M, M.galois[M.q_index(i, 0)]));

  if (M.d > 1) {
    x.Phi = r_of(M, M.galois[M.q_index(M.iidentity, 1)]);
  } else {
    // d = 1: Frobenius of K is Phi^{fK} itself (v(g0) = 1, tau trivial along it)
    x.Phi = M.G.inv(phi_power_at0(M, M.fK));
  }
  require_valid(x);
  return x;
}

PhiModule wd_to_phi_module(const WDPoint& x, long fL) {
  require_valid(x);
  long d = x.inertia.d;
  if (fL != d * x.fK)
    throw std::invalid_argument("wd_to_phi_module: fL must equal inertia.d * fK");
  PhiModule M;
  M.G = x.G;
  M.p = x.p;
  M.fL = fL;
  M.fK = x.fK;
  M.itable = x.inertia.table;
  M.iidentity = x.inertia.identity;
  M.theta = x.inertia.theta;
  M.d = d;

  // theta^d = id is needed for the split Galois model
  for (long i = 0; i < x.inertia.order(); ++i) {
    long t = i;
    for (long j = 0; j < d; ++j) t = x.inertia.theta[t];
    if (t != i)
      throw std::invalid_argument("wd_to_phi_module: theta^d != id, no split model");
  }

  // normal form Phi = (Phi_WD^{-d}, 1, ..., 1)
  GroupElement C = x.G.pow(x.Phi, -d);
  M.Phis.assign(fL, x.G.identity_element());
  M.Phis[0] = C;

  // N_0 = N, N_e = p^{fL-e} N for e >= 1
  M.Ns.assign(fL, x.N);
  for (long e = 1; e < fL; ++e)
    M.Ns[e] = scaled(x.N, Scalar(Rational(x.p)).pow(fL - e));

  // tau(g)_0 = tau_WD(i) Phi_WD^{k} (Phi^{shift})_0; components propagated by
  // tau(g)_{e+1} = Phi_e^{-1} tau(g)_e Phi_{e+shift}
  for (long i = 0; i < x.inertia.order(); ++i)
    for (long k = 0; k < d; ++k) {
      GaloisElt g;
      g.i = i;
      g.k = k;
      g.shift = (k * x.fK) % fL;
      GroupElement head =
          x.G.mul(x.inertia.tau[i], x.G.pow(x.Phi, k == 0 ? 0 : k - d));
      g.comps.assign(fL, head);
      for (long e = 0; e + 1 < fL; ++e)
        g.comps[e + 1] = x.G.mul(x.G.mul(x.G.inv(M.Phis[e]), g.comps[e]),
                                 M.Phis[(e + g.shift) % fL]);
      M.galois.push_back(std::move(g));
    }

  M.validate();
  return M;
}

long hodge_dim(const GroupModel& G, const HodgeType& v) {
  long total = 0;
  for (const auto& lam : v.cochars) {
    auto dec = G.dynamic_decomposition(lam.H);
    for (const auto& [k, sp] : dec)
      if (k < 0) total += sp.dim();
  }
  return total;
}

bool is_regular(const GroupModel& G, const HodgeType& v) {
  for (const auto& lam : v.cochars) {
    auto dec = G.dynamic_decomposition(lam.H);
    auto it = dec.find(0);
    long z = (it == dec.end()) ? 0 : it->second.dim();
    if (z != G.rank()) return false;
  }
  return true;
}

FilteredReport filtered_cohomology(const WDPoint& x, const Cocharacter& lambda_fil) {
  require_valid(x);
  if (x.inertia.order() != 1 || x.inertia.d != 1 || x.fK != 1)
    throw std::invalid_argument(
        "filtered_cohomology: split case only (trivial inertia, d = 1, fK = 1)");
  long g = x.G.group_dim();

  // module-side Frobenius: Ad(Phi_mod) = Ad(Phi_WD)^{-1}
  auto Ainv = x.G.ad(x.Phi).inverse();
  if (!Ainv) throw std::logic_error("filtered_cohomology: Ad(Phi) singular");
  Mat A = *Ainv;
  Mat B = x.G.ad_n(x.N);
  Mat I = Mat::identity(g);
  Scalar pp{Rational(x.p)};

  // pi: functionals vanishing on g_{>=0}(lambda_fil), one row per quotient dim
  Subspace nonneg = Subspace::span(g, {});
  for (const auto& [k, sp] : x.G.dynamic_decomposition(lambda_fil.H))
    if (k >= 0) nonneg = sum(nonneg, sp);
  Mat Wm = mat_from_cols(g, nonneg.basis());
  Subspace ann = kernel(Wm.transpose());
  long qdim = ann.dim();
  Mat pi(qdim, g);
  for (long r = 0; r < qdim; ++r)
    for (long c = 0; c < g; ++c) pi.at(r, c) = ann.basis()[r][c];

  // d0 = [1 - A; B; pi] : V -> V + V + Q
  Mat d0(2 * g + qdim, g);
  Mat top = I - A;
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      d0.at(i, j) = top.at(i, j);
      d0.at(g + i, j) = B.at(i, j);
    }
  for (long i = 0; i < qdim; ++i)
    for (long j = 0; j < g; ++j) d0.at(2 * g + i, j) = pi.at(i, j);

  // d1 = [B | p A - 1 | 0] : V + V + Q -> V
  Mat bot = A * pp - I;
  Mat d1(g, 2 * g + qdim);
  for (long i = 0; i < g; ++i)
    for (long j = 0; j < g; ++j) {
      d1.at(i, j) = B.at(i, j);
      d1.at(i, g + j) = bot.at(i, j);
    }
  if (!(d1 * d0).is_zero()) throw std::logic_error("filtered_cohomology: d1 d0 != 0");

  long r0 = rank(d0), r1 = rank(d1);
  FilteredReport rep;
  rep.hFil0 = g - r0;
  rep.hFil1 = (2 * g + qdim - r1) - r0;
  rep.hFil2 = g - r1;
  return rep;
}

long local_dim(const GroupModel& G, const std::optional<HodgeType>& hodge,
               bool fixed_det, bool l_equals_p) {
  if (l_equals_p && !hodge)
    throw std::invalid_argument("local_dim: Hodge type required when l = p");
  long gdim = fixed_det ? static_cast<long>(G.derived_idx().size()) : G.group_dim();
  long h = l_equals_p ? hodge_dim(G, *hodge) : 0;
  return 1 + gdim + h;
}

GlobalLedger global_ledger(const GlobalLedgerInput& in) {
  if (in.place_degrees.size() != in.gb_dims.size())
    throw std::invalid_argument("global_ledger: mismatched p-adic place data");
  GlobalLedger out;
  out.s = (in.Sinf_size - 1) * in.g0_dim;
  long arch = 0;
  out.odd = true;
  for (long h : in.arch_h0s) {
    out.s += h;
    arch += h;
    out.odd = out.odd && (h == in.oddness_target);
  }
  out.r_min = in.g0_dim;
  out.krull_lower_bound = 1;
  for (size_t i = 0; i < in.place_degrees.size(); ++i)
    out.krull_lower_bound += in.place_degrees[i] * in.gb_dims[i];
  out.krull_lower_bound -= arch;
  return out;
}

}  // namespace wdt
