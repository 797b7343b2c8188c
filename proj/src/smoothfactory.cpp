#include "wdtangent/smoothfactory.hpp"

#include <stdexcept>

namespace wdt {

namespace {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Finite order certificate: a power bound from the cyclotomic lcm of the
// realization size (doubled for the non-identity calG component), plus the
// root-of-unity witness on the characteristic polynomial.
void require_finite_order(const GroupModel& G, const GroupElement& c) {
  long n0 = cyclotomic_bound(G.std_dim());
  long bound = (G.kind() == GroupKind::CalG) ? 2 * n0 : n0;
  if (!(G.pow(c, bound) == G.identity_element()))
    throw std::invalid_argument("twist_by: c is not of finite order (power test)");
  if (G.kind() == GroupKind::Matrix) {
    // root-of-unity witness: the realization spectrum meets mu_{bound}
    Poly gcd = gcd_with_unity(char_poly(c.mat), bound);
    if (gcd.degree() < 1)
      throw std::invalid_argument("twist_by: no root-of-unity eigenvalue witness for c");
  }
}

void require_normalizes_tau(const GroupModel& G, const InertialData& inertia,
                            const GroupElement& c) {
  GroupElement ci = G.inv(c);
  for (const auto& t : inertia.tau) {
    GroupElement conj = G.mul(G.mul(c, t), ci);
    bool hit = false;
    for (const auto& u : inertia.tau) hit = hit || (conj == u);
    if (!hit)
      throw std::invalid_argument("twist_by: c does not normalize the image of tau");
  }
}

}  // namespace

WDPoint standard_sl2_point(long p, long fK) {
  if (!is_prime(p)) throw std::invalid_argument("standard_sl2_point: p must be prime");
  GroupModel G = GroupModel::SL(2);
  Scalar s = sqrt_power(p, fK);
  Mat phi(2, 2);
  phi.at(0, 0) = s;
  phi.at(1, 1) = s.inverse();
  Mat nm(2, 2);
  nm.at(0, 1) = Scalar(1);
  WDPoint x{G, p, fK, G.element(phi), G.lie_coords(nm), InertialData::trivial(G)};
  require_valid(x);
  return x;
}

SmoothPointCertificate smooth_point(const GroupModel& G, const InertialData& inertia,
                                    const Vec& N, long p, long fK) {
  inertia.validate(G);
  Subspace Z = G.fixed_lie(inertia.tau);
  if (!Z.contains(N))
    throw std::invalid_argument("smooth_point: N is not in Lie Z_G(tau)");
  Cocharacter lam = associated_cocharacter(G, N, Z);
  Scalar s = sqrt_power(p, fK);
  GroupElement Phi = cocharacter_at(G, lam, s);

  SmoothPointCertificate cert;
  cert.point = WDPoint{G, p, fK, Phi, N, inertia};
  require_valid(cert.point);
  cert.lambda = lam;
  cert.c = G.identity_element();
  cert.report = cohomology_dims(cert.point);
  cert.field = (fK % 2 == 0) ? "Q" : ("Q(sqrt(" + std::to_string(p) + "))");
  if (cert.report.h2 != 0)
    throw std::logic_error("smooth_point: h2 != 0 at a constructed point");
  if (!is_very_smooth(cert.point))
    throw std::logic_error("smooth_point: constructed point is not very smooth");
  return cert;
}

SmoothPointCertificate twist_by(const SmoothPointCertificate& cert, const GroupElement& c) {
  const GroupModel& G = cert.point.G;
  G.check_membership(c);
  if (G.ad(c).apply(cert.lambda.H) != cert.lambda.H)
    throw std::invalid_argument("twist_by: Ad(c) does not fix dlambda(1)");
  if (G.ad(c).apply(cert.point.N) != cert.point.N)
    throw std::invalid_argument("twist_by: Ad(c) does not fix N");
  require_normalizes_tau(G, cert.point.inertia, c);
  require_finite_order(G, c);

  SmoothPointCertificate out = cert;
  out.c = c;
  out.point.Phi = G.mul(cert.point.Phi, c);
  require_valid(out.point);
  out.report = cohomology_dims(out.point);
  if (out.report.h2 != 0)
    throw std::logic_error("twist_by: twist destroyed smoothness (h2 != 0)");
  return out;
}

WDPoint pushforward(const Morphism& f, const WDPoint& x) {
  if (!(x.G.name() == f.source.name()))
    throw std::invalid_argument("pushforward: point does not live in the source group");
  require_valid(x);

  // runtime intertwining assertion on the elements actually used
  auto check_intertwine = [&](const GroupElement& g) {
    Mat adg = x.G.ad(g);
    Mat adfg = f.target.ad(f.elt_map(g));
    if (adfg * f.lie_map != f.lie_map * adg)
      throw std::logic_error("pushforward: Ad-intertwining fails for " + f.name);
  };
  check_intertwine(x.Phi);
  for (const auto& t : x.inertia.tau) check_intertwine(t);

  WDPoint y;
  y.G = f.target;
  y.p = x.p;
  y.fK = x.fK;
  y.Phi = f.elt_map(x.Phi);
  y.N = f.lie_map.apply(x.N);
  y.inertia = x.inertia;
  for (auto& t : y.inertia.tau) t = f.elt_map(t);
  require_valid(y);
  return y;
}

}  // namespace wdt
