#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdtangent/phimod.hpp"
#include "wdtangent/smoothfactory.hpp"

using namespace wdt;

namespace {

Vec e_vec(const GroupModel& G, long i, long j) {
  Mat m(G.std_dim(), G.std_dim());
  m.at(i, j) = Scalar(1);
  return G.lie_coords(m);
}

bool same_point(const WDPoint& a, const WDPoint& b) {
  if (!(a.Phi == b.Phi) || a.N != b.N || a.p != b.p || a.fK != b.fK) return false;
  if (a.inertia.order() != b.inertia.order()) return false;
  for (long i = 0; i < a.inertia.order(); ++i)
    if (!(a.inertia.tau[i] == b.inertia.tau[i])) return false;
  return a.inertia.theta == b.inertia.theta && a.inertia.d == b.inertia.d;
}

}  // namespace

TEST_CASE("roundtrip identity on the standard point, fL = 1") {
  WDPoint x = standard_sl2_point(3, 1);
  PhiModule M = wd_to_phi_module(x, 1);
  CHECK(M.fL == 1);
  WDPoint y = fontaine_to_wd(M);
  CHECK(same_point(x, y));
}

TEST_CASE("collapse: fL = 1 returns Phi itself; cyclic windows agree") {
  WDPoint x = standard_sl2_point(3, 1);
  PhiModule M1 = wd_to_phi_module(x, 1);
  auto [c, n] = collapse(M1, 0);
  CHECK(c == M1.Phis[0]);
  CHECK(n == x.N);

  // d = 2 normal-form module: collapse at every sigma is Phi_WD^{-d}
  GroupModel G = GroupModel::GL(2);
  InertialData I = InertialData::trivial(G);
  I.d = 2;
  Mat phi(2, 2);
  phi.at(0, 0) = Scalar(9);
  phi.at(1, 1) = Scalar(1);
  WDPoint y{G, 3, 2, G.element(phi), e_vec(G, 0, 1), I};
  PhiModule M = wd_to_phi_module(y, 4);
  GroupElement C = G.pow(y.Phi, -2);
  for (long sigma = 0; sigma < 4; ++sigma) {
    auto [cs, ns] = collapse(M, sigma);
    CHECK(cs == C);
    CHECK(ns == M.Ns[sigma]);
  }
  CHECK_THROWS_AS(collapse(M, 4), std::invalid_argument);
}

TEST_CASE("roundtrip with unramified quadratic extension (d = 2)") {
  // trivial inertia group but d = 2: fL = 2 fK
  GroupModel G = GroupModel::GL(2);
  Scalar s = sqrt_power(3, 2);
  Mat phi(2, 2);
  phi.at(0, 0) = s;
  phi.at(1, 1) = s.inverse();
  InertialData I = InertialData::trivial(G);
  I.d = 2;
  WDPoint x{G, 3, 2, G.element(phi), e_vec(G, 0, 1), I};
  REQUIRE(validate(x).empty());
  PhiModule M = wd_to_phi_module(x, 4);
  CHECK(M.fL == 4);
  CHECK(M.galois.size() == 2);
  WDPoint y = fontaine_to_wd(M);
  CHECK(same_point(x, y));
  // N transport: N_e = p^{fL-e} N
  CHECK(M.Ns[1] == [&] {
    Vec v = x.N;
    for (auto& c : v) c *= Scalar(27);
    return v;
  }());
}

TEST_CASE("roundtrip with order-2 inertia, fL = 2") {
  GroupModel G = GroupModel::GL(2);
  Mat t(2, 2);
  t.at(0, 0) = Scalar(1);
  t.at(1, 1) = Scalar(-1);
  InertialData I = InertialData::cyclic(G, 2, G.element(t), 2);
  Vec zero(G.group_dim(), Scalar(0));
  for (const auto& x : sample_fiber(G, I, zero, 3, 1, 5, 13)) {
    WDPoint xd = x;
    xd.inertia.d = 2;
    PhiModule M = wd_to_phi_module(xd, 2);
    CHECK(M.galois.size() == 4);
    WDPoint y = fontaine_to_wd(M);
    CHECK(same_point(xd, y));
  }
}

TEST_CASE("fL = 3 roundtrips on sampled points") {
  GroupModel G = GroupModel::GL(2);
  InertialData I = InertialData::trivial(G);
  I.d = 3;
  for (const auto& x : sample_fiber(G, InertialData::trivial(G), e_vec(G, 0, 1), 2, 1, 5, 4)) {
    WDPoint xd = x;
    xd.inertia.d = 3;
    PhiModule M = wd_to_phi_module(xd, 3);
    WDPoint y = fontaine_to_wd(M);
    CHECK(same_point(xd, y));
  }
}

TEST_CASE("r(W_L) centralizes r(W_K)") {
  GroupModel G = GroupModel::GL(2);
  Scalar s = sqrt_power(3, 2);
  Mat phi(2, 2);
  phi.at(0, 0) = s;
  phi.at(1, 1) = s.inverse();
  InertialData I = InertialData::trivial(G);
  I.d = 2;
  WDPoint x{G, 3, 2, G.element(phi), e_vec(G, 0, 1), I};
  PhiModule M = wd_to_phi_module(x, 4);
  // r(g0^{d k}) = collapsed Phi^{-fL k}: commutes with Phi_WD and all tau
  auto [C, n0] = collapse(M, 0);
  GroupElement rWL = G.inv(C);
  CHECK(G.mul(rWL, x.Phi) == G.mul(x.Phi, rWL));
  for (const auto& t : x.inertia.tau) CHECK(G.mul(rWL, t) == G.mul(t, rWL));
}

TEST_CASE("invalid modules rejected") {
  WDPoint x = standard_sl2_point(3, 1);
  PhiModule M = wd_to_phi_module(x, 1);
  SUBCASE("broken N transport") {
    M.Ns[0] = e_vec(M.G, 1, 0);  // e21 has the wrong Ad(Phi)-eigenvalue
    CHECK_THROWS_AS(M.validate(), std::invalid_argument);
  }
  SUBCASE("wrong fL") {
    M.fL = 2;
    CHECK_THROWS_AS(M.validate(), std::invalid_argument);
  }
  SUBCASE("incompatible fL request") {
    CHECK_THROWS_AS(wd_to_phi_module(x, 2), std::invalid_argument);
  }
}

TEST_CASE("hodge_dim and is_regular") {
  GroupModel G = GroupModel::GL(2);
  // lambda = diag(t^1, t^0)
  Mat h(2, 2);
  h.at(0, 0) = Scalar(1);
  Cocharacter lam;
  lam.H = G.lie_coords(h);
  HodgeType v{{lam}};
  CHECK(hodge_dim(G, v) == 1);
  CHECK(is_regular(G, v));

  Cocharacter triv;
  triv.H = Vec(G.group_dim(), Scalar(0));
  HodgeType v0{{triv}};
  CHECK(hodge_dim(G, v0) == 0);
  CHECK(!is_regular(G, v0));

  GroupModel G3 = GroupModel::GL(3);
  Mat h3(3, 3);
  h3.at(0, 0) = Scalar(2);
  h3.at(1, 1) = Scalar(1);
  Cocharacter lam3;
  lam3.H = G3.lie_coords(h3);
  HodgeType v3{{lam3, lam3}};  // [K:Qp] = 2
  CHECK(hodge_dim(G3, v3) == 6);
  CHECK(is_regular(G3, v3));
  // regular type on GL(n): n(n-1)/2 per embedding
  CHECK(hodge_dim(G3, v3) == 2 * 3 * (3 - 1) / 2);
}

TEST_CASE("filtered cohomology") {
  GroupModel G = GroupModel::GL(2);
  Scalar s = sqrt_power(3, 1);
  Mat phi(2, 2);
  phi.at(0, 0) = s;
  phi.at(1, 1) = s.inverse();
  WDPoint x{G, 3, 1, G.element(phi), e_vec(G, 0, 1), InertialData::trivial(G)};

  Mat h(2, 2);
  h.at(0, 0) = Scalar(1);
  Cocharacter lam;
  lam.H = G.lie_coords(h);

  FilteredReport f = filtered_cohomology(x, lam);
  CohomologyReport u = cohomology_dims(x);
  // quotient has dim 1; tangent bookkeeping: dim G - h0 + h1 = dim G + h2 + dim G/P
  CHECK(G.group_dim() - f.hFil0 + f.hFil1 == G.group_dim() + f.hFil2 + 1);
  CHECK(f.hFil2 == u.h2);

  // trivial filtration reduces to the unfiltered dims
  Cocharacter triv;
  triv.H = Vec(G.group_dim(), Scalar(0));
  FilteredReport f0 = filtered_cohomology(x, triv);
  CHECK(f0.hFil0 == u.h0);
  CHECK(f0.hFil1 == u.h1);
  CHECK(f0.hFil2 == u.h2);

  // N = 0, generic Phi, regular filtration: hFil2 = 0 and the identity holds
  Mat phi2(2, 2);
  phi2.at(0, 0) = Scalar(2) * s;
  phi2.at(1, 1) = s.inverse();
  WDPoint y{G, 3, 1, G.element(phi2), Vec(G.group_dim(), Scalar(0)),
            InertialData::trivial(G)};
  FilteredReport fy = filtered_cohomology(y, lam);
  CHECK(fy.hFil2 == 0);
  CHECK(G.group_dim() - fy.hFil0 + fy.hFil1 == G.group_dim() + 1);

  // preconditions
  WDPoint bad = standard_sl2_point(3, 2);
  CHECK_THROWS_AS(filtered_cohomology(bad, lam), std::invalid_argument);
}

TEST_CASE("local_dim") {
  GroupModel G = GroupModel::GL(2);
  Mat h(2, 2);
  h.at(0, 0) = Scalar(1);
  Cocharacter lam;
  lam.H = G.lie_coords(h);
  HodgeType v{{lam}};
  CHECK(local_dim(G, v, false, true) == 6);   // 1 + 4 + 1
  CHECK(local_dim(G, std::nullopt, false, false) == 5);
  GroupModel cg = GroupModel::calG(2);
  CHECK(local_dim(cg, std::nullopt, true, false) == 5);  // 1 + dim gl2
  CHECK_THROWS_AS(local_dim(G, std::nullopt, false, true), std::invalid_argument);
}

TEST_CASE("global ledger") {
  // F = Q, calG(2): one p-adic place of degree 1, dim G/B = 1, arch h0 = 1
  GlobalLedgerInput a;
  a.Sinf_size = 1;
  a.arch_h0s = {1};
  a.g0_dim = 5;
  a.place_degrees = {1};
  a.gb_dims = {1};
  a.oddness_target = 1;
  GlobalLedger ra = global_ledger(a);
  CHECK(ra.krull_lower_bound == 1);
  CHECK(ra.odd);
  CHECK(ra.s == 1);  // (1-1)*5 + 1
  CHECK(ra.r_min == 5);

  // two real places, both odd, one p-adic place of degree 2
  GlobalLedgerInput b = a;
  b.arch_h0s = {1, 1};
  b.place_degrees = {2};
  GlobalLedger rb = global_ledger(b);
  CHECK(rb.krull_lower_bound == 1);
  CHECK(rb.odd);

  // non-odd contrasting case
  GlobalLedgerInput c = a;
  c.arch_h0s = {3};
  GlobalLedger rc = global_ledger(c);
  CHECK(rc.krull_lower_bound == -1);
  CHECK(!rc.odd);
}
