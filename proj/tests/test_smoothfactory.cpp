#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdtangent/smoothfactory.hpp"

using namespace wdt;

namespace {

Vec e_vec(const GroupModel& G, long i, long j) {
  Mat m(G.std_dim(), G.std_dim());
  m.at(i, j) = Scalar(1);
  return G.lie_coords(m);
}

}  // namespace

TEST_CASE("standard sl2 point") {
  WDPoint x = standard_sl2_point(2, 1);
  CHECK(x.Phi.mat.at(0, 0) == Scalar::surd(0, 1, 2));
  CHECK(validate(x).empty());
  CHECK(is_smooth(x));

  WDPoint y = standard_sl2_point(2, 2);
  CHECK(y.Phi.mat.at(0, 0) == Scalar(2));
  CHECK(is_smooth(y));

  WDPoint z = standard_sl2_point(3, 1);
  z.N = Vec(z.G.group_dim(), Scalar(0));
  CHECK(validate(z).empty());
  CHECK(!is_smooth(z));

  CHECK_THROWS_AS(standard_sl2_point(4, 1), std::invalid_argument);
}

TEST_CASE("smooth_point on GL(2) and GL(3), trivial inertia") {
  GroupModel G2 = GroupModel::GL(2);
  SmoothPointCertificate c2 =
      smooth_point(G2, InertialData::trivial(G2), e_vec(G2, 0, 1), 3, 1);
  CHECK(c2.report.h2 == 0);
  CHECK(c2.report.smooth);
  CHECK(c2.report.tangent_dim_framed == G2.group_dim());
  CHECK(c2.field == "Q(sqrt(3))");
  Scalar s = sqrt_power(3, 1);
  CHECK(c2.point.Phi.mat.at(0, 0) == s);
  CHECK(c2.point.Phi.mat.at(1, 1) == s.inverse());

  GroupModel G3 = GroupModel::GL(3);
  SmoothPointCertificate c3 =
      smooth_point(G3, InertialData::trivial(G3), e_vec(G3, 0, 1), 3, 2);
  CHECK(c3.report.h2 == 0);
  CHECK(c3.field == "Q");
  CHECK(c3.point.Phi.mat.at(0, 0) == Scalar(3));
  CHECK(c3.point.Phi.mat.at(1, 1) == Scalar(3).inverse());
  CHECK(c3.point.Phi.mat.at(2, 2) == Scalar(1));
}

TEST_CASE("smooth_point on calG(2)") {
  GroupModel G = GroupModel::calG(2);
  Vec N(G.group_dim(), Scalar(0));
  N[1] = Scalar(1);
  SmoothPointCertificate c = smooth_point(G, InertialData::trivial(G), N, 2, 2);
  CHECK(c.report.h2 == 0);
  CHECK(c.point.Phi.component == 0);
  CHECK(c.report.tangent_dim_framed == G.group_dim());
}

TEST_CASE("smooth_point with ramification") {
  GroupModel G = GroupModel::GL(3);
  Mat t(3, 3);
  t.at(0, 0) = Scalar(1);
  t.at(1, 1) = Scalar(1);
  t.at(2, 2) = Scalar(-1);
  InertialData I = InertialData::cyclic(G, 2, G.element(t));
  SmoothPointCertificate c = smooth_point(G, I, e_vec(G, 0, 1), 2, 2);
  CHECK(c.report.h2 == 0);
  CHECK(c.report.tangent_dim_framed == 9);
  // N outside the centralizer is rejected
  CHECK_THROWS_AS(smooth_point(G, I, e_vec(G, 0, 2), 2, 2), std::invalid_argument);
}

TEST_CASE("smooth_point with N = 0") {
  GroupModel G = GroupModel::GL(2);
  Vec zero(G.group_dim(), Scalar(0));
  SmoothPointCertificate c = smooth_point(G, InertialData::trivial(G), zero, 5, 1);
  CHECK(c.report.h2 == 0);
  CHECK(c.point.Phi == G.identity_element());  // lambda is constant
}

TEST_CASE("twist_by: identity and central -I on GL(2)") {
  GroupModel G = GroupModel::GL(2);
  SmoothPointCertificate c =
      smooth_point(G, InertialData::trivial(G), e_vec(G, 0, 1), 3, 1);
  SmoothPointCertificate same = twist_by(c, G.identity_element());
  CHECK(same.point.Phi == c.point.Phi);

  GroupElement minus = G.element(Mat::identity(2) * Scalar(-1));
  SmoothPointCertificate tw = twist_by(c, minus);
  CHECK(tw.report.smooth);
  CHECK(tw.point.Phi.mat.at(0, 0) == c.point.Phi.mat.at(0, 0) * Scalar(-1));
  CHECK(validate(tw.point).empty());
}

TEST_CASE("twist_by rejects bad twists") {
  GroupModel G = GroupModel::GL(2);
  SmoothPointCertificate c =
      smooth_point(G, InertialData::trivial(G), e_vec(G, 0, 1), 3, 1);
  // infinite order
  Mat two = Mat::identity(2) * Scalar(2);
  CHECK_THROWS_AS(twist_by(c, G.element(two)), std::invalid_argument);
  // does not fix dlambda(1)
  Mat sw(2, 2);
  sw.at(0, 1) = Scalar(1);
  sw.at(1, 0) = Scalar(1);
  CHECK_THROWS_AS(twist_by(c, G.element(sw)), std::invalid_argument);
}

TEST_CASE("twist_by: calG component switch") {
  GroupModel G = GroupModel::calG(2);
  Vec zero(G.group_dim(), Scalar(0));
  SmoothPointCertificate c = smooth_point(G, InertialData::trivial(G), zero, 3, 2);
  GroupElement jay = G.element_calG(Mat::identity(2), Scalar(1), 1);
  SmoothPointCertificate tw = twist_by(c, jay);
  CHECK(tw.point.Phi.component == 1);
  CHECK(tw.report.smooth);
  CHECK(validate(tw.point).empty());
}

TEST_CASE("pushforward along det") {
  WDPoint x = standard_sl2_point(2, 1);
  Morphism f = morphism_det(2);
  // source of det is GL(2); re-express the SL2 point there
  GroupModel GL2 = GroupModel::GL(2);
  WDPoint xg{GL2, x.p, x.fK, GL2.element(x.Phi.mat), e_vec(GL2, 0, 1),
             InertialData::trivial(GL2)};
  WDPoint y = pushforward(f, xg);
  CHECK(y.G.name() == f.target.name());
  CHECK(y.Phi == f.target.identity_element());
  for (const auto& cc : y.N) CHECK(cc.is_zero());
}

TEST_CASE("pushforward along tensor(2,2): smooth in GL(4)") {
  Morphism f = morphism_tensor(2, 2);
  GroupModel P = f.source;
  Scalar s = sqrt_power(3, 1);
  Mat phi(4, 4);
  phi.at(0, 0) = s;
  phi.at(1, 1) = s.inverse();
  phi.at(2, 2) = s;
  phi.at(3, 3) = s.inverse();
  Mat nm(4, 4);
  nm.at(0, 1) = Scalar(1);
  nm.at(2, 3) = Scalar(1);
  WDPoint x{P, 3, 1, P.element(phi), P.lie_coords(nm), InertialData::trivial(P)};
  WDPoint y = pushforward(f, x);
  CHECK(y.G.name() == "GL(4)");
  // Phi' has eigenvalues {q, 1, 1, 1/q}
  CHECK(y.Phi.mat.at(0, 0) == Scalar(3));
  CHECK(y.Phi.mat.at(3, 3) == Scalar(3).inverse());
  // N' = e tensor 1 + 1 tensor e
  Mat nr = y.G.lie_realization(y.N);
  CHECK(!nr.is_zero());
  CHECK(is_smooth(y));
}

TEST_CASE("pushforward of the standard point along sl2_from_triple hits the GL(3) point") {
  GroupModel G3 = GroupModel::GL(3);
  Vec N = e_vec(G3, 0, 1);
  SL2Triple t = jacobson_morozov(G3, N);
  Morphism f = morphism_sl2_from_triple(G3, t.N, t.H, t.Y);
  WDPoint x = standard_sl2_point(3, 2);
  WDPoint y = pushforward(f, x);
  SmoothPointCertificate ref =
      smooth_point(G3, InertialData::trivial(G3), N, 3, 2);
  CHECK(y.Phi == ref.point.Phi);
  CHECK(y.N == ref.point.N);
  CHECK(is_smooth(y));
}

TEST_CASE("pushforward rejects points from the wrong group") {
  Morphism f = morphism_det(2);
  WDPoint x = standard_sl2_point(2, 1);  // lives in SL(2), not GL(2)
  CHECK_THROWS_AS(pushforward(f, x), std::invalid_argument);
}
