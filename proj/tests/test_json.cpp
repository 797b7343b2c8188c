#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wdtangent/json_io.hpp"

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
  return a.inertia.theta == b.inertia.theta && a.inertia.d == b.inertia.d &&
         a.G.name() == b.G.name();
}

}  // namespace

TEST_CASE("scalar strings roundtrip through JSON") {
  for (const Scalar& s : {Scalar(0), Scalar(-7), Scalar(Rational(3, 4)),
                          Scalar::surd(Rational(1, 2), Rational(-2, 3), 5),
                          Scalar::surd(0, 1, 2)}) {
    json j = scalar_to_json(s);
    CHECK(scalar_from_json(j, s.d_tag()) == s);
  }
}

TEST_CASE("group specs roundtrip") {
  for (const GroupModel& G :
       {GroupModel::GL(3), GroupModel::SL(2), GroupModel::calG(2),
        GroupModel::product({GroupModel::GL(2), GroupModel::GL1()})}) {
    GroupModel H = group_from_json(group_to_json(G));
    CHECK(H.name() == G.name());
    CHECK(H.group_dim() == G.group_dim());
  }
  CHECK_THROWS_AS(group_from_json(json{{"type", "E8"}}), std::invalid_argument);
}

TEST_CASE("WDPoint documents roundtrip, rational and surd") {
  GroupModel G = GroupModel::GL(2);
  Mat phi(2, 2);
  phi.at(0, 0) = Scalar(9);
  phi.at(1, 1) = Scalar(1);
  WDPoint x{G, 3, 2, G.element(phi), e_vec(G, 0, 1), InertialData::trivial(G)};
  json j = wdpoint_to_json(x);
  CHECK(j.at("field").at("d") == 1);
  CHECK(same_point(x, wdpoint_from_json(j)));

  Scalar s = sqrt_power(3, 1);
  Mat phi2(2, 2);
  phi2.at(0, 0) = s;
  phi2.at(1, 1) = s.inverse();
  WDPoint y{G, 3, 1, G.element(phi2), e_vec(G, 0, 1), InertialData::trivial(G)};
  json jy = wdpoint_to_json(y);
  CHECK(jy.at("field").at("d") == 3);
  CHECK(same_point(y, wdpoint_from_json(jy)));
}

TEST_CASE("calG elements serialize structurally") {
  GroupModel G = GroupModel::calG(2);
  GroupElement jay = G.element_calG(Mat::identity(2), Scalar(1), 1);
  json j = element_to_json(G, jay);
  CHECK(j.at("component") == 1);
  CHECK(element_from_json(G, j, 1) == jay);

  WDPoint x{G, 2, 2, G.identity_element(), Vec(G.group_dim(), Scalar(0)),
            InertialData::trivial(G)};
  CHECK(same_point(x, wdpoint_from_json(wdpoint_to_json(x))));
}

TEST_CASE("ramified point with inertia data roundtrips") {
  GroupModel G = GroupModel::GL(2);
  Mat t(2, 2);
  t.at(0, 0) = Scalar(1);
  t.at(1, 1) = Scalar(-1);
  InertialData I = InertialData::cyclic(G, 2, G.element(t), 2);
  Mat phi(2, 2);
  phi.at(0, 0) = Scalar(3);
  phi.at(1, 1) = Scalar(1);
  WDPoint x{G, 3, 2, G.element(phi), Vec(G.group_dim(), Scalar(0)), I};
  WDPoint y = wdpoint_from_json(wdpoint_to_json(x));
  CHECK(same_point(x, y));
  CHECK(validate(y).empty());
}

TEST_CASE("PhiModule documents roundtrip and stay valid") {
  GroupModel G = GroupModel::GL(2);
  Mat t(2, 2);
  t.at(0, 0) = Scalar(1);
  t.at(1, 1) = Scalar(-1);
  InertialData I = InertialData::cyclic(G, 2, G.element(t), 2);
  Mat phi(2, 2);
  phi.at(0, 0) = Scalar(3);
  phi.at(1, 1) = Scalar(1);
  WDPoint x{G, 3, 1, G.element(phi), Vec(G.group_dim(), Scalar(0)), I};
  REQUIRE(validate(x).empty());

  PhiModule M = wd_to_phi_module(x, 2);
  PhiModule M2 = phimodule_from_json(phimodule_to_json(M));
  CHECK_NOTHROW(M2.validate());
  CHECK(M2.fL == M.fL);
  CHECK(M2.galois.size() == M.galois.size());
  CHECK(same_point(x, fontaine_to_wd(M2)));

  CHECK_THROWS_AS(phimodule_from_json(json{{"p", 3}}), std::invalid_argument);
}

TEST_CASE("reports and ledgers") {
  CohomologyReport r{1, 1, 0, 0, true, 4};
  json j = report_to_json(r);
  CHECK(j.at("h2") == 0);
  CHECK(j.at("smooth") == true);

  GlobalLedger l{1, 5, 1, true};
  json jl = ledger_to_json(l);
  CHECK(jl.at("krull_lower_bound") == 1);

  json in{{"Sinf_size", 1}, {"arch_h0s", {1}},      {"g0_dim", 5},
          {"place_degrees", {1}}, {"gb_dims", {1}}, {"oddness_target", 1}};
  GlobalLedgerInput gi = ledger_input_from_json(in);
  CHECK(global_ledger(gi).krull_lower_bound == 1);
  CHECK_THROWS_AS(ledger_input_from_json(json{{"Sinf_size", 1}}), std::invalid_argument);
}

TEST_CASE("malformed documents throw invalid_argument") {
  CHECK_THROWS_AS(wdpoint_from_json(json{{"p", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(scalar_from_json(json(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(mat_from_json(json::array(), 1), std::invalid_argument);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), std::invalid_argument);
}

TEST_CASE("determinism: serialization is byte-stable") {
  WDPoint x = wdpoint_from_json(wdpoint_to_json(WDPoint{
      GroupModel::GL(2), 3, 2,
      GroupModel::GL(2).element([] {
        Mat m(2, 2);
        m.at(0, 0) = Scalar(9);
        m.at(1, 1) = Scalar(1);
        return m;
      }()),
      e_vec(GroupModel::GL(2), 0, 1), InertialData::trivial(GroupModel::GL(2))}));
  CHECK(wdpoint_to_json(x).dump() == wdpoint_to_json(x).dump());
}
