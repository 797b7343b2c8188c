#include "wdtangent/json_io.hpp"

#include <fstream>

namespace wdt {

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j, long field_d) {
  if (!j.is_string()) throw std::invalid_argument("scalar: expected a string");
  return Scalar::from_string(j.get<std::string>(), field_d);
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j, long field_d) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix: expected a nested array");
  Mat m(static_cast<long>(j.size()), static_cast<long>(j[0].size()));
  for (long i = 0; i < m.rows(); ++i) {
    if (static_cast<long>(j[i].size()) != m.cols())
      throw std::invalid_argument("matrix: ragged rows");
    for (long c = 0; c < m.cols(); ++c) m.at(i, c) = scalar_from_json(j[i][c], field_d);
  }
  return m;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Vec vec_from_json(const json& j, long field_d) {
  if (!j.is_array()) throw std::invalid_argument("vector: expected an array");
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(e, field_d));
  return v;
}

json group_to_json(const GroupModel& G) {
  if (G.kind() == GroupKind::CalG) return json{{"type", "calG"}, {"n", G.n_param()}};
  if (G.blocks().size() == 1) {
    const auto& b = G.blocks()[0];
    return json{{"type", b.det_one ? "SL" : "GL"}, {"n", b.n}};
  }
  json factors = json::array();
  for (const auto& b : G.blocks())
    factors.push_back(json{{"type", b.det_one ? "SL" : "GL"}, {"n", b.n}});
  return json{{"type", "product"}, {"factors", std::move(factors)}};
}

GroupModel group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("group: expected an object with a \"type\"");
  std::string type = j.at("type").get<std::string>();
  if (type == "product") {
    std::vector<GroupModel> factors;
    for (const auto& f : j.at("factors")) factors.push_back(group_from_json(f));
    return GroupModel::product(factors);
  }
  if (type != "GL" && type != "SL" && type != "calG")
    throw std::invalid_argument("group: unknown type \"" + type + "\"");
  if (!j.contains("n")) throw std::invalid_argument("group: missing \"n\"");
  long n = j.at("n").get<long>();
  if (type == "GL") return GroupModel::GL(n);
  if (type == "SL") return GroupModel::SL(n);
  return GroupModel::calG(n);
}

json element_to_json(const GroupModel& G, const GroupElement& e) {
  if (G.kind() == GroupKind::CalG)
    return json{{"g", mat_to_json(e.mat)},
                {"a", scalar_to_json(e.a)},
                {"component", e.component}};
  return mat_to_json(e.mat);
}

GroupElement element_from_json(const GroupModel& G, const json& j, long field_d) {
  if (G.kind() == GroupKind::CalG) {
    if (!j.is_object())
      throw std::invalid_argument("element: calG expects {\"g\",\"a\",\"component\"}");
    return G.element_calG(mat_from_json(j.at("g"), field_d),
                          scalar_from_json(j.at("a"), field_d),
                          j.at("component").get<int>());
  }
  return G.element(mat_from_json(j, field_d));
}

namespace {

void absorb_tag(long& d, const Scalar& s) {
  if (s.d_tag() != 1) {
    if (d != 1 && d != s.d_tag())
      throw std::invalid_argument("field header: mixed surd tags in one document");
    d = s.d_tag();
  }
}

long point_d_tag(const WDPoint& x) {
  long d = 1;
  auto absorb_elt = [&](const GroupElement& e) {
    for (long i = 0; i < e.mat.rows(); ++i)
      for (long j = 0; j < e.mat.cols(); ++j) absorb_tag(d, e.mat.at(i, j));
    absorb_tag(d, e.a);
  };
  absorb_elt(x.Phi);
  for (const auto& t : x.inertia.tau) absorb_elt(t);
  for (const auto& c : x.N) absorb_tag(d, c);
  return d;
}

}  // namespace

json field_header(const WDPoint& x) {
  return json{{"p", x.p}, {"d", point_d_tag(x)}};
}

json wdpoint_to_json(const WDPoint& x) {
  json inertia{{"table", x.inertia.table},
               {"identity", x.inertia.identity},
               {"theta", x.inertia.theta},
               {"d", x.inertia.d}};
  json taus = json::array();
  for (const auto& t : x.inertia.tau) taus.push_back(element_to_json(x.G, t));
  inertia["tau"] = std::move(taus);
  return json{{"field", field_header(x)},
              {"p", x.p},
              {"fK", x.fK},
              {"group", group_to_json(x.G)},
              {"Phi", element_to_json(x.G, x.Phi)},
              {"N", vec_to_json(x.N)},
              {"inertia", std::move(inertia)}};
}

WDPoint wdpoint_from_json(const json& j) {
  try {
    WDPoint x;
    long field_d = 1;
    if (j.contains("field") && j.at("field").contains("d"))
      field_d = j.at("field").at("d").get<long>();
    x.G = group_from_json(j.at("group"));
    x.p = j.at("p").get<long>();
    x.fK = j.at("fK").get<long>();
    x.Phi = element_from_json(x.G, j.at("Phi"), field_d);
    x.N = vec_from_json(j.at("N"), field_d);
    const json& in = j.at("inertia");
    x.inertia.table = in.at("table").get<std::vector<std::vector<long>>>();
    x.inertia.identity = in.contains("identity") ? in.at("identity").get<long>() : 0;
    x.inertia.theta = in.at("theta").get<std::vector<long>>();
    x.inertia.d = in.at("d").get<long>();
    for (const auto& t : in.at("tau"))
      x.inertia.tau.push_back(element_from_json(x.G, t, field_d));
    return x;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed WDPoint document: ") + e.what());
  }
}

namespace {

long module_d_tag(const PhiModule& M) {
  long d = 1;
  auto absorb_elt = [&](const GroupElement& e) {
    for (long i = 0; i < e.mat.rows(); ++i)
      for (long j = 0; j < e.mat.cols(); ++j) absorb_tag(d, e.mat.at(i, j));
    absorb_tag(d, e.a);
  };
  for (const auto& e : M.Phis) absorb_elt(e);
  for (const auto& g : M.galois)
    for (const auto& c : g.comps) absorb_elt(c);
  for (const auto& n : M.Ns)
    for (const auto& c : n) absorb_tag(d, c);
  return d;
}

}  // namespace

json phimodule_to_json(const PhiModule& M) {
  json phis = json::array(), ns = json::array(), gal = json::array();
  for (const auto& e : M.Phis) phis.push_back(element_to_json(M.G, e));
  for (const auto& n : M.Ns) ns.push_back(vec_to_json(n));
  for (const auto& g : M.galois) {
    json comps = json::array();
    for (const auto& c : g.comps) comps.push_back(element_to_json(M.G, c));
    gal.push_back(json{{"i", g.i}, {"k", g.k}, {"shift", g.shift},
                       {"comps", std::move(comps)}});
  }
  return json{{"field", json{{"p", M.p}, {"d", module_d_tag(M)}}},
              {"p", M.p},
              {"fL", M.fL},
              {"fK", M.fK},
              {"group", group_to_json(M.G)},
              {"Phis", std::move(phis)},
              {"Ns", std::move(ns)},
              {"itable", M.itable},
              {"identity", M.iidentity},
              {"theta", M.theta},
              {"d", M.d},
              {"galois", std::move(gal)}};
}

PhiModule phimodule_from_json(const json& j) {
  try {
    PhiModule M;
    long field_d = 1;
    if (j.contains("field") && j.at("field").contains("d"))
      field_d = j.at("field").at("d").get<long>();
    M.G = group_from_json(j.at("group"));
    M.p = j.at("p").get<long>();
    M.fL = j.at("fL").get<long>();
    M.fK = j.at("fK").get<long>();
    for (const auto& e : j.at("Phis")) M.Phis.push_back(element_from_json(M.G, e, field_d));
    for (const auto& n : j.at("Ns")) M.Ns.push_back(vec_from_json(n, field_d));
    M.itable = j.at("itable").get<std::vector<std::vector<long>>>();
    M.iidentity = j.at("identity").get<long>();
    M.theta = j.at("theta").get<std::vector<long>>();
    M.d = j.at("d").get<long>();
    for (const auto& g : j.at("galois")) {
      GaloisElt ge;
      ge.i = g.at("i").get<long>();
      ge.k = g.at("k").get<long>();
      ge.shift = g.at("shift").get<long>();
      for (const auto& c : g.at("comps"))
        ge.comps.push_back(element_from_json(M.G, c, field_d));
      M.galois.push_back(std::move(ge));
    }
    return M;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed PhiModule document: ") + e.what());
  }
}

json report_to_json(const CohomologyReport& r) {
  return json{{"h0", r.h0},
              {"h1", r.h1},
              {"h2", r.h2},
              {"dual_h0", r.dual_h0},
              {"smooth", r.smooth},
              {"tangent_dim_framed", r.tangent_dim_framed}};
}

json certificate_to_json(const SmoothPointCertificate& c) {
  return json{{"point", wdpoint_to_json(c.point)},
              {"lambda_H", vec_to_json(c.lambda.H)},
              {"lambda_weights", c.lambda.weights},
              {"c", element_to_json(c.point.G, c.c)},
              {"report", report_to_json(c.report)},
              {"scalar_field", c.field}};
}

json ledger_to_json(const GlobalLedger& l) {
  return json{{"s", l.s},
              {"r_min", l.r_min},
              {"krull_lower_bound", l.krull_lower_bound},
              {"odd", l.odd}};
}

GlobalLedgerInput ledger_input_from_json(const json& j) {
  try {
    GlobalLedgerInput in;
    in.Sinf_size = j.at("Sinf_size").get<long>();
    in.arch_h0s = j.at("arch_h0s").get<std::vector<long>>();
    in.g0_dim = j.at("g0_dim").get<long>();
    in.place_degrees = j.at("place_degrees").get<std::vector<long>>();
    in.gb_dims = j.at("gb_dims").get<std::vector<long>>();
    in.oddness_target = j.at("oddness_target").get<long>();
    return in;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed ledger document: ") + e.what());
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace wdt
