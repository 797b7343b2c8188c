// Python bindings.  Documents cross the boundary as JSON strings (the same
// format the CLI reads and writes); the pure-python wrapper in
// python/wdtangent/__init__.py turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wdtangent/json_io.hpp"

namespace py = pybind11;
using namespace wdt;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

WDPoint point_of(const std::string& text) { return wdpoint_from_json(parse(text)); }

Vec nilpotent_of(const GroupModel& G, const std::vector<long>& partition) {
  if (partition.empty()) return Vec(G.group_dim(), Scalar(0));
  return jordan_nilpotent(G, partition);
}

Cocharacter staircase(const GroupModel& G, long n) {
  Mat h(G.std_dim(), G.std_dim());
  for (long i = 0; i < n; ++i) h.at(i, i) = Scalar(n - 1 - i);
  Cocharacter lam;
  lam.H = G.lie_coords(h);
  return lam;
}

}  // namespace

PYBIND11_MODULE(_wdtangent, m) {
  m.doc() = "exact deformation diagnostics for G-valued Weil-Deligne representations";

  m.def("catalog", [] {
    json out = json::array();
    for (const GroupModel& G :
         {GroupModel::GL(2), GroupModel::GL(3), GroupModel::GL(4), GroupModel::SL(2),
          GroupModel::product({GroupModel::GL(2), GroupModel::GL1()}), GroupModel::calG(2),
          GroupModel::calG(3)})
      out.push_back(json{{"name", G.name()},
                         {"spec", group_to_json(G)},
                         {"group_dim", G.group_dim()},
                         {"rank", G.rank()}});
    return out.dump();
  });

  m.def("validate", [](const std::string& doc) { return validate(point_of(doc)); },
        py::arg("point"), "constraint violations of a WD point document (empty = valid)");

  m.def("cohomology", [](const std::string& doc) {
    return report_to_json(cohomology_dims(point_of(doc))).dump();
  },
        py::arg("point"));

  m.def("is_smooth", [](const std::string& doc) { return is_smooth(point_of(doc)); },
        py::arg("point"));
  m.def("is_very_smooth",
        [](const std::string& doc) { return is_very_smooth(point_of(doc)); },
        py::arg("point"));

  m.def("smooth_point",
        [](const std::string& group, const std::vector<long>& partition, long p, long fK) {
          GroupModel G = group_from_json(parse(group));
          return certificate_to_json(
                     smooth_point(G, InertialData::trivial(G), nilpotent_of(G, partition),
                                  p, fK))
              .dump();
        },
        py::arg("group"), py::arg("partition"), py::arg("p"), py::arg("fK"),
        "certified smooth point over the trivial inertial type");

  m.def("local_dim",
        [](const std::string& group, long degree, bool regular_hodge, bool fixed_det) {
          GroupModel G = group_from_json(parse(group));
          std::optional<HodgeType> v;
          if (regular_hodge)
            v = HodgeType{std::vector<Cocharacter>(
                degree, staircase(G, G.kind() == GroupKind::CalG ? G.n_param()
                                                                 : G.std_dim()))};
          return local_dim(G, v, fixed_det, regular_hodge);
        },
        py::arg("group"), py::arg("degree") = 1, py::arg("regular_hodge") = true,
        py::arg("fixed_det") = false);

  m.def("global_ledger", [](const std::string& doc) {
    return ledger_to_json(global_ledger(ledger_input_from_json(parse(doc)))).dump();
  },
        py::arg("input"));

  m.def("to_phi_module",
        [](const std::string& doc, long fL) {
          WDPoint x = point_of(doc);
          if (fL <= 0) fL = x.inertia.d * x.fK;
          return phimodule_to_json(wd_to_phi_module(x, fL)).dump();
        },
        py::arg("point"), py::arg("fL") = 0);

  m.def("from_phi_module", [](const std::string& doc) {
    return wdpoint_to_json(fontaine_to_wd(phimodule_from_json(parse(doc)))).dump();
  },
        py::arg("module"));
}
