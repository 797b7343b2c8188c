#pragma once

// JSON (de)serialization for the CLI document format.  All Scalars are
// strings ("a", "a/b", "a/b+c/e*r"); the surd discriminant d is declared once
// in the document's "field" header {"p": ..., "d": ...}.  Matrices are nested
// arrays of Scalar strings; calG elements are {"g", "a", "component"}.
//
// WDPoint document:
//   {"field":{"p":2,"d":2}, "p":2, "fK":1,
//    "group":{"type":"GL","n":2} | {"type":"SL","n":2} | {"type":"calG","n":2}
//            | {"type":"product","factors":[...]},
//    "Phi": element, "N": [Scalar strings in lie-basis coordinates],
//    "inertia":{"table":[[...]],"tau":[elements],"theta":[...],"d":1}}

#include <json.hpp>

#include "wdtangent/phimod.hpp"
#include "wdtangent/smoothfactory.hpp"

namespace wdt {

using nlohmann::json;

json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, long field_d);

json mat_to_json(const Mat& m);
Mat mat_from_json(const json& j, long field_d);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j, long field_d);

json group_to_json(const GroupModel& G);
GroupModel group_from_json(const json& j);

json element_to_json(const GroupModel& G, const GroupElement& e);
GroupElement element_from_json(const GroupModel& G, const json& j, long field_d);

// the "field" header: p and the surd discriminant actually used by the point
json field_header(const WDPoint& x);

json wdpoint_to_json(const WDPoint& x);
WDPoint wdpoint_from_json(const json& j);

json phimodule_to_json(const PhiModule& M);
PhiModule phimodule_from_json(const json& j);

json report_to_json(const CohomologyReport& r);  // flat object
json certificate_to_json(const SmoothPointCertificate& c);

json ledger_to_json(const GlobalLedger& l);
GlobalLedgerInput ledger_input_from_json(const json& j);

// Parse errors surface as std::invalid_argument with a readable message.
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

}  // namespace wdt
