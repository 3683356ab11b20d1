#include "modlift/exact/json.hpp"

namespace modlift::exact {

using io::Json;

Json to_json(const Certificate& c) {
  Json j;
  j["name"] = c.name;
  j["holds"] = c.holds;
  j["detail"] = c.detail;
  return j;
}

namespace {

Json certificates(const std::vector<Certificate>& cs) {
  Json out = Json::array();
  for (const Certificate& c : cs) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(const UnitReport& r) {
  Json j;
  j["unit"] = r.unit;
  j["no_preimage"] = r.no_preimage ? Json(to_string(*r.no_preimage)) : Json();
  j["kernel_element"] = r.kernel_element ? Json(to_string(*r.kernel_element)) : Json();
  j["certificates"] = certificates(r.certificates);
  return j;
}

Json to_json(const ExactReport& r) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["check"] = r.check;
  j["x"] = to_string(r.x);
  j["p"] = r.p;
  j["q"] = r.q;
  j["passed"] = r.passed;
  j["samples"] = r.samples;
  j["certificates"] = certificates(r.certificates);
  Json u = Json::array();
  for (const Unresolved& e : r.unresolved) u.push_back(e.equation);
  j["unresolved"] = u;
  return j;
}

Json to_json(const NonlocalWitness& w) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["check"] = "nonlocal";
  j["x"] = to_string(w.x);
  j["y"] = to_string(w.y);
  j["x_report"] = to_json(w.x_report);
  j["y_report"] = to_json(w.y_report);
  j["sum_checks"] = w.sum_checks;
  j["sum_is_identity"] = w.sum_is_identity;
  j["passed"] = !w.x_report.unit && !w.y_report.unit && w.sum_is_identity;
  return j;
}

Json to_json(const FiepVerdict& v) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["check"] = "fiep";
  j["p"] = v.p;
  j["q"] = v.q;
  j["premise"] = to_json(v.premise);
  j["premise_verified"] = v.premise_verified;
  j["verdict"] = v.verdict;
  j["label"] = v.label;
  j["citation"] = v.citation;
  j["passed"] = v.premise_verified;
  return j;
}

Json to_json(const RemarkResult& r) {
  Json j;
  j["schema_version"] = io::kSchemaVersion;
  j["check"] = "remark";
  j["a"] = r.a;
  j["b"] = r.b;
  j["i_holds"] = r.i_holds;
  j["ii_holds"] = r.ii_holds;
  j["i_witness"] = r.i_witness ? Json(*r.i_witness) : Json();
  j["ii_witness"] = r.ii_witness ? Json(*r.ii_witness) : Json();
  j["i_certificate"] = r.i_certificate;
  j["ii_certificate"] = r.ii_certificate;
  std::string summary = r.i_holds && r.ii_holds ? "both (i) and (ii)"
                        : r.i_holds            ? "(i) only"
                        : r.ii_holds           ? "(ii) only"
                                               : "neither (i) nor (ii)";
  j["summary"] = summary;
  return j;
}

}  // namespace modlift::exact
