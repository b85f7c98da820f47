#include "grlie/report.hpp"

#include <cstdio>

namespace grlie {
namespace {

const char* pattern_kind(BadPattern::Kind k) {
  switch (k) {
    case BadPattern::Kind::zero_residues: return "zero_residues";
    case BadPattern::Kind::all_equal: return "all_equal";
    case BadPattern::Kind::negatives: return "negatives";
  }
  return "?";
}

Json degree_list(const std::vector<Degree>& ds) {
  Json a = Json::array();
  for (const Degree& d : ds) a.push_back(d.to_string());
  return a;
}

}  // namespace

Json tuple_class_json(const TupleClass& c) {
  Json j;
  j["good"] = c.good;
  if (c.witness) j["witness"] = *c.witness;
  if (c.pattern) {
    Json p;
    p["kind"] = pattern_kind(c.pattern->kind);
    if (c.pattern->kind != BadPattern::Kind::zero_residues) p["base"] = c.pattern->base;
    p["lambdas"] = c.pattern->lambdas;
    p["count_base"] = c.pattern->count_base;
    j["pattern"] = std::move(p);
  }
  if (c.orders_rejected) j["orders_rejected"] = *c.orders_rejected;
  j["certificate"] = c.to_string();
  return j;
}

Json verdict_json(const TupleVerdict& v) {
  Json j;
  j["tuple"] = degree_list(v.tuple);
  j["classification"] = tuple_class_json(v.classification);
  j["dim_ambient"] = v.dim_ambient;
  j["dim_kernel"] = v.dim_kernel;
  j["dim_span"] = v.dim_span;
  j["span_subset_kernel"] = v.span_subset_kernel;
  j["kernel_subset_span"] = v.kernel_subset_span;
  j["good_structure"] = v.good_structure ? Json(*v.good_structure) : Json(nullptr);
  j["verified"] = v.verified();
  j["notes"] = v.notes;
  if (v.counterexample) j["counterexample"] = *v.counterexample;
  return j;
}

Json sweep_json(const SweepResult& r) {
  Json j;
  j["tuples_checked"] = r.tuples_checked;
  j["failures"] = r.failures;
  j["all_verified"] = r.all_verified();
  j["counterexamples"] = r.counterexamples;
  j["notes"] = r.notes;
  Json vs = Json::array();
  for (const TupleVerdict& v : r.verdicts) vs.push_back(verdict_json(v));
  j["verdicts"] = std::move(vs);
  return j;
}

Json subspace_json(const Subspace& s, bool with_rows) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  j["dim"] = s.dim();
  if (with_rows) {
    j["keys"] = s.keys();
    Json rows = Json::array();
    for (const auto& row : s.rows().rows()) {
      Json r = Json::array();
      for (const Scalar& x : row) r.push_back(x.to_string());
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  }
  return j;
}

Json independence_json(const IndependenceEvidence& e) {
  Json j;
  j["independent"] = e.independent;
  j["identities_checked"] = e.identities_checked;
  if (!e.failing_witness.empty()) j["failing_witness"] = e.failing_witness;
  j["failures"] = e.failures;
  return j;
}

Json no_finite_basis_json(const NoFiniteBasisEvidence& e) {
  Json j;
  j["level"] = e.level;
  j["span_route"] = e.span_route;
  j["algebra_route"] = e.algebra_route;
  j["independent"] = e.independent();
  j["notes"] = e.notes;
  return j;
}

Json report_document(const std::string& command, const std::string& field, Json parameters,
                     Json verdicts, bool pass, const std::vector<std::string>& counterexamples) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["field"] = field;
  j["parameters"] = std::move(parameters);
  j["verdicts"] = std::move(verdicts);
  j["counterexamples"] = counterexamples;
  j["pass"] = pass;
  return j;
}

void attach_timing(Json& report, double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", seconds);
  report["timing"] = Json{{"seconds", buf}};
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace grlie
