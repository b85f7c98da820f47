#pragma once
// Machine-readable run reports. One JSON document per run: command, echoed
// parameters, field, verdict array, counterexamples, pass flag. Content is
// deterministic for fixed inputs and tool version; wall-clock timing is
// attached outside the verdict body and only on request. Exact values
// (scalars, field elements) are serialized as strings, never as floats.

#include <json.hpp>

#include <string>
#include <vector>

#include "grlie/independence.hpp"
#include "grlie/tideal.hpp"
#include "grlie/tuples.hpp"

namespace grlie {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::json;

Json tuple_class_json(const TupleClass& c);
Json verdict_json(const TupleVerdict& v);
Json sweep_json(const SweepResult& r);
/// Dimensions always; echelon rows (exact strings) only when with_rows.
Json subspace_json(const Subspace& s, bool with_rows);
Json independence_json(const IndependenceEvidence& e);
Json no_finite_basis_json(const NoFiniteBasisEvidence& e);

/// Assembles the top-level document.
Json report_document(const std::string& command, const std::string& field, Json parameters,
                     Json verdicts, bool pass, const std::vector<std::string>& counterexamples);

/// Adds a "timing" block; keeps the verdict body byte-identical without it.
void attach_timing(Json& report, double seconds);

/// Stable rendering: sorted keys, two-space indent, trailing newline.
std::string render_json(const Json& report);

}  // namespace grlie
