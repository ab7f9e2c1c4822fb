#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "koszul/resolution.hpp"
#include "koszul/verifier.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// { "algebra", "dims": [[vertex, degree, dim]...], "action": { arrow: [[degree, rows]...] } }
// Vertices and arrows are written by name; numeric indices are accepted on input.
Json module_to_json(const GradedModule& m);
GradedModule module_from_json(const Json& j, const AlgebraPtr& a);

Json presentation_to_json(const QuadraticPresentation& p);
// Terms [[p, [[vertex, shift, multiplicity]...]]...]; differentials
// [[p, [[row, col, [coords...]]...]]...] in degree-basis coordinates.
Json complex_to_json(const SymbolicComplex& c);
Json ext_table_to_json(const ExtTable& t);
Json certificate_to_json(const KoszulCertificate& c);
Json report_to_json(const VerificationReport& r);

std::string ext_table_text(const ExtTable& t);
std::string complex_text(const SymbolicComplex& c);
std::string report_text(const VerificationReport& r);

}  // namespace koszul
