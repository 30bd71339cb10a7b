#ifndef SYNLA_REPORT_JSON_HPP
#define SYNLA_REPORT_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "synla/genlattice.hpp"
#include "synla/proj_effect.hpp"
#include "synla/vlcert.hpp"

namespace synla {

/// Structured output is the single source of truth for every report; the
/// text rendering derives from the JSON document.

nlohmann::json matrix_to_json(const SymMatrix& m);
nlohmann::json named_matrix_to_json(const NamedMatrix& m);

nlohmann::json closure_to_json(const ClosureReport& r);
nlohmann::json cert_report_to_json(const CertReport& r);
nlohmann::json classification_to_json(const ClassificationVerdict& v,
                                      const std::vector<std::string>& names);
nlohmann::json disjoint_to_json(const DisjointVerdict& v);
nlohmann::json maximality_to_json(const MaximalityReport& r);

/// Plain-text rendering of a structured report document.
std::string render_text(const nlohmann::json& doc);

}  // namespace synla

#endif  // SYNLA_REPORT_JSON_HPP
