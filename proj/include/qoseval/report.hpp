#pragma once

#include "qoseval/evaluate.hpp"

#include <json.hpp>

#include <string>

namespace qoseval {

enum class ReportFormat { text, json };

nlohmann::json report_to_json(const EvaluationReport& report);

/// Inverse of report_to_json; throws ValidationError on malformed input.
EvaluationReport report_from_json(const nlohmann::json& doc);

nlohmann::json whatif_to_json(const WhatIfResult& result);

/// Layered table: application rows, RAN summary, network summary. Values are
/// printed to 3 decimals.
std::string render_text(const EvaluationReport& report);
std::string render_text(const WhatIfResult& result);

std::string render(const EvaluationReport& report, ReportFormat format);
std::string render(const WhatIfResult& result, ReportFormat format);

/// Human-readable dump of a derived comparison matrix and its weight vectors.
std::string render_matrix(const MatrixReport& m);

}  // namespace qoseval
