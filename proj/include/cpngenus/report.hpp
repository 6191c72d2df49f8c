#pragma once

#include "cpngenus/classifier.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace cpngenus {

/// A finished report in both output formats. Rendering is deterministic:
/// identical inputs give byte-identical text and JSON.
struct ReportDocument {
    std::string text;
    nlohmann::ordered_json json;
};

/// Report for `verify` and `classify-cp4`; `command` is the echoed
/// invocation.
ReportDocument render_classification(const ClassificationReport& rep, const std::string& command);

/// Report for `genus-table`. Throws std::invalid_argument for an unknown
/// genus name (valid: todd, ahat, L, chi-y) or a degree above 8.
ReportDocument render_genus_table(const std::string& genus_name, unsigned max_degree,
                                  const std::string& command);

}  // namespace cpngenus
