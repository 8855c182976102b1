#pragma once

#include <string>
#include <vector>

#include "nfrgauge/dsl.hpp"
#include "nfrgauge/evaluator.hpp"

namespace nfrgauge::report {

/// Stable key order, declaration-ordered arrays; byte-identical across runs
/// on identical inputs.
std::string to_json(const eval::EvaluationReport& report);

/// Aligned plain-text tables with the same content as the JSON form.
std::string to_text(const eval::EvaluationReport& report);

std::string classification_json(const dsl::RequirementSpec& spec);
std::string classification_text(const dsl::RequirementSpec& spec);

std::string survey_json(const eval::SurveyReport& survey, int n_items);
std::string survey_text(const eval::SurveyReport& survey, int n_items);

std::string diagnostics_json(const std::vector<dsl::Diagnostic>& diagnostics);

}  // namespace nfrgauge::report
