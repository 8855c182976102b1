#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nfrgauge/dsl.hpp"
#include "nfrgauge/goal_graph.hpp"
#include "nfrgauge/ingest.hpp"
#include "nfrgauge/likert.hpp"

namespace nfrgauge::eval {

enum class Kind { FR, MNFR, SNFR, Vague };

const char* to_string(Kind kind);

struct Classification {
  Kind kind = Kind::Vague;
  std::string rationale;
};

/// boolean check -> FR, metric threshold -> M-NFR, survey/fuzzy/template ->
/// S-NFR, no clause -> Vague with a rationale.
Classification classify(const dsl::Requirement& req);

struct MnfrOutcome {
  bool passed = false;
  double margin = 0.0;     // positive = headroom
  double aggregate = 0.0;  // the compared statistic
  dsl::Aggregator aggregator = dsl::Aggregator::Max;
};

/// Applies the comparator to the aggregated series. Aggregator precedence:
/// explicit override, then the requirement's own, then max.
MnfrOutcome evaluate_mnfr(const dsl::MetricThreshold& check,
                          const ingest::MeasurementSeries& series,
                          std::optional<dsl::Aggregator> override_agg = {});

enum class OutcomeType { PassFail, Degree, Unevaluated };

struct Outcome {
  OutcomeType type = OutcomeType::Unevaluated;
  // PassFail
  bool passed = false;
  double margin = 0.0;
  std::optional<double> aggregate;  // M-NFR only
  // Degree
  double degree = 0.0;
  std::string label;
  // Unevaluated
  std::string reason;
};

struct RequirementResult {
  std::string id;
  std::string statement;
  Classification classification;
  Outcome outcome;
};

struct SurveyReport {
  likert::SurveyStats stats;
  likert::AttitudeDecision decision;
};

struct TemplateReport {
  fuzzy::TemplateOutcome outcome;
};

struct RootReport {
  std::string id;
  std::optional<double> value;  // empty = no evaluated leaf below it
  double threshold = goals::kDefaultRootThreshold;
  bool satisfied = false;
};

struct EvaluationReport {
  std::string project;
  std::vector<RequirementResult> results;  // one per requirement, spec order
  std::vector<std::pair<std::string, double>> goal_satisfactions;  // node order
  std::vector<RootReport> roots;
  std::vector<goals::Conflict> conflicts;
  std::vector<std::pair<std::string, SurveyReport>> surveys;
  std::vector<std::pair<std::string, TemplateReport>> templates;

  struct Summary {
    int requirements = 0;
    int fr = 0, mnfr = 0, snfr = 0, vague = 0;
    int passed = 0, failed = 0, evaluated_degrees = 0, unevaluated = 0;
    int roots_total = 0, roots_satisfied = 0, roots_unevaluated = 0;
    int conflicts = 0;
  } summary;

  /// True when a pass/fail requirement failed or an evaluated root missed
  /// its threshold (the conditions behind exit code 1).
  bool has_failures() const;
};

struct EvalOptions {
  std::optional<double> band_override;  // decision band, fraction of range
  std::optional<dsl::Aggregator> aggregator_override;  // M-NFR aggregation
};

/// Loads the data directory (measurements.csv, checks.csv, per-survey
/// <name>.responses.csv and <name>.key.csv), evaluates every requirement,
/// propagates goal satisfactions, and detects conflicts. Missing bindings
/// mark the requirement unevaluated; only directory-level I/O aborts.
EvaluationReport evaluate_project(const dsl::RequirementSpec& spec,
                                  const std::filesystem::path& data_dir,
                                  const EvalOptions& options = {});

}  // namespace nfrgauge::eval
