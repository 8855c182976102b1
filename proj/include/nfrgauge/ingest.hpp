#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "nfrgauge/error.hpp"
#include "nfrgauge/likert.hpp"

namespace nfrgauge::ingest {

struct MeasurementSeries {
  std::string metric;
  std::string unit;
  std::vector<double> samples;  // row order preserved
};

struct SeriesSummary {
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double p95 = 0.0;  // nearest-rank
};

/// CSV with header `respondent_id,item_id,choice`; every choice must be a
/// label of the scale, duplicate (respondent, item) pairs are rejected.
likert::ResponseSet load_responses(const std::filesystem::path& path,
                                   const likert::LikertScale& scale);

/// CSV with header `item_id,polarity`; polarity is favorable or unfavorable.
likert::SurveyKey load_survey_key(const std::filesystem::path& path);

/// Deterministic inverse of load_responses (rows sorted by respondent, item).
void write_responses(const likert::ResponseSet& responses,
                     const std::filesystem::path& path);

/// CSV with header `metric,unit,value`; one series per metric, both metric
/// order and row order preserved.
std::vector<MeasurementSeries> load_measurements(const std::filesystem::path& path);

/// CSV with header `check,passed`; passed is true or false.
std::map<std::string, bool> load_checks(const std::filesystem::path& path);

/// Exact min/max/mean; p95 is the ceil(0.95*n)-th smallest sample.
SeriesSummary summarize(const MeasurementSeries& series);

}  // namespace nfrgauge::ingest
