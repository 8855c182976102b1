#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nfrgauge/error.hpp"

namespace nfrgauge::likert {

struct LikertScale {
  std::string name;
  std::vector<std::pair<std::string, int>> categories;  // declaration order
  bool operator==(const LikertScale&) const = default;
};

/// 5, 6, or 7 categories; unique labels; consecutive strictly monotone values.
void check_scale(const LikertScale& scale);

/// The classic agree/disagree scale. 7 points is the full table; 5 drops the
/// two "Somewhat" rows, 6 drops "Undecided"; values renumber top-down.
LikertScale standard_scale(int points);

int min_value(const LikertScale& scale);
int max_value(const LikertScale& scale);

enum class Polarity { Favorable, Unfavorable };

const char* to_string(Polarity p);

struct SurveyKey {
  std::vector<std::pair<std::string, Polarity>> items;  // item id -> polarity
};

void check_key(const SurveyKey& key);

struct ResponseSet {
  std::string scale_name;
  // respondent id -> item id -> category label
  std::map<std::string, std::map<std::string, std::string>> rows;
};

struct AttitudeScore {
  std::string respondent_id;
  int score = 0;
  int min_possible = 0;
  int max_possible = 0;
};

/// Category value of a choice; unfavorable items are reverse-coded
/// (min+max-value) so all items point the same direction.
int item_value(const LikertScale& scale, const std::string& choice, Polarity polarity);

/// Summed item values over the key; answers must cover every key item
/// exactly once.
AttitudeScore score_respondent(const LikertScale& scale, const SurveyKey& key,
                               const std::map<std::string, std::string>& answers,
                               const std::string& respondent_id = {});

struct SurveyStats {
  int count = 0;
  double mean = 0.0;
  int median = 0;  // lower-middle value for even counts
  int min = 0;
  int max = 0;
  int min_possible = 0;
  int max_possible = 0;
  std::map<int, int> histogram;  // score -> respondents
};

SurveyStats aggregate_scores(const std::vector<AttitudeScore>& scores);

enum class Attitude { Favorable, Unfavorable, Undecided };

const char* to_string(Attitude a);

struct AttitudeDecision {
  Attitude decision = Attitude::Undecided;
  double margin = 0.0;   // mean - neutral point
  double neutral = 0.0;  // items * scale midvalue
  double band = 0.0;     // absolute dead-band half-width
};

/// Favorable when the mean clears the neutral point by more than the
/// dead-band, unfavorable when it falls short by more; undecided between.
/// band_fraction is a share of the full score range, in [0, 0.5].
AttitudeDecision attitude_decision(const SurveyStats& stats, int n_items,
                                   const LikertScale& scale,
                                   double band_fraction = 0.05);

}  // namespace nfrgauge::likert
