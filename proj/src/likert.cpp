#include "nfrgauge/likert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace nfrgauge::likert {

void check_scale(const LikertScale& scale) {
  const std::size_t n = scale.categories.size();
  if (n < 5 || n > 7) {
    std::ostringstream os;
    os << "scale '" << scale.name << "' has " << n
       << " categories; 5, 6, or 7 required";
    throw Error(ErrorKind::Validation, os.str());
  }
  std::set<std::string> labels;
  for (const auto& [label, value] : scale.categories) {
    (void)value;
    if (!labels.insert(label).second)
      throw Error(ErrorKind::Validation,
                  "scale '" + scale.name + "' has duplicate label '" + label + "'");
  }
  const int step = scale.categories[1].second - scale.categories[0].second;
  if (step != 1 && step != -1)
    throw Error(ErrorKind::Validation,
                "scale '" + scale.name + "' values must be consecutive integers");
  for (std::size_t i = 1; i < n; ++i) {
    if (scale.categories[i].second - scale.categories[i - 1].second != step)
      throw Error(ErrorKind::Validation,
                  "scale '" + scale.name + "' values must be consecutive integers");
  }
}

LikertScale standard_scale(int points) {
  LikertScale scale;
  switch (points) {
    case 7:
      scale.name = "likert7";
      scale.categories = {{"Strongly Agree", 7},    {"Agree", 6},
                          {"Agree Somewhat", 5},    {"Undecided", 4},
                          {"Disagree Somewhat", 3}, {"Disagree", 2},
                          {"Strongly Disagree", 1}};
      break;
    case 6:
      scale.name = "likert6";
      scale.categories = {{"Strongly Agree", 6}, {"Agree", 5},
                          {"Agree Somewhat", 4}, {"Disagree Somewhat", 3},
                          {"Disagree", 2},       {"Strongly Disagree", 1}};
      break;
    case 5:
      scale.name = "likert5";
      scale.categories = {{"Strongly Agree", 5},
                          {"Agree", 4},
                          {"Undecided", 3},
                          {"Disagree", 2},
                          {"Strongly Disagree", 1}};
      break;
    default: {
      std::ostringstream os;
      os << "standard scale requires 5, 6, or 7 points, got " << points;
      throw Error(ErrorKind::Argument, os.str());
    }
  }
  return scale;
}

int min_value(const LikertScale& scale) {
  int m = scale.categories.front().second;
  for (const auto& [label, value] : scale.categories) {
    (void)label;
    m = std::min(m, value);
  }
  return m;
}

int max_value(const LikertScale& scale) {
  int m = scale.categories.front().second;
  for (const auto& [label, value] : scale.categories) {
    (void)label;
    m = std::max(m, value);
  }
  return m;
}

const char* to_string(Polarity p) {
  return p == Polarity::Favorable ? "favorable" : "unfavorable";
}

void check_key(const SurveyKey& key) {
  if (key.items.empty())
    throw Error(ErrorKind::Validation, "survey key has no items");
  std::set<std::string> ids;
  for (const auto& [id, polarity] : key.items) {
    (void)polarity;
    if (!ids.insert(id).second)
      throw Error(ErrorKind::Validation, "survey key has duplicate item '" + id + "'");
  }
}

int item_value(const LikertScale& scale, const std::string& choice,
               Polarity polarity) {
  for (const auto& [label, value] : scale.categories) {
    if (label == choice) {
      if (polarity == Polarity::Favorable) return value;
      return min_value(scale) + max_value(scale) - value;
    }
  }
  throw Error(ErrorKind::Lookup,
              "unknown label '" + choice + "' on scale '" + scale.name + "'");
}

AttitudeScore score_respondent(const LikertScale& scale, const SurveyKey& key,
                               const std::map<std::string, std::string>& answers,
                               const std::string& respondent_id) {
  check_key(key);
  std::vector<std::string> missing, extra;
  std::set<std::string> key_ids;
  for (const auto& [id, polarity] : key.items) {
    (void)polarity;
    key_ids.insert(id);
    if (!answers.count(id)) missing.push_back(id);
  }
  for (const auto& [id, choice] : answers) {
    (void)choice;
    if (!key_ids.count(id)) extra.push_back(id);
  }
  if (!missing.empty() || !extra.empty()) {
    std::ostringstream os;
    os << "respondent '" << respondent_id << "':";
    if (!missing.empty()) {
      os << " missing items:";
      for (const auto& id : missing) os << " " << id;
      os << ";";
    }
    if (!extra.empty()) {
      os << " unexpected items:";
      for (const auto& id : extra) os << " " << id;
    }
    throw Error(ErrorKind::Completeness, os.str());
  }

  AttitudeScore result;
  result.respondent_id = respondent_id;
  for (const auto& [id, polarity] : key.items)
    result.score += item_value(scale, answers.at(id), polarity);
  const int n = static_cast<int>(key.items.size());
  result.min_possible = n * min_value(scale);
  result.max_possible = n * max_value(scale);
  return result;
}

SurveyStats aggregate_scores(const std::vector<AttitudeScore>& scores) {
  if (scores.empty())
    throw Error(ErrorKind::Argument, "aggregate_scores: empty score list");
  SurveyStats stats;
  stats.min_possible = scores.front().min_possible;
  stats.max_possible = scores.front().max_possible;
  std::vector<int> values;
  values.reserve(scores.size());
  long long sum = 0;
  for (const auto& s : scores) {
    if (s.min_possible != stats.min_possible || s.max_possible != stats.max_possible)
      throw Error(ErrorKind::Consistency,
                  "scores from surveys with different possible ranges mixed "
                  "(respondent '" + s.respondent_id + "')");
    values.push_back(s.score);
    sum += s.score;
    ++stats.histogram[s.score];
  }
  std::sort(values.begin(), values.end());
  stats.count = static_cast<int>(values.size());
  stats.mean = static_cast<double>(sum) / static_cast<double>(values.size());
  stats.median = values[(values.size() - 1) / 2];
  stats.min = values.front();
  stats.max = values.back();
  return stats;
}

const char* to_string(Attitude a) {
  switch (a) {
    case Attitude::Favorable: return "Favorable";
    case Attitude::Unfavorable: return "Unfavorable";
    case Attitude::Undecided: return "Undecided";
  }
  return "?";
}

AttitudeDecision attitude_decision(const SurveyStats& stats, int n_items,
                                   const LikertScale& scale,
                                   double band_fraction) {
  if (!(band_fraction >= 0.0 && band_fraction <= 0.5)) {
    std::ostringstream os;
    os << "band fraction " << band_fraction << " outside [0, 0.5]";
    throw Error(ErrorKind::Range, os.str());
  }
  const int minv = min_value(scale);
  const int maxv = max_value(scale);
  if (stats.min_possible != n_items * minv || stats.max_possible != n_items * maxv) {
    std::ostringstream os;
    os << "stats possible range [" << stats.min_possible << ", "
       << stats.max_possible << "] does not match " << n_items << " items on scale '"
       << scale.name << "'";
    throw Error(ErrorKind::Consistency, os.str());
  }
  AttitudeDecision d;
  d.neutral = n_items * (minv + maxv) / 2.0;
  d.band = band_fraction * (stats.max_possible - stats.min_possible);
  d.margin = stats.mean - d.neutral;
  if (d.margin > d.band)
    d.decision = Attitude::Favorable;
  else if (d.margin < -d.band)
    d.decision = Attitude::Unfavorable;
  else
    d.decision = Attitude::Undecided;
  return d;
}

}  // namespace nfrgauge::likert
