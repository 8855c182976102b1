#include "nfrgauge/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace nfrgauge::eval {

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::FR: return "FR";
    case Kind::MNFR: return "M-NFR";
    case Kind::SNFR: return "S-NFR";
    case Kind::Vague: return "Vague";
  }
  return "?";
}

Classification classify(const dsl::Requirement& req) {
  Classification c;
  if (std::holds_alternative<dsl::BooleanCheck>(req.verification)) {
    c.kind = Kind::FR;
    c.rationale = "boolean check";
  } else if (std::holds_alternative<dsl::MetricThreshold>(req.verification)) {
    c.kind = Kind::MNFR;
    c.rationale = "metric threshold";
  } else if (std::holds_alternative<dsl::LikertSurvey>(req.verification)) {
    c.kind = Kind::SNFR;
    c.rationale = "likert survey";
  } else if (std::holds_alternative<dsl::FuzzyAssessment>(req.verification)) {
    c.kind = Kind::SNFR;
    c.rationale = "fuzzy assessment";
  } else if (std::holds_alternative<dsl::TemplateAssessment>(req.verification)) {
    c.kind = Kind::SNFR;
    c.rationale = "template assessment";
  } else {
    c.kind = Kind::Vague;
    c.rationale = "no verification clause: \"" + req.statement +
                  "\" can be neither checked nor scaled as written";
  }
  return c;
}

namespace {

double aggregate_series(const ingest::MeasurementSeries& series,
                        dsl::Aggregator agg) {
  const auto summary = ingest::summarize(series);
  switch (agg) {
    case dsl::Aggregator::Max: return summary.max;
    case dsl::Aggregator::Min: return summary.min;
    case dsl::Aggregator::Mean: return summary.mean;
    case dsl::Aggregator::P95: return summary.p95;
  }
  return summary.max;
}

}  // namespace

MnfrOutcome evaluate_mnfr(const dsl::MetricThreshold& check,
                          const ingest::MeasurementSeries& series,
                          std::optional<dsl::Aggregator> override_agg) {
  if (series.metric != check.metric)
    throw Error(ErrorKind::Data, "series metric '" + series.metric +
                                     "' does not match requirement metric '" +
                                     check.metric + "'");
  MnfrOutcome out;
  out.aggregator =
      override_agg.value_or(check.aggregator.value_or(dsl::Aggregator::Max));
  out.aggregate = aggregate_series(series, out.aggregator);
  switch (check.comparator) {
    case dsl::Comparator::Less:
      out.passed = out.aggregate < check.bound;
      out.margin = check.bound - out.aggregate;
      break;
    case dsl::Comparator::LessEq:
      out.passed = out.aggregate <= check.bound;
      out.margin = check.bound - out.aggregate;
      break;
    case dsl::Comparator::Greater:
      out.passed = out.aggregate > check.bound;
      out.margin = out.aggregate - check.bound;
      break;
    case dsl::Comparator::GreaterEq:
      out.passed = out.aggregate >= check.bound;
      out.margin = out.aggregate - check.bound;
      break;
  }
  return out;
}

bool EvaluationReport::has_failures() const {
  for (const auto& result : results)
    if (result.outcome.type == OutcomeType::PassFail && !result.outcome.passed)
      return true;
  for (const auto& root : roots)
    if (root.value && !root.satisfied) return true;
  return false;
}

namespace {

namespace fs = std::filesystem;

class ProjectEvaluator {
 public:
  ProjectEvaluator(const dsl::RequirementSpec& spec, const fs::path& data_dir,
                   const EvalOptions& options)
      : spec_(spec), data_dir_(data_dir), options_(options) {}

  EvaluationReport run() {
    if (!fs::exists(data_dir_) || !fs::is_directory(data_dir_))
      throw Error(ErrorKind::Run,
                  "data directory '" + data_dir_.string() + "' does not exist");
    load_measurements();
    load_checks();

    report_.project = spec_.project_name;
    for (const auto& req : spec_.requirements) {
      RequirementResult result;
      result.id = req.id;
      result.statement = req.statement;
      result.classification = classify(req);
      try {
        result.outcome = evaluate(req, result.classification);
      } catch (const Error& e) {
        result.outcome.type = OutcomeType::Unevaluated;
        result.outcome.reason = e.what();
      }
      report_.results.push_back(std::move(result));
    }

    propagate_goals();
    report_.conflicts = goals::detect_conflicts(spec_.contribution_links());
    summarize();
    return std::move(report_);
  }

 private:
  const dsl::RequirementSpec& spec_;
  fs::path data_dir_;
  EvalOptions options_;
  EvaluationReport report_;

  std::map<std::string, ingest::MeasurementSeries> series_;
  std::optional<std::string> measurements_problem_;
  std::map<std::string, bool> checks_;
  std::optional<std::string> checks_problem_;
  std::map<std::string, likert::SurveyKey> survey_keys_;
  std::map<std::string, std::string> survey_problems_;

  void load_measurements() {
    const fs::path path = data_dir_ / "measurements.csv";
    if (!fs::exists(path)) {
      measurements_problem_ = "measurements.csv not present in data directory";
      return;
    }
    try {
      for (auto& series : ingest::load_measurements(path))
        series_.emplace(series.metric, std::move(series));
    } catch (const Error& e) {
      measurements_problem_ = e.what();
    }
  }

  void load_checks() {
    const fs::path path = data_dir_ / "checks.csv";
    if (!fs::exists(path)) {
      checks_problem_ = "checks.csv not present in data directory";
      return;
    }
    try {
      checks_ = ingest::load_checks(path);
    } catch (const Error& e) {
      checks_problem_ = e.what();
    }
  }

  // The key loads once per survey; responses load per requirement because
  // label validation needs the owning requirement's scale.
  const likert::SurveyKey* load_survey_key(const std::string& name,
                                           std::string& problem) {
    if (auto it = survey_keys_.find(name); it != survey_keys_.end())
      return &it->second;
    if (auto it = survey_problems_.find(name); it != survey_problems_.end()) {
      problem = it->second;
      return nullptr;
    }
    const fs::path responses_path = data_dir_ / (name + ".responses.csv");
    const fs::path key_path = data_dir_ / (name + ".key.csv");
    try {
      if (!fs::exists(key_path))
        throw Error(ErrorKind::Data,
                    "survey key '" + key_path.filename().string() + "' not present");
      if (!fs::exists(responses_path))
        throw Error(ErrorKind::Data, "survey responses '" +
                                         responses_path.filename().string() +
                                         "' not present");
      auto [it, inserted] = survey_keys_.emplace(name, ingest::load_survey_key(key_path));
      (void)inserted;
      return &it->second;
    } catch (const Error& e) {
      survey_problems_.emplace(name, e.what());
      problem = e.what();
      return nullptr;
    }
  }

  const ingest::MeasurementSeries& need_series(const std::string& metric) {
    auto it = series_.find(metric);
    if (it == series_.end()) {
      std::string detail = measurements_problem_
                               ? " (" + *measurements_problem_ + ")"
                               : "";
      throw Error(ErrorKind::Data,
                  "no measurements for metric '" + metric + "'" + detail);
    }
    return it->second;
  }

  Outcome evaluate(const dsl::Requirement& req, const Classification& cls) {
    Outcome out;
    switch (cls.kind) {
      case Kind::Vague:
        out.type = OutcomeType::Unevaluated;
        out.reason = cls.rationale;
        return out;
      case Kind::FR:
        return evaluate_fr(std::get<dsl::BooleanCheck>(req.verification));
      case Kind::MNFR:
        return evaluate_mnfr_req(std::get<dsl::MetricThreshold>(req.verification));
      case Kind::SNFR:
        break;
    }
    if (const auto* ls = std::get_if<dsl::LikertSurvey>(&req.verification))
      return evaluate_likert(*ls);
    if (const auto* fa = std::get_if<dsl::FuzzyAssessment>(&req.verification))
      return evaluate_fuzzy(*fa);
    return evaluate_template_req(std::get<dsl::TemplateAssessment>(req.verification));
  }

  Outcome evaluate_fr(const dsl::BooleanCheck& check) {
    Outcome out;
    auto it = checks_.find(check.check);
    if (it == checks_.end()) {
      out.type = OutcomeType::Unevaluated;
      out.reason = "no result for check '" + check.check + "'";
      if (checks_problem_) out.reason += " (" + *checks_problem_ + ")";
      return out;
    }
    out.type = OutcomeType::PassFail;
    out.passed = it->second;
    out.margin = 0.0;
    return out;
  }

  Outcome evaluate_mnfr_req(const dsl::MetricThreshold& check) {
    const auto& series = need_series(check.metric);
    const MnfrOutcome m = evaluate_mnfr(check, series, options_.aggregator_override);
    Outcome out;
    out.type = OutcomeType::PassFail;
    out.passed = m.passed;
    out.margin = m.margin;
    out.aggregate = m.aggregate;
    return out;
  }

  Outcome evaluate_likert(const dsl::LikertSurvey& ls) {
    std::string problem;
    const likert::SurveyKey* key = load_survey_key(ls.survey, problem);
    if (!key) throw Error(ErrorKind::Data, problem);

    const likert::LikertScale scale = spec_.find_scale(ls.scale)->scale();
    likert::ResponseSet responses;
    try {
      responses = ingest::load_responses(data_dir_ / (ls.survey + ".responses.csv"),
                                         scale);
    } catch (const Error& e) {
      throw Error(ErrorKind::Data, e.what());
    }

    std::vector<likert::AttitudeScore> scores;
    for (const auto& [respondent, answers] : responses.rows)
      scores.push_back(likert::score_respondent(scale, *key, answers, respondent));
    if (scores.empty())
      throw Error(ErrorKind::Data,
                  "survey '" + ls.survey + "' contains no respondents");

    const likert::SurveyStats stats = likert::aggregate_scores(scores);
    const double band =
        options_.band_override.value_or(ls.band.value_or(0.05));
    const auto decision = likert::attitude_decision(
        stats, static_cast<int>(key->items.size()), scale, band);

    Outcome out;
    out.type = OutcomeType::Degree;
    out.degree = (stats.mean - stats.min_possible) /
                 static_cast<double>(stats.max_possible - stats.min_possible);
    out.label = likert::to_string(decision.decision);

    const bool known = std::any_of(report_.surveys.begin(), report_.surveys.end(),
                                   [&](const auto& s) { return s.first == ls.survey; });
    if (!known) report_.surveys.emplace_back(ls.survey, SurveyReport{stats, decision});
    return out;
  }

  Outcome evaluate_fuzzy(const dsl::FuzzyAssessment& fa) {
    const auto& series = need_series(fa.input_metric);
    // The fuzzified input is the series mean: a representative level, in
    // contrast to the worst-case reading of threshold checks.
    const double x = ingest::summarize(series).mean;
    const auto& variable = spec_.find_variable(fa.variable)->variable;

    const fuzzy::TermDegrees degrees = fuzzy::fuzzify(variable, x);
    double target_degree = 0.0;
    for (const auto& [term, degree] : degrees)
      if (term == fa.target_term) target_degree = degree;

    Outcome out;
    out.type = OutcomeType::Degree;
    out.degree = fa.hedge ? fuzzy::apply_hedge(*fa.hedge, target_degree)
                          : target_degree;
    out.label = fuzzy::best_label(degrees).first;
    return out;
  }

  Outcome evaluate_template_req(const dsl::TemplateAssessment& ta) {
    const auto& tmpl = spec_.find_template(ta.template_name)->tmpl;
    std::vector<std::pair<std::string, double>> values;
    for (const auto& sub : tmpl.subs) {
      auto it = series_.find(sub.name);
      if (it == series_.end()) {
        std::string detail =
            measurements_problem_ ? " (" + *measurements_problem_ + ")" : "";
        throw Error(ErrorKind::Data, "no measurements for sub-NFR '" + sub.name +
                                         "' of template '" + ta.template_name +
                                         "'" + detail);
      }
      values.emplace_back(sub.name, ingest::summarize(it->second).mean);
    }
    const fuzzy::TemplateOutcome outcome = fuzzy::evaluate_template(tmpl, values);

    Outcome out;
    out.type = OutcomeType::Degree;
    out.degree = outcome.score;
    out.label = outcome.status;

    const bool known =
        std::any_of(report_.templates.begin(), report_.templates.end(),
                    [&](const auto& t) { return t.first == ta.template_name; });
    if (!known)
      report_.templates.emplace_back(ta.template_name, TemplateReport{outcome});
    return out;
  }

  void propagate_goals() {
    if (spec_.softgoals.empty()) return;
    const goals::GoalForest forest = goals::validate_forest(spec_.goal_nodes());

    std::map<std::string, double> leaf_satisfactions;
    for (const auto& result : report_.results) {
      switch (result.outcome.type) {
        case OutcomeType::PassFail:
          leaf_satisfactions[result.id] = result.outcome.passed ? 1.0 : 0.0;
          break;
        case OutcomeType::Degree:
          leaf_satisfactions[result.id] = result.outcome.degree;
          break;
        case OutcomeType::Unevaluated:
          break;  // vague or unevaluated requirements contribute nothing
      }
    }

    const goals::Satisfactions sats =
        goals::propagate_partial(forest, leaf_satisfactions);
    for (const auto& node : forest.nodes) {
      auto it = sats.find(node.id);
      if (it != sats.end()) report_.goal_satisfactions.emplace_back(node.id, it->second);
    }
    const auto verdicts = goals::roots_satisfied(forest, sats);
    std::map<std::string, const goals::RootVerdict*> by_id;
    for (const auto& v : verdicts) by_id.emplace(v.id, &v);
    for (const auto& root : forest.roots) {
      RootReport r;
      r.id = root;
      const auto& node = forest.nodes[forest.index.at(root)];
      r.threshold = node.threshold.value_or(goals::kDefaultRootThreshold);
      if (auto it = by_id.find(root); it != by_id.end()) {
        r.value = it->second->value;
        r.satisfied = it->second->satisfied;
      }
      report_.roots.push_back(std::move(r));
    }
  }

  void summarize() {
    auto& s = report_.summary;
    s.requirements = static_cast<int>(report_.results.size());
    for (const auto& result : report_.results) {
      switch (result.classification.kind) {
        case Kind::FR: ++s.fr; break;
        case Kind::MNFR: ++s.mnfr; break;
        case Kind::SNFR: ++s.snfr; break;
        case Kind::Vague: ++s.vague; break;
      }
      switch (result.outcome.type) {
        case OutcomeType::PassFail:
          ++(result.outcome.passed ? s.passed : s.failed);
          break;
        case OutcomeType::Degree: ++s.evaluated_degrees; break;
        case OutcomeType::Unevaluated: ++s.unevaluated; break;
      }
    }
    s.roots_total = static_cast<int>(report_.roots.size());
    for (const auto& root : report_.roots) {
      if (!root.value)
        ++s.roots_unevaluated;
      else if (root.satisfied)
        ++s.roots_satisfied;
    }
    s.conflicts = static_cast<int>(report_.conflicts.size());
  }
};

}  // namespace

EvaluationReport evaluate_project(const dsl::RequirementSpec& spec,
                                  const std::filesystem::path& data_dir,
                                  const EvalOptions& options) {
  return ProjectEvaluator(spec, data_dir, options).run();
}

}  // namespace nfrgauge::eval
