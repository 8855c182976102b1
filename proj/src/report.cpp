#include "nfrgauge/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace nfrgauge::report {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json outcome_json(const eval::Outcome& outcome) {
  ordered_json j;
  switch (outcome.type) {
    case eval::OutcomeType::PassFail:
      j["type"] = "pass_fail";
      j["passed"] = outcome.passed;
      j["margin"] = outcome.margin;
      if (outcome.aggregate) j["aggregate"] = *outcome.aggregate;
      break;
    case eval::OutcomeType::Degree:
      j["type"] = "degree";
      j["degree"] = outcome.degree;
      j["label"] = outcome.label;
      break;
    case eval::OutcomeType::Unevaluated:
      j["type"] = "unevaluated";
      j["reason"] = outcome.reason;
      break;
  }
  return j;
}

ordered_json stats_json(const likert::SurveyStats& stats) {
  ordered_json j;
  j["count"] = stats.count;
  j["mean"] = stats.mean;
  j["median"] = stats.median;
  j["min"] = stats.min;
  j["max"] = stats.max;
  j["min_possible"] = stats.min_possible;
  j["max_possible"] = stats.max_possible;
  ordered_json hist = ordered_json::object();
  for (const auto& [score, n] : stats.histogram)
    hist[std::to_string(score)] = n;
  j["histogram"] = std::move(hist);
  return j;
}

ordered_json decision_json(const likert::AttitudeDecision& decision) {
  ordered_json j;
  j["decision"] = likert::to_string(decision.decision);
  j["margin"] = decision.margin;
  j["neutral"] = decision.neutral;
  j["band"] = decision.band;
  return j;
}

ordered_json report_json(const eval::EvaluationReport& report) {
  ordered_json j;
  j["project"] = report.project;

  ordered_json summary;
  summary["requirements"] = report.summary.requirements;
  summary["fr"] = report.summary.fr;
  summary["mnfr"] = report.summary.mnfr;
  summary["snfr"] = report.summary.snfr;
  summary["vague"] = report.summary.vague;
  summary["passed"] = report.summary.passed;
  summary["failed"] = report.summary.failed;
  summary["scaled"] = report.summary.evaluated_degrees;
  summary["unevaluated"] = report.summary.unevaluated;
  summary["roots_total"] = report.summary.roots_total;
  summary["roots_satisfied"] = report.summary.roots_satisfied;
  summary["roots_unevaluated"] = report.summary.roots_unevaluated;
  summary["conflicts"] = report.summary.conflicts;
  j["summary"] = std::move(summary);

  ordered_json results = ordered_json::array();
  for (const auto& result : report.results) {
    ordered_json r;
    r["id"] = result.id;
    r["statement"] = result.statement;
    r["kind"] = eval::to_string(result.classification.kind);
    if (result.classification.kind == eval::Kind::Vague)
      r["rationale"] = result.classification.rationale;
    r["outcome"] = outcome_json(result.outcome);
    results.push_back(std::move(r));
  }
  j["requirements"] = std::move(results);

  ordered_json goals_obj;
  ordered_json sats = ordered_json::array();
  for (const auto& [id, value] : report.goal_satisfactions) {
    ordered_json g;
    g["id"] = id;
    g["value"] = value;
    sats.push_back(std::move(g));
  }
  goals_obj["satisfactions"] = std::move(sats);
  ordered_json roots = ordered_json::array();
  for (const auto& root : report.roots) {
    ordered_json r;
    r["id"] = root.id;
    r["threshold"] = root.threshold;
    r["evaluated"] = root.value.has_value();
    if (root.value)
      r["value"] = *root.value;
    else
      r["value"] = nullptr;
    r["satisfied"] = root.satisfied;
    roots.push_back(std::move(r));
  }
  goals_obj["roots"] = std::move(roots);
  j["goals"] = std::move(goals_obj);

  ordered_json conflicts = ordered_json::array();
  for (const auto& c : report.conflicts) {
    ordered_json e;
    e["source"] = c.source;
    e["positive_target"] = c.positive_target;
    e["positive_sign"] = c.positive_sign;
    e["negative_target"] = c.negative_target;
    e["negative_sign"] = c.negative_sign;
    conflicts.push_back(std::move(e));
  }
  j["conflicts"] = std::move(conflicts);

  ordered_json surveys = ordered_json::object();
  for (const auto& [name, survey] : report.surveys) {
    ordered_json s = stats_json(survey.stats);
    s["decision"] = decision_json(survey.decision);
    surveys[name] = std::move(s);
  }
  j["surveys"] = std::move(surveys);

  ordered_json templates = ordered_json::object();
  for (const auto& [name, tmpl] : report.templates) {
    ordered_json t;
    t["status"] = tmpl.outcome.status;
    t["score"] = tmpl.outcome.score;
    t["raw_score"] = tmpl.outcome.raw_score;
    t["max_raw_score"] = tmpl.outcome.max_raw;
    ordered_json levels = ordered_json::object();
    for (const auto& [sub, level] : tmpl.outcome.levels) levels[sub] = level;
    t["levels"] = std::move(levels);
    templates[name] = std::move(t);
  }
  j["templates"] = std::move(templates);

  return j;
}

std::string degree_str(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << value;
  return os.str();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string to_json(const eval::EvaluationReport& report) {
  return report_json(report).dump(2) + "\n";
}

std::string to_text(const eval::EvaluationReport& report) {
  std::ostringstream os;
  os << "Project: " << report.project << "\n\n";

  os << "Requirements\n";
  std::size_t id_w = 2, kind_w = 5;
  for (const auto& r : report.results) {
    id_w = std::max(id_w, r.id.size());
    kind_w = std::max(kind_w, std::string(eval::to_string(r.classification.kind)).size());
  }
  os << "  " << pad("id", id_w) << "  " << pad("kind", kind_w) << "  outcome\n";
  for (const auto& r : report.results) {
    os << "  " << pad(r.id, id_w) << "  "
       << pad(eval::to_string(r.classification.kind), kind_w) << "  ";
    switch (r.outcome.type) {
      case eval::OutcomeType::PassFail:
        os << (r.outcome.passed ? "pass" : "FAIL") << " (margin "
           << degree_str(r.outcome.margin) << ")";
        break;
      case eval::OutcomeType::Degree:
        os << degree_str(r.outcome.degree) << " [" << r.outcome.label << "]";
        break;
      case eval::OutcomeType::Unevaluated:
        os << "unevaluated: " << r.outcome.reason;
        break;
    }
    os << "\n";
  }

  if (!report.roots.empty()) {
    os << "\nSoft goal roots\n";
    for (const auto& root : report.roots) {
      os << "  " << root.id << ": ";
      if (root.value)
        os << degree_str(*root.value) << " (threshold " << degree_str(root.threshold)
           << ") " << (root.satisfied ? "satisfied" : "NOT satisfied");
      else
        os << "unevaluated (threshold " << degree_str(root.threshold) << ")";
      os << "\n";
    }
  }

  if (!report.goal_satisfactions.empty()) {
    os << "\nGoal satisfactions\n";
    for (const auto& [id, value] : report.goal_satisfactions)
      os << "  " << id << ": " << degree_str(value) << "\n";
  }

  if (!report.conflicts.empty()) {
    os << "\nConflicts\n";
    for (const auto& c : report.conflicts)
      os << "  " << c.source << " helps " << c.positive_target << " ("
         << dsl::format_number(c.positive_sign) << ") but hurts "
         << c.negative_target << " (" << dsl::format_number(c.negative_sign) << ")\n";
  }

  for (const auto& [name, survey] : report.surveys) {
    os << "\nSurvey " << name << "\n";
    os << "  respondents " << survey.stats.count << ", mean "
       << degree_str(survey.stats.mean) << ", median " << survey.stats.median
       << ", range [" << survey.stats.min << ", " << survey.stats.max << "] of ["
       << survey.stats.min_possible << ", " << survey.stats.max_possible << "]\n";
    os << "  decision " << likert::to_string(survey.decision.decision) << " (margin "
       << degree_str(survey.decision.margin) << ", band "
       << degree_str(survey.decision.band) << ")\n";
  }

  for (const auto& [name, tmpl] : report.templates) {
    os << "\nTemplate " << name << "\n";
    os << "  status " << tmpl.outcome.status << ", score "
       << degree_str(tmpl.outcome.score) << ", raw "
       << degree_str(tmpl.outcome.raw_score) << " of "
       << degree_str(tmpl.outcome.max_raw) << "\n";
    for (const auto& [sub, level] : tmpl.outcome.levels)
      os << "  " << sub << ": " << level << "\n";
  }

  const auto& s = report.summary;
  os << "\nSummary: " << s.requirements << " requirements (" << s.fr << " FR, "
     << s.mnfr << " M-NFR, " << s.snfr << " S-NFR, " << s.vague << " vague); "
     << s.passed << " passed, " << s.failed << " failed, " << s.evaluated_degrees
     << " scaled, " << s.unevaluated << " unevaluated; roots " << s.roots_satisfied
     << "/" << s.roots_total << " satisfied; " << s.conflicts << " conflict(s)\n";
  return os.str();
}

std::string classification_json(const dsl::RequirementSpec& spec) {
  ordered_json arr = ordered_json::array();
  for (const auto& req : spec.requirements) {
    const auto cls = eval::classify(req);
    ordered_json r;
    r["id"] = req.id;
    r["statement"] = req.statement;
    r["kind"] = eval::to_string(cls.kind);
    r["rationale"] = cls.rationale;
    arr.push_back(std::move(r));
  }
  return arr.dump(2) + "\n";
}

std::string classification_text(const dsl::RequirementSpec& spec) {
  std::ostringstream os;
  std::size_t id_w = 2, kind_w = 5;
  std::vector<eval::Classification> classes;
  for (const auto& req : spec.requirements) {
    classes.push_back(eval::classify(req));
    id_w = std::max(id_w, req.id.size());
    kind_w = std::max(kind_w,
                      std::string(eval::to_string(classes.back().kind)).size());
  }
  os << pad("id", id_w) << "  " << pad("kind", kind_w) << "  rationale\n";
  for (std::size_t i = 0; i < spec.requirements.size(); ++i) {
    os << pad(spec.requirements[i].id, id_w) << "  "
       << pad(eval::to_string(classes[i].kind), kind_w) << "  "
       << classes[i].rationale << "\n";
  }
  return os.str();
}

std::string survey_json(const eval::SurveyReport& survey, int n_items) {
  ordered_json j = stats_json(survey.stats);
  j["items"] = n_items;
  j["decision"] = decision_json(survey.decision);
  return j.dump(2) + "\n";
}

std::string survey_text(const eval::SurveyReport& survey, int n_items) {
  std::ostringstream os;
  os << "respondents " << survey.stats.count << ", items " << n_items << "\n";
  os << "scores: mean " << degree_str(survey.stats.mean) << ", median "
     << survey.stats.median << ", min " << survey.stats.min << ", max "
     << survey.stats.max << ", possible [" << survey.stats.min_possible << ", "
     << survey.stats.max_possible << "]\n";
  os << "histogram:";
  for (const auto& [score, n] : survey.stats.histogram)
    os << " " << score << "x" << n;
  os << "\n";
  os << "decision: " << likert::to_string(survey.decision.decision) << " (neutral "
     << degree_str(survey.decision.neutral) << ", band "
     << degree_str(survey.decision.band) << ", margin "
     << degree_str(survey.decision.margin) << ")\n";
  return os.str();
}

std::string diagnostics_json(const std::vector<dsl::Diagnostic>& diagnostics) {
  ordered_json j;
  int errors = 0, warnings = 0;
  ordered_json arr = ordered_json::array();
  for (const auto& d : diagnostics) {
    (d.severity == dsl::Severity::Error ? errors : warnings)++;
    ordered_json e;
    e["severity"] = d.severity == dsl::Severity::Error ? "error" : "warning";
    e["line"] = d.line;
    e["column"] = d.column;
    e["message"] = d.message;
    arr.push_back(std::move(e));
  }
  j["errors"] = errors;
  j["warnings"] = warnings;
  j["diagnostics"] = std::move(arr);
  return j.dump(2) + "\n";
}

}  // namespace nfrgauge::report
