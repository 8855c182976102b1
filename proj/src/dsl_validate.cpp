#include <cmath>
#include <set>
#include <sstream>

#include "nfrgauge/dsl.hpp"

namespace nfrgauge::dsl {

namespace {

void add(std::vector<Diagnostic>& diags, const SourceLoc& loc, std::string message,
         Severity severity = Severity::Error) {
  Diagnostic d;
  d.severity = severity;
  d.line = loc.line;
  d.column = loc.column;
  d.message = std::move(message);
  d.snippet = loc.snippet;
  diags.push_back(std::move(d));
}

template <typename Decl, typename NameOf>
void check_unique(std::vector<Diagnostic>& diags, const std::vector<Decl>& decls,
                  const char* what, NameOf name_of) {
  std::set<std::string> seen;
  for (const auto& decl : decls) {
    if (!seen.insert(name_of(decl)).second)
      add(diags, decl.loc,
          std::string("duplicate ") + what + " '" + name_of(decl) + "'");
  }
}

}  // namespace

std::vector<Diagnostic> validate(const RequirementSpec& spec) {
  std::vector<Diagnostic> diags;

  check_unique(diags, spec.requirements, "requirement id",
               [](const Requirement& r) { return r.id; });
  check_unique(diags, spec.linguistic_variables, "linguistic variable",
               [](const LinguisticDecl& d) { return d.variable.name; });
  check_unique(diags, spec.scales, "scale",
               [](const ScaleDecl& d) { return d.name; });
  check_unique(diags, spec.templates, "template",
               [](const TemplateDecl& d) { return d.tmpl.quality_name; });
  check_unique(diags, spec.softgoals, "soft goal",
               [](const SoftGoalDecl& d) { return d.id; });

  for (const auto& decl : spec.linguistic_variables) {
    try {
      fuzzy::check_variable(decl.variable);
    } catch (const Error& e) {
      add(diags, decl.loc, e.what());
    }
  }

  for (const auto& decl : spec.scales) {
    try {
      likert::check_scale(decl.scale());
    } catch (const Error& e) {
      add(diags, decl.loc, e.what());
    }
  }

  for (const auto& decl : spec.templates) {
    try {
      fuzzy::check_template(decl.tmpl);
    } catch (const Error& e) {
      add(diags, decl.loc, e.what());
    }
  }

  for (const auto& req : spec.requirements) {
    if (const auto* mt = std::get_if<MetricThreshold>(&req.verification)) {
      if (!std::isfinite(mt->bound))
        add(diags, req.loc, "mnfr \"" + req.id + "\" threshold bound must be finite");
    } else if (const auto* ls = std::get_if<LikertSurvey>(&req.verification)) {
      if (ls->band && !(*ls->band >= 0.0 && *ls->band <= 0.5))
        add(diags, req.loc,
            "snfr \"" + req.id + "\" decision band must lie in [0, 0.5]");
    }
  }

  // Goal forest: materialize and run the structural checks.
  if (!spec.softgoals.empty()) {
    try {
      goals::GoalForest forest = goals::validate_forest(spec.goal_nodes());
      std::set<std::string> root_set(forest.roots.begin(), forest.roots.end());
      for (const auto& decl : spec.softgoals) {
        if (decl.threshold && !root_set.count(decl.id))
          add(diags, decl.loc,
              "threshold on soft goal '" + decl.id +
                  "' has no effect: only root thresholds are consulted",
              Severity::Warning);
      }
    } catch (const Error& e) {
      SourceLoc loc = spec.softgoals.front().loc;
      add(diags, loc, e.what());
    }
  }

  for (const auto& decl : spec.links) {
    const double s = decl.link.sign_weight;
    if (!(s >= -1.0 && s <= 1.0) || s == 0.0 || std::isnan(s))
      add(diags, decl.loc,
          "link sign weight must be nonzero and inside [-1, 1]");
  }

  // Unreferenced declarations are probably mistakes.
  std::set<std::string> used_scales, used_variables, used_templates;
  for (const auto& req : spec.requirements) {
    if (const auto* ls = std::get_if<LikertSurvey>(&req.verification))
      used_scales.insert(ls->scale);
    else if (const auto* fa = std::get_if<FuzzyAssessment>(&req.verification))
      used_variables.insert(fa->variable);
    else if (const auto* ta = std::get_if<TemplateAssessment>(&req.verification))
      used_templates.insert(ta->template_name);
  }
  for (const auto& decl : spec.scales)
    if (!used_scales.count(decl.name))
      add(diags, decl.loc, "scale '" + decl.name + "' is never referenced",
          Severity::Warning);
  for (const auto& decl : spec.linguistic_variables)
    if (!used_variables.count(decl.variable.name))
      add(diags, decl.loc,
          "linguistic variable '" + decl.variable.name + "' is never referenced",
          Severity::Warning);
  for (const auto& decl : spec.templates)
    if (!used_templates.count(decl.tmpl.quality_name))
      add(diags, decl.loc,
          "template '" + decl.tmpl.quality_name + "' is never referenced",
          Severity::Warning);

  return diags;
}

}  // namespace nfrgauge::dsl
