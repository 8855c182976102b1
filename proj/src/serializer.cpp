#include <sstream>

#include "nfrgauge/dsl.hpp"

namespace nfrgauge::dsl {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void emit_shape(std::ostream& os, const fuzzy::MembershipFunction& mf) {
  if (const auto* t = std::get_if<fuzzy::Triangular>(&mf)) {
    os << "triangle(" << format_number(t->a) << ", " << format_number(t->b) << ", "
       << format_number(t->c) << ")";
  } else if (const auto* t = std::get_if<fuzzy::Trapezoidal>(&mf)) {
    os << "trapezoid(" << format_number(t->a) << ", " << format_number(t->b) << ", "
       << format_number(t->c) << ", " << format_number(t->d) << ")";
  } else {
    const auto& iv = std::get<fuzzy::CrispInterval>(mf);
    os << "interval(" << format_number(iv.lo) << ", " << format_number(iv.hi) << ")";
  }
}

void emit_requirement(std::ostream& os, const Requirement& req) {
  const char* head = "requirement";
  if (std::holds_alternative<MetricThreshold>(req.verification)) head = "mnfr";
  if (std::holds_alternative<LikertSurvey>(req.verification) ||
      std::holds_alternative<FuzzyAssessment>(req.verification) ||
      std::holds_alternative<TemplateAssessment>(req.verification))
    head = "snfr";
  os << "  " << head << " " << quote(req.id) << " {\n";
  if (req.statement != req.id)
    os << "    statement: " << quote(req.statement) << ";\n";
  if (const auto* bc = std::get_if<BooleanCheck>(&req.verification)) {
    os << "    verified_by: " << quote(bc->check) << ";\n";
  } else if (const auto* mt = std::get_if<MetricThreshold>(&req.verification)) {
    os << "    metric: " << mt->metric << ";\n";
    os << "    threshold: " << quote(std::string(to_string(mt->comparator)) + " " +
                                     format_number(mt->bound))
       << ";\n";
    if (!mt->unit.empty()) os << "    unit: " << quote(mt->unit) << ";\n";
    if (mt->aggregator) os << "    aggregator: " << to_string(*mt->aggregator) << ";\n";
  } else if (const auto* ls = std::get_if<LikertSurvey>(&req.verification)) {
    os << "    scale: " << ls->scale << ";\n";
    os << "    survey: " << quote(ls->survey) << ";\n";
    if (ls->band) os << "    band: " << format_number(*ls->band) << ";\n";
  } else if (const auto* fa = std::get_if<FuzzyAssessment>(&req.verification)) {
    os << "    variable: " << fa->variable << ";\n";
    os << "    input: " << fa->input_metric << ";\n";
    os << "    target: " << fa->target_term;
    if (fa->hedge) os << ": " << fuzzy::to_string(*fa->hedge);
    os << ";\n";
  } else if (const auto* ta = std::get_if<TemplateAssessment>(&req.verification)) {
    os << "    template: " << ta->template_name << ";\n";
  }
  os << "  }\n";
}

void emit_linguistic(std::ostream& os, const LinguisticDecl& decl) {
  os << "  linguistic " << decl.variable.name << " over " << decl.variable.unit;
  if (decl.variable.domain) {
    os << " domain(" << format_number(decl.variable.domain->first) << ", "
       << format_number(decl.variable.domain->second) << ")";
  }
  os << " {\n";
  for (const auto& [term, mf] : decl.variable.terms) {
    os << "    term " << term << ": ";
    emit_shape(os, mf);
    os << ";\n";
  }
  os << "  }\n";
}

void emit_scale(std::ostream& os, const ScaleDecl& decl) {
  os << "  scale " << decl.name << " {\n";
  if (decl.points) {
    os << "    points: " << *decl.points << ";\n";
  } else {
    for (const auto& [label, value] : decl.categories)
      os << "    category " << quote(label) << " " << value << ";\n";
  }
  os << "  }\n";
}

void emit_template(std::ostream& os, const TemplateDecl& decl) {
  os << "  template " << decl.tmpl.quality_name << " {\n";
  for (const auto& sub : decl.tmpl.subs) {
    os << "    sub " << sub.name << " weight " << format_number(sub.weight) << " {\n";
    for (const auto& level : sub.levels) {
      os << "      level " << level.name << ": ";
      emit_shape(os, level.mf);
      os << ";\n";
    }
    os << "    }\n";
  }
  for (const auto& row : decl.tmpl.rows) {
    os << "    status " << row.name << ": ";
    for (std::size_t i = 0; i < row.required.size(); ++i) {
      if (i) os << ", ";
      os << row.required[i];
    }
    os << ";\n";
  }
  os << "  }\n";
}

void emit_softgoal(std::ostream& os, const SoftGoalDecl& decl) {
  os << "  softgoal " << decl.id;
  if (decl.threshold) os << " threshold " << format_number(*decl.threshold);
  os << " {\n";
  for (const auto& child : decl.children) {
    os << "    weight " << format_number(child.weight) << " ";
    if (child.is_subgoal)
      os << "subgoal " << child.ref;
    else
      os << "leaf " << quote(child.ref);
    os << ";\n";
  }
  os << "  }\n";
}

void emit_link(std::ostream& os, const LinkDecl& decl) {
  // Sources always serialize as strings; requirement ids need the quotes and
  // goal ids re-parse to the same value either way.
  os << "  link " << quote(decl.link.source) << " -> " << decl.link.target
     << " sign " << format_number(decl.link.sign_weight) << ";\n";
}

}  // namespace

std::string serialize(const RequirementSpec& spec) {
  std::ostringstream os;
  os << "project " << quote(spec.project_name) << " {";
  if (spec.order.empty()) {
    os << "}\n";
    return os.str();
  }
  os << "\n";
  for (const auto& ref : spec.order) {
    switch (ref.kind) {
      case DeclKind::Requirement:
        emit_requirement(os, spec.requirements[ref.index]);
        break;
      case DeclKind::Linguistic:
        emit_linguistic(os, spec.linguistic_variables[ref.index]);
        break;
      case DeclKind::Scale:
        emit_scale(os, spec.scales[ref.index]);
        break;
      case DeclKind::Template:
        emit_template(os, spec.templates[ref.index]);
        break;
      case DeclKind::SoftGoal:
        emit_softgoal(os, spec.softgoals[ref.index]);
        break;
      case DeclKind::Link:
        emit_link(os, spec.links[ref.index]);
        break;
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace nfrgauge::dsl
