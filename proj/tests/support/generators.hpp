#pragma once

// Randomized inputs for property tests: goal forests, grading templates, and
// whole specs that exercise everything the DSL can express.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "nfrgauge/dsl.hpp"
#include "nfrgauge/fuzzy.hpp"
#include "nfrgauge/goal_graph.hpp"

namespace gen {

using Rng = std::mt19937;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// ------------------------------------------------------------- goal forests

struct ForestCase {
  std::vector<nfrgauge::goals::SoftGoalNode> nodes;
  std::map<std::string, double> leaf_satisfactions;
};

inline ForestCase random_forest(Rng& rng, int max_nodes = 12) {
  const int n = uniform_int(rng, 1, max_nodes);
  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i)
    parent[i] = coin(rng, 0.25) ? -1 : uniform_int(rng, 0, i - 1);

  std::vector<std::vector<int>> children(n);
  for (int i = 0; i < n; ++i)
    if (parent[i] >= 0) children[parent[i]].push_back(i);

  ForestCase out;
  for (int i = 0; i < n; ++i) {
    nfrgauge::goals::SoftGoalNode node;
    node.id = "g" + std::to_string(i);
    node.label = node.id;
    node.weight = uniform(rng, 0.05, 8.0);
    if (coin(rng, 0.3)) node.threshold = uniform(rng, 0.0, 1.0);
    if (children[i].empty()) {
      node.leaf_requirement = "r" + std::to_string(i);
      out.leaf_satisfactions["r" + std::to_string(i)] = uniform(rng, 0.0, 1.0);
    } else {
      for (int c : children[i]) node.children.push_back("g" + std::to_string(c));
    }
    out.nodes.push_back(std::move(node));
  }
  return out;
}

// ---------------------------------------------------------------- templates

struct TemplateCase {
  nfrgauge::fuzzy::WeightedTemplate tmpl;
  std::vector<std::pair<std::string, double>> values;
};

// Crisp gradings cut from adjacent closed intervals, then canonicalized the
// same way the parser does; shared row set sized to the level count.
inline TemplateCase random_template(Rng& rng) {
  using namespace nfrgauge::fuzzy;
  TemplateCase out;
  const int n_subs = uniform_int(rng, 1, 3);
  const int n_levels = uniform_int(rng, 2, 4);
  out.tmpl.quality_name = "q";
  for (int s = 0; s < n_subs; ++s) {
    SubNfr sub;
    sub.name = "s" + std::to_string(s);
    sub.weight = uniform(rng, 0.1, 9.0);
    std::vector<double> cuts;
    cuts.push_back(uniform(rng, -5.0, 0.0));
    for (int l = 0; l < n_levels; ++l)
      cuts.push_back(cuts.back() + uniform(rng, 0.25, 3.0));
    for (int l = 0; l < n_levels; ++l) {
      GradingLevel level;
      level.name = "L" + std::to_string(l);
      level.mf = CrispInterval{cuts[l], cuts[l + 1], true, true};
      sub.levels.push_back(std::move(level));
    }
    const double lo = cuts.front(), hi = cuts.back();
    out.values.emplace_back(sub.name,
                            coin(rng, 0.25) ? cuts[uniform_int(rng, 0, n_levels)]
                                            : uniform(rng, lo, hi));
    out.tmpl.subs.push_back(std::move(sub));
  }
  for (int r = 0; r < n_levels; ++r) {
    StatusRow row;
    row.name = "row" + std::to_string(r);
    for (int s = 0; s < n_subs; ++s) row.required.push_back("L" + std::to_string(r));
    out.tmpl.rows.push_back(std::move(row));
  }
  canonicalize_gradings(out.tmpl);
  return out;
}

// -------------------------------------------------------------------- specs

inline std::string random_ident(Rng& rng, const std::string& prefix) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789_";
  std::string s = prefix + "_";
  const int len = uniform_int(rng, 1, 6);
  for (int i = 0; i < len; ++i)
    s.push_back(alphabet[uniform_int(rng, 0, sizeof(alphabet) - 2)]);
  return s;
}

inline std::string random_text(Rng& rng) {
  static const char alphabet[] =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 _.,!?\"\\";
  std::string s;
  const int len = uniform_int(rng, 1, 18);
  for (int i = 0; i < len; ++i)
    s.push_back(alphabet[uniform_int(rng, 0, sizeof(alphabet) - 2)]);
  return s;
}

inline double random_value(Rng& rng) {
  switch (uniform_int(rng, 0, 3)) {
    case 0: return uniform_int(rng, -50, 50);
    case 1: return uniform_int(rng, -400, 400) / 8.0;
    case 2: return uniform(rng, -100.0, 100.0);
    default: return uniform(rng, -1e6, 1e6);
  }
}

inline nfrgauge::fuzzy::MembershipFunction random_shape(Rng& rng, double lo,
                                                        double hi) {
  using namespace nfrgauge::fuzzy;
  double p[4];
  for (double& v : p) v = uniform(rng, lo, hi);
  std::sort(std::begin(p), std::end(p));
  switch (uniform_int(rng, 0, 2)) {
    case 0: return Triangular{p[0], p[1], p[2]};
    case 1:
      if (coin(rng, 0.2))
        return Trapezoidal{-std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity(), p[2], p[3]};
      if (coin(rng, 0.2))
        return Trapezoidal{p[0], p[1], std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity()};
      return Trapezoidal{p[0], p[1], p[2], p[3]};
    default: return CrispInterval{p[0], p[3], true, true};
  }
}

// A spec exercising every declaration kind; always parseable and
// serializable, not necessarily semantically valid.
inline nfrgauge::dsl::RequirementSpec random_spec(Rng& rng) {
  using namespace nfrgauge::dsl;
  RequirementSpec spec;
  spec.project_name = random_text(rng);

  const int n_scales = uniform_int(rng, 0, 2);
  for (int i = 0; i < n_scales; ++i) {
    ScaleDecl decl;
    decl.name = random_ident(rng, "sc" + std::to_string(i));
    if (coin(rng)) {
      decl.points = uniform_int(rng, 5, 7);
    } else {
      const int n = uniform_int(rng, 5, 7);
      const bool descending = coin(rng);
      for (int c = 0; c < n; ++c)
        decl.categories.emplace_back("Choice " + std::to_string(i) + "-" +
                                         std::to_string(c),
                                     descending ? n - c : c + 1);
    }
    spec.order.push_back({DeclKind::Scale, spec.scales.size()});
    spec.scales.push_back(std::move(decl));
  }

  const int n_vars = uniform_int(rng, 0, 2);
  for (int i = 0; i < n_vars; ++i) {
    LinguisticDecl decl;
    decl.variable.name = random_ident(rng, "v" + std::to_string(i));
    decl.variable.unit = random_ident(rng, "u");
    if (coin(rng, 0.4)) decl.variable.domain = {-200.0, 200.0};
    const int n_terms = uniform_int(rng, 2, 4);
    for (int t = 0; t < n_terms; ++t)
      decl.variable.terms.emplace_back("t" + std::to_string(t),
                                       random_shape(rng, -150.0, 150.0));
    spec.order.push_back({DeclKind::Linguistic, spec.linguistic_variables.size()});
    spec.linguistic_variables.push_back(std::move(decl));
  }

  const int n_templates = uniform_int(rng, 0, 2);
  for (int i = 0; i < n_templates; ++i) {
    TemplateDecl decl;
    decl.tmpl = random_template(rng).tmpl;
    decl.tmpl.quality_name = random_ident(rng, "tm" + std::to_string(i));
    spec.order.push_back({DeclKind::Template, spec.templates.size()});
    spec.templates.push_back(std::move(decl));
  }

  const int n_reqs = uniform_int(rng, 1, 5);
  for (int i = 0; i < n_reqs; ++i) {
    Requirement req;
    req.id = "req " + std::to_string(i) + " " + random_text(rng);
    req.statement = coin(rng) ? req.id : random_text(rng);
    switch (uniform_int(rng, 0, 5)) {
      case 0:
        break;  // vague
      case 1:
        req.verification = BooleanCheck{random_text(rng)};
        break;
      case 2: {
        MetricThreshold mt;
        mt.metric = random_ident(rng, "m");
        mt.comparator = static_cast<Comparator>(uniform_int(rng, 0, 3));
        mt.bound = random_value(rng);
        if (coin(rng, 0.3)) mt.unit = random_text(rng);
        if (coin(rng, 0.3))
          mt.aggregator = static_cast<Aggregator>(uniform_int(rng, 0, 3));
        req.verification = std::move(mt);
        break;
      }
      case 3:
        if (!spec.scales.empty()) {
          LikertSurvey ls;
          ls.scale = spec.scales[uniform_int(rng, 0, spec.scales.size() - 1)].name;
          ls.survey = random_text(rng);
          if (coin(rng, 0.4)) ls.band = uniform(rng, 0.0, 0.5);
          req.verification = std::move(ls);
        }
        break;
      case 4:
        if (!spec.linguistic_variables.empty()) {
          const auto& var = spec.linguistic_variables[uniform_int(
              rng, 0, spec.linguistic_variables.size() - 1)];
          FuzzyAssessment fa;
          fa.variable = var.variable.name;
          fa.input_metric = random_ident(rng, "m");
          fa.target_term =
              var.variable.terms[uniform_int(rng, 0, var.variable.terms.size() - 1)]
                  .first;
          if (coin(rng, 0.4))
            fa.hedge = static_cast<nfrgauge::fuzzy::Hedge>(uniform_int(rng, 0, 3));
          req.verification = std::move(fa);
        }
        break;
      default:
        if (!spec.templates.empty()) {
          req.verification = TemplateAssessment{
              spec.templates[uniform_int(rng, 0, spec.templates.size() - 1)]
                  .tmpl.quality_name};
        }
        break;
    }
    spec.order.push_back({DeclKind::Requirement, spec.requirements.size()});
    spec.requirements.push_back(std::move(req));
  }

  const int n_goals = uniform_int(rng, 0, 3);
  for (int i = 0; i < n_goals; ++i) {
    SoftGoalDecl decl;
    decl.id = random_ident(rng, "goal" + std::to_string(i));
    if (coin(rng, 0.4)) decl.threshold = uniform(rng, 0.0, 1.0);
    const int n_children = uniform_int(rng, 0, 3);
    for (int c = 0; c < n_children; ++c) {
      SoftGoalDecl::Child child;
      child.weight = uniform(rng, 0.1, 9.0);
      if (!spec.softgoals.empty() && coin(rng, 0.3)) {
        child.is_subgoal = true;
        child.ref =
            spec.softgoals[uniform_int(rng, 0, spec.softgoals.size() - 1)].id;
      } else {
        child.is_subgoal = false;
        child.ref =
            spec.requirements[uniform_int(rng, 0, spec.requirements.size() - 1)].id;
      }
      decl.children.push_back(std::move(child));
    }
    spec.order.push_back({DeclKind::SoftGoal, spec.softgoals.size()});
    spec.softgoals.push_back(std::move(decl));
  }

  if (!spec.softgoals.empty()) {
    const int n_links = uniform_int(rng, 0, 3);
    for (int i = 0; i < n_links; ++i) {
      LinkDecl decl;
      decl.link.target =
          spec.softgoals[uniform_int(rng, 0, spec.softgoals.size() - 1)].id;
      if (coin(rng))
        decl.link.source =
            spec.softgoals[uniform_int(rng, 0, spec.softgoals.size() - 1)].id;
      else
        decl.link.source =
            spec.requirements[uniform_int(rng, 0, spec.requirements.size() - 1)].id;
      double s = uniform(rng, -1.0, 1.0);
      if (s == 0.0) s = 0.5;
      decl.link.sign_weight = s;
      spec.order.push_back({DeclKind::Link, spec.links.size()});
      spec.links.push_back(std::move(decl));
    }
  }

  return spec;
}

inline std::string random_bytes(Rng& rng, int max_len = 300) {
  const int len = uniform_int(rng, 0, max_len);
  std::string s;
  s.reserve(len);
  for (int i = 0; i < len; ++i)
    s.push_back(static_cast<char>(uniform_int(rng, 0, 255)));
  return s;
}

}  // namespace gen
