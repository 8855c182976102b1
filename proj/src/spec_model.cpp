#include <charconv>
#include <cmath>

#include "nfrgauge/dsl.hpp"

namespace nfrgauge::dsl {

const char* to_string(Comparator c) {
  switch (c) {
    case Comparator::Less: return "<";
    case Comparator::LessEq: return "<=";
    case Comparator::Greater: return ">";
    case Comparator::GreaterEq: return ">=";
  }
  return "?";
}

const char* to_string(Aggregator a) {
  switch (a) {
    case Aggregator::Max: return "max";
    case Aggregator::Min: return "min";
    case Aggregator::Mean: return "mean";
    case Aggregator::P95: return "p95";
  }
  return "?";
}

std::optional<Aggregator> aggregator_from_string(std::string_view name) {
  if (name == "max") return Aggregator::Max;
  if (name == "min") return Aggregator::Min;
  if (name == "mean") return Aggregator::Mean;
  if (name == "p95") return Aggregator::P95;
  return std::nullopt;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

likert::LikertScale ScaleDecl::scale() const {
  likert::LikertScale s;
  if (points) {
    s = likert::standard_scale(*points);
    s.name = name;
  } else {
    s.name = name;
    s.categories = categories;
  }
  return s;
}

const Requirement* RequirementSpec::find_requirement(std::string_view id) const {
  for (const auto& r : requirements)
    if (r.id == id) return &r;
  return nullptr;
}

const LinguisticDecl* RequirementSpec::find_variable(std::string_view name) const {
  for (const auto& v : linguistic_variables)
    if (v.variable.name == name) return &v;
  return nullptr;
}

const ScaleDecl* RequirementSpec::find_scale(std::string_view name) const {
  for (const auto& s : scales)
    if (s.name == name) return &s;
  return nullptr;
}

const TemplateDecl* RequirementSpec::find_template(std::string_view name) const {
  for (const auto& t : templates)
    if (t.tmpl.quality_name == name) return &t;
  return nullptr;
}

const SoftGoalDecl* RequirementSpec::find_softgoal(std::string_view id) const {
  for (const auto& g : softgoals)
    if (g.id == id) return &g;
  return nullptr;
}

std::vector<goals::SoftGoalNode> RequirementSpec::goal_nodes() const {
  std::vector<goals::SoftGoalNode> nodes;
  for (const auto& decl : softgoals) {
    goals::SoftGoalNode node;
    node.id = decl.id;
    node.label = decl.id;
    node.threshold = decl.threshold;
    for (const auto& child : decl.children) {
      if (child.is_subgoal) {
        node.children.push_back(child.ref);
      } else {
        node.children.push_back(decl.id + "/" + child.ref);
      }
    }
    nodes.push_back(std::move(node));
  }
  // Leaf nodes and subgoal weights in a second pass, once ids are fixed.
  for (const auto& decl : softgoals) {
    for (const auto& child : decl.children) {
      if (child.is_subgoal) {
        for (auto& node : nodes)
          if (node.id == child.ref) node.weight = child.weight;
      } else {
        goals::SoftGoalNode leaf;
        leaf.id = decl.id + "/" + child.ref;
        leaf.label = child.ref;
        leaf.weight = child.weight;
        leaf.leaf_requirement = child.ref;
        nodes.push_back(std::move(leaf));
      }
    }
  }
  return nodes;
}

std::vector<goals::ContributionLink> RequirementSpec::contribution_links() const {
  std::vector<goals::ContributionLink> out;
  out.reserve(links.size());
  for (const auto& l : links) out.push_back(l.link);
  return out;
}

namespace {

bool equal(const Requirement& a, const Requirement& b) {
  return a.id == b.id && a.statement == b.statement &&
         a.verification == b.verification;
}

bool equal(const LinguisticDecl& a, const LinguisticDecl& b) {
  return a.variable == b.variable;
}

bool equal(const ScaleDecl& a, const ScaleDecl& b) {
  return a.name == b.name && a.points == b.points && a.categories == b.categories;
}

bool equal(const TemplateDecl& a, const TemplateDecl& b) { return a.tmpl == b.tmpl; }

bool equal(const SoftGoalDecl& a, const SoftGoalDecl& b) {
  return a.id == b.id && a.threshold == b.threshold && a.children == b.children;
}

bool equal(const LinkDecl& a, const LinkDecl& b) { return a.link == b.link; }

template <typename T>
bool all_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool structurally_equal(const RequirementSpec& a, const RequirementSpec& b) {
  if (a.project_name != b.project_name) return false;
  if (a.order.size() != b.order.size()) return false;
  for (std::size_t i = 0; i < a.order.size(); ++i)
    if (a.order[i].kind != b.order[i].kind || a.order[i].index != b.order[i].index)
      return false;
  return all_equal(a.requirements, b.requirements) &&
         all_equal(a.linguistic_variables, b.linguistic_variables) &&
         all_equal(a.scales, b.scales) && all_equal(a.templates, b.templates) &&
         all_equal(a.softgoals, b.softgoals) && all_equal(a.links, b.links);
}

}  // namespace nfrgauge::dsl
