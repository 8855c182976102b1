#include "nfrgauge/goal_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace nfrgauge::goals {

GoalForest validate_forest(std::vector<SoftGoalNode> nodes) {
  GoalForest forest;
  forest.nodes = std::move(nodes);

  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const auto& node = forest.nodes[i];
    if (!forest.index.emplace(node.id, i).second)
      throw Error(ErrorKind::Reference, "duplicate goal node id '" + node.id + "'");
  }

  std::map<std::string, std::string> parent_of;
  for (const auto& node : forest.nodes) {
    if (!(node.weight > 0.0) || !std::isfinite(node.weight))
      throw Error(ErrorKind::Validation,
                  "goal '" + node.id + "' weight must be a positive real");
    if (node.threshold && !(*node.threshold >= 0.0 && *node.threshold <= 1.0))
      throw Error(ErrorKind::Validation,
                  "goal '" + node.id + "' threshold outside [0,1]");
    const bool has_children = !node.children.empty();
    if (has_children && node.leaf_requirement)
      throw Error(ErrorKind::Validation,
                  "goal '" + node.id + "' has both children and a leaf binding");
    if (!has_children && !node.leaf_requirement)
      throw Error(ErrorKind::Validation,
                  "goal '" + node.id + "' has neither children nor a leaf binding");
    std::set<std::string> seen;
    for (const auto& child : node.children) {
      if (!forest.index.count(child))
        throw Error(ErrorKind::Reference,
                    "goal '" + node.id + "' references unknown child '" + child + "'");
      if (!seen.insert(child).second)
        throw Error(ErrorKind::Reference,
                    "goal '" + node.id + "' lists child '" + child + "' twice");
      auto [it, inserted] = parent_of.emplace(child, node.id);
      if (!inserted)
        throw Error(ErrorKind::Reference, "goal '" + child +
                                              "' has more than one parent ('" +
                                              it->second + "' and '" + node.id + "')");
    }
  }

  // Cycle check: iterative DFS with tricolor marking.
  enum class Color { White, Grey, Black };
  std::map<std::string, Color> color;
  for (const auto& node : forest.nodes) color[node.id] = Color::White;
  std::vector<std::string> path;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    color[id] = Color::Grey;
    path.push_back(id);
    for (const auto& child : forest.nodes[forest.index.at(id)].children) {
      if (color[child] == Color::Grey) {
        std::ostringstream os;
        os << "goal graph contains a cycle:";
        auto start = std::find(path.begin(), path.end(), child);
        for (auto it = start; it != path.end(); ++it) os << " " << *it << " ->";
        os << " " << child;
        throw Error(ErrorKind::Cycle, os.str());
      }
      if (color[child] == Color::White) visit(child);
    }
    path.pop_back();
    color[id] = Color::Black;
  };
  for (const auto& node : forest.nodes)
    if (color[node.id] == Color::White) visit(node.id);

  for (const auto& node : forest.nodes)
    if (!parent_of.count(node.id)) forest.roots.push_back(node.id);
  return forest;
}

namespace {

double eval_strict(const GoalForest& forest, const SoftGoalNode& node,
                   const std::map<std::string, double>& leaf_satisfactions,
                   Satisfactions& memo) {
  if (auto it = memo.find(node.id); it != memo.end()) return it->second;
  double value;
  if (node.leaf_requirement) {
    auto it = leaf_satisfactions.find(*node.leaf_requirement);
    if (it == leaf_satisfactions.end())
      throw Error(ErrorKind::Argument, "no satisfaction supplied for requirement '" +
                                           *node.leaf_requirement + "'");
    if (!(it->second >= 0.0 && it->second <= 1.0)) {
      std::ostringstream os;
      os << "satisfaction " << it->second << " for requirement '"
         << *node.leaf_requirement << "' outside [0,1]";
      throw Error(ErrorKind::Range, os.str());
    }
    value = it->second;
  } else {
    double num = 0.0, den = 0.0;
    for (const auto& child_id : node.children) {
      const auto& child = forest.nodes[forest.index.at(child_id)];
      num += child.weight * eval_strict(forest, child, leaf_satisfactions, memo);
      den += child.weight;
    }
    value = num / den;
  }
  memo[node.id] = value;
  return value;
}

std::optional<double> eval_partial(
    const GoalForest& forest, const SoftGoalNode& node,
    const std::map<std::string, double>& leaf_satisfactions,
    Satisfactions& memo) {
  if (node.leaf_requirement) {
    auto it = leaf_satisfactions.find(*node.leaf_requirement);
    if (it == leaf_satisfactions.end()) return std::nullopt;
    memo[node.id] = it->second;
    return it->second;
  }
  double num = 0.0, den = 0.0;
  for (const auto& child_id : node.children) {
    const auto& child = forest.nodes[forest.index.at(child_id)];
    if (auto v = eval_partial(forest, child, leaf_satisfactions, memo)) {
      num += child.weight * *v;
      den += child.weight;
    }
  }
  if (den == 0.0) return std::nullopt;
  memo[node.id] = num / den;
  return num / den;
}

}  // namespace

Satisfactions propagate(const GoalForest& forest,
                        const std::map<std::string, double>& leaf_satisfactions) {
  Satisfactions memo;
  for (const auto& root : forest.roots)
    eval_strict(forest, forest.nodes[forest.index.at(root)], leaf_satisfactions,
                memo);
  return memo;
}

Satisfactions propagate_partial(
    const GoalForest& forest,
    const std::map<std::string, double>& leaf_satisfactions) {
  Satisfactions memo;
  for (const auto& root : forest.roots)
    eval_partial(forest, forest.nodes[forest.index.at(root)], leaf_satisfactions,
                 memo);
  return memo;
}

std::vector<RootVerdict> roots_satisfied(const GoalForest& forest,
                                         const Satisfactions& satisfactions) {
  std::vector<RootVerdict> verdicts;
  for (const auto& root : forest.roots) {
    auto it = satisfactions.find(root);
    if (it == satisfactions.end()) continue;
    const auto& node = forest.nodes[forest.index.at(root)];
    RootVerdict v;
    v.id = root;
    v.value = it->second;
    v.threshold = node.threshold.value_or(kDefaultRootThreshold);
    v.satisfied = v.value >= v.threshold;
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

std::vector<Conflict> detect_conflicts(std::vector<ContributionLink> links) {
  std::sort(links.begin(), links.end(),
            [](const ContributionLink& a, const ContributionLink& b) {
              if (a.source != b.source) return a.source < b.source;
              if (a.target != b.target) return a.target < b.target;
              return a.sign_weight < b.sign_weight;
            });
  links.erase(std::unique(links.begin(), links.end()), links.end());

  std::vector<Conflict> out;
  std::size_t i = 0;
  while (i < links.size()) {
    std::size_t j = i;
    while (j < links.size() && links[j].source == links[i].source) ++j;
    for (std::size_t p = i; p < j; ++p) {
      if (!(links[p].sign_weight > 0.0)) continue;
      for (std::size_t n = i; n < j; ++n) {
        if (!(links[n].sign_weight < 0.0)) continue;
        if (links[p].target == links[n].target) continue;
        out.push_back({links[i].source, links[p].target, links[p].sign_weight,
                       links[n].target, links[n].sign_weight});
      }
    }
    i = j;
  }
  std::sort(out.begin(), out.end(), [](const Conflict& a, const Conflict& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.positive_target != b.positive_target)
      return a.positive_target < b.positive_target;
    if (a.negative_target != b.negative_target)
      return a.negative_target < b.negative_target;
    if (a.positive_sign != b.positive_sign) return a.positive_sign < b.positive_sign;
    return a.negative_sign < b.negative_sign;
  });
  return out;
}

}  // namespace nfrgauge::goals
