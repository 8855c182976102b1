#pragma once

// Brute-force reference implementations, deliberately separate from the
// library code paths they check.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "nfrgauge/fuzzy.hpp"
#include "nfrgauge/goal_graph.hpp"

namespace oracle {

// Plain summation in reverse order with long double accumulation.
inline double weighted_sum(const std::vector<std::pair<double, double>>& parts) {
  long double num = 0.0L, den = 0.0L;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    num += static_cast<long double>(it->second) * static_cast<long double>(it->first);
    den += static_cast<long double>(it->second);
  }
  return static_cast<double>(num / den);
}

// Recursive satisfaction directly over the raw node list.
inline double goal_satisfaction(const std::vector<nfrgauge::goals::SoftGoalNode>& nodes,
                                const std::string& id,
                                const std::map<std::string, double>& leaves) {
  const nfrgauge::goals::SoftGoalNode* node = nullptr;
  for (const auto& n : nodes)
    if (n.id == id) node = &n;
  if (node->leaf_requirement) return leaves.at(*node->leaf_requirement);
  long double num = 0.0L, den = 0.0L;
  for (const auto& child_id : node->children) {
    const nfrgauge::goals::SoftGoalNode* child = nullptr;
    for (const auto& n : nodes)
      if (n.id == child_id) child = &n;
    num += static_cast<long double>(child->weight) *
           static_cast<long double>(goal_satisfaction(nodes, child_id, leaves));
    den += static_cast<long double>(child->weight);
  }
  return static_cast<double>(num / den);
}

struct TemplateExpectation {
  std::string status;
  double score = 0.0;
  double raw = 0.0;
  std::vector<std::string> levels;  // per sub, declaration order
};

// Enumerates rows and level assignments instead of reusing the library's
// grading walk.
inline TemplateExpectation evaluate_template(
    const nfrgauge::fuzzy::WeightedTemplate& tmpl,
    const std::map<std::string, double>& values) {
  using nfrgauge::fuzzy::membership;
  const std::size_t n_subs = tmpl.subs.size();
  const std::size_t n_rows = tmpl.rows.size();

  // Level pick per sub: enumerate every level, track the best degree.
  std::vector<std::size_t> picked(n_subs, 0);
  for (std::size_t s = 0; s < n_subs; ++s) {
    double best = -1.0;
    for (std::size_t l = 0; l < tmpl.subs[s].levels.size(); ++l) {
      const double d =
          membership(tmpl.subs[s].levels[l].mf, values.at(tmpl.subs[s].name));
      if (d > best) {
        best = d;
        picked[s] = l;
      }
    }
  }

  // Row lookup table: for each (sub, level name) the first row requiring it.
  std::map<std::pair<std::size_t, std::string>, std::size_t> first_row;
  for (std::size_t r = n_rows; r-- > 0;)
    for (std::size_t s = 0; s < n_subs; ++s)
      first_row[{s, tmpl.rows[r].required[s]}] = r;

  // Exact match: enumerate all rows.
  std::size_t chosen = n_rows;
  for (std::size_t r = 0; r < n_rows && chosen == n_rows; ++r) {
    bool all = true;
    for (std::size_t s = 0; s < n_subs; ++s)
      all = all && tmpl.rows[r].required[s] == tmpl.subs[s].levels[picked[s]].name;
    if (all) chosen = r;
  }
  if (chosen == n_rows) {
    std::size_t worst = 0;
    for (std::size_t s = 0; s < n_subs; ++s) {
      const std::string& name = tmpl.subs[s].levels[picked[s]].name;
      std::size_t r;
      auto it = first_row.find({s, name});
      if (it != first_row.end()) {
        r = it->second;
      } else {
        const std::size_t n_levels = tmpl.subs[s].levels.size();
        r = (n_levels <= 1 || n_rows <= 1)
                ? 0
                : static_cast<std::size_t>(
                      std::llround(static_cast<double>(picked[s]) *
                                   static_cast<double>(n_rows - 1) /
                                   static_cast<double>(n_levels - 1)));
      }
      if (r > worst) worst = r;
    }
    chosen = worst;
  }

  TemplateExpectation expect;
  expect.status = tmpl.rows[chosen].name;
  long double num = 0.0L, den = 0.0L;
  for (std::size_t s = 0; s < n_subs; ++s) {
    const std::size_t n_levels = tmpl.subs[s].levels.size();
    const long double value =
        n_levels <= 1 ? 1.0L
                      : 1.0L - static_cast<long double>(picked[s]) /
                                   static_cast<long double>(n_levels - 1);
    num += static_cast<long double>(tmpl.subs[s].weight) * value;
    den += static_cast<long double>(tmpl.subs[s].weight);
    expect.levels.push_back(tmpl.subs[s].levels[picked[s]].name);
  }
  expect.raw = static_cast<double>(num);
  expect.score = static_cast<double>(num / den);
  return expect;
}

}  // namespace oracle
