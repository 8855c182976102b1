#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nfrgauge/error.hpp"

namespace nfrgauge::goals {

inline constexpr double kDefaultRootThreshold = 0.7;

struct SoftGoalNode {
  std::string id;
  std::string label;
  double weight = 1.0;                // relative to siblings
  std::vector<std::string> children;  // goal node ids
  std::optional<std::string> leaf_requirement;
  std::optional<double> threshold;  // effective on roots
  bool operator==(const SoftGoalNode&) const = default;
};

struct GoalForest {
  std::vector<SoftGoalNode> nodes;  // declaration order
  std::vector<std::string> roots;   // declaration order
  std::map<std::string, std::size_t> index;
};

/// Checks unique ids, resolvable children, single parentage, the
/// children-xor-leaf rule, and acyclicity; identifies the roots.
GoalForest validate_forest(std::vector<SoftGoalNode> nodes);

using Satisfactions = std::map<std::string, double>;

/// Leaves take their bound satisfaction; internal nodes take the
/// weight-normalized average of their children, bottom-up. Every
/// leaf binding must be present in leaf_satisfactions.
Satisfactions propagate(const GoalForest& forest,
                        const std::map<std::string, double>& leaf_satisfactions);

/// Like propagate, but leaves without a satisfaction drop out of their
/// parent's average; nodes with no evaluated descendants are absent
/// from the result.
Satisfactions propagate_partial(
    const GoalForest& forest,
    const std::map<std::string, double>& leaf_satisfactions);

struct RootVerdict {
  std::string id;
  double value = 0.0;
  double threshold = kDefaultRootThreshold;
  bool satisfied = false;
};

/// Verdict per root with a propagated value: satisfied iff value >= threshold.
std::vector<RootVerdict> roots_satisfied(const GoalForest& forest,
                                         const Satisfactions& satisfactions);

struct ContributionLink {
  std::string source;  // goal node id or requirement id
  std::string target;  // goal node id
  double sign_weight = 0.0;  // in [-1, 1], nonzero
  bool operator==(const ContributionLink&) const = default;
};

struct Conflict {
  std::string source;
  std::string positive_target;
  double positive_sign = 0.0;
  std::string negative_target;
  double negative_sign = 0.0;
  bool operator==(const Conflict&) const = default;
};

/// Every source carrying opposite-signed links to two different targets,
/// one entry per (source, helped target, hurt target) pair; deterministic
/// under permutation of the input.
std::vector<Conflict> detect_conflicts(std::vector<ContributionLink> links);

}  // namespace nfrgauge::goals
