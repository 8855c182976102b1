#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nfrgauge/error.hpp"

namespace nfrgauge::fuzzy {

// Piecewise-linear fuzzy set shapes over a numeric domain.
// Degenerate triangles (a==b or b==c) act as right/left shoulders.
struct Triangular {
  double a, b, c;  // a <= b <= c, all finite
  bool operator==(const Triangular&) const = default;
};

// Shoulders may be unbounded: (a,b) = -inf extends the plateau left,
// (c,d) = +inf extends it right.
struct Trapezoidal {
  double a, b, c, d;  // a <= b <= c <= d
  bool operator==(const Trapezoidal&) const = default;
};

struct CrispInterval {
  double lo, hi;
  bool lo_inclusive = true;
  bool hi_inclusive = true;
  bool operator==(const CrispInterval&) const = default;
};

using MembershipFunction = std::variant<Triangular, Trapezoidal, CrispInterval>;

/// Throws Error{Validation} naming the offending parameter.
void check_shape(const MembershipFunction& mf);

/// Membership degree of x, always in [0,1]; crisp intervals return 0 or 1.
double membership(const MembershipFunction& mf, double x);

/// Closed hull [lo, hi] of the nonzero support.
std::pair<double, double> support(const MembershipFunction& mf);

struct LinguisticVariable {
  std::string name;
  std::string unit;
  std::optional<std::pair<double, double>> domain;
  std::vector<std::pair<std::string, MembershipFunction>> terms;  // declaration order
  bool operator==(const LinguisticVariable&) const = default;
};

void check_variable(const LinguisticVariable& lv);

/// One (term, degree) entry per term, in declaration order.
using TermDegrees = std::vector<std::pair<std::string, double>>;

TermDegrees fuzzify(const LinguisticVariable& lv, double x);

enum class Hedge { Not, Very, Somewhat, Slightly };

const char* to_string(Hedge h);
std::optional<Hedge> hedge_from_string(std::string_view name);

/// not = 1-u, very = u^2, somewhat = u^(1/2), slightly = u^(1/3).
double apply_hedge(Hedge h, double mu);

/// Term with the maximum degree; ties go to the earlier entry.
std::pair<std::string, double> best_label(const TermDegrees& degrees);

/// Weighted mean sum(w*u)/sum(w) of (degree, weight) parts.
double weighted_score(const std::vector<std::pair<double, double>>& parts);

// Grading grid: sub-qualities with weights, each graded into ordered levels
// (best first), combined into a status by ordered status rows (best first).
struct GradingLevel {
  std::string name;
  MembershipFunction mf;
  bool operator==(const GradingLevel&) const = default;
};

struct SubNfr {
  std::string name;
  double weight = 1.0;
  std::vector<GradingLevel> levels;  // best first
  bool operator==(const SubNfr&) const = default;
};

struct StatusRow {
  std::string name;
  std::vector<std::string> required;  // one level name per sub-NFR, positional
  bool operator==(const StatusRow&) const = default;
};

struct WeightedTemplate {
  std::string quality_name;
  std::vector<SubNfr> subs;
  std::vector<StatusRow> rows;  // best first
  bool operator==(const WeightedTemplate&) const = default;
};

/// Resolves touching closed crisp intervals within each sub-NFR: a shared
/// endpoint stays with the earlier-declared level, the later one becomes
/// exclusive there. Idempotent.
void canonicalize_gradings(WeightedTemplate& tmpl);

/// Structural invariants plus per-sub disjointness/coverage of the gradings.
void check_template(const WeightedTemplate& tmpl);

/// Level with the maximum degree at `value` (declaration order breaks ties).
std::pair<std::string, double> grade_sub_nfr(const WeightedTemplate& tmpl,
                                             const std::string& sub_name,
                                             double value);

struct TemplateOutcome {
  std::string status;
  double score;      // weighted level score normalized to [0,1]
  double raw_score;  // weighted level score in [0, sum of weights]
  double max_raw;    // sum of weights
  std::vector<std::pair<std::string, std::string>> levels;  // sub-NFR -> level
};

/// Grades every sub-NFR and combines them: the best status row whose level
/// requirements all match wins; otherwise the row implied by the worst
/// individual level. Values must cover every sub-NFR exactly once.
TemplateOutcome evaluate_template(
    const WeightedTemplate& tmpl,
    const std::vector<std::pair<std::string, double>>& values);

}  // namespace nfrgauge::fuzzy
