#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nfrgauge/fuzzy.hpp"
#include "nfrgauge/goal_graph.hpp"
#include "nfrgauge/likert.hpp"

namespace nfrgauge::dsl {

// ---------------------------------------------------------------- tokens

enum class TokenKind { Identifier, Number, String, Keyword, Punct, EndOfFile };

const char* to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string lexeme;   // raw text; decoded value for strings
  double number = 0.0;  // value for Number tokens
  int line = 1;
  int column = 1;
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  int line = 1;
  int column = 1;
  std::string message;
  std::string snippet;  // the offending source line
};

std::string render(const Diagnostic& d);

struct TokenizeResult {
  std::vector<Token> tokens;  // ends with EndOfFile
  std::vector<Diagnostic> diagnostics;
};

/// Splits source text into tokens; `#` comments and whitespace are dropped,
/// `inf`/`-inf` lex as numbers. Illegal characters become diagnostics, never
/// exceptions.
TokenizeResult tokenize(std::string_view text);

// ------------------------------------------------------------------ model

struct SourceLoc {
  int line = 1;
  int column = 1;
  std::string snippet;
};

enum class Comparator { Less, LessEq, Greater, GreaterEq };
enum class Aggregator { Max, Min, Mean, P95 };

const char* to_string(Comparator c);
const char* to_string(Aggregator a);
std::optional<Aggregator> aggregator_from_string(std::string_view name);

struct BooleanCheck {
  std::string check;  // external test reference
  bool operator==(const BooleanCheck&) const = default;
};

struct MetricThreshold {
  std::string metric;
  Comparator comparator = Comparator::Less;
  double bound = 0.0;
  std::string unit;
  std::optional<Aggregator> aggregator;  // max when unset
  bool operator==(const MetricThreshold&) const = default;
};

struct LikertSurvey {
  std::string scale;   // scale name
  std::string survey;  // data source name
  std::optional<double> band;  // fraction of the score range
  bool operator==(const LikertSurvey&) const = default;
};

struct FuzzyAssessment {
  std::string variable;
  std::string input_metric;
  std::string target_term;
  std::optional<fuzzy::Hedge> hedge;
  bool operator==(const FuzzyAssessment&) const = default;
};

struct TemplateAssessment {
  std::string template_name;
  bool operator==(const TemplateAssessment&) const = default;
};

// monostate = no verification clause (a vague requirement).
using Verification = std::variant<std::monostate, BooleanCheck, MetricThreshold,
                                  LikertSurvey, FuzzyAssessment, TemplateAssessment>;

struct Requirement {
  std::string id;
  std::string statement;  // defaults to id
  Verification verification;
  SourceLoc loc;
};

struct LinguisticDecl {
  fuzzy::LinguisticVariable variable;
  SourceLoc loc;
};

struct ScaleDecl {
  std::string name;
  std::optional<int> points;  // standard-scale shorthand
  std::vector<std::pair<std::string, int>> categories;  // custom scale
  SourceLoc loc;

  likert::LikertScale scale() const;
};

struct TemplateDecl {
  fuzzy::WeightedTemplate tmpl;
  SourceLoc loc;
};

struct SoftGoalDecl {
  struct Child {
    double weight = 1.0;
    bool is_subgoal = false;
    std::string ref;  // subgoal id or requirement id
    bool operator==(const Child&) const = default;
  };
  std::string id;
  std::optional<double> threshold;
  std::vector<Child> children;
  SourceLoc loc;
};

struct LinkDecl {
  goals::ContributionLink link;
  SourceLoc loc;
};

enum class DeclKind { Requirement, Linguistic, Scale, Template, SoftGoal, Link };

struct DeclRef {
  DeclKind kind;
  std::size_t index;
};

struct RequirementSpec {
  std::string project_name;
  std::vector<Requirement> requirements;
  std::vector<LinguisticDecl> linguistic_variables;
  std::vector<ScaleDecl> scales;
  std::vector<TemplateDecl> templates;
  std::vector<SoftGoalDecl> softgoals;
  std::vector<LinkDecl> links;
  std::vector<DeclRef> order;  // interleaved declaration order

  const Requirement* find_requirement(std::string_view id) const;
  const LinguisticDecl* find_variable(std::string_view name) const;
  const ScaleDecl* find_scale(std::string_view name) const;
  const TemplateDecl* find_template(std::string_view name) const;
  const SoftGoalDecl* find_softgoal(std::string_view id) const;

  /// Materializes the soft-goal declarations as goal nodes: every leaf entry
  /// becomes a node "<goal>/<requirement>", subgoal entries assign weights.
  std::vector<goals::SoftGoalNode> goal_nodes() const;
  std::vector<goals::ContributionLink> contribution_links() const;
};

/// Structural model equality; source locations are ignored.
bool structurally_equal(const RequirementSpec& a, const RequirementSpec& b);

// ------------------------------------------------------------- operations

struct ParseResult {
  std::optional<RequirementSpec> spec;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return spec.has_value(); }
};

/// Total: any input yields a spec or diagnostics. Collects every error in one
/// pass using panic-mode recovery at `;`/`}` boundaries, then resolves all
/// cross-references. Template gradings come back canonicalized: a grading
/// endpoint shared by two levels belongs to the earlier-declared one.
ParseResult parse(std::string_view text);

/// Canonical text: declaration order, two-space indentation, minimally
/// rendered numbers. parse(serialize(spec)) is structurally equal to spec.
std::string serialize(const RequirementSpec& spec);

/// Semantic checks over a parsed spec: id uniqueness, scale/variable/template
/// well-formedness (coverage and disjointness included), goal-forest
/// validity, value ranges, plus warnings for unreferenced declarations.
std::vector<Diagnostic> validate(const RequirementSpec& spec);

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics)
    if (d.severity == Severity::Error) return true;
  return false;
}

/// Shortest decimal form that parses back exactly; infinities render as
/// inf/-inf.
std::string format_number(double value);

}  // namespace nfrgauge::dsl
