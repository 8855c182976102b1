#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "nfrgauge/dsl.hpp"

namespace nfrgauge::dsl {

namespace {

struct SyntaxError {};  // recovery signal; the diagnostic is already recorded

struct EntrySlot {
  std::optional<std::string> value;
  SourceLoc loc;
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    auto lexed = tokenize(text);
    toks_ = std::move(lexed.tokens);
    diags_ = std::move(lexed.diagnostics);
  }

  ParseResult run() {
    try {
      parse_project();
    } catch (SyntaxError&) {
      // unrecoverable header problem; diagnostics already collected
    }
    resolve();
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) {
      for (auto& tmpl : spec_.templates) fuzzy::canonicalize_gradings(tmpl.tmpl);
      result.spec = std::move(spec_);
    }
    return result;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
  RequirementSpec spec_;

  // ------------------------------------------------------------- plumbing

  const Token& peek() const { return toks_[pos_]; }
  const Token& get() {
    const Token& t = toks_[pos_];
    if (t.kind != TokenKind::EndOfFile) ++pos_;
    return t;
  }
  bool at_eof() const { return peek().kind == TokenKind::EndOfFile; }

  bool at_punct(std::string_view p) const {
    return peek().kind == TokenKind::Punct && peek().lexeme == p;
  }
  bool at_keyword(std::string_view k) const {
    return peek().kind == TokenKind::Keyword && peek().lexeme == k;
  }
  bool accept_punct(std::string_view p) {
    if (!at_punct(p)) return false;
    ++pos_;
    return true;
  }
  bool accept_keyword(std::string_view k) {
    if (!at_keyword(k)) return false;
    ++pos_;
    return true;
  }

  SourceLoc loc_of(const Token& t) const {
    return SourceLoc{t.line, t.column, {}};
  }

  void diag_at(const Token& t, std::string message,
               Severity severity = Severity::Error) {
    Diagnostic d;
    d.severity = severity;
    d.line = t.line;
    d.column = t.column;
    d.message = std::move(message);
    diags_.push_back(std::move(d));
  }

  [[noreturn]] void fail_at(const Token& t, std::string message) {
    diag_at(t, std::move(message));
    throw SyntaxError{};
  }

  std::string describe(const Token& t) const {
    if (t.kind == TokenKind::EndOfFile) return "end of input";
    std::ostringstream os;
    os << to_string(t.kind) << " '" << t.lexeme << "'";
    return os.str();
  }

  void expect_punct(std::string_view p, const char* context) {
    if (!accept_punct(p))
      fail_at(peek(), "expected '" + std::string(p) + "' " + context + ", found " +
                          describe(peek()));
  }

  void expect_keyword(std::string_view k, const char* context) {
    if (!accept_keyword(k))
      fail_at(peek(), "expected '" + std::string(k) + "' " + context + ", found " +
                          describe(peek()));
  }

  std::string expect_string(const char* what) {
    if (peek().kind != TokenKind::String)
      fail_at(peek(), std::string("expected ") + what + " (a string), found " +
                          describe(peek()));
    return get().lexeme;
  }

  std::string expect_ident(const char* what) {
    if (peek().kind != TokenKind::Identifier)
      fail_at(peek(), std::string("expected ") + what + " (an identifier), found " +
                          describe(peek()));
    return get().lexeme;
  }

  double expect_number(const char* what) {
    if (peek().kind != TokenKind::Number)
      fail_at(peek(), std::string("expected ") + what + " (a number), found " +
                          describe(peek()));
    return get().number;
  }

  int expect_int(const char* what) {
    const Token& t = peek();
    const double v = expect_number(what);
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9)
      fail_at(t, std::string(what) + " must be an integer, got '" + t.lexeme + "'");
    return static_cast<int>(v);
  }

  // Skip to the next ';' (consumed) or a '}' (left in place), balancing
  // nested braces on the way.
  void sync_entry() {
    int depth = 0;
    while (!at_eof()) {
      if (at_punct("{")) {
        ++depth;
      } else if (at_punct("}")) {
        if (depth == 0) return;
        --depth;
      } else if (at_punct(";") && depth == 0) {
        get();
        return;
      }
      get();
    }
  }

  // Skip to the next declaration keyword or closing '}' at this level.
  void sync_decl() {
    int depth = 0;
    while (!at_eof()) {
      if (depth == 0 && peek().kind == TokenKind::Keyword && starts_decl(peek().lexeme))
        return;
      if (at_punct("{")) {
        ++depth;
      } else if (at_punct("}")) {
        if (depth == 0) return;
        --depth;
      }
      get();
    }
  }

  static bool starts_decl(const std::string& k) {
    return k == "requirement" || k == "mnfr" || k == "snfr" || k == "linguistic" ||
           k == "scale" || k == "template" || k == "softgoal" || k == "link";
  }

  // ------------------------------------------------------------- grammar

  void parse_project() {
    expect_keyword("project", "at the start of the file");
    spec_.project_name = expect_string("the project name");
    expect_punct("{", "after the project name");
    while (!at_punct("}") && !at_eof()) {
      try {
        parse_decl();
      } catch (SyntaxError&) {
        sync_decl();
      }
    }
    if (!accept_punct("}")) {
      diag_at(peek(), "expected '}' closing the project block");
      return;
    }
    if (!at_eof())
      diag_at(peek(), "unexpected content after the project block: " + describe(peek()));
  }

  void parse_decl() {
    const Token& t = peek();
    if (t.kind != TokenKind::Keyword || !starts_decl(t.lexeme))
      fail_at(t, "expected a declaration (requirement, mnfr, snfr, linguistic, "
                 "scale, template, softgoal, or link), found " +
                     describe(t));
    if (t.lexeme == "requirement" || t.lexeme == "mnfr" || t.lexeme == "snfr")
      parse_requirement(t.lexeme);
    else if (t.lexeme == "linguistic")
      parse_linguistic();
    else if (t.lexeme == "scale")
      parse_scale();
    else if (t.lexeme == "template")
      parse_template();
    else if (t.lexeme == "softgoal")
      parse_softgoal();
    else
      parse_link();
  }

  void parse_entry_tail(EntrySlot& slot, const char* what) {
    const Token& key = toks_[pos_ - 1];
    if (slot.value) fail_at(key, std::string("duplicate entry '") + what + "'");
    slot.loc = loc_of(key);
    expect_punct(":", "after the entry keyword");
    slot.value = expect_string(what);
    expect_punct(";", "after the entry");
  }

  void parse_ident_entry_tail(EntrySlot& slot, const char* what) {
    const Token& key = toks_[pos_ - 1];
    if (slot.value) fail_at(key, std::string("duplicate entry '") + what + "'");
    slot.loc = loc_of(key);
    expect_punct(":", "after the entry keyword");
    slot.value = expect_ident(what);
    expect_punct(";", "after the entry");
  }

  void parse_requirement(const std::string& kind) {
    const Token& head = get();  // requirement | mnfr | snfr
    Requirement req;
    req.loc = loc_of(head);
    req.id = expect_string("the requirement id");
    expect_punct("{", "after the requirement id");

    EntrySlot statement, verified_by, metric, threshold, unit, aggregator;
    EntrySlot scale, survey, variable, input, target, template_ref;
    std::optional<double> band;
    std::optional<fuzzy::Hedge> hedge;
    SourceLoc band_loc;

    while (!at_punct("}") && !at_eof()) {
      try {
        const Token& key = peek();
        if (key.kind != TokenKind::Keyword)
          fail_at(key, "expected an entry keyword, found " + describe(key));
        get();
        if (key.lexeme == "statement") {
          parse_entry_tail(statement, "statement");
        } else if (kind == "requirement" && key.lexeme == "verified_by") {
          parse_entry_tail(verified_by, "verified_by");
        } else if (kind == "mnfr" && key.lexeme == "metric") {
          parse_ident_entry_tail(metric, "metric");
        } else if (kind == "mnfr" && key.lexeme == "threshold") {
          parse_entry_tail(threshold, "threshold");
        } else if (kind == "mnfr" && key.lexeme == "unit") {
          parse_entry_tail(unit, "unit");
        } else if (kind == "mnfr" && key.lexeme == "aggregator") {
          parse_ident_entry_tail(aggregator, "aggregator");
        } else if (kind == "snfr" && key.lexeme == "scale") {
          parse_ident_entry_tail(scale, "scale");
        } else if (kind == "snfr" && key.lexeme == "survey") {
          parse_entry_tail(survey, "survey");
        } else if (kind == "snfr" && key.lexeme == "band") {
          if (band) fail_at(key, "duplicate entry 'band'");
          band_loc = loc_of(key);
          expect_punct(":", "after the entry keyword");
          band = expect_number("the decision band");
          expect_punct(";", "after the entry");
        } else if (kind == "snfr" && key.lexeme == "variable") {
          parse_ident_entry_tail(variable, "variable");
        } else if (kind == "snfr" && key.lexeme == "input") {
          parse_ident_entry_tail(input, "input");
        } else if (kind == "snfr" && key.lexeme == "target") {
          if (target.value) fail_at(key, "duplicate entry 'target'");
          target.loc = loc_of(key);
          expect_punct(":", "after the entry keyword");
          target.value = expect_ident("the target term");
          if (accept_punct(":")) {
            const Token& hedge_tok = peek();
            const std::string name = expect_ident("a hedge");
            hedge = fuzzy::hedge_from_string(name);
            if (!hedge)
              fail_at(hedge_tok, "unknown hedge '" + name +
                                     "' (expected not, very, somewhat, or slightly)");
          }
          expect_punct(";", "after the entry");
        } else if (kind == "snfr" && key.lexeme == "template") {
          parse_ident_entry_tail(template_ref, "template");
        } else {
          fail_at(key, "entry '" + key.lexeme + "' is not allowed in a " + kind +
                           " block");
        }
      } catch (SyntaxError&) {
        sync_entry();
      }
    }
    expect_punct("}", "closing the requirement block");

    req.statement = statement.value.value_or(req.id);

    if (kind == "requirement") {
      if (verified_by.value)
        req.verification = BooleanCheck{*verified_by.value};
      // no clause: stays monostate (a vague requirement)
    } else if (kind == "mnfr") {
      if (!metric.value || !threshold.value) {
        Diagnostic d;
        d.line = req.loc.line;
        d.column = req.loc.column;
        d.message = "mnfr \"" + req.id + "\" needs both 'metric' and 'threshold'";
        diags_.push_back(std::move(d));
        return;
      }
      MetricThreshold mt;
      mt.metric = *metric.value;
      mt.unit = unit.value.value_or("");
      if (!parse_threshold_text(*threshold.value, mt)) {
        Diagnostic d;
        d.line = threshold.loc.line;
        d.column = threshold.loc.column;
        d.message = "malformed threshold \"" + *threshold.value +
                    "\" (expected a comparator <, <=, >, or >= and a number)";
        diags_.push_back(std::move(d));
        return;
      }
      if (aggregator.value) {
        auto agg = aggregator_from_string(*aggregator.value);
        if (!agg) {
          Diagnostic d;
          d.line = aggregator.loc.line;
          d.column = aggregator.loc.column;
          d.message = "unknown aggregator '" + *aggregator.value +
                      "' (expected max, min, mean, or p95)";
          diags_.push_back(std::move(d));
          return;
        }
        mt.aggregator = agg;
      }
      req.verification = std::move(mt);
    } else {  // snfr
      const bool any_likert = scale.value || survey.value || band.has_value();
      const bool any_fuzzy = variable.value || input.value || target.value;
      const bool any_template = template_ref.value.has_value();
      const int groups = (any_likert ? 1 : 0) + (any_fuzzy ? 1 : 0) +
                         (any_template ? 1 : 0);
      const bool likert_complete = scale.value && survey.value;
      const bool fuzzy_complete = variable.value && input.value && target.value;
      if (groups != 1 || (any_likert && !likert_complete) ||
          (any_fuzzy && !fuzzy_complete)) {
        Diagnostic d;
        d.line = req.loc.line;
        d.column = req.loc.column;
        d.message = "snfr \"" + req.id +
                    "\" must declare exactly one verification: scale+survey, "
                    "variable+input+target, or template";
        diags_.push_back(std::move(d));
      }
      // Assemble what is there anyway so resolution can still report
      // dangling names in the same pass.
      if (template_ref.value) {
        req.verification = TemplateAssessment{*template_ref.value};
      } else if (fuzzy_complete) {
        FuzzyAssessment fa;
        fa.variable = *variable.value;
        fa.input_metric = *input.value;
        fa.target_term = *target.value;
        fa.hedge = hedge;
        req.verification = std::move(fa);
      } else if (scale.value) {
        LikertSurvey ls;
        ls.scale = *scale.value;
        ls.survey = survey.value.value_or("");
        ls.band = band;
        req.verification = std::move(ls);
      }
    }

    spec_.order.push_back({DeclKind::Requirement, spec_.requirements.size()});
    spec_.requirements.push_back(std::move(req));
  }

  static bool parse_threshold_text(const std::string& text, MetricThreshold& mt) {
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (text.compare(i, 2, "<=") == 0) {
      mt.comparator = Comparator::LessEq;
      i += 2;
    } else if (text.compare(i, 2, ">=") == 0) {
      mt.comparator = Comparator::GreaterEq;
      i += 2;
    } else if (text.compare(i, 3, "≤") == 0) {
      mt.comparator = Comparator::LessEq;
      i += 3;
    } else if (text.compare(i, 3, "≥") == 0) {
      mt.comparator = Comparator::GreaterEq;
      i += 3;
    } else if (i < text.size() && text[i] == '<') {
      mt.comparator = Comparator::Less;
      ++i;
    } else if (i < text.size() && text[i] == '>') {
      mt.comparator = Comparator::Greater;
      ++i;
    } else {
      return false;
    }
    skip_ws();
    const char* begin = text.data() + i;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, mt.bound);
    if (ec != std::errc{} || ptr == begin) return false;
    i = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    return i == text.size();
  }

  fuzzy::MembershipFunction parse_shape() {
    const Token& head = peek();
    std::string kind;
    if (accept_keyword("triangle"))
      kind = "triangle";
    else if (accept_keyword("trapezoid"))
      kind = "trapezoid";
    else if (accept_keyword("interval"))
      kind = "interval";
    else
      fail_at(head, "expected a shape (triangle, trapezoid, or interval), found " +
                        describe(head));
    expect_punct("(", "after the shape name");
    std::vector<double> params;
    params.push_back(expect_number("a shape parameter"));
    while (accept_punct(",")) params.push_back(expect_number("a shape parameter"));
    expect_punct(")", "closing the shape parameters");

    const std::size_t arity = kind == "triangle" ? 3 : kind == "trapezoid" ? 4 : 2;
    if (params.size() != arity) {
      std::ostringstream os;
      os << kind << " takes " << arity << " parameters, got " << params.size();
      fail_at(head, os.str());
    }
    if (kind == "triangle")
      return fuzzy::Triangular{params[0], params[1], params[2]};
    if (kind == "trapezoid")
      return fuzzy::Trapezoidal{params[0], params[1], params[2], params[3]};
    return fuzzy::CrispInterval{params[0], params[1], true, true};
  }

  void parse_linguistic() {
    const Token& head = get();
    LinguisticDecl decl;
    decl.loc = loc_of(head);
    decl.variable.name = expect_ident("the variable name");
    expect_keyword("over", "after the variable name");
    decl.variable.unit = expect_ident("the unit");
    if (accept_keyword("domain")) {
      expect_punct("(", "after 'domain'");
      const double lo = expect_number("the domain minimum");
      expect_punct(",", "between the domain bounds");
      const double hi = expect_number("the domain maximum");
      expect_punct(")", "closing the domain");
      decl.variable.domain = {lo, hi};
    }
    expect_punct("{", "starting the term list");
    while (!at_punct("}") && !at_eof()) {
      try {
        expect_keyword("term", "starting a term");
        std::string name = expect_ident("the term name");
        expect_punct(":", "after the term name");
        fuzzy::MembershipFunction mf = parse_shape();
        expect_punct(";", "after the term");
        decl.variable.terms.emplace_back(std::move(name), std::move(mf));
      } catch (SyntaxError&) {
        sync_entry();
      }
    }
    expect_punct("}", "closing the term list");
    spec_.order.push_back({DeclKind::Linguistic, spec_.linguistic_variables.size()});
    spec_.linguistic_variables.push_back(std::move(decl));
  }

  void parse_scale() {
    const Token& head = get();
    ScaleDecl decl;
    decl.loc = loc_of(head);
    decl.name = expect_ident("the scale name");
    expect_punct("{", "after the scale name");
    while (!at_punct("}") && !at_eof()) {
      try {
        const Token& key = peek();
        if (accept_keyword("points")) {
          if (decl.points) fail_at(key, "duplicate entry 'points'");
          expect_punct(":", "after 'points'");
          decl.points = expect_int("the point count");
          expect_punct(";", "after the entry");
        } else if (accept_keyword("category")) {
          std::string label = expect_string("the category label");
          const int value = expect_int("the category value");
          expect_punct(";", "after the category");
          decl.categories.emplace_back(std::move(label), value);
        } else {
          fail_at(key, "expected 'points' or 'category' in a scale block, found " +
                           describe(key));
        }
      } catch (SyntaxError&) {
        sync_entry();
      }
    }
    expect_punct("}", "closing the scale block");
    if (decl.points && !decl.categories.empty()) {
      Diagnostic d;
      d.line = decl.loc.line;
      d.column = decl.loc.column;
      d.message = "scale '" + decl.name + "' declares both points and categories";
      diags_.push_back(std::move(d));
      return;
    }
    if (!decl.points && decl.categories.empty()) {
      Diagnostic d;
      d.line = decl.loc.line;
      d.column = decl.loc.column;
      d.message = "scale '" + decl.name + "' declares neither points nor categories";
      diags_.push_back(std::move(d));
      return;
    }
    if (decl.points && (*decl.points < 5 || *decl.points > 7)) {
      Diagnostic d;
      d.line = decl.loc.line;
      d.column = decl.loc.column;
      d.message = "scale '" + decl.name + "': points must be 5, 6, or 7";
      diags_.push_back(std::move(d));
      return;
    }
    spec_.order.push_back({DeclKind::Scale, spec_.scales.size()});
    spec_.scales.push_back(std::move(decl));
  }

  void parse_template() {
    const Token& head = get();
    TemplateDecl decl;
    decl.loc = loc_of(head);
    decl.tmpl.quality_name = expect_ident("the template name");
    expect_punct("{", "after the template name");
    while (!at_punct("}") && !at_eof()) {
      try {
        const Token& key = peek();
        if (accept_keyword("sub")) {
          fuzzy::SubNfr sub;
          sub.name = expect_ident("the sub-NFR name");
          expect_keyword("weight", "after the sub-NFR name");
          sub.weight = expect_number("the weight");
          expect_punct("{", "starting the grading list");
          while (!at_punct("}") && !at_eof()) {
            try {
              expect_keyword("level", "starting a grading level");
              fuzzy::GradingLevel level;
              level.name = expect_ident("the level name");
              expect_punct(":", "after the level name");
              level.mf = parse_shape();
              expect_punct(";", "after the level");
              sub.levels.push_back(std::move(level));
            } catch (SyntaxError&) {
              sync_entry();
            }
          }
          expect_punct("}", "closing the grading list");
          decl.tmpl.subs.push_back(std::move(sub));
        } else if (accept_keyword("status")) {
          fuzzy::StatusRow row;
          row.name = expect_ident("the status name");
          expect_punct(":", "after the status name");
          row.required.push_back(expect_ident("a level name"));
          while (accept_punct(",")) row.required.push_back(expect_ident("a level name"));
          expect_punct(";", "after the status row");
          decl.tmpl.rows.push_back(std::move(row));
        } else {
          fail_at(key, "expected 'sub' or 'status' in a template block, found " +
                           describe(key));
        }
      } catch (SyntaxError&) {
        sync_entry();
      }
    }
    expect_punct("}", "closing the template block");
    spec_.order.push_back({DeclKind::Template, spec_.templates.size()});
    spec_.templates.push_back(std::move(decl));
  }

  void parse_softgoal() {
    const Token& head = get();
    SoftGoalDecl decl;
    decl.loc = loc_of(head);
    decl.id = expect_ident("the soft goal id");
    if (accept_keyword("threshold"))
      decl.threshold = expect_number("the satisfaction threshold");
    expect_punct("{", "starting the child list");
    while (!at_punct("}") && !at_eof()) {
      try {
        expect_keyword("weight", "starting a child entry");
        SoftGoalDecl::Child child;
        child.weight = expect_number("the child weight");
        if (accept_keyword("subgoal")) {
          child.is_subgoal = true;
          child.ref = expect_ident("the subgoal id");
        } else if (accept_keyword("leaf")) {
          child.is_subgoal = false;
          child.ref = expect_string("the requirement id");
        } else {
          fail_at(peek(), "expected 'subgoal' or 'leaf' after the weight, found " +
                              describe(peek()));
        }
        expect_punct(";", "after the child entry");
        decl.children.push_back(std::move(child));
      } catch (SyntaxError&) {
        sync_entry();
      }
    }
    expect_punct("}", "closing the child list");
    spec_.order.push_back({DeclKind::SoftGoal, spec_.softgoals.size()});
    spec_.softgoals.push_back(std::move(decl));
  }

  void parse_link() {
    const Token& head = get();
    LinkDecl decl;
    decl.loc = loc_of(head);
    if (peek().kind == TokenKind::String)
      decl.link.source = get().lexeme;
    else
      decl.link.source = expect_ident("the link source");
    expect_punct("->", "after the link source");
    decl.link.target = expect_ident("the link target");
    expect_keyword("sign", "after the link target");
    decl.link.sign_weight = expect_number("the sign weight");
    expect_punct(";", "after the link");
    spec_.order.push_back({DeclKind::Link, spec_.links.size()});
    spec_.links.push_back(std::move(decl));
  }

  // ----------------------------------------------------------- resolution

  void ref_error(const SourceLoc& loc, std::string message) {
    Diagnostic d;
    d.line = loc.line;
    d.column = loc.column;
    d.message = std::move(message);
    diags_.push_back(std::move(d));
  }

  void resolve() {
    for (const auto& req : spec_.requirements) {
      if (const auto* ls = std::get_if<LikertSurvey>(&req.verification)) {
        if (!spec_.find_scale(ls->scale))
          ref_error(req.loc, "snfr \"" + req.id + "\" references unknown scale '" +
                                 ls->scale + "'");
      } else if (const auto* fa = std::get_if<FuzzyAssessment>(&req.verification)) {
        const auto* var = spec_.find_variable(fa->variable);
        if (!var) {
          ref_error(req.loc, "snfr \"" + req.id +
                                 "\" references unknown linguistic variable '" +
                                 fa->variable + "'");
        } else {
          const auto& terms = var->variable.terms;
          const bool known =
              std::any_of(terms.begin(), terms.end(),
                          [&](const auto& t) { return t.first == fa->target_term; });
          if (!known)
            ref_error(req.loc, "snfr \"" + req.id + "\" targets unknown term '" +
                                   fa->target_term + "' of variable '" +
                                   fa->variable + "'");
        }
      } else if (const auto* ta = std::get_if<TemplateAssessment>(&req.verification)) {
        if (!spec_.find_template(ta->template_name))
          ref_error(req.loc, "snfr \"" + req.id + "\" references unknown template '" +
                                 ta->template_name + "'");
      }
    }
    for (const auto& goal : spec_.softgoals) {
      for (const auto& child : goal.children) {
        if (child.is_subgoal) {
          if (!spec_.find_softgoal(child.ref))
            ref_error(goal.loc, "softgoal '" + goal.id +
                                    "' references unknown subgoal '" + child.ref + "'");
        } else if (!spec_.find_requirement(child.ref)) {
          ref_error(goal.loc, "softgoal '" + goal.id +
                                  "' binds unknown requirement \"" + child.ref + "\"");
        }
      }
    }
    for (const auto& link : spec_.links) {
      if (!spec_.find_softgoal(link.link.source) &&
          !spec_.find_requirement(link.link.source))
        ref_error(link.loc, "link source '" + link.link.source +
                                "' is neither a soft goal nor a requirement");
      if (!spec_.find_softgoal(link.link.target))
        ref_error(link.loc,
                  "link target '" + link.link.target + "' is not a soft goal");
    }
  }
};

}  // namespace

ParseResult parse(std::string_view text) { return Parser(text).run(); }

}  // namespace nfrgauge::dsl
