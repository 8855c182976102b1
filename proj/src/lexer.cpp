#include <charconv>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

#include "nfrgauge/dsl.hpp"

namespace nfrgauge::dsl {

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punct: return "punctuation";
    case TokenKind::EndOfFile: return "end of input";
  }
  return "?";
}

std::string render(const Diagnostic& d) {
  std::ostringstream os;
  os << (d.severity == Severity::Error ? "error" : "warning") << " at " << d.line
     << ":" << d.column << ": " << d.message;
  if (!d.snippet.empty()) os << "\n  | " << d.snippet;
  return os.str();
}

namespace {

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> kw = {
      "project",  "requirement", "verified_by", "statement", "mnfr",
      "metric",   "threshold",   "unit",        "aggregator", "snfr",
      "scale",    "survey",      "band",        "variable",   "input",
      "target",   "template",    "sub",         "weight",     "level",
      "status",   "linguistic",  "over",        "domain",     "term",
      "triangle", "trapezoid",   "interval",    "softgoal",   "subgoal",
      "leaf",     "link",        "sign",        "points",     "category",
  };
  return kw;
}

bool ident_start(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}
bool ident_char(char c) {
  return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  TokenizeResult run() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (ident_start(c)) {
        lex_word();
      } else if (digit(c) || (c == '.' && pos_ + 1 < text_.size() && digit(text_[pos_ + 1]))) {
        lex_number(false);
      } else if (c == '-') {
        lex_minus();
      } else if (c == '"') {
        lex_string();
      } else if (c == '{' || c == '}' || c == '(' || c == ')' || c == ':' ||
                 c == ';' || c == ',') {
        push(TokenKind::Punct, std::string(1, c));
        advance();
      } else {
        error_here(std::string("illegal character '") + printable(c) + "'");
        advance();
      }
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.line = line_;
    eof.column = column_;
    result_.tokens.push_back(std::move(eof));
    return std::move(result_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  TokenizeResult result_;
  int tok_line_ = 1;
  int tok_column_ = 1;

  static std::string printable(char c) {
    if (std::isprint(static_cast<unsigned char>(c))) return std::string(1, c);
    std::ostringstream os;
    os << "\\x" << std::hex << (static_cast<unsigned>(c) & 0xffu);
    return os.str();
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void mark() {
    tok_line_ = line_;
    tok_column_ = column_;
  }

  void push(TokenKind kind, std::string lexeme, double number = 0.0) {
    Token t;
    t.kind = kind;
    t.lexeme = std::move(lexeme);
    t.number = number;
    t.line = tok_line_;
    t.column = tok_column_;
    result_.tokens.push_back(std::move(t));
  }

  std::string current_line() const {
    std::size_t start = pos_;
    while (start > 0 && text_[start - 1] != '\n') --start;
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != '\n') ++end;
    return std::string(text_.substr(start, end - start));
  }

  void error_here(std::string message) {
    Diagnostic d;
    d.severity = Severity::Error;
    d.line = line_;
    d.column = column_;
    d.message = std::move(message);
    d.snippet = current_line();
    result_.diagnostics.push_back(std::move(d));
  }

  void lex_word() {
    mark();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) advance();
    std::string word(text_.substr(start, pos_ - start));
    if (word == "inf") {
      push(TokenKind::Number, word, std::numeric_limits<double>::infinity());
    } else if (keywords().count(word)) {
      push(TokenKind::Keyword, std::move(word));
    } else {
      push(TokenKind::Identifier, std::move(word));
    }
  }

  void lex_minus() {
    mark();
    if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      push(TokenKind::Punct, "->");
      return;
    }
    if (pos_ + 3 < text_.size() && text_.substr(pos_ + 1, 3) == "inf" &&
        (pos_ + 4 >= text_.size() || !ident_char(text_[pos_ + 4]))) {
      advance();
      advance();
      advance();
      advance();
      push(TokenKind::Number, "-inf", -std::numeric_limits<double>::infinity());
      return;
    }
    if (pos_ + 1 < text_.size() &&
        (digit(text_[pos_ + 1]) ||
         (text_[pos_ + 1] == '.' && pos_ + 2 < text_.size() && digit(text_[pos_ + 2])))) {
      lex_number(true);
      return;
    }
    error_here("stray '-' (expected '->', a negative number, or -inf)");
    advance();
  }

  // pos_ sits on '-' when negative, else on the first digit or '.'.
  void lex_number(bool negative) {
    if (!negative) mark();
    const std::size_t start = pos_;
    if (negative) advance();  // consume '-'
    while (pos_ < text_.size() && digit(text_[pos_])) advance();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      while (pos_ < text_.size() && digit(text_[pos_])) advance();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark_pos = pos_;
      int mark_line = line_, mark_col = column_;
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) advance();
      if (pos_ < text_.size() && digit(text_[pos_])) {
        while (pos_ < text_.size() && digit(text_[pos_])) advance();
      } else {
        // not an exponent after all; back off to just before 'e'
        pos_ = mark_pos;
        line_ = mark_line;
        column_ = mark_col;
      }
    }
    std::string lexeme(text_.substr(start, pos_ - start));
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
    if (ec != std::errc{} || ptr != lexeme.data() + lexeme.size()) {
      error_here("malformed number '" + lexeme + "'");
      return;
    }
    push(TokenKind::Number, std::move(lexeme), value);
  }

  void lex_string() {
    mark();
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        error_here("unterminated string");
        break;
      }
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        if (pos_ >= text_.size()) {
          error_here("unterminated string");
          break;
        }
        const char esc = text_[pos_];
        if (esc == '"' || esc == '\\') {
          value.push_back(esc);
          advance();
        } else {
          error_here(std::string("unknown escape '\\") + printable(esc) + "'");
          value.push_back(esc);
          advance();
        }
      } else {
        value.push_back(c);
        advance();
      }
    }
    push(TokenKind::String, std::move(value));
  }
};

}  // namespace

TokenizeResult tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace nfrgauge::dsl
