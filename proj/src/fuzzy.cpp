#include "nfrgauge/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace nfrgauge::fuzzy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad_param(const char* shape, const char* param,
                            const std::string& detail) {
  throw Error(ErrorKind::Validation,
              std::string(shape) + ": parameter '" + param + "' " + detail);
}

void require_not_nan(const char* shape, const char* param, double v) {
  if (std::isnan(v)) bad_param(shape, param, "is NaN");
}

bool neg_inf(double v) { return std::isinf(v) && v < 0; }
bool pos_inf(double v) { return std::isinf(v) && v > 0; }

}  // namespace

void check_shape(const MembershipFunction& mf) {
  std::visit(
      overloaded{
          [](const Triangular& t) {
            require_not_nan("triangular", "a", t.a);
            require_not_nan("triangular", "b", t.b);
            require_not_nan("triangular", "c", t.c);
            if (!std::isfinite(t.a)) bad_param("triangular", "a", "must be finite");
            if (!std::isfinite(t.b)) bad_param("triangular", "b", "must be finite");
            if (!std::isfinite(t.c)) bad_param("triangular", "c", "must be finite");
            if (t.a > t.b) bad_param("triangular", "b", "violates a <= b");
            if (t.b > t.c) bad_param("triangular", "c", "violates b <= c");
          },
          [](const Trapezoidal& t) {
            require_not_nan("trapezoidal", "a", t.a);
            require_not_nan("trapezoidal", "b", t.b);
            require_not_nan("trapezoidal", "c", t.c);
            require_not_nan("trapezoidal", "d", t.d);
            if (pos_inf(t.a)) bad_param("trapezoidal", "a", "may not be +inf");
            if (neg_inf(t.d)) bad_param("trapezoidal", "d", "may not be -inf");
            if (std::isinf(t.b) && !neg_inf(t.b))
              bad_param("trapezoidal", "b", "must be finite or -inf");
            if (std::isinf(t.c) && !pos_inf(t.c))
              bad_param("trapezoidal", "c", "must be finite or +inf");
            if (neg_inf(t.a) && !neg_inf(t.b))
              bad_param("trapezoidal", "a",
                        "unbounded left shoulder requires b = -inf");
            if (pos_inf(t.d) && !pos_inf(t.c))
              bad_param("trapezoidal", "d",
                        "unbounded right shoulder requires c = inf");
            if (t.a > t.b) bad_param("trapezoidal", "b", "violates a <= b");
            if (t.b > t.c) bad_param("trapezoidal", "c", "violates b <= c");
            if (t.c > t.d) bad_param("trapezoidal", "d", "violates c <= d");
          },
          [](const CrispInterval& iv) {
            require_not_nan("interval", "lo", iv.lo);
            require_not_nan("interval", "hi", iv.hi);
            if (iv.lo > iv.hi) bad_param("interval", "hi", "violates lo <= hi");
            if (iv.lo == iv.hi && !(iv.lo_inclusive && iv.hi_inclusive))
              bad_param("interval", "hi", "describes an empty interval");
          },
      },
      mf);
}

double membership(const MembershipFunction& mf, double x) {
  check_shape(mf);
  if (std::isnan(x))
    throw Error(ErrorKind::Validation, "membership: x is NaN");
  return std::visit(
      overloaded{
          [x](const Triangular& t) {
            if (x < t.a || x > t.c) return 0.0;
            if (x == t.b) return 1.0;
            if (x < t.b) return (x - t.a) / (t.b - t.a);
            return (t.c - x) / (t.c - t.b);
          },
          [x](const Trapezoidal& t) {
            if (x < t.a || x > t.d) return 0.0;
            if (x >= t.b && x <= t.c) return 1.0;
            if (x < t.b) return (x - t.a) / (t.b - t.a);
            return (t.d - x) / (t.d - t.c);
          },
          [x](const CrispInterval& iv) {
            const bool lo_ok = iv.lo_inclusive ? x >= iv.lo : x > iv.lo;
            const bool hi_ok = iv.hi_inclusive ? x <= iv.hi : x < iv.hi;
            return lo_ok && hi_ok ? 1.0 : 0.0;
          },
      },
      mf);
}

std::pair<double, double> support(const MembershipFunction& mf) {
  return std::visit(
      overloaded{
          [](const Triangular& t) { return std::pair{t.a, t.c}; },
          [](const Trapezoidal& t) { return std::pair{t.a, t.d}; },
          [](const CrispInterval& iv) { return std::pair{iv.lo, iv.hi}; },
      },
      mf);
}

void check_variable(const LinguisticVariable& lv) {
  if (lv.terms.size() < 2)
    throw Error(ErrorKind::Validation,
                "linguistic variable '" + lv.name + "' needs at least 2 terms");
  std::set<std::string> seen;
  for (const auto& [term, mf] : lv.terms) {
    if (!seen.insert(term).second)
      throw Error(ErrorKind::Validation, "linguistic variable '" + lv.name +
                                             "' has duplicate term '" + term + "'");
    check_shape(mf);
  }
  if (lv.domain) {
    const auto [dmin, dmax] = *lv.domain;
    if (std::isnan(dmin) || std::isnan(dmax) || dmin > dmax)
      throw Error(ErrorKind::Validation,
                  "linguistic variable '" + lv.name + "' has a malformed domain");
    for (const auto& [term, mf] : lv.terms) {
      const auto [slo, shi] = support(mf);
      if (shi < dmin || slo > dmax)
        throw Error(ErrorKind::Validation,
                    "term '" + term + "' of '" + lv.name +
                        "' has no support inside the declared domain");
    }
  }
}

TermDegrees fuzzify(const LinguisticVariable& lv, double x) {
  if (std::isnan(x))
    throw Error(ErrorKind::Domain, "fuzzify: x is NaN for variable '" + lv.name + "'");
  if (lv.domain) {
    const auto [dmin, dmax] = *lv.domain;
    if (x < dmin || x > dmax) {
      std::ostringstream os;
      os << "fuzzify: x=" << x << " outside domain [" << dmin << ", " << dmax
         << "] of variable '" << lv.name << "'";
      throw Error(ErrorKind::Domain, os.str());
    }
  }
  TermDegrees out;
  out.reserve(lv.terms.size());
  for (const auto& [term, mf] : lv.terms) out.emplace_back(term, membership(mf, x));
  return out;
}

const char* to_string(Hedge h) {
  switch (h) {
    case Hedge::Not: return "not";
    case Hedge::Very: return "very";
    case Hedge::Somewhat: return "somewhat";
    case Hedge::Slightly: return "slightly";
  }
  return "?";
}

std::optional<Hedge> hedge_from_string(std::string_view name) {
  if (name == "not") return Hedge::Not;
  if (name == "very") return Hedge::Very;
  if (name == "somewhat") return Hedge::Somewhat;
  if (name == "slightly") return Hedge::Slightly;
  return std::nullopt;
}

double apply_hedge(Hedge h, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    std::ostringstream os;
    os << "hedge '" << to_string(h) << "': degree " << mu << " outside [0,1]";
    throw Error(ErrorKind::Range, os.str());
  }
  switch (h) {
    case Hedge::Not: return 1.0 - mu;
    case Hedge::Very: return mu * mu;
    case Hedge::Somewhat: return std::sqrt(mu);
    case Hedge::Slightly: return std::cbrt(mu);
  }
  return mu;
}

std::pair<std::string, double> best_label(const TermDegrees& degrees) {
  if (degrees.empty())
    throw Error(ErrorKind::Argument, "best_label: empty degree mapping");
  std::size_t best = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (std::isnan(degrees[i].second))
      throw Error(ErrorKind::Argument,
                  "best_label: degree for '" + degrees[i].first + "' is NaN");
    if (degrees[i].second > degrees[best].second) best = i;
  }
  return degrees[best];
}

double weighted_score(const std::vector<std::pair<double, double>>& parts) {
  if (parts.empty())
    throw Error(ErrorKind::Argument, "weighted_score: empty part list");
  double num = 0.0, den = 0.0;
  for (const auto& [degree, weight] : parts) {
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      std::ostringstream os;
      os << "weighted_score: weight " << weight << " must be a positive real";
      throw Error(ErrorKind::Argument, os.str());
    }
    if (!(degree >= 0.0 && degree <= 1.0)) {
      std::ostringstream os;
      os << "weighted_score: degree " << degree << " outside [0,1]";
      throw Error(ErrorKind::Argument, os.str());
    }
    num += weight * degree;
    den += weight;
  }
  return num / den;
}

void canonicalize_gradings(WeightedTemplate& tmpl) {
  for (auto& sub : tmpl.subs) {
    for (std::size_t i = 0; i < sub.levels.size(); ++i) {
      auto* earlier = std::get_if<CrispInterval>(&sub.levels[i].mf);
      if (!earlier) continue;
      for (std::size_t j = i + 1; j < sub.levels.size(); ++j) {
        auto* later = std::get_if<CrispInterval>(&sub.levels[j].mf);
        if (!later) continue;
        if (later->lo == earlier->hi && later->lo_inclusive && earlier->hi_inclusive)
          later->lo_inclusive = false;
        if (later->hi == earlier->lo && later->hi_inclusive && earlier->lo_inclusive)
          later->hi_inclusive = false;
      }
    }
  }
}

namespace {

const SubNfr& find_sub(const WeightedTemplate& tmpl, const std::string& name) {
  for (const auto& sub : tmpl.subs)
    if (sub.name == name) return sub;
  throw Error(ErrorKind::Lookup, "unknown sub-NFR '" + name + "' in template '" +
                                     tmpl.quality_name + "'");
}

double level_value(const SubNfr& sub, std::size_t level_index) {
  const std::size_t n = sub.levels.size();
  if (n <= 1) return 1.0;
  return 1.0 - static_cast<double>(level_index) / static_cast<double>(n - 1);
}

// Endpoint-sorted sweep over the crisp gradings of one sub-NFR.
void check_crisp_coverage(const std::string& quality, const SubNfr& sub,
                          const std::vector<const CrispInterval*>& ivs) {
  std::vector<const CrispInterval*> sorted = ivs;
  std::sort(sorted.begin(), sorted.end(), [](const CrispInterval* a, const CrispInterval* b) {
    if (a->lo != b->lo) return a->lo < b->lo;
    return a->lo_inclusive && !b->lo_inclusive;
  });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    const auto* a = sorted[i];
    const auto* b = sorted[i + 1];
    std::ostringstream loc;
    loc << "sub-NFR '" << sub.name << "' of template '" << quality << "'";
    if (a->hi > b->lo || (a->hi == b->lo && a->hi_inclusive && b->lo_inclusive)) {
      std::ostringstream os;
      os << loc.str() << ": grading intervals overlap near " << b->lo;
      throw Error(ErrorKind::Validation, os.str());
    }
    if (a->hi < b->lo || (a->hi == b->lo && !a->hi_inclusive && !b->lo_inclusive)) {
      std::ostringstream os;
      os << loc.str() << ": gradings leave a gap between " << a->hi << " and "
         << b->lo;
      throw Error(ErrorKind::Coverage, os.str());
    }
  }
}

// Closed supports must chain without gaps; fuzzy gradings may overlap.
void check_support_coverage(const std::string& quality, const SubNfr& sub) {
  std::vector<std::pair<double, double>> spans;
  spans.reserve(sub.levels.size());
  for (const auto& level : sub.levels) spans.push_back(support(level.mf));
  std::sort(spans.begin(), spans.end());
  double reach = spans.front().second;
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first > reach) {
      std::ostringstream os;
      os << "sub-NFR '" << sub.name << "' of template '" << quality
         << "': gradings leave a gap between " << reach << " and " << spans[i].first;
      throw Error(ErrorKind::Coverage, os.str());
    }
    reach = std::max(reach, spans[i].second);
  }
}

}  // namespace

void check_template(const WeightedTemplate& tmpl) {
  if (tmpl.subs.empty())
    throw Error(ErrorKind::Validation,
                "template '" + tmpl.quality_name + "' needs at least one sub-NFR");
  std::set<std::string> sub_names;
  for (const auto& sub : tmpl.subs) {
    if (!sub_names.insert(sub.name).second)
      throw Error(ErrorKind::Validation, "template '" + tmpl.quality_name +
                                             "' has duplicate sub-NFR '" + sub.name + "'");
    if (!(sub.weight > 0.0) || !std::isfinite(sub.weight))
      throw Error(ErrorKind::Validation, "sub-NFR '" + sub.name +
                                             "' weight must be a positive real");
    if (sub.levels.empty())
      throw Error(ErrorKind::Validation,
                  "sub-NFR '" + sub.name + "' needs at least one grading level");
    std::set<std::string> level_names;
    std::vector<const CrispInterval*> crisp;
    bool all_crisp = true;
    for (const auto& level : sub.levels) {
      if (!level_names.insert(level.name).second)
        throw Error(ErrorKind::Validation, "sub-NFR '" + sub.name +
                                               "' has duplicate level '" + level.name + "'");
      check_shape(level.mf);
      if (const auto* iv = std::get_if<CrispInterval>(&level.mf))
        crisp.push_back(iv);
      else
        all_crisp = false;
    }
    if (all_crisp)
      check_crisp_coverage(tmpl.quality_name, sub, crisp);
    else
      check_support_coverage(tmpl.quality_name, sub);
  }
  if (tmpl.rows.empty())
    throw Error(ErrorKind::Validation,
                "template '" + tmpl.quality_name + "' needs at least one status row");
  std::set<std::string> row_names;
  for (const auto& row : tmpl.rows) {
    if (!row_names.insert(row.name).second)
      throw Error(ErrorKind::Validation, "template '" + tmpl.quality_name +
                                             "' has duplicate status '" + row.name + "'");
    if (row.required.size() != tmpl.subs.size()) {
      std::ostringstream os;
      os << "status '" << row.name << "' of template '" << tmpl.quality_name
         << "' lists " << row.required.size() << " levels for " << tmpl.subs.size()
         << " sub-NFRs";
      throw Error(ErrorKind::Reference, os.str());
    }
    for (std::size_t i = 0; i < row.required.size(); ++i) {
      const auto& levels = tmpl.subs[i].levels;
      const bool known = std::any_of(levels.begin(), levels.end(),
                                     [&](const GradingLevel& l) {
                                       return l.name == row.required[i];
                                     });
      if (!known)
        throw Error(ErrorKind::Reference,
                    "status '" + row.name + "' references undefined level '" +
                        row.required[i] + "' of sub-NFR '" + tmpl.subs[i].name + "'");
    }
  }
}

std::pair<std::string, double> grade_sub_nfr(const WeightedTemplate& tmpl,
                                             const std::string& sub_name,
                                             double value) {
  const SubNfr& sub = find_sub(tmpl, sub_name);
  std::size_t best = 0;
  double best_degree = -1.0;
  for (std::size_t i = 0; i < sub.levels.size(); ++i) {
    const double d = membership(sub.levels[i].mf, value);
    if (d > best_degree) {
      best = i;
      best_degree = d;
    }
  }
  if (best_degree <= 0.0) {
    std::ostringstream os;
    os << "value " << value << " falls in no grading interval of sub-NFR '"
       << sub_name << "' (template '" << tmpl.quality_name << "')";
    throw Error(ErrorKind::Coverage, os.str());
  }
  return {sub.levels[best].name, best_degree};
}

TemplateOutcome evaluate_template(
    const WeightedTemplate& tmpl,
    const std::vector<std::pair<std::string, double>>& values) {
  std::map<std::string, double> lookup;
  for (const auto& [name, v] : values) {
    if (!lookup.emplace(name, v).second)
      throw Error(ErrorKind::Argument,
                  "duplicate value for sub-NFR '" + name + "'");
    find_sub(tmpl, name);  // unknown names are argument mistakes too
  }

  std::vector<std::size_t> graded;  // level index per sub
  TemplateOutcome out;
  graded.reserve(tmpl.subs.size());
  for (const auto& sub : tmpl.subs) {
    auto it = lookup.find(sub.name);
    if (it == lookup.end())
      throw Error(ErrorKind::Argument,
                  "missing value for sub-NFR '" + sub.name + "'");
    const auto [level, degree] = grade_sub_nfr(tmpl, sub.name, it->second);
    (void)degree;
    std::size_t idx = 0;
    while (sub.levels[idx].name != level) ++idx;
    graded.push_back(idx);
    out.levels.emplace_back(sub.name, level);
  }

  // Best row whose requirements all match the graded levels.
  const StatusRow* chosen = nullptr;
  for (const auto& row : tmpl.rows) {
    bool all = true;
    for (std::size_t i = 0; i < tmpl.subs.size(); ++i) {
      if (row.required[i] != tmpl.subs[i].levels[graded[i]].name) {
        all = false;
        break;
      }
    }
    if (all) {
      chosen = &row;
      break;
    }
  }
  if (!chosen) {
    // Pessimistic rule: the worst individual level decides. Each level maps
    // to the first row requiring it; unreferenced levels map proportionally.
    std::size_t worst_row = 0;
    const std::size_t n_rows = tmpl.rows.size();
    for (std::size_t i = 0; i < tmpl.subs.size(); ++i) {
      const std::string& level = tmpl.subs[i].levels[graded[i]].name;
      std::size_t row_idx = n_rows;  // sentinel
      for (std::size_t r = 0; r < n_rows; ++r) {
        if (tmpl.rows[r].required[i] == level) {
          row_idx = r;
          break;
        }
      }
      if (row_idx == n_rows) {
        const std::size_t n_levels = tmpl.subs[i].levels.size();
        row_idx = (n_levels <= 1 || n_rows <= 1)
                      ? 0
                      : static_cast<std::size_t>(std::llround(
                            static_cast<double>(graded[i]) *
                            static_cast<double>(n_rows - 1) /
                            static_cast<double>(n_levels - 1)));
      }
      worst_row = std::max(worst_row, row_idx);
    }
    chosen = &tmpl.rows[worst_row];
  }
  out.status = chosen->name;

  std::vector<std::pair<double, double>> parts;
  parts.reserve(tmpl.subs.size());
  out.raw_score = 0.0;
  out.max_raw = 0.0;
  for (std::size_t i = 0; i < tmpl.subs.size(); ++i) {
    const double lv = level_value(tmpl.subs[i], graded[i]);
    parts.emplace_back(lv, tmpl.subs[i].weight);
    out.raw_score += tmpl.subs[i].weight * lv;
    out.max_raw += tmpl.subs[i].weight;
  }
  out.score = weighted_score(parts);
  return out;
}

}  // namespace nfrgauge::fuzzy
