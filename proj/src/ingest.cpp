#include "nfrgauge/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace nfrgauge::ingest {

namespace {

struct CsvRow {
  std::vector<std::string> fields;
  int line = 0;  // 1-based line of the row start
};

[[noreturn]] void fail(const std::filesystem::path& path, int line,
                       const std::string& message, ErrorKind kind = ErrorKind::Ingest) {
  std::ostringstream os;
  os << path.string() << ":" << line << ": " << message;
  throw Error(kind, os.str());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Run, "cannot open '" + path.string() + "' for reading");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Comma-separated, double-quote quoting with "" escapes, UTF-8.
std::vector<CsvRow> parse_csv(const std::filesystem::path& path,
                              const std::string& text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  row.line = 1;
  std::string field;
  bool quoted = false;
  bool row_has_content = false;
  int line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    if (row_has_content || !row.fields.empty()) {
      end_field();
      rows.push_back(std::move(row));
    }
    row = CsvRow{};
    row.line = line;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        row_has_content = true;
        break;
      case ',':
        end_field();
        row_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field.push_back(c);
        row_has_content = true;
    }
  }
  if (quoted) fail(path, line, "unterminated quoted field");
  end_row();  // flush a final row without trailing newline
  return rows;
}

std::vector<CsvRow> load_table(const std::filesystem::path& path,
                               const std::vector<std::string>& header) {
  if (!std::filesystem::exists(path))
    throw Error(ErrorKind::Run, "file '" + path.string() + "' does not exist");
  auto rows = parse_csv(path, read_file(path));
  if (rows.empty()) fail(path, 1, "empty file: expected a header row");
  std::string expect;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) expect += ",";
    expect += header[i];
  }
  if (rows.front().fields != header)
    fail(path, rows.front().line, "expected header '" + expect + "'");
  for (const auto& row : rows) {
    if (row.fields.size() != header.size()) {
      std::ostringstream os;
      os << "expected " << header.size() << " fields, got " << row.fields.size();
      fail(path, row.line, os.str());
    }
  }
  rows.erase(rows.begin());
  return rows;
}

std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::string nearest_label(const likert::LikertScale& scale, const std::string& choice) {
  std::string best;
  std::size_t best_distance = std::string::npos;
  for (const auto& [label, value] : scale.categories) {
    (void)value;
    const std::size_t d = levenshtein(choice, label);
    if (d < best_distance) {
      best_distance = d;
      best = label;
    }
  }
  return best;
}

double parse_value(const std::filesystem::path& path, int line, const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value))
    fail(path, line, "value '" + text + "' is not a finite number");
  return value;
}

}  // namespace

likert::ResponseSet load_responses(const std::filesystem::path& path,
                                   const likert::LikertScale& scale) {
  auto rows = load_table(path, {"respondent_id", "item_id", "choice"});
  likert::ResponseSet out;
  out.scale_name = scale.name;
  std::set<std::string> labels;
  for (const auto& [label, value] : scale.categories) {
    (void)value;
    labels.insert(label);
  }
  for (const auto& row : rows) {
    const auto& respondent = row.fields[0];
    const auto& item = row.fields[1];
    const auto& choice = row.fields[2];
    if (respondent.empty() || item.empty())
      fail(path, row.line, "respondent_id and item_id must be non-empty");
    if (!labels.count(choice))
      fail(path, row.line,
           "unknown label '" + choice + "' on scale '" + scale.name +
               "' (did you mean '" + nearest_label(scale, choice) + "'?)",
           ErrorKind::Label);
    auto [it, inserted] = out.rows[respondent].emplace(item, choice);
    (void)it;
    if (!inserted)
      fail(path, row.line,
           "duplicate answer for respondent '" + respondent + "', item '" + item + "'");
  }
  return out;
}

likert::SurveyKey load_survey_key(const std::filesystem::path& path) {
  auto rows = load_table(path, {"item_id", "polarity"});
  likert::SurveyKey key;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    const auto& item = row.fields[0];
    const auto& polarity = row.fields[1];
    if (item.empty()) fail(path, row.line, "item_id must be non-empty");
    if (!seen.insert(item).second)
      fail(path, row.line, "duplicate item '" + item + "' in survey key");
    if (polarity == "favorable")
      key.items.emplace_back(item, likert::Polarity::Favorable);
    else if (polarity == "unfavorable")
      key.items.emplace_back(item, likert::Polarity::Unfavorable);
    else
      fail(path, row.line,
           "polarity must be 'favorable' or 'unfavorable', got '" + polarity + "'");
  }
  if (key.items.empty()) fail(path, 1, "survey key has no items");
  return key;
}

void write_responses(const likert::ResponseSet& responses,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::Run, "cannot open '" + path.string() + "' for writing");
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += "\"\"";
      else q.push_back(c);
    }
    q.push_back('"');
    return q;
  };
  out << "respondent_id,item_id,choice\n";
  for (const auto& [respondent, answers] : responses.rows)
    for (const auto& [item, choice] : answers)
      out << quote(respondent) << "," << quote(item) << "," << quote(choice) << "\n";
}

std::vector<MeasurementSeries> load_measurements(const std::filesystem::path& path) {
  auto rows = load_table(path, {"metric", "unit", "value"});
  if (rows.empty())
    throw Error(ErrorKind::Ingest,
                path.string() + ": empty input: no measurement rows");
  std::vector<MeasurementSeries> out;
  std::map<std::string, std::size_t> index;
  for (const auto& row : rows) {
    const auto& metric = row.fields[0];
    const auto& unit = row.fields[1];
    if (metric.empty()) fail(path, row.line, "metric must be non-empty");
    const double value = parse_value(path, row.line, row.fields[2]);
    auto it = index.find(metric);
    if (it == index.end()) {
      index.emplace(metric, out.size());
      out.push_back({metric, unit, {value}});
    } else {
      auto& series = out[it->second];
      if (series.unit != unit)
        fail(path, row.line, "metric '" + metric + "' mixes units '" + series.unit +
                                 "' and '" + unit + "'");
      series.samples.push_back(value);
    }
  }
  return out;
}

std::map<std::string, bool> load_checks(const std::filesystem::path& path) {
  auto rows = load_table(path, {"check", "passed"});
  std::map<std::string, bool> out;
  for (const auto& row : rows) {
    const auto& check = row.fields[0];
    const auto& passed = row.fields[1];
    if (check.empty()) fail(path, row.line, "check must be non-empty");
    if (passed != "true" && passed != "false")
      fail(path, row.line, "passed must be 'true' or 'false', got '" + passed + "'");
    if (!out.emplace(check, passed == "true").second)
      fail(path, row.line, "duplicate check '" + check + "'");
  }
  return out;
}

SeriesSummary summarize(const MeasurementSeries& series) {
  if (series.samples.empty())
    throw Error(ErrorKind::Argument,
                "series '" + series.metric + "' has no samples");
  for (double v : series.samples)
    if (!std::isfinite(v))
      throw Error(ErrorKind::Validation,
                  "series '" + series.metric + "' contains a non-finite sample");
  SeriesSummary s;
  std::vector<double> sorted = series.samples;
  std::sort(sorted.begin(), sorted.end());
  s.count = sorted.size();
  s.min = sorted.front();
  s.max = sorted.back();
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / static_cast<double>(sorted.size());
  // nearest-rank: ceil(0.95*n) computed in integer arithmetic
  const std::size_t n = sorted.size();
  const std::size_t rank = (19 * n + 19) / 20;
  s.p95 = sorted[rank - 1];
  return s;
}

}  // namespace nfrgauge::ingest
