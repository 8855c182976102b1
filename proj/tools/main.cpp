#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nfrgauge/dsl.hpp"
#include "nfrgauge/evaluator.hpp"
#include "nfrgauge/ingest.hpp"
#include "nfrgauge/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnsatisfied = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitDataError = 3;
constexpr int kExitUsage = 64;

enum class Format { Text, Json };

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  return std::nullopt;
}

Format resolve_format(const std::string& flag_value) {
  if (!flag_value.empty()) {
    if (auto f = parse_format(flag_value)) return *f;
  }
  if (const char* env = std::getenv("NFRGAUGE_FORMAT")) {
    if (auto f = parse_format(env)) return *f;
  }
  return Format::Text;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void print_diagnostics(const std::vector<nfrgauge::dsl::Diagnostic>& diagnostics) {
  for (const auto& d : diagnostics) std::cerr << nfrgauge::dsl::render(d) << "\n";
}

// Parses and validates; on spec errors prints diagnostics and returns
// nothing. Warnings go to standard error either way.
std::optional<nfrgauge::dsl::RequirementSpec> load_spec(
    const std::string& path, std::vector<nfrgauge::dsl::Diagnostic>* out_diags,
    int& exit_code) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read spec file '" << path << "'\n";
    exit_code = kExitDataError;
    return std::nullopt;
  }
  auto parsed = nfrgauge::dsl::parse(*text);
  std::vector<nfrgauge::dsl::Diagnostic> diags = std::move(parsed.diagnostics);
  if (parsed.spec) {
    auto more = nfrgauge::dsl::validate(*parsed.spec);
    diags.insert(diags.end(), more.begin(), more.end());
  }
  if (out_diags) *out_diags = diags;
  print_diagnostics(diags);
  if (!parsed.spec || nfrgauge::dsl::has_errors(diags)) {
    exit_code = kExitSpecError;
    return std::nullopt;
  }
  exit_code = kExitOk;
  return std::move(parsed.spec);
}

int run_validate(const std::string& spec_path, Format format) {
  int exit_code = kExitOk;
  std::vector<nfrgauge::dsl::Diagnostic> diags;
  auto spec = load_spec(spec_path, &diags, exit_code);
  if (exit_code == kExitDataError) return exit_code;
  if (format == Format::Json) {
    std::cout << nfrgauge::report::diagnostics_json(diags);
  } else {
    int errors = 0, warnings = 0;
    for (const auto& d : diags)
      (d.severity == nfrgauge::dsl::Severity::Error ? errors : warnings)++;
    if (errors == 0 && warnings == 0)
      std::cout << "OK\n";
    else
      std::cout << (spec ? "OK" : "FAIL") << ": " << errors << " error(s), "
                << warnings << " warning(s)\n";
  }
  return spec ? kExitOk : kExitSpecError;
}

int run_classify(const std::string& spec_path, Format format) {
  int exit_code = kExitOk;
  auto spec = load_spec(spec_path, nullptr, exit_code);
  if (!spec) return exit_code;
  if (format == Format::Json)
    std::cout << nfrgauge::report::classification_json(*spec);
  else
    std::cout << nfrgauge::report::classification_text(*spec);
  return kExitOk;
}

int run_evaluate(const std::string& spec_path, const std::string& data_dir,
                 Format format, const std::string& out_path,
                 std::optional<double> band,
                 const std::string& aggregator_name) {
  int exit_code = kExitOk;
  auto spec = load_spec(spec_path, nullptr, exit_code);
  if (!spec) return exit_code;

  nfrgauge::eval::EvalOptions options;
  options.band_override = band;
  if (!aggregator_name.empty()) {
    auto agg = nfrgauge::dsl::aggregator_from_string(aggregator_name);
    if (!agg) {
      std::cerr << "usage: unknown aggregator '" << aggregator_name
                << "' (expected max, min, mean, or p95)\n";
      return kExitUsage;
    }
    options.aggregator_override = agg;
  }

  nfrgauge::eval::EvaluationReport result;
  try {
    result = nfrgauge::eval::evaluate_project(*spec, data_dir, options);
  } catch (const nfrgauge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }

  const std::string rendered = format == Format::Json
                                   ? nfrgauge::report::to_json(result)
                                   : nfrgauge::report::to_text(result);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to '" << out_path << "'\n";
      return kExitDataError;
    }
    out << rendered;
  } else {
    std::cout << rendered;
  }
  return result.has_failures() ? kExitUnsatisfied : kExitOk;
}

int run_likert_score(int scale_points, const std::string& key_path,
                     const std::string& responses_path, double band,
                     Format format) {
  try {
    const auto scale = nfrgauge::likert::standard_scale(scale_points);
    const auto key = nfrgauge::ingest::load_survey_key(key_path);
    const auto responses = nfrgauge::ingest::load_responses(responses_path, scale);

    std::vector<nfrgauge::likert::AttitudeScore> scores;
    for (const auto& [respondent, answers] : responses.rows)
      scores.push_back(
          nfrgauge::likert::score_respondent(scale, key, answers, respondent));
    if (scores.empty()) {
      std::cerr << "error: no respondents in '" << responses_path << "'\n";
      return kExitDataError;
    }
    nfrgauge::eval::SurveyReport survey;
    survey.stats = nfrgauge::likert::aggregate_scores(scores);
    survey.decision = nfrgauge::likert::attitude_decision(
        survey.stats, static_cast<int>(key.items.size()), scale, band);
    const int n_items = static_cast<int>(key.items.size());
    if (format == Format::Json)
      std::cout << nfrgauge::report::survey_json(survey, n_items);
    else
      std::cout << nfrgauge::report::survey_text(survey, n_items);
    return kExitOk;
  } catch (const nfrgauge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nfrgauge - requirements evaluation engine"};
  app.require_subcommand(1);

  std::string format_flag;

  auto* validate = app.add_subcommand("validate", "Parse and validate a spec");
  std::string validate_spec;
  validate->add_option("spec", validate_spec, "spec file (.nfr)")->required();
  validate->add_option("--format", format_flag, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* classify = app.add_subcommand("classify", "Print the FR/M-NFR/S-NFR table");
  std::string classify_spec;
  classify->add_option("spec", classify_spec, "spec file (.nfr)")->required();
  classify->add_option("--format", format_flag, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a spec against data");
  std::string evaluate_spec, data_dir, out_path, aggregator_name;
  double band_flag = -1.0;
  evaluate->add_option("spec", evaluate_spec, "spec file (.nfr)")->required();
  evaluate->add_option("--data", data_dir, "data directory")->required();
  evaluate->add_option("--format", format_flag, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  evaluate->add_option("--out", out_path, "write the report to a file");
  evaluate->add_option("--band", band_flag,
                       "decision band as a fraction of the score range")
      ->check(CLI::Range(0.0, 0.5));
  evaluate->add_option("--aggregator", aggregator_name,
                       "series aggregator override: max, min, mean, or p95");

  auto* likert_score =
      app.add_subcommand("likert-score", "Score a survey and print the decision");
  int scale_points = 7;
  std::string key_path, responses_path;
  double ls_band = 0.05;
  likert_score->add_option("--scale", scale_points, "scale points: 5, 6, or 7")
      ->check(CLI::IsMember({5, 6, 7}));
  likert_score->add_option("--key", key_path, "survey key CSV")->required();
  likert_score->add_option("--responses", responses_path, "responses CSV")
      ->required();
  likert_score
      ->add_option("--band", ls_band, "decision band as a fraction of the range")
      ->check(CLI::Range(0.0, 0.5));
  likert_score->add_option("--format", format_flag, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }

  const Format format = resolve_format(format_flag);
  if (validate->parsed()) return run_validate(validate_spec, format);
  if (classify->parsed()) return run_classify(classify_spec, format);
  if (evaluate->parsed())
    return run_evaluate(evaluate_spec, data_dir, format, out_path,
                        band_flag >= 0.0 ? std::optional<double>(band_flag)
                                         : std::nullopt,
                        aggregator_name);
  return run_likert_score(scale_points, key_path, responses_path, ls_band, format);
}
