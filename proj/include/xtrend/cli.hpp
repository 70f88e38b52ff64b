#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "xtrend/analyses.hpp"
#include "xtrend/clean_job.hpp"
#include "xtrend/error.hpp"
#include "xtrend/generator.hpp"

namespace xtrend::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kDegenerate = 3, kInternal = 4 };

namespace detail {

inline Date parse_date_flag(const std::string& text, std::string_view flag) {
  if (auto d = Date::parse_iso(text)) return *d;
  throw Error(ErrorCode::Config, std::string(flag) + " expects yyyy-mm-dd, got '" + text + "'");
}

inline std::set<gen::Planted> parse_planted_list(const std::string& text) {
  std::set<gen::Planted> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = std::string(trim_field(item));
    if (item.empty() || item == "none") continue;
    const auto p = gen::parse_planted(item);
    if (!p) throw Error(ErrorCode::Config, "unknown planted effect '" + item + "'");
    out.insert(*p);
  }
  return out;
}

struct CleanArgs {
  std::string kind = "all";
  std::string input;
  std::string out;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t chunks_per_worker = 1;
  std::string stopwords;
  std::string lexicon;
  bool no_timing = false;
};

struct AnalyzeArgs {
  std::string name;
  std::string cleaned;
  std::string out;
  std::string top_list;
  double threshold = kDefaultBigMoveThresholdPct;
  int max_lag = 2;
  std::string cohort = "all";
  std::string lag_mode = "calendar";
  std::string anomaly_missing;
  std::string anomaly_inflated;
  int top_n = 10;
};

struct GenerateArgs {
  std::string out;
  std::uint64_t seed = 7;
  int days = 60;
  int rows_per_day = 200;
  int tickers = 40;
  int top = 10;
  std::string plant = "none";
  double noise = 0.05;
  double weekend_factor = 1.5;
  double dirty_rate = 0.01;
  std::string start = "2019-10-01";
  std::string anomaly_missing;
};

inline int do_clean(const CleanArgs& a, std::ostream& out) {
  std::vector<DatasetKind> kinds;
  if (a.kind == "all") {
    kinds = {DatasetKind::Stocks, DatasetKind::Tweets, DatasetKind::Ecommerce};
  } else {
    const auto k = parse_dataset_kind(a.kind);
    if (!k) throw Error(ErrorCode::Config, "unknown dataset kind '" + a.kind + "'");
    kinds = {*k};
  }
  if (a.workers < 1) throw Error(ErrorCode::Config, "--workers must be at least 1");
  if (a.chunks_per_worker < 1) throw Error(ErrorCode::Config, "--chunks-per-worker must be at least 1");

  std::optional<StopwordSet> stop;
  std::optional<PolarityLexicon> lex;
  CleanJobOptions options;
  options.workers = a.workers;
  options.chunks_per_worker = a.chunks_per_worker;
  if (!a.stopwords.empty()) options.stopwords = &stop.emplace(StopwordSet::load(a.stopwords));
  if (!a.lexicon.empty()) options.lexicon = &lex.emplace(PolarityLexicon::load(a.lexicon));

  // With a single kind the input directory is the dataset directory itself;
  // with "all" it holds one subdirectory per kind.
  for (auto kind : kinds) {
    const std::filesystem::path input =
        kinds.size() == 1 ? std::filesystem::path(a.input) : std::filesystem::path(a.input) / std::string(to_string(kind));
    const auto result = run_clean_job(kind, input, options);
    write_clean_outputs(result, a.out, !a.no_timing);
    out << to_string(kind) << ": " << result.input_rows << " rows read, " << result.output_rows << " kept, "
        << total(result.drops) << " dropped -> " << clean_file_path(a.out, kind).string() << "\n";
    for (const auto& s : result.skipped_files) out << "  skipped " << s.file.string() << ": " << s.reason << "\n";
  }
  return kOk;
}

inline int do_analyze(const AnalyzeArgs& a, std::ostream& out) {
  AnalysisSettings settings;
  settings.cleaned_dir = a.cleaned;
  if (!a.top_list.empty()) settings.top = TopList::load(a.top_list);
  settings.threshold_pct = a.threshold;
  settings.max_lag = a.max_lag;
  settings.top_n = a.top_n;
  const auto cohort = parse_cohort(a.cohort);
  if (!cohort) throw Error(ErrorCode::Config, "unknown cohort '" + a.cohort + "'");
  settings.cohort = *cohort;
  const auto mode = parse_lag_mode(a.lag_mode);
  if (!mode) throw Error(ErrorCode::Config, "unknown lag mode '" + a.lag_mode + "'");
  settings.lag_mode = *mode;
  if (a.anomaly_missing.empty() != a.anomaly_inflated.empty()) {
    throw Error(ErrorCode::Config, "--anomaly-missing and --anomaly-inflated go together");
  }
  if (!a.anomaly_missing.empty()) {
    settings.anomaly = AnomalyDates{parse_date_flag(a.anomaly_missing, "--anomaly-missing"),
                                    parse_date_flag(a.anomaly_inflated, "--anomaly-inflated")};
  }

  std::vector<std::string> names;
  if (a.name == "all") names.assign(kAnalysisNames.begin(), kAnalysisNames.end());
  else names.push_back(a.name);

  // Run everything before writing anything, so a bad name or input leaves
  // no partial output behind.
  std::vector<AnalysisReport> reports;
  for (const auto& name : names) reports.push_back(run_analysis(name, settings));

  int code = kOk;
  for (const auto& report : reports) {
    const auto written = write_report(report, a.out);
    out << report.analysis << ": " << report.status;
    if (!report.reason.empty()) out << " (" << report.reason << ")";
    out << " -> " << written.front().string() << "\n";
    if (report.status != "ok") code = kDegenerate;
  }
  return code;
}

inline int do_generate(const GenerateArgs& a, std::ostream& out) {
  gen::GeneratorConfig cfg;
  cfg.seed = a.seed;
  cfg.days = a.days;
  cfg.rows_per_day = a.rows_per_day;
  cfg.tickers = a.tickers;
  cfg.top_tickers = a.top;
  cfg.planted = parse_planted_list(a.plant);
  cfg.noise = a.noise;
  cfg.weekend_factor = a.weekend_factor;
  cfg.dirty_rate = a.dirty_rate;
  cfg.start = parse_date_flag(a.start, "--start");
  if (!a.anomaly_missing.empty()) cfg.anomaly_missing = parse_date_flag(a.anomaly_missing, "--anomaly-missing");
  const auto summary = gen::generate(cfg, a.out);
  out << "generated " << summary.stock_rows << " stock rows, " << summary.tweet_rows << " tweets, "
      << summary.ecommerce_rows << " events (" << summary.dirty_rows << " dirty) under " << a.out << "\n";
  return kOk;
}

/// Reads a flat `key=value` file into `--key=value` arguments. Blank lines
/// and `#` comments are skipped; underscores in keys map to dashes.
inline std::vector<std::string> config_file_args(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot read config file " + path.string());
  std::vector<std::string> args;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto text = trim_field(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::Config, path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key(trim_field(text.substr(0, eq)));
    std::replace(key.begin(), key.end(), '_', '-');
    args.push_back("--" + key + "=" + std::string(trim_field(text.substr(eq + 1))));
  }
  return args;
}

/// Moves the settings of any `--config FILE` ahead of the other arguments of
/// the subcommand, so that flags given on the command line take precedence.
inline std::vector<std::string> expand_config(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() < 2) return args;
  std::vector<std::string> from_file;
  std::vector<std::string> rest;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      auto more = config_file_args(args[++i]);
      from_file.insert(from_file.end(), more.begin(), more.end());
    } else if (args[i].rfind("--config=", 0) == 0) {
      auto more = config_file_args(args[i].substr(9));
      from_file.insert(from_file.end(), more.begin(), more.end());
    } else {
      rest.push_back(args[i]);
    }
  }
  std::vector<std::string> out = {args[0], args[1]};
  out.insert(out.end(), from_file.begin(), from_file.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace detail

/// Entry point behind the xtrend binary. Exit codes: 0 success, 2 bad input
/// or configuration, 3 a statistic was undefined (the report is still
/// written), 4 internal failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-domain trend analytics over stock, tweet and e-commerce data."};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string config_path;  // consumed by expand_config; declared for --help

  detail::CleanArgs ca;
  auto* clean = app.add_subcommand("clean", "Clean raw CSV datasets in parallel.");
  clean->add_option("--config", config_path, "key=value file with defaults for these flags");
  clean->add_option("--kind", ca.kind, "stocks, tweets, ecommerce or all")->capture_default_str();
  clean->add_option("--input", ca.input, "raw dataset directory (or parent of per-kind directories for 'all')")
      ->required();
  clean->add_option("--out", ca.out, "output directory")->envname("XTREND_OUT_DIR")->required();
  clean->add_option("--workers", ca.workers, "worker threads")->capture_default_str();
  clean->add_option("--chunks-per-worker", ca.chunks_per_worker, "partitions per worker")->capture_default_str();
  clean->add_option("--stopwords", ca.stopwords, "stopword file, one word per line");
  clean->add_option("--lexicon", ca.lexicon, "polarity lexicon, token<TAB>value per line");
  clean->add_flag("--no-timing", ca.no_timing, "leave wall time out of the .meta files");

  detail::AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Run an analysis over cleaned files.");
  analyze->add_option("--config", config_path, "key=value file with defaults for these flags");
  std::string names = "all";
  for (auto n : kAnalysisNames) names += ", " + std::string(n);
  analyze->add_option("--name", aa.name, "analysis to run: " + names)->required();
  analyze->add_option("--cleaned", aa.cleaned, "directory holding *.clean.csv files")->required();
  analyze->add_option("--out", aa.out, "report directory")->envname("XTREND_OUT_DIR")->required();
  analyze->add_option("--top-list", aa.top_list, "file of top-cohort tickers");
  analyze->add_option("--threshold", aa.threshold, "big-move threshold in percent")->capture_default_str();
  analyze->add_option("--max-lag", aa.max_lag, "largest lag tried, in days")->capture_default_str();
  analyze->add_option("--cohort", aa.cohort, "top, rest or all")->capture_default_str();
  analyze->add_option("--lag-mode", aa.lag_mode, "calendar or trading")->capture_default_str();
  analyze->add_option("--anomaly-missing", aa.anomaly_missing, "day whose events were recorded on another day");
  analyze->add_option("--anomaly-inflated", aa.anomaly_inflated, "day that received them");
  analyze->add_option("--top-n", aa.top_n, "categories listed in detail")->capture_default_str();

  detail::GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a synthetic raw dataset.");
  generate->add_option("--config", config_path, "key=value file with defaults for these flags");
  generate->add_option("--out", ga.out, "output directory")->envname("XTREND_OUT_DIR")->required();
  generate->add_option("--seed", ga.seed)->capture_default_str();
  generate->add_option("--days", ga.days)->capture_default_str();
  generate->add_option("--rows-per-day", ga.rows_per_day)->capture_default_str();
  generate->add_option("--tickers", ga.tickers)->capture_default_str();
  generate->add_option("--top", ga.top, "size of the top cohort")->capture_default_str();
  generate->add_option("--plant", ga.plant,
                       "comma list of none, lag1_tweets_winners, weekend_boost, proportional_purchases")
      ->capture_default_str();
  generate->add_option("--noise", ga.noise)->capture_default_str();
  generate->add_option("--weekend-factor", ga.weekend_factor)->capture_default_str();
  generate->add_option("--dirty-rate", ga.dirty_rate)->capture_default_str();
  generate->add_option("--start", ga.start)->capture_default_str();
  generate->add_option("--anomaly-missing", ga.anomaly_missing, "day whose events are written under the next day");

  std::vector<std::string> args;
  try {
    args = detail::expand_config(argc, argv);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  std::vector<const char*> arg_ptrs;
  for (const auto& a : args) arg_ptrs.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(arg_ptrs.size()), arg_ptrs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // subcommand help arrives here too
    if (e.get_exit_code() == 0) {
      for (auto* sub : app.get_subcommands()) out << sub->help();
      if (app.get_subcommands().empty()) out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (clean->parsed()) return detail::do_clean(ca, out);
    if (analyze->parsed()) return detail::do_analyze(aa, out);
    return detail::do_generate(ga, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::WorkerFailure ? kInternal : kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace xtrend::cli
