#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "xtrend/cleaning.hpp"
#include "xtrend/engine.hpp"
#include "xtrend/ingestion.hpp"
#include "xtrend/report.hpp"
#include "xtrend/sentiment.hpp"

namespace xtrend {

struct CleanJobOptions {
  std::size_t workers = 1;
  std::size_t chunks_per_worker = 1;
  const StopwordSet* stopwords = &StopwordSet::english();
  const PolarityLexicon* lexicon = &PolarityLexicon::builtin();
};

struct CleanJobOutput {
  DatasetKind kind = DatasetKind::Stocks;
  /// Cleaned CSV, header included.
  std::string content;
  std::uint64_t input_rows = 0;
  std::uint64_t output_rows = 0;
  DropCounts drops;
  std::vector<SkippedFile> skipped_files;
  std::size_t workers = 1;
  double wall_ms = 0;

  /// Sidecar metadata. `include_timing` is off when the result must be
  /// reproducible byte-for-byte.
  Json meta(bool include_timing = true) const {
    Json j;
    j["dataset"] = std::string(to_string(kind));
    j["input_rows"] = input_rows;
    j["output_rows"] = output_rows;
    Json d = Json::object();
    for (const auto& [reason, n] : drops) d[reason] = n;
    j["drop_counts"] = std::move(d);
    Json skipped = Json::array();
    for (const auto& s : skipped_files) {
      skipped.push_back({{"file", s.file.filename().string()}, {"reason", s.reason}});
    }
    j["skipped_files"] = std::move(skipped);
    j["workers"] = workers;
    if (include_timing) j["wall_time_ms"] = wall_ms;
    return j;
  }
};

namespace detail {

template <typename Record>
engine::MapResult to_map_result(const Cleaned<Record>& cleaned, Date Record::*date) {
  if (const auto* drop = std::get_if<Dropped>(&cleaned)) return engine::Drop{std::string(to_string(drop->reason))};
  const auto& rec = std::get<Record>(cleaned);
  return engine::MapOutput{(rec.*date).to_string(), to_csv_line(rec)};
}

}  // namespace detail

/// Mapper for one dataset kind: raw row in, date-keyed cleaned line out.
inline auto make_clean_mapper(DatasetKind kind, const CleanJobOptions& options) {
  return [kind, stop = options.stopwords, lex = options.lexicon](const RawRow& row) -> engine::MapResult {
    switch (kind) {
      case DatasetKind::Stocks: return detail::to_map_result(clean_stock(row), &CleanStockRecord::record_date);
      case DatasetKind::Tweets:
        return detail::to_map_result(clean_tweet(row, *stop, *lex), &CleanTweetRecord::post_date);
      case DatasetKind::Ecommerce: return detail::to_map_result(clean_ecomm(row), &CleanEcommEvent::record_date);
    }
    return engine::Drop{"UnknownKind"};
  };
}

/// Reads a raw dataset directory and cleans it on the engine.
inline CleanJobOutput run_clean_job(DatasetKind kind, const std::filesystem::path& input_dir,
                                    const CleanJobOptions& options) {
  auto ingest = read_dataset(input_dir, schema_for(kind));
  CleanJobOutput out;
  out.kind = kind;
  out.input_rows = ingest.total_lines;
  out.drops = ingest.malformed;
  out.skipped_files = ingest.skipped_files;
  out.workers = options.workers;

  auto partitions = engine::plan_partitions(std::move(ingest.rows), options.workers, options.chunks_per_worker);
  auto job = engine::run_map_reduce(partitions, make_clean_mapper(kind, options), engine::pass_through,
                                    options.workers);
  merge_into(out.drops, job.drops);
  out.output_rows = job.lines.size();
  out.wall_ms = job.wall_ms;

  out.content.reserve(job.lines.size() * 48);
  out.content.append(clean_header(kind));
  out.content.push_back('\n');
  for (const auto& line : job.lines) {
    out.content += line;
    out.content.push_back('\n');
  }
  return out;
}

inline std::filesystem::path clean_file_path(const std::filesystem::path& dir, DatasetKind kind) {
  return dir / (std::string(to_string(kind)) + ".clean.csv");
}

inline std::filesystem::path meta_file_path(const std::filesystem::path& dir, DatasetKind kind) {
  return dir / (std::string(to_string(kind)) + ".meta");
}

inline void write_clean_outputs(const CleanJobOutput& out, const std::filesystem::path& dir,
                                bool include_timing = true) {
  engine::write_file_atomically(clean_file_path(dir, out.kind), out.content);
  engine::write_file_atomically(meta_file_path(dir, out.kind), out.meta(include_timing).dump(2) + "\n");
}

}  // namespace xtrend
