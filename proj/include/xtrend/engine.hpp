#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "xtrend/counters.hpp"
#include "xtrend/error.hpp"
#include "xtrend/ingestion.hpp"

namespace xtrend::engine {

/// A contiguous slice of the job input.
struct Partition {
  std::size_t id = 0;
  std::vector<RawRow> rows;
};

/// Cuts `rows` into at most worker_count * chunks_per_worker contiguous,
/// non-empty partitions of near-equal size. Concatenating the partitions in
/// id order gives back the input.
inline std::vector<Partition> plan_partitions(std::vector<RawRow> rows, std::size_t worker_count,
                                              std::size_t chunks_per_worker = 1) {
  if (worker_count < 1 || chunks_per_worker < 1) {
    throw Error(ErrorCode::Config, "worker count and chunks per worker must be at least 1");
  }
  std::vector<Partition> parts;
  const std::size_t n = rows.size();
  if (n == 0) return parts;
  const std::size_t count = std::min(n, worker_count * chunks_per_worker);
  const std::size_t base = n / count;
  const std::size_t extra = n % count;
  auto it = std::make_move_iterator(rows.begin());
  for (std::size_t id = 0; id < count; ++id) {
    const std::size_t size = base + (id < extra ? 1 : 0);
    parts.push_back({id, std::vector<RawRow>(it, it + static_cast<std::ptrdiff_t>(size))});
    it += static_cast<std::ptrdiff_t>(size);
  }
  return parts;
}

struct MapOutput {
  std::string key;
  std::string value;
  auto operator<=>(const MapOutput&) const = default;
};

/// A row the mapper rejected, with the counter it should land in.
struct Drop {
  std::string reason;
};

using MapResult = std::variant<MapOutput, Drop>;

struct JobResult {
  /// Reducer output in key order.
  std::vector<std::string> lines;
  DropCounts drops;
  std::uint64_t input_rows = 0;
  std::size_t workers = 1;
  double wall_ms = 0;
};

/// Runs `task(i)` for i in [0, n) on up to `workers` threads. The first
/// exception stops the remaining tasks from starting and is rethrown as a
/// WorkerFailure once every thread has joined.
template <typename Task>
void parallel_for(std::size_t n, std::size_t workers, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto run = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };

  const std::size_t threads = std::min(workers, n);
  if (threads <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(run);
  }
  if (first_error) {
    try {
      std::rethrow_exception(first_error);
    } catch (const std::exception& e) {
      throw Error(ErrorCode::WorkerFailure, e.what());
    } catch (...) {
      throw Error(ErrorCode::WorkerFailure, "unknown exception in worker");
    }
  }
}

/// Map every row, group map outputs by key, reduce each group.
///
/// Map outputs are sorted by (key, value) before grouping, so a reducer sees
/// the same batch in the same order whatever the worker count and the job
/// output is identical to a single-worker run.
///
/// Mapper:  (const RawRow&) -> MapResult
/// Reducer: (const std::string& key, std::span<const std::string> values)
///            -> std::vector<std::string>
template <typename Mapper, typename Reducer>
JobResult run_map_reduce(const std::vector<Partition>& partitions, Mapper&& mapper, Reducer&& reducer,
                         std::size_t workers) {
  if (workers < 1) throw Error(ErrorCode::Config, "workers must be at least 1");
  const auto start = std::chrono::steady_clock::now();

  struct MapShard {
    std::vector<MapOutput> outputs;
    DropCounts drops;
  };
  std::vector<MapShard> shards(partitions.size());
  parallel_for(partitions.size(), workers, [&](std::size_t p) {
    auto& shard = shards[p];
    shard.outputs.reserve(partitions[p].rows.size());
    for (const auto& row : partitions[p].rows) {
      auto result = mapper(row);
      if (auto* drop = std::get_if<Drop>(&result)) {
        ++shard.drops[drop->reason];
        continue;
      }
      auto& out = std::get<MapOutput>(result);
      if (out.key.empty()) throw Error(ErrorCode::InvalidInput, "mapper emitted an empty key");
      if (out.value.find('\n') != std::string::npos) {
        throw Error(ErrorCode::InvalidInput, "mapper value contains a newline");
      }
      shard.outputs.push_back(std::move(out));
    }
  });

  JobResult job;
  job.workers = workers;
  std::vector<MapOutput> all;
  for (auto& shard : shards) {
    merge_into(job.drops, shard.drops);
    std::move(shard.outputs.begin(), shard.outputs.end(), std::back_inserter(all));
  }
  for (const auto& p : partitions) job.input_rows += p.rows.size();
  std::sort(all.begin(), all.end());

  // Group boundaries: [begin, end) ranges sharing a key.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i + 1;
    while (j < all.size() && all[j].key == all[i].key) ++j;
    groups.emplace_back(i, j);
    i = j;
  }

  std::vector<std::vector<std::string>> reduced(groups.size());
  parallel_for(groups.size(), workers, [&](std::size_t g) {
    const auto [begin, end] = groups[g];
    std::vector<std::string> values;
    values.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) values.push_back(std::move(all[i].value));
    reduced[g] = reducer(all[begin].key, std::span<const std::string>(values));
    for (const auto& line : reduced[g]) {
      if (line.find('\n') != std::string::npos) throw Error(ErrorCode::InvalidInput, "reducer line contains a newline");
    }
  });
  for (auto& lines : reduced) std::move(lines.begin(), lines.end(), std::back_inserter(job.lines));

  job.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return job;
}

/// Reducer that writes every value unchanged.
inline std::vector<std::string> pass_through(const std::string&, std::span<const std::string> values) {
  return {values.begin(), values.end()};
}

/// Writes through a temporary sibling and renames it into place, so readers
/// never observe a half-written file.
inline void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + tmp.string());
      out.write(content.data(), static_cast<std::streamsize>(content.size()));
      out.flush();
      if (!out) throw Error(ErrorCode::InvalidInput, "write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

}  // namespace xtrend::engine
