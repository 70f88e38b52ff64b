#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace xtrend {

/// Per-reason tally of rows removed from a dataset. Ordered so that any
/// serialization of it is deterministic.
using DropCounts = std::map<std::string, std::uint64_t>;

inline void merge_into(DropCounts& into, const DropCounts& from) {
  for (const auto& [reason, n] : from) into[reason] += n;
}

inline std::uint64_t total(const DropCounts& counts) {
  std::uint64_t sum = 0;
  for (const auto& [reason, n] : counts) sum += n;
  return sum;
}

}  // namespace xtrend
