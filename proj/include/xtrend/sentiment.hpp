#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xtrend/detail/builtin_lexicon.hpp"
#include "xtrend/error.hpp"

namespace xtrend {

enum class SentimentLabel { Negative = -1, Neutral = 0, Positive = 1 };

inline constexpr std::string_view to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Positive: return "positive";
    case SentimentLabel::Negative: return "negative";
    case SentimentLabel::Neutral: return "neutral";
  }
  return "";
}

inline std::optional<SentimentLabel> parse_sentiment(std::string_view s) {
  if (s == "positive") return SentimentLabel::Positive;
  if (s == "negative") return SentimentLabel::Negative;
  if (s == "neutral") return SentimentLabel::Neutral;
  return std::nullopt;
}

/// Token -> polarity map. Keys are lowercase ASCII letters, values lie in
/// [-1, +1]; both are checked on construction.
class PolarityLexicon {
 public:
  explicit PolarityLexicon(std::unordered_map<std::string, double> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::InvalidInput, "lexicon is empty");
    for (const auto& [token, value] : entries_) check_entry(token, value, "");
  }

  static const PolarityLexicon& builtin() {
    static const PolarityLexicon lexicon = [] {
      std::unordered_map<std::string, double> entries;
      entries.reserve(detail::kBuiltinLexicon.size());
      for (const auto& [token, value] : detail::kBuiltinLexicon) entries.emplace(token, value);
      return PolarityLexicon(std::move(entries));
    }();
    return lexicon;
  }

  /// Reads `token<TAB>polarity` lines; `#` starts a comment.
  static PolarityLexicon load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot open lexicon " + path.string());
    std::unordered_map<std::string, double> entries;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      const auto tab = line.find('\t');
      if (tab == std::string::npos) {
        throw Error(ErrorCode::InvalidInput,
                    path.string() + ": line " + std::to_string(line_number) + ": expected token<TAB>polarity");
      }
      const std::string token = line.substr(0, tab);
      std::string text = line.substr(tab + 1);
      text.erase(text.find_last_not_of(" \t") + 1);
      double value = 0.0;
      std::size_t used = 0;
      try {
        value = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != text.size()) {
        throw Error(ErrorCode::InvalidInput,
                    path.string() + ": line " + std::to_string(line_number) + ": bad polarity value");
      }
      check_entry(token, value, path.string() + ": line " + std::to_string(line_number) + ": ");
      entries[token] = value;
    }
    return PolarityLexicon(std::move(entries));
  }

  const double* find(std::string_view token) const {
    const auto it = entries_.find(std::string(token));
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  const std::unordered_map<std::string, double>& entries() const { return entries_; }

  /// Same tokens with every polarity sign-flipped.
  PolarityLexicon negated() const {
    auto flipped = entries_;
    for (auto& [token, value] : flipped) value = -value;
    return PolarityLexicon(std::move(flipped));
  }

 private:
  static void check_entry(const std::string& token, double value, const std::string& where) {
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= 'a' && c <= 'z'; })) {
      throw Error(ErrorCode::InvalidInput, where + "token must be lowercase alphabetic: " + token);
    }
    if (!(value >= -1.0 && value <= 1.0)) {
      throw Error(ErrorCode::InvalidInput, where + "polarity outside [-1, 1] for " + token);
    }
  }

  std::unordered_map<std::string, double> entries_;
};

/// Mean lexicon polarity of the tokens that have an entry; 0 when none do.
///
/// Matched values are summed in sorted order with positives and negatives
/// accumulated apart, which makes the result exactly invariant under token
/// reordering and exactly antisymmetric under lexicon negation.
inline double score_polarity(const std::vector<std::string>& tokens, const PolarityLexicon& lex) {
  std::vector<double> positives;
  std::vector<double> negatives;
  for (const auto& token : tokens) {
    if (const double* value = lex.find(token)) {
      if (*value > 0) positives.push_back(*value);
      else if (*value < 0) negatives.push_back(-*value);
      else positives.push_back(0.0);
    }
  }
  const std::size_t matched = positives.size() + negatives.size();
  if (matched == 0) return 0.0;
  std::sort(positives.begin(), positives.end());
  std::sort(negatives.begin(), negatives.end());
  double up = 0.0;
  double down = 0.0;
  for (double v : positives) up += v;
  for (double v : negatives) down += v;
  const double mean = (up - down) / static_cast<double>(matched);
  return std::clamp(mean, -1.0, 1.0);
}

inline SentimentLabel classify_sentiment(double polarity) {
  if (polarity > 0) return SentimentLabel::Positive;
  if (polarity < 0) return SentimentLabel::Negative;
  return SentimentLabel::Neutral;
}

}  // namespace xtrend
