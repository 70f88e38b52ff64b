#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_support.hpp"
#include "xtrend/cleaning.hpp"

using namespace xtrend;
using Tokens = std::vector<std::string>;

TEST(TrimField, Examples) {
  EXPECT_EQ(trim_field("  \"AAPL\" "), "AAPL");
  EXPECT_EQ(trim_field("hello"), "hello");
  EXPECT_EQ(trim_field("\"\""), "");
  EXPECT_EQ(trim_field(" 'x' "), "x");
  EXPECT_EQ(trim_field("\"x'"), "\"x'");
}

TEST(TrimField, Idempotent) {
  Rng rng(31);
  const std::string alphabet = " \"'ab\t";
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    const auto len = rng.uniform_int(0, 10);
    for (std::int64_t k = 0; k < len; ++k) s.push_back(alphabet[static_cast<std::size_t>(rng.uniform_int(0, 5))]);
    const auto once = trim_field(s);
    ASSERT_EQ(trim_field(once), once) << "[" << s << "]";
  }
}

TEST(NullMarker, Variants) {
  for (const char* s : {"", "null", "NULL", "Na", "nan", "NaN"}) EXPECT_TRUE(is_null_marker(s)) << s;
  for (const char* s : {"0", "none", "n/a", "nano"}) EXPECT_FALSE(is_null_marker(s)) << s;
}

TEST(NormalizeDate, Examples) {
  EXPECT_EQ(normalize_date("2019-11-01 00:00:00 UTC"), Date::ymd(2019, 11, 1));
  EXPECT_EQ(normalize_date("11/01/2019"), Date::ymd(2019, 11, 1));
  const auto ref = oracle::utc_date(1572566400);
  EXPECT_EQ(normalize_date("1572566400"), Date::ymd(ref.y, ref.m, ref.d));
  EXPECT_EQ(normalize_date("2019/11/01"), Date::ymd(2019, 11, 1));
  EXPECT_EQ(normalize_date(" 2019-11-01 "), Date::ymd(2019, 11, 1));
  EXPECT_EQ(normalize_date("2019-11-01 23:59:59"), Date::ymd(2019, 11, 1));
}

TEST(NormalizeDate, Rejects) {
  for (const char* s : {"", "yesterday", "2019-13-01", "2019-02-30", "13/13/2019", "2019-11-01T00:00:00",
                        "2019-11-01 25:00:00", "2019-11-01 00:00:00 UTC extra", "1.5e9", "-"}) {
    EXPECT_FALSE(try_normalize_date(s)) << s;
    EXPECT_THROW(normalize_date(s), Error) << s;
  }
}

TEST(NormalizeDate, EpochSecondsMatchGmtime) {
  Rng rng(32);
  for (int i = 0; i < 5000; ++i) {
    const auto secs = rng.uniform_int(-2000000000LL, 4000000000LL);
    const auto ref = oracle::utc_date(secs);
    ASSERT_EQ(normalize_date(std::to_string(secs)), Date::ymd(ref.y, ref.m, ref.d)) << secs;
  }
}

TEST(NormalizeTweetText, Examples) {
  const StopwordSet now({"now"});
  const StopwordSet the({"the"});
  EXPECT_EQ(normalize_tweet_text("Buy $AAPL now!!! 100%", now), (Tokens{"buy", "aapl"}));
  EXPECT_EQ(normalize_tweet_text("", now), Tokens{});
  EXPECT_EQ(normalize_tweet_text("The the THE", the), Tokens{});
}

TEST(NormalizeTweetText, IdempotentAndAlphabetic) {
  Rng rng(33);
  const auto& stop = StopwordSet::english();
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    const auto len = rng.uniform_int(0, 40);
    for (std::int64_t k = 0; k < len; ++k) s.push_back(static_cast<char>(rng.uniform_int(1, 255)));
    const auto tokens = normalize_tweet_text(s, stop);
    std::string joined;
    for (const auto& t : tokens) {
      ASSERT_FALSE(t.empty());
      for (char c : t) ASSERT_TRUE(c >= 'a' && c <= 'z');
      ASSERT_FALSE(stop.contains(t));
      if (!joined.empty()) joined.push_back(' ');
      joined += t;
    }
    ASSERT_EQ(normalize_tweet_text(joined, stop), tokens);
  }
}

TEST(Stopwords, LoadAndValidate) {
  testing_support::TempDir dir("stop");
  testing_support::write_text(dir / "s.txt", "# list\nfoo\n  bar  # trailing\n\n");
  const auto set = StopwordSet::load(dir / "s.txt");
  EXPECT_EQ(set.words(), (std::set<std::string>{"bar", "foo"}));
  testing_support::write_text(dir / "bad.txt", "Foo\n");
  EXPECT_THROW(StopwordSet::load(dir / "bad.txt"), Error);
  EXPECT_THROW(StopwordSet(std::set<std::string>{}), Error);
}

namespace {

RawRow stock_row(const std::string& open, const std::string& close) {
  return {"AAPL.csv", 2, {"AAPL", "2019-11-01", open, "1", "1", close, "100", "0", "0"}};
}

template <typename T>
DropReason reason_of(const Cleaned<T>& c) {
  return std::get<Dropped>(c).reason;
}

}  // namespace

TEST(CleanStock, Examples) {
  const auto up = std::get<CleanStockRecord>(clean_stock(stock_row("100.00", "107.50")));
  EXPECT_EQ(up.day_change_price, 7.5);
  EXPECT_EQ(up.day_change_pct, 7.5);
  EXPECT_EQ(up.stock_name, "AAPL");
  EXPECT_EQ(up.record_date, Date::ymd(2019, 11, 1));
  const auto flat = std::get<CleanStockRecord>(clean_stock(stock_row("100.00", "100.00")));
  EXPECT_EQ(flat.day_change_price, 0.0);
  EXPECT_EQ(flat.day_change_pct, 0.0);
  EXPECT_EQ(reason_of(clean_stock(stock_row("null", "1"))), DropReason::NullRequiredField);
}

TEST(CleanStock, DropReasons) {
  EXPECT_EQ(reason_of(clean_stock(stock_row("0", "1"))), DropReason::ZeroOpen);
  EXPECT_EQ(reason_of(clean_stock(stock_row("-1", "1"))), DropReason::NegativePrice);
  EXPECT_EQ(reason_of(clean_stock(stock_row("abc", "1"))), DropReason::NonNumeric);
  EXPECT_EQ(reason_of(clean_stock(stock_row("1", "NaN"))), DropReason::NullRequiredField);
  auto bad_date = stock_row("1", "2");
  bad_date.fields[1] = "2019-02-30";
  EXPECT_EQ(reason_of(clean_stock(bad_date)), DropReason::UnparseableDate);
  auto narrow = stock_row("1", "2");
  narrow.fields.pop_back();
  EXPECT_EQ(reason_of(clean_stock(narrow)), DropReason::FieldCountMismatch);
}

namespace {

RawRow tweet_row(const std::string& date, const std::string& body, const std::string& likes) {
  return {"t.csv", 2, {"1", "w", date, body, "0", "0", likes}};
}

/// Label from the lexicon values themselves. Every built-in value is a
/// multiple of 0.1, so summing tenths as integers gives the exact sign.
SentimentLabel lexicon_oracle(const Tokens& tokens, const PolarityLexicon& lex) {
  long long tenths = 0;
  for (const auto& [word, value] : lex.entries()) {
    for (const auto& t : tokens) {
      if (t == word) tenths += std::llround(value * 10);
    }
  }
  if (tenths == 0) return SentimentLabel::Neutral;
  return tenths > 0 ? SentimentLabel::Positive : SentimentLabel::Negative;
}

}  // namespace

TEST(CleanTweet, Examples) {
  const auto& stop = StopwordSet::english();
  const auto rec = std::get<CleanTweetRecord>(clean_tweet(tweet_row("2020-01-02 13:00:00", "good earnings", "3"), stop));
  EXPECT_EQ(rec.post_date, Date::ymd(2020, 1, 2));
  EXPECT_EQ(rec.like_count, 3u);
  EXPECT_EQ(rec.sentiment, lexicon_oracle({"good", "earnings"}, PolarityLexicon::builtin()));
  EXPECT_EQ(rec.sentiment, SentimentLabel::Positive);
  EXPECT_EQ(rec.tweet_length, std::string("good earnings").size());

  EXPECT_EQ(reason_of(clean_tweet(tweet_row("2020-01-02", "x", "-1"), stop)), DropReason::NegativeCount);

  const auto empty = std::get<CleanTweetRecord>(clean_tweet(tweet_row("2020-01-02", "", "0"), stop));
  EXPECT_EQ(empty.tweet_length, 0u);
  EXPECT_EQ(empty.sentiment, SentimentLabel::Neutral);
}

TEST(CleanTweet, LengthCountsCleanedText) {
  const auto rec = std::get<CleanTweetRecord>(
      clean_tweet(tweet_row("2020-01-02", "\"The  $TSLA, to the MOON!!! 420\"", "1"), StopwordSet::english()));
  EXPECT_EQ(rec.tweet_length, std::string("tsla moon").size());
}

TEST(CleanTweet, LabelsMatchLexiconOracle) {
  Rng rng(34);
  const auto& lex = PolarityLexicon::builtin();
  std::vector<std::string> vocab;
  for (const auto& [w, v] : lex.entries()) vocab.push_back(w);
  std::sort(vocab.begin(), vocab.end());
  for (const char* filler : {"stock", "today", "xyz", "the", "market"}) vocab.push_back(filler);
  for (int i = 0; i < 1000; ++i) {
    std::string body;
    Tokens kept;
    const auto n = rng.uniform_int(0, 6);
    for (std::int64_t k = 0; k < n; ++k) {
      const auto& w = testing_support::pick(rng, vocab);
      body += w + " ";
      if (!StopwordSet::english().contains(w)) kept.push_back(w);
    }
    const auto rec = std::get<CleanTweetRecord>(clean_tweet(tweet_row("2020-01-02", body, "1"), StopwordSet::english()));
    ASSERT_EQ(rec.sentiment, lexicon_oracle(kept, lex)) << body;
  }
}

namespace {

RawRow ecomm_row(const std::string& type, const std::string& brand, const std::string& price) {
  return {"e.csv",
          2,
          {"2019-11-01 00:00:00 UTC", type, "1003461", "2053013555631882655", "electronics.smartphone", brand, price,
           "520088904", "4d3b30da"}};
}

}  // namespace

TEST(CleanEcomm, Examples) {
  const auto ev = std::get<CleanEcommEvent>(clean_ecomm(ecomm_row("purchase", "Xiaomi", "489.07")));
  EXPECT_EQ(ev.brand, "xiaomi");
  EXPECT_EQ(ev.event_type, EventType::Purchase);
  EXPECT_EQ(ev.record_date, Date::ymd(2019, 11, 1));
  EXPECT_EQ(ev.product_id, "1003461");
  EXPECT_EQ(ev.category_code, "electronics.smartphone");
  EXPECT_EQ(ev.price, 489.07);

  EXPECT_EQ(reason_of(clean_ecomm(ecomm_row("wishlist", "x", "1"))), DropReason::UnknownEventType);
  const auto no_brand = std::get<CleanEcommEvent>(clean_ecomm(ecomm_row("view", "", "1")));
  EXPECT_FALSE(no_brand.brand.has_value());
}

TEST(CleanEcomm, CaseInsensitiveTypeAndBadPrice) {
  EXPECT_EQ(std::get<CleanEcommEvent>(clean_ecomm(ecomm_row("REMOVE_FROM_CART", "x", "1"))).event_type,
            EventType::RemoveFromCart);
  EXPECT_EQ(reason_of(clean_ecomm(ecomm_row("view", "x", "-2"))), DropReason::NegativePrice);
  EXPECT_EQ(reason_of(clean_ecomm(ecomm_row("view", "x", "cheap"))), DropReason::NonNumeric);
  EXPECT_EQ(reason_of(clean_ecomm(ecomm_row("view", "x", ""))), DropReason::NullRequiredField);
}

TEST(CleanedCsv, RoundTrip) {
  Rng rng(35);
  const auto& stop = StopwordSet::english();
  for (int i = 0; i < 2000; ++i) {
    const auto st = clean_stock(testing_support::random_stock_row(rng));
    if (auto* s = std::get_if<CleanStockRecord>(&st)) { ASSERT_EQ(parse_clean_stock(to_csv_line(*s)), *s) << to_csv_line(*s); }
    const auto t = clean_tweet(testing_support::random_tweet_row(rng), stop);
    if (auto* r = std::get_if<CleanTweetRecord>(&t)) { ASSERT_EQ(parse_clean_tweet(to_csv_line(*r)), *r); }
    const auto e = clean_ecomm(testing_support::random_ecomm_row(rng));
    if (auto* r = std::get_if<CleanEcommEvent>(&e)) { ASSERT_EQ(parse_clean_ecomm(to_csv_line(*r)), *r); }
  }
}

TEST(CleaningProperty, ConservationAndInvariants) {
  Rng rng(36);
  const auto& stop = StopwordSet::english();
  for (int batch = 0; batch < 1000; ++batch) {
    const auto n = static_cast<std::size_t>(rng.uniform_int(1, 30));
    std::size_t kept = 0;
    DropCounts drops;
    auto tally = [&](const auto& cleaned) {
      using Cleaned = std::decay_t<decltype(cleaned)>;
      using Record = std::variant_alternative_t<0, Cleaned>;
      if (const auto* rec = std::get_if<Record>(&cleaned)) {
        const auto why = testing_support::invariant_violation(*rec);
        ASSERT_TRUE(why.empty()) << why;
        ++kept;
      } else {
        ++drops[std::string(to_string(std::get<Dropped>(cleaned).reason))];
      }
    };
    const auto kind = batch % 3;
    for (std::size_t i = 0; i < n; ++i) {
      if (kind == 0) tally(clean_stock(testing_support::random_stock_row(rng)));
      else if (kind == 1) tally(clean_tweet(testing_support::random_tweet_row(rng), stop));
      else tally(clean_ecomm(testing_support::random_ecomm_row(rng)));
    }
    ASSERT_EQ(kept + total(drops), n);
  }
}
