#include "scda/summarizer.h"

#include <gtest/gtest.h>

#include <random>

#include "scda/error.h"
#include "scda/utf8.h"
#include "test_support.h"

namespace scda {
namespace {

class EchoClient : public SummarizerClient {
 public:
  explicit EchoClient(std::size_t n) : n_(n) {}
  std::string identity() const override { return "echo"; }
  std::string summarize(std::string_view text, std::size_t) const override {
    return utf8::truncate(text, n_);
  }

 private:
  std::size_t n_;
};

class DownClient : public SummarizerClient {
 public:
  std::string identity() const override { return "down"; }
  std::string summarize(std::string_view, std::size_t) const override {
    throw ProviderError("down", "connection refused");
  }
};

std::string repeat(const std::string& s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += s;
  return out;
}

TEST(Markup, StripsTagsAndHashesToFixpoint) {
  EXPECT_EQ(strip_markup("<p>好吃</p>"), "好吃");
  EXPECT_EQ(strip_markup("##话题## 内容"), "话题 内容");
  EXPECT_EQ(strip_markup("<<b>i>x"), "x");
  EXPECT_EQ(strip_markup("#<a>#y"), "y");
  EXPECT_EQ(strip_markup("  a < b  "), "  a < b  ");
}

TEST(Cleaning, DropsInOrderAndCounts) {
  const std::string long_text = repeat("好", 100);
  const std::vector<ThemeContentPair> raw = {
      {"主题一", long_text},
      {"主题一", "<i>" + long_text + "</i>"},  // duplicate after stripping
      {"主", long_text},                       // short theme
      {"主题二", repeat("好", 99)},             // short content
      {"好", "短"},                            // short content wins over short theme
  };
  CleaningReport report;
  const auto kept = clean_corpus(raw, &report);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(report.kept, 1u);
  EXPECT_EQ(report.duplicates, 1u);
  EXPECT_EQ(report.short_theme, 1u);
  EXPECT_EQ(report.short_content, 2u);
  EXPECT_EQ(report.to_json().dump(),
            R"({"kept":1,"dropped":{"dup":1,"short_content":2,"short_theme":1}})");
  EXPECT_EQ(clean_corpus(kept), kept);  // idempotent
}

TEST(TrainingStream, FormatsEquationOne) {
  const std::vector<ThemeContentPair> pairs = {{"T1", "C1"}, {"T2", "C2"}};
  EXPECT_EQ(format_training(pairs), "C1[SEP]T1[EOS]C2[SEP]T2[EOS]");
  EXPECT_EQ(parse_training("C1[SEP]T1[EOS]C2[SEP]T2[EOS]"), pairs);
  EXPECT_EQ(format_training(pairs, {"|", "$"}), "C1|T1$C2|T2$");
}

TEST(TrainingStream, RejectsAmbiguity) {
  EXPECT_THROW(format_training({}), Error);
  EXPECT_THROW(format_training({{"a[SEP]", "b"}}), Error);
  EXPECT_THROW(format_training({{"a", "b"}}, {"", "$"}), Error);
  EXPECT_THROW(format_training({{"a", "b"}}, {"##", "#"}), Error);
  // "ab" + "aba" reads back as "" | "ba...": the separator fuses early.
  EXPECT_THROW(format_training({{"t", "ab"}}, {"aba", "$"}), Error);
  EXPECT_THROW(parse_training("C1[SEP]T1"), Error);
  EXPECT_THROW(parse_training("C1[EOS]T1[SEP]"), Error);
}

TEST(TrainingStream, RandomRoundTrips) {
  std::mt19937 gen(9);
  const std::u32string alphabet = U"abc好吃服务[]SEPO ，。";
  auto field = [&] {
    std::u32string s(gen() % 12, U'a');
    for (auto& c : s) c = alphabet[gen() % alphabet.size()];
    return utf8::encode(s);
  };
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::vector<ThemeContentPair> pairs(1 + gen() % 5);
    for (auto& p : pairs) p = {field(), field()};
    std::string stream;
    try {
      stream = format_training(pairs);
    } catch (const Error&) {
      continue;  // generated a marker by chance
    }
    EXPECT_EQ(parse_training(stream), pairs);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Summarize, ClientContract) {
  const std::string text = repeat("服务很好", 10);
  EXPECT_EQ(summarize(text, EchoClient(8)), "服务很好服务很好");
  EXPECT_THROW(summarize(text, EchoClient(40)), ProviderError);
  EXPECT_THROW(summarize(text, DownClient()), ProviderError);
  EXPECT_THROW(summarize(text, EchoClient(0)), ProviderError);
}

TEST(Fallback, PicksClosestClauseAndTruncates) {
  const HashEmbedder e;
  const std::string text = "牛肉很好吃，服务员很热情，牛肉汤也好吃。";
  const std::string theme = fallback_summarize(text, e);
  EXPECT_LE(utf8::length(theme), kMaxThemeLength);
  EXPECT_NE(text.find(theme), std::string::npos);
  EXPECT_EQ(fallback_summarize(repeat("好", 50), e), repeat("好", 32));
}

TEST(Mdeeg, FallsBackWhenClientIsDown) {
  const HashEmbedder e;
  const FallbackSummarizer fallback(e);
  const TextSample s{"1", "牛肉很好吃，服务员很热情", "positive"};
  const DownClient client;
  const auto down = mdeeg_augment(s, &client, fallback);
  EXPECT_EQ(down.meta["client"], "fallback");
  EXPECT_TRUE(down.meta.contains("fallback_reason"));
  EXPECT_EQ(down.label, "positive");
  const EchoClient echo(4);
  const auto ok = mdeeg_augment(s, &echo, fallback);
  EXPECT_EQ(ok.meta["client"], "echo");
  EXPECT_EQ(ok.text, "牛肉很好");
  const auto none = mdeeg_augment(s, nullptr, fallback);
  EXPECT_EQ(none.meta["client"], "fallback");
  EXPECT_FALSE(none.meta.contains("fallback_reason"));
}

}  // namespace
}  // namespace scda
