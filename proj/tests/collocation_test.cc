#include "scda/collocation.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "scda/error.h"
#include "scda/segmenter.h"
#include "scda/utf8.h"
#include "test_support.h"

namespace scda {
namespace {

PosTaggedToken tok(std::string s, PosTag pos, std::size_t begin, std::size_t len) {
  return {std::move(s), pos, {begin, begin + len}};
}

TEST(Candidates, AdjectiveNounRuns) {
  // 新鲜 牛肉 和 米饭 很 好吃
  const std::vector<PosTaggedToken> tokens = {
      tok("新鲜", PosTag::kAdjective, 0, 2), tok("牛肉", PosTag::kNoun, 2, 2),
      tok("和", PosTag::kOther, 4, 1),      tok("米饭", PosTag::kNoun, 5, 2),
      tok("很", PosTag::kOther, 7, 1),      tok("好吃", PosTag::kAdjective, 8, 2)};
  const auto c = extract_candidates(tokens);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].surface, "新鲜牛肉");
  EXPECT_EQ(c[0].pattern, "adjective-noun");
  EXPECT_EQ(c[0].span, (CharSpan{0, 4}));
  EXPECT_EQ(c[1].surface, "米饭");
  EXPECT_EQ(c[1].pattern, "noun");
}

TEST(Candidates, SingleCharacterNounAloneIsNotACandidate) {
  const std::vector<PosTaggedToken> tokens = {tok("菜", PosTag::kNoun, 0, 1),
                                              tok("好", PosTag::kAdjective, 1, 1)};
  EXPECT_TRUE(extract_candidates(tokens).empty());
  const std::vector<PosTaggedToken> pair = {tok("辣", PosTag::kAdjective, 0, 1),
                                            tok("菜", PosTag::kNoun, 1, 1)};
  ASSERT_EQ(extract_candidates(pair).size(), 1u);
}

TEST(Candidates, WhitespaceIsAbsorbedInsideRunsOnly) {
  const std::vector<PosTaggedToken> tokens = {
      tok(" ", PosTag::kOther, 0, 1),      tok("spicy", PosTag::kAdjective, 1, 5),
      tok(" ", PosTag::kOther, 6, 1),      tok("food", PosTag::kNoun, 7, 4),
      tok(" ", PosTag::kOther, 11, 1)};
  const auto c = extract_candidates(tokens);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].surface, "spicy food");
  EXPECT_EQ(c[0].span, (CharSpan{1, 11}));
  EXPECT_EQ(c[0].pattern, "adjective-noun");
}

TEST(Candidates, NounNounPattern) {
  const std::vector<PosTaggedToken> tokens = {tok("牛肉", PosTag::kNoun, 0, 2),
                                              tok("汉堡", PosTag::kNoun, 2, 2)};
  const auto c = extract_candidates(tokens);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].pattern, "noun-noun");
}

TEST(Ranking, TopKAndTies) {
  // Identical surfaces at different spans tie; the earlier span wins.
  const std::vector<CandidateCollocation> cands = {
      {"牛肉", {4, 6}, "noun"}, {"牛肉", {0, 2}, "noun"}, {"米饭", {8, 10}, "noun"}};
  HashEmbedder e;
  const auto ranked = rank_collocations(cands, "牛肉和米饭牛肉", e, 2);
  ASSERT_EQ(ranked.size(), 2u);
  EXPECT_GE(ranked[0].score, ranked[1].score);
  const auto all = rank_collocations(cands, "牛肉和米饭牛肉", e, 10);
  ASSERT_EQ(all.size(), 3u);
  const auto first_beef = std::find_if(all.begin(), all.end(),
                                       [](const auto& r) { return r.surface == "牛肉"; });
  EXPECT_EQ(first_beef->span.begin, 0u);
  EXPECT_THROW(rank_collocations(cands, "x", e, 0), Error);
}

TEST(Ranking, ZeroCandidateVectorIsDroppedWithWarning) {
  const testing::TableEmbedder e({{"text", {1.0, 0.0}},
                                  {"a", {0.0, 0.0}},
                                  {"b", {1.0, 1.0}}});
  const std::vector<CandidateCollocation> cands = {{"a", {0, 1}, "noun"},
                                                   {"b", {1, 2}, "noun"}};
  std::vector<std::string> warnings;
  const auto ranked = rank_collocations(cands, "text", e, 5, &warnings);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].surface, "b");
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Ranking, ProviderFailurePropagates) {
  const std::vector<CandidateCollocation> cands = {{"a", {0, 1}, "noun"}};
  EXPECT_THROW(rank_collocations(cands, "text", testing::DownEmbedder(), 5), ProviderError);
}

TEST(CollocationSet, UnionPrefersIdiomsAndOrdersBySpan) {
  CollocationSet set;
  set.ranked = {{"水果", {6, 8}, 0.9}, {"带水", {4, 6}, 0.8}, {"服务员", {0, 3}, 0.5}};
  set.idioms = {{"拖泥带水", {3, 7}}};
  const auto all = set.all();
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].surface, "服务员");
  EXPECT_FALSE(all[0].idiom);
  EXPECT_EQ(all[1].surface, "拖泥带水");
  EXPECT_TRUE(all[1].idiom);
}

TEST(CollocationSet, PaperSentence) {
  const LexiconSegmenter seg(testing::bundled_assets().lexicon);
  const auto set = collocations("服务员上菜拖泥带水", seg, HashEmbedder(), 5);
  const auto all = set.all();
  ASSERT_EQ(all.size(), 2u);
  EXPECT_EQ(all[0].surface, "服务员");
  EXPECT_EQ(all[1].surface, "拖泥带水");
  EXPECT_TRUE(all[1].idiom);
}

// Full-sort oracle over random candidate sets.
TEST(Ranking, MatchesFullSortOracle) {
  std::mt19937 gen(5);
  const std::vector<std::string> words = {"牛肉", "米饭", "服务员", "战歌", "渔舟",
                                          "新鲜牛肉", "奶茶", "火锅", "烤鸭", "手机"};
  HashEmbedder e;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CandidateCollocation> cands;
    std::string text;
    std::size_t offset = 0;
    const int n = 1 + static_cast<int>(gen() % 8);
    for (int i = 0; i < n; ++i) {
      const auto& w = words[gen() % words.size()];
      const std::size_t len = utf8::length(w);
      cands.push_back({w, {offset, offset + len}, "noun"});
      text += w + "的";
      offset += len + 1;
    }
    const std::size_t k = 1 + gen() % 6;
    const auto text_vec = hash_embed(text);
    std::vector<RankedCollocation> oracle;
    for (const auto& c : cands) oracle.push_back({c.surface, c.span, cosine(hash_embed(c.surface), text_vec)});
    std::sort(oracle.begin(), oracle.end(), [](const auto& a, const auto& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.span.begin != b.span.begin) return a.span.begin < b.span.begin;
      if (a.surface != b.surface) return a.surface < b.surface;
      return a.span.end < b.span.end;
    });
    if (oracle.size() > k) oracle.resize(k);
    const auto got = rank_collocations(cands, text, e, k);
    ASSERT_EQ(got.size(), oracle.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].surface, oracle[i].surface);
      EXPECT_EQ(got[i].span, oracle[i].span);
      EXPECT_DOUBLE_EQ(got[i].score, oracle[i].score);
    }
  }
}

}  // namespace
}  // namespace scda
