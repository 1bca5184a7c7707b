#include "scda/phonetic.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "scda/error.h"
#include "test_support.h"

namespace scda {
namespace {

const PinyinTable& pinyin() { return testing::bundled_assets().pinyin; }

TEST(Pinyin, TranscribesPaperExample) {
  const auto t = to_pinyin("拖泥带水", pinyin());
  EXPECT_EQ(t.pinyin, "tuonidaishui");
  EXPECT_EQ(t.syllables, (std::vector<std::string>{"tuo", "ni", "dai", "shui"}));
  EXPECT_EQ(to_pinyin("水", pinyin()).pinyin, "shui");
}

TEST(Pinyin, MissingCharacterIsNamed) {
  try {
    to_pinyin("水A", pinyin());
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'A'"), std::string::npos);
  }
  PinyinTable t;
  EXPECT_THROW(t.add(U'水', "Shui"), Error);
  EXPECT_THROW(t.add(U'水', ""), Error);
}

TEST(EditDistance, Examples) {
  EXPECT_EQ(edit_distance("tuoni", "tuoni"), 0u);
  EXPECT_EQ(edit_distance("", "abc"), 3u);
  EXPECT_EQ(edit_distance("tuoni", "toni"), 1u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
  EXPECT_DOUBLE_EQ(pinyin_similarity("tuoni", "toni"), 0.8);
  EXPECT_DOUBLE_EQ(pinyin_similarity("", ""), 1.0);
}

TEST(EditDistance, MetricProperties) {
  std::mt19937 gen(11);
  auto random_string = [&] {
    std::string s(gen() % 9, 'a');
    for (char& c : s) c = static_cast<char>('a' + gen() % 4);
    return s;
  };
  for (int i = 0; i < 500; ++i) {
    const auto a = random_string(), b = random_string(), c = random_string();
    const auto ab = edit_distance(a, b);
    EXPECT_EQ(ab, edit_distance(b, a));
    EXPECT_EQ(edit_distance(a, a), 0u);
    EXPECT_LE(ab, edit_distance(a, c) + edit_distance(c, b));
    const std::size_t diff = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
    EXPECT_GE(ab, diff);
    EXPECT_LE(ab, std::max(a.size(), b.size()));
  }
}

TEST(Spans, Enumeration) {
  EXPECT_EQ(enumerate_spans(4), (std::vector<CharSpan>{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}));
  EXPECT_EQ(enumerate_spans(2), (std::vector<CharSpan>{{0, 2}}));
  EXPECT_EQ(enumerate_spans(3), (std::vector<CharSpan>{{0, 2}, {1, 3}, {0, 3}}));
  EXPECT_TRUE(enumerate_spans(1).empty());
}

TEST(SymbolMap, StressMarksVanish) {
  const auto& symbols = testing::bundled_assets().symbols;
  EXPECT_EQ(symbols.transcribe("ˈtəʊni"), "touni");
  EXPECT_EQ(symbols.transcribe("aɪ"), "ai");
  EXPECT_THROW(symbols.transcribe("ʘ"), Error);
}

TEST(Dictionary, BoundsAreEnforced) {
  PronunciationDictionary d;
  EXPECT_NO_THROW(d.add({"Tony", "ˈtəʊni", "tuoni", 2}));
  EXPECT_THROW(d.add({"Jo", "dʒəʊ", "zhou", 2}), Error);
  EXPECT_THROW(d.add({"Tomorrow", "təˈmɒrəʊ", "tuomoluo", 3}), Error);
  EXPECT_THROW(d.add({"Tony", "ˈtəʊni", "tuoni", 4}), Error);
  EXPECT_THROW(d.add({"Tony", "ˈtəʊni", "", 2}), Error);
}

TEST(Dictionary, BundledEntriesAreValid) {
  const auto& dict = testing::bundled_assets().pronunciation;
  EXPECT_GE(dict.entries().size(), 50u);
  for (const auto& e : dict.entries()) {
    EXPECT_TRUE(testing::bundled_assets().symbols.covers(e.phonetic)) << e.word;
  }
}

TEST(Homophone, PaperExample) {
  const auto m = best_homophone("拖泥带水", pinyin(), testing::bundled_assets().pronunciation);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->word, "Tony");
  EXPECT_EQ(m->span, (CharSpan{0, 2}));
  EXPECT_DOUBLE_EQ(m->similarity, 1.0);
  PronunciationDictionary empty;
  EXPECT_THROW(best_homophone("拖泥", pinyin(), empty), Error);
}

TEST(Homophone, TieBreaks) {
  PronunciationDictionary d;
  d.add({"Bbb", "ˈbɪbi", "niz", 2});   // tuoni vs niz ... both weak
  d.add({"Aaa", "ˈæbi", "tuon", 2});   // 0.8 on 拖泥 (tuoni)
  d.add({"Ccc", "ˈkiki", "tuoi", 2});  // 0.8 on 拖泥 as well
  const auto m = best_homophone("拖泥带", pinyin(), d, 0.0);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->word, "Aaa");  // equal similarity and span: smaller word
}

TEST(Hmeg, PaperSentence) {
  const TextSample s{"1", "服务员上菜拖泥带水", "negative"};
  CollocationSet colls;
  colls.ranked = {{"服务员", {0, 3}, 0.4}};
  colls.idioms = {{"拖泥带水", {5, 9}}};
  const auto& a = testing::bundled_assets();
  const auto out = hmeg_augment(s, colls, a.pinyin, a.pronunciation);
  ASSERT_FALSE(is_skip(out));
  const auto& r = std::get<AugmentedSample>(out);
  EXPECT_EQ(r.text, "服务员上菜Tony带水");
  EXPECT_EQ(r.label, "negative");
  EXPECT_EQ(r.meta["word"], "Tony");
  EXPECT_EQ(r.meta["span"], Json::array({5, 7}));
}

TEST(Hmeg, SkipsAndGaps) {
  const auto& a = testing::bundled_assets();
  CollocationSet none;
  EXPECT_EQ(std::get<SkipReason>(hmeg_augment({"1", "好吃的", "p"}, none, a.pinyin, a.pronunciation)),
            SkipReason::kNoCollocations);
  EXPECT_EQ(std::get<SkipReason>(hmeg_augment({"1", "好", "p"}, none, a.pinyin, a.pronunciation)),
            SkipReason::kTooShort);
  // A collocation containing an untranscribable character is ignored.
  CollocationSet gap;
  gap.ranked = {{"X拖泥", {0, 3}, 0.9}};
  EXPECT_EQ(std::get<SkipReason>(hmeg_augment({"1", "X拖泥", "p"}, gap, a.pinyin, a.pronunciation)),
            SkipReason::kNoCollocations);
  CollocationSet weak;
  weak.ranked = {{"莲下", {0, 2}, 0.9}};
  EXPECT_EQ(std::get<SkipReason>(hmeg_augment({"1", "莲下", "p"}, weak, a.pinyin, a.pronunciation, 0.99)),
            SkipReason::kBelowThreshold);
}

}  // namespace
}  // namespace scda
