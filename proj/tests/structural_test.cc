#include "scda/structural.h"

#include <gtest/gtest.h>

#include <set>

#include "scda/error.h"
#include "scda/random.h"
#include "scda/segmenter.h"
#include "scda/utf8.h"
#include "test_support.h"

namespace scda {
namespace {

// Returns a fixed parse for the clause it was built for.
class FixtureParser : public DependencyParser {
 public:
  FixtureParser(std::string clause, CharSpan subject, CharSpan object)
      : clause_(std::move(clause)), subject_(subject), object_(object) {}
  std::string identity() const override { return "fixture"; }
  DependencyParseResult parse(std::string_view clause) const override {
    if (clause != clause_) return {};
    return {subject_, object_};
  }

 private:
  std::string clause_;
  CharSpan subject_, object_;
};

class ThrowingParser : public DependencyParser {
 public:
  std::string identity() const override { return "throwing"; }
  DependencyParseResult parse(std::string_view) const override {
    throw std::runtime_error("parser crashed");
  }
};

std::multiset<char32_t> chars(std::string_view s) {
  const auto u = utf8::decode(s);
  return {u.begin(), u.end()};
}

TEST(Clauses, SplitIsLossless) {
  for (const char* text : {"为这盘辣菜来个战歌", "a,b，c", "，，", "末尾，"}) {
    EXPECT_EQ(reconstruct(split_clauses(text)), text);
  }
  const auto c = split_clauses("牛肉好吃，米饭,汤");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].text, "牛肉好吃");
  EXPECT_EQ(c[0].delimiter, "，");
  EXPECT_EQ(c[1].span, (CharSpan{5, 7}));
  EXPECT_EQ(c[2].delimiter, "");
}

TEST(Speg, SubjectObjectSwapFromParser) {
  const std::string text = "The service makes the SpongeBob crazy";
  const FixtureParser parser(text, {4, 11}, {22, 31});
  RandomStream rng(0);
  const auto out = speg_augment({"1", text, "positive"}, &parser, CollocationSet{}, rng);
  ASSERT_FALSE(is_skip(out));
  const auto& r = std::get<AugmentedSample>(out);
  EXPECT_EQ(r.text, "The SpongeBob makes the service crazy");
  EXPECT_EQ(r.meta["swaps"][0]["mode"], "subject_object");
  EXPECT_EQ(chars(r.text), chars(text));
}

TEST(Speg, LiteralPaperInputKeepsCharacterMultiset) {
  const std::string text = "The service makes SpongeBob crazy";
  const FixtureParser parser(text, {4, 11}, {18, 27});
  RandomStream rng(0);
  const auto out = speg_augment({"1", text, "p"}, &parser, CollocationSet{}, rng);
  EXPECT_EQ(std::get<AugmentedSample>(out).text, "The SpongeBob makes service crazy");
}

TEST(Speg, CollocationPairSwapWithinClause) {
  const std::string text = "新鲜牛肉配米饭，汤";
  CollocationSet colls;
  colls.ranked = {{"新鲜牛肉", {0, 4}, 0.9}, {"米饭", {5, 7}, 0.8}, {"汤", {8, 9}, 0.7}};
  RandomStream rng(3);
  const auto out = speg_augment({"1", text, "p"}, nullptr, colls, rng);
  const auto& r = std::get<AugmentedSample>(out);
  EXPECT_EQ(r.text, "米饭配新鲜牛肉，汤");
  EXPECT_EQ(r.meta["swaps"].size(), 1u);  // 汤 has no partner in its clause
}

TEST(Speg, ParserFailureFallsThrough) {
  const std::string text = "牛肉配米饭";
  CollocationSet colls;
  colls.ranked = {{"牛肉", {0, 2}, 0.9}, {"米饭", {3, 5}, 0.8}};
  const ThrowingParser parser;
  RandomStream rng(1);
  const auto out = speg_augment({"1", text, "p"}, &parser, colls, rng);
  const auto& r = std::get<AugmentedSample>(out);
  EXPECT_EQ(r.text, "米饭配牛肉");
  EXPECT_EQ(r.meta["parser_errors"], 1);
}

TEST(Speg, Skips) {
  RandomStream rng(1);
  EXPECT_EQ(std::get<SkipReason>(speg_augment({"1", "好", "p"}, nullptr, {}, rng)),
            SkipReason::kTooShort);
  CollocationSet one;
  one.ranked = {{"牛肉", {0, 2}, 0.9}};
  EXPECT_EQ(std::get<SkipReason>(speg_augment({"1", "牛肉好吃", "p"}, nullptr, one, rng)),
            SkipReason::kNoCollocations);
}

TEST(HeuristicParser, FindsSubjectAndObject) {
  const LexiconSegmenter seg(testing::bundled_assets().lexicon);
  const HeuristicDependencyParser parser(seg);
  const auto r = parser.parse("服务员推荐火锅");
  ASSERT_TRUE(r.subject && r.object);
  EXPECT_EQ(*r.subject, (CharSpan{0, 3}));
  EXPECT_EQ(*r.object, (CharSpan{5, 7}));
  EXPECT_FALSE(parser.parse("很好吃").subject);
}

TEST(GapDistribution, MassesSumToOne) {
  EXPECT_DOUBLE_EQ(SwapGapDistribution::mass(0), 0.764);
  EXPECT_DOUBLE_EQ(SwapGapDistribution::mass(1), 0.218);
  EXPECT_DOUBLE_EQ(SwapGapDistribution::mass(2), 0.018);
  EXPECT_DOUBLE_EQ(SwapGapDistribution::mass(3), 0.0);
  std::size_t total = 0;
  for (auto w : SwapGapDistribution::kPerMille) total += w;
  EXPECT_EQ(total, 1000u);
}

TEST(Ireg, PoemReachable) {
  const LexiconSegmenter seg(testing::bundled_assets().lexicon);
  const TextSample poem{"poem", "莲下渔舟动", "neutral"};
  bool found = false;
  for (std::uint64_t s = 0; s < 500 && !found; ++s) {
    auto rng = derive_rng(SeedConfig{s}, poem.id, GeneratorId::kIreg);
    const auto out = ireg_augment(poem, seg, rng);
    found = std::get<IregResult>(out).sample.text == "莲动下渔舟";
  }
  EXPECT_TRUE(found);
}

TEST(Ireg, RecordsInvertAndPreserveText) {
  const std::vector<std::string> segs = {"a", "bb", "c", "dd", "e", "f"};
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomStream rng(seed);
    const auto out = ireg_augment_segments({"x", "abbcddef", "p"}, segs, rng);
    const auto& r = std::get<IregResult>(out);
    EXPECT_TRUE(is_involution(r.permutation));
    std::string back;
    for (const auto& b : apply_permutation(r.permutation.mapping,
                                           apply_permutation(r.permutation.mapping,
                                                             r.permutation.bases))) {
      back += b;
    }
    EXPECT_EQ(back, "abbcddef");
    EXPECT_EQ(chars(r.sample.text), chars("abbcddef"));
    const std::size_t gap = r.sample.meta["gap"];
    EXPECT_LE(gap, 2u);
  }
}

TEST(Ireg, TooShort) {
  RandomStream rng(0);
  EXPECT_EQ(std::get<SkipReason>(ireg_augment_segments({"x", "好", "p"}, {"好"}, rng)),
            SkipReason::kTooShort);
}

}  // namespace
}  // namespace scda
