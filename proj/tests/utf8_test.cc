#include "scda/utf8.h"

#include <gtest/gtest.h>

#include "scda/error.h"

namespace scda {
namespace {

TEST(Utf8, RoundTripsMixedScripts) {
  const std::string text = "服务员 Tony🐔é";
  const std::u32string scalars = utf8::decode(text);
  EXPECT_EQ(scalars.size(), 10u);
  EXPECT_EQ(scalars[8], U'\U0001F414');
  EXPECT_EQ(utf8::encode(scalars), text);
  EXPECT_EQ(utf8::length(text), 10u);
}

TEST(Utf8, RejectsMalformedInput) {
  EXPECT_THROW(utf8::decode("\xE6\x9C"), Error);           // truncated
  EXPECT_THROW(utf8::decode("\xC0\xAF"), Error);           // overlong
  EXPECT_THROW(utf8::decode("\xED\xA0\x80"), Error);       // surrogate
  EXPECT_THROW(utf8::decode("\xF4\x90\x80\x80"), Error);   // > U+10FFFF
  EXPECT_THROW(utf8::decode("a\x80"), Error);              // stray continuation
}

TEST(Utf8, SliceAndTruncateCountScalars) {
  EXPECT_EQ(utf8::slice("拖泥带水", 0, 2), "拖泥");
  EXPECT_EQ(utf8::slice("拖泥带水", 2, 4), "带水");
  EXPECT_EQ(utf8::truncate("拖泥带水", 3), "拖泥带");
  EXPECT_EQ(utf8::truncate("ab", 5), "ab");
}

TEST(Utf8, Labels) {
  EXPECT_EQ(utf8::codepoint_label(U'\U0001F414'), "U+1F414");
  EXPECT_EQ(utf8::codepoint_label(U'✈'), "U+2708");
}

TEST(Utf8, TrimHandlesIdeographicSpace) {
  EXPECT_EQ(utf8::trim("　 好 \t\n"), "好");
  EXPECT_EQ(utf8::trim("   "), "");
  EXPECT_TRUE(utf8::is_whitespace(U'　'));
  EXPECT_FALSE(utf8::is_ascii_alnum(U'é'));
}

}  // namespace
}  // namespace scda
