#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 helpers. Everywhere in this library a "character" is one Unicode
// scalar value and character offsets index into the decoded scalar sequence.
namespace scda::utf8 {

// Throws Error(kData) on malformed input, overlong forms or surrogates.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view scalars);
std::string encode(char32_t scalar);

bool is_valid_scalar(char32_t c);

// Number of scalar values in a valid UTF-8 string.
std::size_t length(std::string_view bytes);

// Scalar-indexed slice [begin, end) of a valid UTF-8 string.
std::string slice(std::string_view bytes, std::size_t begin, std::size_t end);

// First `max_chars` scalars.
std::string truncate(std::string_view bytes, std::size_t max_chars);

// "U+1F414" style label.
std::string codepoint_label(char32_t c);

bool is_whitespace(char32_t c);
bool is_ascii_alnum(char32_t c);

// Trims Unicode whitespace on both sides.
std::string trim(std::string_view bytes);

}  // namespace scda::utf8
