#include "scda/utf8.h"

#include <cstdint>
#include <cstdio>

#include "scda/error.h"

namespace scda::utf8 {
namespace {

[[noreturn]] void malformed(std::size_t offset) {
  throw data_error("malformed UTF-8 at byte " + std::to_string(offset));
}

}  // namespace

bool is_valid_scalar(char32_t c) {
  return c <= 0x10FFFF && !(c >= 0xD800 && c <= 0xDFFF);
}

std::u32string decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<std::uint8_t>(bytes[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t extra;
    char32_t c;
    char32_t min;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1, c = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2, c = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3, c = lead & 0x07, min = 0x10000;
    } else {
      malformed(i);
    }
    if (i + extra >= bytes.size()) malformed(i);
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<std::uint8_t>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) malformed(i + k);
      c = (c << 6) | (cont & 0x3F);
    }
    if (c < min || !is_valid_scalar(c)) malformed(i);
    out.push_back(c);
    i += extra + 1;
  }
  return out;
}

std::string encode(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string encode(std::u32string_view scalars) {
  std::string out;
  out.reserve(scalars.size() * 3);
  for (char32_t c : scalars) out += encode(c);
  return out;
}

std::size_t length(std::string_view bytes) {
  std::size_t n = 0;
  for (char b : bytes) {
    if ((static_cast<std::uint8_t>(b) & 0xC0) != 0x80) ++n;
  }
  return n;
}

std::string slice(std::string_view bytes, std::size_t begin, std::size_t end) {
  const std::u32string scalars = decode(bytes);
  if (end > scalars.size()) end = scalars.size();
  if (begin >= end) return {};
  return encode(std::u32string_view(scalars).substr(begin, end - begin));
}

std::string truncate(std::string_view bytes, std::size_t max_chars) {
  return slice(bytes, 0, max_chars);
}

std::string codepoint_label(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

bool is_whitespace(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool is_ascii_alnum(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         (c >= U'0' && c <= U'9');
}

std::string trim(std::string_view bytes) {
  const std::u32string s = decode(bytes);
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_whitespace(s[b])) ++b;
  while (e > b && is_whitespace(s[e - 1])) --e;
  return encode(std::u32string_view(s).substr(b, e - b));
}

}  // namespace scda::utf8
