#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "scda/glyph.h"
#include "scda/phonetic.h"
#include "scda/segmenter.h"

namespace scda {

struct AssetPaths {
  std::filesystem::path pinyin;
  std::filesystem::path pronunciation;
  std::filesystem::path symbols;
  std::filesystem::path emoji;
  std::filesystem::path radicals;
  std::filesystem::path lexicon;

  // Standard file names inside an asset directory.
  static AssetPaths in_directory(const std::filesystem::path& dir);

  // name -> path, in a fixed order.
  std::map<std::string, std::filesystem::path> named() const;
};

struct AssetBundle {
  PinyinTable pinyin;
  SymbolMap symbols;
  PronunciationDictionary pronunciation;
  EmojiDictionary emoji;
  RadicalTable radicals;
  Lexicon lexicon;
  std::map<std::string, std::string> digests;  // name -> sha256 hex

  // Throws Error(kConfig) if a file is missing or unreadable, and
  // Error(kData) if one is malformed.
  static AssetBundle load(const AssetPaths& paths);
};

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);
std::string sha256_file(const std::filesystem::path& path);

// Reads a whole file; Error(kConfig) when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

// Splits a TSV line on tabs.
std::vector<std::string> split_tabs(std::string_view line);

// Calls `fn` with the fields of every non-blank line not starting with '#'.
// A missing file is Error(kConfig); errors thrown by `fn` are rethrown as
// Error(kData) prefixed with "path:line: ".
void for_each_tsv_record(
    const std::filesystem::path& path, std::string_view what,
    const std::function<void(const std::vector<std::string>&)>& fn);

}  // namespace scda
