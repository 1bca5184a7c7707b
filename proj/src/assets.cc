#include "scda/assets.h"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "scda/error.h"

namespace scda {

AssetPaths AssetPaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "pinyin.tsv",   dir / "pronunciation.tsv", dir / "symbols.tsv",
          dir / "emoji.tsv",    dir / "radicals.tsv",      dir / "lexicon.tsv"};
}

std::map<std::string, std::filesystem::path> AssetPaths::named() const {
  return {{"pinyin", pinyin},   {"pronunciation", pronunciation},
          {"symbols", symbols}, {"emoji", emoji},
          {"radicals", radicals}, {"lexicon", lexicon}};
}

AssetBundle AssetBundle::load(const AssetPaths& paths) {
  for (const auto& [name, path] : paths.named()) {
    if (!std::filesystem::is_regular_file(path)) {
      throw config_error("asset '" + name + "' not found at " + path.string());
    }
  }
  AssetBundle bundle;
  bundle.pinyin = PinyinTable::load(paths.pinyin);
  bundle.symbols = SymbolMap::load(paths.symbols);
  bundle.pronunciation =
      PronunciationDictionary::load(paths.pronunciation, &bundle.symbols);
  bundle.emoji = EmojiDictionary::load(paths.emoji);
  bundle.radicals = RadicalTable::load(paths.radicals);
  bundle.lexicon = Lexicon::load(paths.lexicon);
  if (bundle.pronunciation.empty()) throw data_error("pronunciation dictionary is empty");
  if (bundle.emoji.empty()) throw data_error("emoji dictionary is empty");
  for (const auto& [name, path] : paths.named()) {
    bundle.digests[name] = sha256_file(path);
  }
  return bundle;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw Error(ErrorKind::kConfig, "SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string sha256_file(const std::filesystem::path& path) {
  return sha256_hex(read_file(path));
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab == std::string_view::npos
                                               ? std::string_view::npos
                                               : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

void for_each_tsv_record(
    const std::filesystem::path& path, std::string_view what,
    const std::function<void(const std::vector<std::string>&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw config_error("cannot open " + std::string(what) + " " + path.string());
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    try {
      fn(split_tabs(line));
    } catch (const Error& e) {
      throw data_error(path.string() + ":" + std::to_string(line_number) + ": " +
                       e.what());
    }
  }
}

}  // namespace scda
