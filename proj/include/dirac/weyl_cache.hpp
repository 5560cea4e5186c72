#pragma once

// On-disk cache of Weyl group enumerations. One text file per Cartan type:
//
//   diracidx-weyl 1
//   type B2
//   count 8
//   0:
//   1:0
//   ...
//   crc32 1a2b3c4d
//
// Each element line is "<index>:<word>" with the word as comma-separated simple reflection
// indices; the matrices are rebuilt from the words on load. The checksum covers every line
// before the crc32 line.

#include <boost/crc.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dirac/error.hpp"
#include "dirac/rootdata.hpp"

namespace dirac {

inline constexpr int weyl_cache_version = 1;

struct WeylLoad {
  std::vector<WeylElement> elements;
  bool from_cache = false;
};

namespace detail {

inline std::string crc_hex(const std::string& body) {
  boost::crc_32_type crc;
  crc.process_bytes(body.data(), body.size());
  std::ostringstream os;
  os << std::hex;
  os.width(8);
  os.fill('0');
  os << crc.checksum();
  return os.str();
}

}  // namespace detail

inline std::filesystem::path weyl_cache_file(const RootSystem& rs, const std::filesystem::path& dir) {
  return dir / ("weyl-" + rs.type().to_string() + ".txt");
}

inline std::string render_weyl_cache(const RootSystem& rs, const std::vector<WeylElement>& elements) {
  std::ostringstream body;
  body << "diracidx-weyl " << weyl_cache_version << "\n";
  body << "type " << rs.type().to_string() << "\n";
  body << "count " << elements.size() << "\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    body << i << ":";
    for (std::size_t j = 0; j < elements[i].word.size(); ++j) body << (j ? "," : "") << elements[i].word[j];
    body << "\n";
  }
  std::string text = body.str();
  return text + "crc32 " + detail::crc_hex(text) + "\n";
}

inline void cache_weyl(const RootSystem& rs, const std::filesystem::path& path,
                       std::uint64_t cap = default_weyl_cap) {
  auto elements = weyl_group(rs, cap);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot write Weyl cache " + path.string());
  out << render_weyl_cache(rs, elements);
  if (!out) throw Error(ErrorCode::io, "failed writing Weyl cache " + path.string());
}

inline std::vector<WeylElement> parse_weyl_cache(const RootSystem& rs, const std::string& text,
                                                 const std::string& where = "cache") {
  auto corrupt = [&](const std::string& why) { return Error(ErrorCode::cache_corrupt, where + ": " + why); };
  std::size_t crc_at = text.rfind("crc32 ");
  if (crc_at == std::string::npos || (crc_at != 0 && text[crc_at - 1] != '\n')) throw corrupt("missing checksum");
  std::string stored = text.substr(crc_at + 6);
  while (!stored.empty() && (stored.back() == '\n' || stored.back() == '\r')) stored.pop_back();
  std::string body = text.substr(0, crc_at);

  std::istringstream in(body);
  std::string line;
  std::getline(in, line);
  if (line.rfind("diracidx-weyl ", 0) != 0) throw corrupt("not a Weyl cache file");
  if (line != "diracidx-weyl " + std::to_string(weyl_cache_version))
    throw Error(ErrorCode::cache_version, where + ": format version '" + line.substr(14) + "', expected " +
                                              std::to_string(weyl_cache_version));
  if (stored != detail::crc_hex(body)) throw corrupt("checksum mismatch");
  std::getline(in, line);
  if (line != "type " + rs.type().to_string())
    throw Error(ErrorCode::cache_key, where + ": cached " + line + ", requested type " + rs.type().to_string());
  std::getline(in, line);
  if (line.rfind("count ", 0) != 0) throw corrupt("missing count");
  std::size_t count = std::stoul(line.substr(6));

  RootSubsystem full = RootSubsystem::full(rs);
  std::vector<WeylElement> out;
  out.reserve(count);
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos || line.substr(0, colon) != std::to_string(out.size())) throw corrupt("bad element line");
    std::vector<int> word;
    std::istringstream ws(line.substr(colon + 1));
    std::string tok;
    while (std::getline(ws, tok, ',')) {
      int j = std::stoi(tok);
      if (j < 0 || static_cast<std::size_t>(j) >= rs.rank()) throw corrupt("reflection index out of range");
      word.push_back(j);
    }
    out.push_back(full.element_from_word(word));
  }
  if (out.size() != count) throw corrupt("element count mismatch");
  return out;
}

// Reads the cache if present; a missing file falls back to a fresh enumeration.
inline WeylLoad load_weyl(const RootSystem& rs, const std::filesystem::path& path,
                          std::uint64_t cap = default_weyl_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {weyl_group(rs, cap), false};
  std::stringstream ss;
  ss << in.rdbuf();
  return {parse_weyl_cache(rs, ss.str(), path.string()), true};
}

}  // namespace dirac
