#include "kkschur/cache.hpp"

#include <fstream>
#include <sstream>

#include "kkschur/error.hpp"

namespace kks {

namespace {

constexpr std::string_view kMagic = "kkschur-cache";

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

}  // namespace

CacheLoadResult load_cache(std::istream& in, ExpansionTable& table) {
  std::string line;
  int version = 0, k = 0;
  if (!std::getline(in, line) || !starts_with(line, kMagic) ||
      !(std::istringstream(line.substr(kMagic.size())) >> version))
    throw InputError("not a kkschur cache file");
  if (version != kCacheFormatVersion)
    throw InputError("unsupported cache format version " + std::to_string(version));
  if (!std::getline(in, line) || !starts_with(line, "k ") || !(std::istringstream(line.substr(2)) >> k))
    throw InputError("cache header lacks the level");
  if (k != table.context().k)
    throw InputError("cache was built for k = " + std::to_string(k) + ", not " +
                     std::to_string(table.context().k));

  CacheLoadResult result;
  int line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!starts_with(line, "entry ")) {
      result.warnings.push_back("line " + std::to_string(line_no) + ": stray text skipped");
      continue;
    }
    const int start = line_no;
    const std::string key = line.substr(6);
    std::string body;
    bool closed = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (line == "end") {
        closed = true;
        break;
      }
      body += line + '\n';
    }
    const std::string where = "entry at line " + std::to_string(start);
    if (!closed) {
      result.warnings.push_back(where + ": unterminated, skipped");
      break;
    }
    try {
      const Partition lambda = parse_partition(key);
      HPolynomial value = parse_hpolynomial(body);
      if (to_text(value) + '\n' != body) throw InputError("not in canonical form");
      table.insert_checked(lambda, std::move(value));
      ++result.loaded;
    } catch (const Error& e) {
      result.warnings.push_back(where + ": " + e.what() + ", skipped");
    }
  }
  return result;
}

CacheLoadResult load_cache_file(const std::filesystem::path& path, ExpansionTable& table) {
  std::ifstream in(path);
  if (!in) return {};
  return load_cache(in, table);
}

void save_cache(std::ostream& out, const ExpansionTable& table) {
  out << kMagic << ' ' << kCacheFormatVersion << '\n' << "k " << table.context().k << '\n';
  for (const auto& [lambda, value] : table.snapshot())
    out << "entry " << to_string(lambda) << '\n' << to_text(value) << '\n' << "end\n";
}

void save_cache_file(const std::filesystem::path& path, const ExpansionTable& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write cache " + tmp.string());
    save_cache(out, table);
    if (!out.flush()) throw InputError("cannot write cache " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("cannot replace cache " + path.string() + ": " + ec.message());
}


}  // namespace kks
