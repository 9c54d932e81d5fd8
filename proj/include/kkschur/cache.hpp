#pragma once

// On-disk memo of expansions.
//
//   kkschur-cache 1
//   k 4
//   entry 3,3
//   h3^2
//   -1 * h2 h4
//   ...
//   end
//
// Blocks are independent; a malformed or non-canonical block is skipped with
// a warning and the entry is recomputed on demand.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "kkschur/engine.hpp"

namespace kks {

inline constexpr int kCacheFormatVersion = 1;

struct CacheLoadResult {
  std::size_t loaded = 0;
  std::vector<std::string> warnings;
};

/// Seeds table from a cache stream.  A bad header or a level other than the
/// table's is an InputError.
CacheLoadResult load_cache(std::istream& in, ExpansionTable& table);
/// As above; a missing file loads nothing.
CacheLoadResult load_cache_file(const std::filesystem::path& path, ExpansionTable& table);

void save_cache(std::ostream& out, const ExpansionTable& table);
/// Writes to a sibling temporary and renames it over path.
void save_cache_file(const std::filesystem::path& path, const ExpansionTable& table);

}  // namespace kks
