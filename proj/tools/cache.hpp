#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "matchrb/antiramsey.hpp"

namespace matchrb::cli {

struct CacheEntry {
  RbRecord record;
  std::string timestamp;  ///< UTC, ISO 8601
  std::string tool_version;
};

/// Results cache keyed by (n,k); one JSON file, replaced atomically on save.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  /// Missing file means an empty cache. Throws ParseError on malformed content.
  void load();
  void save() const;

  std::optional<CacheEntry> find(int n, int k) const;
  void put(const RbRecord& record);
  const std::string& path() const { return path_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::pair<int, int>, CacheEntry> entries_;  // (k, n) order
};

/// Flag path, else $RAINBOW_CACHE, else ./rb_cache.json.
std::string resolve_cache_path(const std::string& flag);

}  // namespace matchrb::cli
