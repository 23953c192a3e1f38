#include "cache.hpp"

#include <cstdlib>
#include <ctime>
#include <filesystem>

#include <json.hpp>

#include "matchrb/io.hpp"

namespace matchrb::cli {

namespace {

using nlohmann::ordered_json;

ordered_json record_to_json(const RbRecord& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["rb"] = r.rb;
  j["f"] = r.f;
  j["branch"] = to_string(r.branch);
  j["regime"] = to_string(r.regime);
  j["lower_checked"] = r.lower_checked;
  j["oracle_checked"] = r.oracle_checked;
  j["upper_sampled"] = r.upper_sampled;
  j["certificate_path"] = r.certificate_path;
  return j;
}

RbRecord record_from_json(const ordered_json& j) {
  RbRecord r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.rb = j.at("rb").get<std::int64_t>();
  r.f = j.at("f").get<std::int64_t>();
  r.branch = parse_branch(j.at("branch").get<std::string>());
  r.regime = parse_regime(j.at("regime").get<std::string>());
  r.lower_checked = j.at("lower_checked").get<bool>();
  r.oracle_checked = j.at("oracle_checked").get<bool>();
  r.upper_sampled = j.at("upper_sampled").get<bool>();
  r.certificate_path = j.at("certificate_path").get<std::string>();
  return r;
}

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void ResultCache::load() {
  entries_.clear();
  if (!std::filesystem::exists(path_)) return;
  const std::string text = read_file(path_);
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
    for (const auto& [key, value] : doc.at("entries").items()) {
      CacheEntry e;
      e.record = record_from_json(value.at("record"));
      e.timestamp = value.at("timestamp").get<std::string>();
      e.tool_version = value.at("tool_version").get<std::string>();
      if (key != std::to_string(e.record.n) + "," + std::to_string(e.record.k))
        throw ParseError(0, "cache key " + key + " does not match its record");
      entries_[{e.record.k, e.record.n}] = std::move(e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, "malformed cache " + path_ + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, "malformed cache " + path_ + ": " + e.what());
  }
}

void ResultCache::save() const {
  ordered_json doc;
  doc["version"] = MATCHRB_VERSION;
  ordered_json entries = ordered_json::object();
  for (const auto& [key, e] : entries_) {
    ordered_json j;
    j["record"] = record_to_json(e.record);
    j["timestamp"] = e.timestamp;
    j["tool_version"] = e.tool_version;
    entries[std::to_string(e.record.n) + "," + std::to_string(e.record.k)] = j;
  }
  doc["entries"] = entries;
  write_file_atomic(path_, doc.dump(2) + "\n");
}

std::optional<CacheEntry> ResultCache::find(int n, int k) const {
  const auto it = entries_.find({k, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::put(const RbRecord& record) {
  entries_[{record.k, record.n}] = CacheEntry{record, utc_now(), MATCHRB_VERSION};
}

std::string resolve_cache_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("RAINBOW_CACHE"); env != nullptr && *env != '\0') return env;
  return "./rb_cache.json";
}

}  // namespace matchrb::cli
