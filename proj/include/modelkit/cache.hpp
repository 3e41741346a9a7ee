#pragma once

#include <optional>
#include <string>

#include "modelkit/json_io.hpp"

namespace modelkit {

/* FNV-1a 64-bit hash as 16 hex digits. */
std::string content_hash(const std::string& s);

/*
 * Filesystem cache for enumeration results, active only when the
 * MODELKIT_CACHE_DIR environment variable names a directory (created on
 * first store). Entries are JSON files {"key": ..., "data": ...} named
 * <kind>-<hash of key>.json; a missing, unreadable or key-mismatched entry
 * reads as absent, so corruption only costs a recompute.
 */
class Cache {
 public:
  /* Reads MODELKIT_CACHE_DIR; disabled when unset or empty. */
  Cache();

  bool enabled() const { return !dir_.empty(); }
  std::optional<Json> load(const std::string& kind, const std::string& key) const;
  void store(const std::string& kind, const std::string& key, const Json& data) const;

 private:
  std::string path_for(const std::string& kind, const std::string& key) const;
  std::string dir_;
};

}  // namespace modelkit
