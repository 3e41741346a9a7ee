#include "modelkit/cache.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace modelkit {

std::string content_hash(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

Cache::Cache() {
  if (const char* dir = std::getenv("MODELKIT_CACHE_DIR"); dir && *dir) dir_ = dir;
}

std::string Cache::path_for(const std::string& kind, const std::string& key) const {
  return dir_ + "/" + kind + "-" + content_hash(key) + ".json";
}

std::optional<Json> Cache::load(const std::string& kind, const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(kind, key));
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  Json j = Json::parse(buf.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("data") ||
      j["key"] != key)
    return std::nullopt;
  return j["data"];
}

void Cache::store(const std::string& kind, const std::string& key, const Json& data) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  Json j;
  j["key"] = key;
  j["data"] = data;
  std::ofstream out(path_for(kind, key), std::ios::trunc);
  if (out) out << to_file_text(j);
}

}  // namespace modelkit
