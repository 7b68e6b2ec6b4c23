#include "repdim/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include <json.hpp>

#include "repdim/dixon.hpp"
#include "repdim/error.hpp"
#include "repdim/table_json.hpp"

namespace repdim {

namespace fs = std::filesystem;

CacheMode parse_cache_mode(const std::string& text) {
  if (text == "off") return CacheMode::Off;
  if (text == "rw") return CacheMode::ReadWrite;
  if (text == "ro") return CacheMode::ReadOnly;
  throw ParseError("cache mode must be off, rw or ro: " + text);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("REPDIM_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "repdim";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "repdim";
  return fs::temp_directory_path() / "repdim-cache";
}

TableCache::TableCache(fs::path dir, CacheMode mode) : dir_(std::move(dir)), mode_(mode) {}

std::string TableCache::key(const std::string& spec) const {
  return sha256_hex(std::string(kToolVersion) + '\n' + spec);
}

fs::path TableCache::entry_path(const std::string& spec) const { return dir_ / (key(spec) + ".json"); }

std::optional<std::string> TableCache::load(const std::string& spec, CacheStatus* status) const {
  auto set = [&](CacheStatus s) {
    if (status) *status = s;
  };
  if (mode_ == CacheMode::Off) {
    set(CacheStatus::Disabled);
    return std::nullopt;
  }
  std::ifstream in(entry_path(spec), std::ios::binary);
  if (!in) {
    set(CacheStatus::Miss);
    return std::nullopt;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto entry = nlohmann::json::parse(buf.str());
    const auto payload = entry.at("payload").get<std::string>();
    if (entry.at("key").get<std::string>() != key(spec) || entry.at("spec").get<std::string>() != spec ||
        entry.at("version").get<std::string>() != kToolVersion ||
        entry.at("checksum").get<std::string>() != sha256_hex(payload)) {
      set(CacheStatus::Corrupt);
      return std::nullopt;
    }
    set(CacheStatus::Hit);
    return payload;
  } catch (const nlohmann::json::exception&) {
    set(CacheStatus::Corrupt);
    return std::nullopt;
  }
}

void TableCache::store(const std::string& spec, const std::string& payload) const {
  if (mode_ != CacheMode::ReadWrite) return;
  fs::create_directories(dir_);
  OrderedJson entry;
  entry["key"] = key(spec);
  entry["spec"] = spec;
  entry["version"] = kToolVersion;
  entry["checksum"] = sha256_hex(payload);
  entry["payload"] = payload;
  const fs::path target = entry_path(spec);
  std::random_device rd;
  const fs::path tmp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << entry.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, target);
}

CachedTable cached_table(const Group& group, const TableCache& cache) {
  CachedTable result;
  if (auto payload = cache.load(group.spec(), &result.status)) {
    try {
      auto table = import_table(*payload);
      if (table.spec == group.spec()) {
        result.table = std::make_shared<const CharacterTable>(std::move(table));
        result.payload = std::move(*payload);
        return result;
      }
    } catch (const std::exception&) {
    }
    result.status = CacheStatus::Corrupt;
  }
  result.table = character_table(group);
  result.payload = export_table(*result.table);
  cache.store(group.spec(), result.payload);
  return result;
}

}  // namespace repdim
