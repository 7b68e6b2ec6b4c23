#ifndef REPDIM_CACHE_HPP
#define REPDIM_CACHE_HPP

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "repdim/character_table.hpp"
#include "repdim/group.hpp"

namespace repdim {

inline constexpr const char* kToolVersion = "repdim-1.0.0";

enum class CacheMode { Off, ReadWrite, ReadOnly };

CacheMode parse_cache_mode(const std::string& text);

std::string sha256_hex(std::string_view data);

/// $REPDIM_CACHE, else $XDG_CACHE_HOME/repdim, else ~/.cache/repdim.
std::filesystem::path default_cache_dir();

enum class CacheStatus { Disabled, Hit, Miss, Corrupt };

/// Content-addressed store of exported tables. Each entry file
/// `<sha256(version + spec)>.json` holds
/// {"key", "spec", "version", "checksum", "payload"} where payload is the
/// exported table text and checksum its SHA-256.
class TableCache {
 public:
  TableCache(std::filesystem::path dir, CacheMode mode);

  const std::filesystem::path& dir() const { return dir_; }
  CacheMode mode() const { return mode_; }

  std::string key(const std::string& spec) const;
  std::filesystem::path entry_path(const std::string& spec) const;

  /// Payload for `spec`, with status Hit, or nullopt with Miss / Corrupt.
  std::optional<std::string> load(const std::string& spec, CacheStatus* status = nullptr) const;
  /// Atomic write (temporary file then rename). No-op unless ReadWrite.
  void store(const std::string& spec, const std::string& payload) const;

 private:
  std::filesystem::path dir_;
  CacheMode mode_;
};

struct CachedTable {
  std::shared_ptr<const CharacterTable> table;
  std::string payload;  // exported JSON
  CacheStatus status = CacheStatus::Disabled;
};

/// Table for `group` through the cache: a valid entry is imported (and so
/// re-verified); a missing or corrupt one is recomputed and, in ReadWrite
/// mode, rewritten.
CachedTable cached_table(const Group& group, const TableCache& cache);

}  // namespace repdim

#endif  // REPDIM_CACHE_HPP
