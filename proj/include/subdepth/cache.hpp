#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "subdepth/chartab.hpp"
#include "subdepth/depthcore.hpp"

namespace subdepth {

/// ${XDG_CACHE_HOME:-$HOME/.cache}/subdepth
std::filesystem::path default_cache_dir();

/// Character tables keyed by group fingerprint, in memory and optionally on
/// disk as one JSON file per fingerprint. Loaded entries are re-verified;
/// anything that fails to parse or verify is deleted and recomputed.
class TableCache {
 public:
  struct Stats {
    std::size_t memory_hits = 0;
    std::size_t disk_hits = 0;
    std::size_t computed = 0;
    std::size_t discarded = 0;
  };

  /// No directory means memory only.
  explicit TableCache(std::optional<std::filesystem::path> dir = std::nullopt);

  CharacterTable get(const PermutationGroup& g);
  TableSource source();

  std::optional<std::filesystem::path> path_for(const PermutationGroup& g) const;
  const Stats& stats() const noexcept { return stats_; }

 private:
  std::optional<CharacterTable> load(const PermutationGroup& g);
  void store(const CharacterTable& table) const;

  std::optional<std::filesystem::path> dir_;
  std::map<std::string, CharacterTable> memory_;
  Stats stats_;
  std::mutex mutex_;
};

}  // namespace subdepth
