#include "subdepth/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "subdepth/error.hpp"
#include "subdepth/serialize.hpp"

namespace subdepth {

namespace fs = std::filesystem;

namespace {

bool plausible(const CharacterTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.irreducibles[i].front() != Cyclotomic(static_cast<long>(table.degrees[i]))) return false;
  }
  return check_orthogonality(table).ok();
}

}  // namespace

fs::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "subdepth";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "subdepth";
  return fs::temp_directory_path() / "subdepth-cache";
}

TableCache::TableCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

std::optional<fs::path> TableCache::path_for(const PermutationGroup& g) const {
  if (!dir_) return std::nullopt;
  return *dir_ / ("chartab-" + fingerprint(g) + ".json");
}

std::optional<CharacterTable> TableCache::load(const PermutationGroup& g) {
  const auto path = path_for(g);
  if (!path) return std::nullopt;
  std::error_code ec;
  if (!fs::exists(*path, ec)) return std::nullopt;
  try {
    std::ifstream in(*path);
    Json j = Json::parse(in);
    CharacterTable table = table_from_json(j, g);
    if (plausible(table)) return table;
  } catch (const std::exception&) {
  }
  ++stats_.discarded;
  fs::remove(*path, ec);
  return std::nullopt;
}

void TableCache::store(const CharacterTable& table) const {
  const auto path = path_for(table.group);
  if (!path) return;
  std::error_code ec;
  fs::create_directories(*dir_, ec);
  if (ec) return;  // an unwritable cache only costs recomputation
  std::ostringstream name;
  name << path->filename().string() << ".tmp." << ::getpid();
  const fs::path tmp = *dir_ / name.str();
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << to_json(table).dump(1) << "\n";
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, *path, ec);
  if (ec) fs::remove(tmp, ec);
}

CharacterTable TableCache::get(const PermutationGroup& g) {
  std::lock_guard lock(mutex_);
  const std::string key = fingerprint(g);
  if (auto it = memory_.find(key); it != memory_.end() && it->second.group == g) {
    ++stats_.memory_hits;
    CharacterTable table = it->second;
    table.group = g;
    return table;
  }
  std::optional<CharacterTable> table = load(g);
  if (table) {
    ++stats_.disk_hits;
  } else {
    table = character_table(g);
    table->prime = 0;
    ++stats_.computed;
    store(*table);
  }
  memory_.insert_or_assign(key, *table);
  return *table;
}

TableSource TableCache::source() {
  return [this](const PermutationGroup& g) { return get(g); };
}

}  // namespace subdepth
