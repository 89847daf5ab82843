#pragma once

// Root-list cache files: a versioned header, one vector per line as 2n
// decimal integers, a trailing checksum, and atomic replacement on write.

#include "eis/geometry.hpp"

#include <filesystem>
#include <optional>

namespace eis {

inline constexpr int kCacheFormatVersion = 1;

std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                      const std::string& center_id, int batch);

// Writes via a temp file and rename; header records id, batch, count, and an
// fnv64 checksum of the body.
void store_root_cache(const std::filesystem::path& file, const std::string& center_id, int batch,
                      const std::vector<RootVec>& classes);

// Returns the classes if the file exists, parses, and passes the header and
// checksum validation; nullopt otherwise (caller regenerates).
std::optional<std::vector<RootVec>> load_root_cache(const std::filesystem::path& file,
                                                    const std::string& center_id, int batch);

struct CacheStatus {
  std::string file;
  bool present = false;
  bool valid = false;
  std::size_t count = 0;
};
std::vector<CacheStatus> cache_status(const std::filesystem::path& dir);
void cache_clear(const std::filesystem::path& dir);

}  // namespace eis
