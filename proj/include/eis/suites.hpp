#pragma once

// Orchestration of the verification suites: dependency order, cache reuse,
// randomized property checks, and report assembly.

#include "eis/cache.hpp"
#include "eis/coxbraid.hpp"
#include "eis/report.hpp"

#include <filesystem>

namespace eis {

struct Config {
  std::vector<std::string> suites = {"all"};
  std::filesystem::path cache_dir = ".eisverify-cache";
  int threads = 1;
  int batch_depth = 3;  // 0..3
  Rat sigma_t_start = Rat(1, 2);
  std::string report_format = "text";  // "text" or "json"
  bool fail_fast = false;
  std::uint64_t seed = 12345;

  void validate() const;
};

// Suite names in dependency order.
const std::vector<std::string>& known_suites();

RunReport run_suites(const Config& cfg);

// Batch lists with cache reuse (regenerates on any header/checksum mismatch).
std::vector<RootList> batches_cached(const GeoContext& g, const std::string& center_id,
                                     int max_batch, bool generic,
                                     const std::filesystem::path& cache_dir);

// Canonical text dump of the named vectors and Gram matrices.
std::string dump_named_objects();

}  // namespace eis
