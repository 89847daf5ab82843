#include "eis/cache.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eis {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string root_line(const RootVec& r) {
  std::ostringstream os;
  for (int i = 0; i < 28; ++i) {
    if (i) os << ' ';
    os << r.mn[i];
  }
  return os.str();
}

}  // namespace

std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                      const std::string& center_id, int batch) {
  return dir / ("roots-" + center_id + "-batch" + std::to_string(batch) + ".txt");
}

void store_root_cache(const std::filesystem::path& file, const std::string& center_id, int batch,
                      const std::vector<RootVec>& classes) {
  std::filesystem::create_directories(file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  std::uint64_t sum = 1469598103934665603ULL;
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cache: cannot open " + tmp.string());
    for (const auto& r : classes) sum = fnv1a(sum, root_line(r));
    char head[160];
    std::snprintf(head, sizeof head, "eisverify-roots %d %s %d %zu %016" PRIx64,
                  kCacheFormatVersion, center_id.c_str(), batch, classes.size(), sum);
    out << head << '\n';
    for (const auto& r : classes) out << root_line(r) << '\n';
    if (!out) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

std::optional<std::vector<RootVec>> load_root_cache(const std::filesystem::path& file,
                                                    const std::string& center_id, int batch) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string magic, id;
  int version = 0, b = 0;
  std::size_t count = 0;
  std::string checksum;
  {
    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::istringstream hs(header);
    if (!(hs >> magic >> version >> id >> b >> count >> checksum)) return std::nullopt;
  }
  if (magic != "eisverify-roots" || version != kCacheFormatVersion || id != center_id ||
      b != batch)
    return std::nullopt;
  std::vector<RootVec> classes;
  classes.reserve(count);
  std::uint64_t sum = 1469598103934665603ULL;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    RootVec r;
    for (int i = 0; i < 28; ++i)
      if (!(ls >> r.mn[i])) return std::nullopt;
    std::int64_t extra;
    if (ls >> extra) return std::nullopt;
    sum = fnv1a(sum, root_line(r));
    classes.push_back(r);
  }
  if (classes.size() != count) return std::nullopt;
  char expect[32];
  std::snprintf(expect, sizeof expect, "%016" PRIx64, sum);
  if (checksum != expect) return std::nullopt;
  return classes;
}

std::vector<CacheStatus> cache_status(const std::filesystem::path& dir) {
  std::vector<CacheStatus> out;
  if (!std::filesystem::exists(dir)) return out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name.rfind("roots-", 0) != 0) continue;
    CacheStatus st;
    st.file = name;
    st.present = true;
    // re-parse id and batch from the name: roots-<id>-batch<k>.txt
    auto mid = name.substr(6);
    auto pos = mid.rfind("-batch");
    if (pos != std::string::npos) {
      std::string id = mid.substr(0, pos);
      int batch = std::atoi(mid.substr(pos + 6).c_str());
      auto loaded = load_root_cache(entry.path(), id, batch);
      st.valid = loaded.has_value();
      if (loaded) st.count = loaded->size();
    }
    out.push_back(st);
  }
  std::sort(out.begin(), out.end(), [](const CacheStatus& a, const CacheStatus& b) {
    return a.file < b.file;
  });
  return out;
}

void cache_clear(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir)) return;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.rfind("roots-", 0) == 0) std::filesystem::remove(entry.path());
  }
}

}  // namespace eis
