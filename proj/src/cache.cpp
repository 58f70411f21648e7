#include "cofull/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace cofull {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

GbCache& gb_cache() {
  static GbCache instance;
  return instance;
}

namespace {
thread_local std::string tls_cache_dir;
}  // namespace

void GbCache::set_thread_dir(std::string dir) { tls_cache_dir = std::move(dir); }
void GbCache::clear_thread_dir() { tls_cache_dir.clear(); }
const std::string& GbCache::effective_dir() const {
  return tls_cache_dir.empty() ? dir_ : tls_cache_dir;
}

void merge_cache_dir(const std::string& from, const std::string& to) {
  std::error_code ec;
  if (!std::filesystem::is_directory(from, ec)) return;
  std::filesystem::create_directories(to, ec);
  for (const auto& entry : std::filesystem::directory_iterator(from, ec)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".gb") continue;
    std::filesystem::rename(entry.path(),
                            std::filesystem::path(to) / entry.path().filename(), ec);
  }
  std::filesystem::remove_all(from, ec);
}

std::string GbCache::key_for(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::ostringstream os;
  os << "char=" << ring->field().characteristic() << ";order=" << ring->order().name() << ";perm=";
  for (int p : ring->order().perm()) os << p << ",";
  os << ";vars=";
  for (const auto& v : ring->vars()) os << v << ",";
  os << ";gens=";
  std::vector<std::string> gs;
  gs.reserve(gens.size());
  for (const auto& g : gens) gs.push_back(g.to_string());
  std::sort(gs.begin(), gs.end());
  for (const auto& g : gs) os << g << ";";
  return os.str();
}

namespace {
std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}
}  // namespace

std::optional<std::vector<Polynomial>> GbCache::load(const RingPtr& ring,
                                                     const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::filesystem::path file =
      std::filesystem::path(effective_dir()) / (hex64(fnv1a64(key)) + ".gb");
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string header, checksum_line;
  if (!std::getline(in, header) || header != "cofull-gb-cache v1") return std::nullopt;
  if (!std::getline(in, checksum_line)) return std::nullopt;
  std::ostringstream body;
  body << in.rdbuf();
  std::string payload = body.str();
  // Corruption check, then key check (hash collisions load nothing).
  if (checksum_line != hex64(fnv1a64(payload))) return std::nullopt;
  std::istringstream ps(payload);
  std::string stored_key;
  if (!std::getline(ps, stored_key) || stored_key != key) return std::nullopt;
  std::vector<Polynomial> gb;
  std::string line;
  try {
    while (std::getline(ps, line)) {
      if (line.empty()) continue;
      gb.push_back(parse_polynomial(ring, line));
    }
  } catch (const Error&) {
    return std::nullopt;
  }
  return gb;
}

void GbCache::store(const std::string& key, const std::vector<Polynomial>& gb) const {
  if (!enabled()) return;
  std::error_code ec;
  std::filesystem::create_directories(effective_dir(), ec);
  if (ec) return;  // cache is best effort
  std::ostringstream payload;
  payload << key << "\n";
  for (const auto& g : gb) payload << g.to_string() << "\n";
  std::string body = payload.str();
  std::filesystem::path file =
      std::filesystem::path(effective_dir()) / (hex64(fnv1a64(key)) + ".gb");
  std::filesystem::path tmp = file;
  tmp += ".tmp" + std::to_string(static_cast<unsigned long long>(
                      reinterpret_cast<std::uintptr_t>(&body)));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << "cofull-gb-cache v1\n" << hex64(fnv1a64(body)) << "\n" << body;
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace cofull
