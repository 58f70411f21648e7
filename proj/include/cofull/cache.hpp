#ifndef COFULL_CACHE_HPP
#define COFULL_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cofull/polynomial.hpp"

namespace cofull {

// On-disk cache of reduced Groebner bases, keyed by characteristic, term
// order, variable names and the canonical generator text.  Files are
// content addressed (hash of the key), written to a temp name and renamed,
// and carry a payload checksum; corrupt or mismatching entries are ignored.
class GbCache {
public:
  // Empty directory disables the cache.  The directory is created on the
  // first store.
  void set_dir(std::string dir) { dir_ = std::move(dir); }
  const std::string& dir() const { return dir_; }
  bool enabled() const { return !effective_dir().empty(); }

  // Per-thread directory override; sweep workers write into isolated
  // subdirectories which are merged into the main directory afterwards.
  static void set_thread_dir(std::string dir);
  static void clear_thread_dir();
  const std::string& effective_dir() const;

  static std::string key_for(const RingPtr& ring, const std::vector<Polynomial>& gens);

  std::optional<std::vector<Polynomial>> load(const RingPtr& ring, const std::string& key) const;
  void store(const std::string& key, const std::vector<Polynomial>& gb) const;

private:
  std::string dir_;
};

// Process-global cache instance; configured from the CLI / environment
// (COFULL_CACHE_DIR) and read by the Groebner engine.
GbCache& gb_cache();

// Moves every cache entry of `from` into `to`, then removes `from`.
// Entries are content addressed, so collisions are identical files.
void merge_cache_dir(const std::string& from, const std::string& to);

std::uint64_t fnv1a64(const std::string& s);

}  // namespace cofull

#endif
