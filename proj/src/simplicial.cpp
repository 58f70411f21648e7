#include "cofull/simplicial.hpp"

#include <algorithm>

namespace cofull {

SimplicialComplex::SimplicialComplex(int nvertices, std::vector<std::vector<int>> facets)
    : n_(nvertices) {
  if (n_ < 0 || n_ > 24) fail_pre("E_BAD_COMPLEX", "vertex count out of range");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= n_) fail_pre("E_BAD_COMPLEX", "facet vertex out of range");
  }
  // drop faces contained in other facets
  for (auto& f : facets) {
    bool maximal = true;
    for (const auto& g : facets) {
      if (&f == &g || g.size() < f.size()) continue;
      if (g.size() == f.size() && g == f) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

bool SimplicialComplex::is_face(const std::vector<int>& f) const {
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  for (const auto& g : facets_)
    if (std::includes(g.begin(), g.end(), s.begin(), s.end())) return true;
  return s.empty() && !facets_.empty();
}

std::vector<std::vector<int>> SimplicialComplex::minimal_nonfaces() const {
  // Enumerate vertex subsets in size order; a non-face all of whose proper
  // subsets are faces is minimal.  n <= 24 keeps this cheap.
  std::vector<std::uint32_t> nonface_masks;
  std::vector<std::vector<int>> out;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t m = 1; m < (1u << n_); ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  for (std::uint32_t m : subsets) {
    bool has_nonface_subset = false;
    for (std::uint32_t nm : nonface_masks)
      if ((nm & m) == nm && nm != m) {
        has_nonface_subset = true;
        break;
      }
    if (has_nonface_subset) continue;
    std::vector<int> f;
    for (int v = 0; v < n_; ++v)
      if (m & (1u << v)) f.push_back(v);
    if (!is_face(f)) {
      nonface_masks.push_back(m);
      out.push_back(f);
    }
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

IdealPtr stanley_reisner(const SimplicialComplex& K, const RingPtr& ring) {
  if (ring->nvars() != static_cast<std::size_t>(K.nvertices()))
    fail_pre("E_RING_MISMATCH", "ring needs one variable per vertex");
  std::vector<Polynomial> gens;
  for (const auto& nf : K.minimal_nonfaces()) {
    std::vector<Exponent> e(ring->nvars(), 0);
    for (int v : nf) e[v] = 1;
    gens.push_back(poly_monomial(ring, Monomial(e), ring->field().one()));
  }
  return make_ideal(ring, std::move(gens));
}

SimplicialComplex cycle_complex(int n) {
  if (n < 3) fail_pre("E_BAD_COMPLEX", "cycle needs at least 3 vertices");
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i) facets.push_back({i, (i + 1) % n});
  return SimplicialComplex(n, std::move(facets));
}

}  // namespace cofull
