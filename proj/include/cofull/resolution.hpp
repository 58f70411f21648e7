#ifndef COFULL_RESOLUTION_HPP
#define COFULL_RESOLUTION_HPP

#include <map>

#include "cofull/ideal.hpp"

namespace cofull {

// Graded free resolution 0 <- S/I <- F_0 <- F_1 <- ... <- F_pd.
// twists[i] lists the generator degrees of F_i (twists[0] = {0});
// diffs[i] holds the columns of d_{i+1}: F_{i+1} -> F_i as elements of F_i.
// When minimal, every matrix entry lies in the irrelevant ideal.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<std::int64_t>> twists;
  std::vector<std::vector<FreeElem>> diffs;
  bool minimal = false;

  int pd() const { return static_cast<int>(twists.size()) - 1; }
  FreeModulePtr module_at(int i) const;
  // Matrix of d_i: F_i -> F_{i-1}, rows over F_{i-1} generators, columns
  // over F_i generators.  1 <= i <= pd.
  std::vector<std::vector<Polynomial>> matrix_of(int i) const;
};

// Minimal graded free resolution of S/I for homogeneous I; for
// inhomogeneous input a resolution is still returned with minimal false.
FreeResolution free_resolution(const IdealPtr& I);

std::pair<int, int> depth_pd(const IdealPtr& I);  // (depth, pd), homogeneous I

// betti[i][d] = number of generators of F_i in degree d.
std::map<int, std::map<std::int64_t, int>> betti_table(const FreeResolution& F);

// Alternating sum sum_i (-1)^i sum_d t^(twists[i][d]); equals the Hilbert
// series numerator of S/I over (1-t)^n for any graded resolution of S/I.
std::map<std::int64_t, std::int64_t> euler_numerator(const FreeResolution& F);

// d_i compose to zero; used by tests and internal checks.
bool is_complex(const FreeResolution& F);

}  // namespace cofull

#endif
