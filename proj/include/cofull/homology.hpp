#ifndef COFULL_HOMOLOGY_HPP
#define COFULL_HOMOLOGY_HPP

#include "cofull/presentation.hpp"
#include "cofull/resolution.hpp"

namespace cofull {

// Ext^j_S(S/I, S) as a graded presentation: cohomology of the dualized
// minimal free resolution, ker(d_{j+1}^T) / im(d_j^T).
GradedModulePresentation ext_presentation(const IdealPtr& I, int j);
GradedModulePresentation ext_from_resolution(const FreeResolution& F, int j);

// Chain map over the identity of S lifting S/Ismall ->> S/Ibig; level i
// holds the images of the F(S/Ismall)_i generators inside F(S/Ibig)_i.
// Requires Ismall contained in Ibig.
std::vector<std::vector<FreeElem>> lift_comparison(const FreeResolution& small_res,
                                                   const FreeResolution& big_res, int up_to);

// Kernel of Ext^j(S/Ibig, S) -> Ext^j(S/Ismall, S), the map induced by
// the surjection S/Ismall ->> S/Ibig.
struct ComparisonKernel {
  GradedModulePresentation ext_big;
  std::vector<FreeElem> kernel_gens;  // coordinates in ext_big generators
  bool injective = true;
  std::map<std::int64_t, std::int64_t> kernel_dims;  // degree -> dim over gen window
  std::string witness;                               // a nonzero kernel class, if any
};
ComparisonKernel ext_comparison_kernel(const IdealPtr& Ismall, const IdealPtr& Ibig, int j);

// a_i(S/I) for depth <= i <= dim (absent entries are -infinity), and
// regularity max(a_i + i).
struct AInvariants {
  std::map<int, std::int64_t> a;
  std::int64_t reg = 0;
};
AInvariants a_invariants(const IdealPtr& I);

// f_m(S/I): least t with H^t_m(S/I) not finitely generated, equivalently
// dim Ext^{n-t}(S/I, S) > 0.  Requires dim S/I > 0.
int finiteness_dimension(const IdealPtr& I);

struct HomologicalProfile {
  int n = 0;
  int depth = 0;
  int pd = 0;
  int dim = 0;
  std::map<int, std::map<std::int64_t, int>> betti;
  AInvariants ainv;
  int cd_low = 0;   // height(I)
  int cd_high = 0;  // pd(S/I)
  int f_m = -1;     // -1 encodes +infinity (zero-dimensional quotient)
};
HomologicalProfile homological_profile(const IdealPtr& I);

}  // namespace cofull

#endif
