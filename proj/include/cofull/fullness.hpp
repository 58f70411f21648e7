#ifndef COFULL_FULLNESS_HPP
#define COFULL_FULLNESS_HPP

#include "cofull/homology.hpp"
#include "cofull/ideal.hpp"

namespace cofull {

// Verdict at one local cohomology index i: the restriction map
// Ext^{n-i}(S/I, S) -> Ext^{n-i}(S/I^[p], S) must be injective.
struct IndexVerdict {
  int i = 0;
  bool full = true;
  std::map<std::int64_t, std::int64_t> kernel_dims;  // degree -> dim when failing
  std::string witness;                               // a nonzero kernel class
};

struct FullnessReport {
  bool full = true;
  int e_max = 1;
  std::vector<IndexVerdict> per_index;  // i = 0..dim(S/I)
  HomologicalProfile profile;
  // Conditions every cohomologically full quotient satisfies; kept on
  // failing inputs as diagnostics.
  bool depth_positive = true;     // depth > 0 whenever dim > 0
  bool pd_at_most_mu = true;      // pd(S/I) <= mu(I)
  bool no_embedded_primes = true; // monomial inputs only, else vacuous
  int cd_exact = -1;              // cd(I,S) = pd(S/I) when full, else unknown
};

// Decides cohomological fullness of S/I over F_p.  The e = 1 verdict is
// definitive; e_max > 1 recomputes against deeper Frobenius powers and
// any disagreement aborts as an internal error.
FullnessReport is_cohomologically_full(const IdealPtr& I, int e_max = 1);

// Fedder's criterion: S/I is F-pure iff (I^[p] : I) is not contained in
// (x_1^p, ..., x_n^p).
struct FedderResult {
  bool f_pure = false;
  std::string witness;  // a colon generator escaping the bracket, if any
};
FedderResult fedder_fpure(const IdealPtr& I);

struct FThresholdRow {
  int e = 1;
  std::int64_t q = 0;    // p^e
  std::int64_t nu = 0;   // max t with a^t not inside J^[q]
  std::string quotient;  // "nu/q", recorded verbatim
};
struct FThresholdResult {
  std::vector<FThresholdRow> table;  // e = 1 .. requested e
  std::int64_t mu_a = 0;
  bool same_ideal = false;     // a == J, activating the pigeonhole bound
  bool monotone = true;        // nu(p^{e+1}) >= p nu(p^e), certified
  bool pigeonhole_ok = true;   // nu <= mu(a)(q-1) when a == J, certified
};
FThresholdResult f_threshold_nu(const IdealPtr& a, const IdealPtr& J, int e);

// a-invariant and regularity bounds satisfied by full quotients:
// max a_i <= mu*delta - n and reg <= mu*delta - codim.  Requires a
// certified full input; a violation aborts as an internal error.
struct RegularityCheck {
  std::int64_t top_a = 0;
  std::int64_t reg = 0;
  std::int64_t mu = 0;
  std::int64_t delta = 0;
  std::int64_t codim = 0;
  std::int64_t a_bound = 0;    // mu*delta - n
  std::int64_t reg_bound = 0;  // mu*delta - codim
  std::int64_t a_slack = 0;
  std::int64_t reg_slack = 0;
};
RegularityCheck verify_regularity_bound(const IdealPtr& I);

// lambda_{0,j} = dim_k Ext^{n-j}(S/I, S(-n))_0 for j < dim, valid for
// certified full quotients with finite length cohomology below the top.
std::map<int, std::int64_t> lyubeznik_lambda0(const IdealPtr& I);

// Positive-degree part of the m-torsion of Ext^i(S/I, S(-n)); it vanishes
// for every full quotient.  When Ext^i itself has finite length this is
// equivalent to H^{n-i}_m(S/I) vanishing in negative degrees.
struct KodairaIndex {
  int i = 0;
  bool torsion_positive_vanishes = true;
  std::vector<std::int64_t> positive_degrees;  // failing degrees, if any
  bool finite_length = false;
  bool h_negative_vanishes = false;  // meaningful when finite_length
};
struct KodairaReport {
  std::vector<KodairaIndex> per_index;  // i = 0..pd
  bool all_pass = true;
};
KodairaReport kodaira_check(const IdealPtr& I);

// All H^i_m(S/I) with i < dim are k-vector spaces, tested through the
// annihilator of the corresponding Ext modules.
bool quasi_buchsbaum(const IdealPtr& I);

// H^i_m(S/I) generated in degree 0: the socle of Ext^{n-i}(S/I, S(-n))
// sits in degree 0.  Requires finite length Ext at this index.
bool degree_zero_generates(const IdealPtr& I, int i);

// x is a surjective element up to n_max: the maps H^i(S/(I+(x^n))) ->
// H^i(S/(I+(x))) are onto for 2 <= n <= n_max, tested through kernels of
// the dual Ext comparison.  Requires (I : x) = I.
struct SurjectiveElementReport {
  bool surjective = true;
  int n_max = 1;
  int failing_n = -1;
  int failing_i = -1;
  std::string witness;
};
SurjectiveElementReport is_surjective_element(const IdealPtr& I, const Polynomial& x,
                                              int n_max);

// Diagnostics for I = J cap K: with l = max(pd S/J, pd S/K, pd S/I),
// l' = max(pd S/J, pd S/K), h = height(J+K),
//   (1) l  < h:                        full(I) <=> full(J) and full(K)
//   (2) l' < h and full(J+K):          same biconditional
//   (3) l' < h (char p supplies the depth-preserving cofinal system):
//                                      full(I) <=> full(J), full(K), full(J+K)
// Applicable clauses are asserted against the computed verdicts.
struct GluingReport {
  int l = 0;
  int l_prime = 0;
  int h = 0;
  bool full_J = false;
  bool full_K = false;
  bool full_intersection = false;
  bool full_sum = false;
  bool clause1 = false;
  bool clause2 = false;
  bool clause3 = false;
  bool degenerate = false;  // J == K
  bool consistent = true;
};
GluingReport gluing_report(const IdealPtr& J, const IdealPtr& K);

}  // namespace cofull

#endif
