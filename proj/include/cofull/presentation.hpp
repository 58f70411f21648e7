#ifndef COFULL_PRESENTATION_HPP
#define COFULL_PRESENTATION_HPP

#include <map>

#include "cofull/groebner.hpp"

namespace cofull {

// Finitely presented graded module M = F/N: F free on generators of
// degrees gen_degs, N spanned by relations.  rel_gb is the reduced POT
// module GB of the relations, fixed at construction.
struct GradedModulePresentation {
  RingPtr ring;
  std::vector<std::int64_t> gen_degs;
  std::vector<FreeElem> relations;
  std::vector<FreeElem> rel_gb;

  FreeModulePtr free_cover() const { return make_free_module(ring, gen_degs); }
};

GradedModulePresentation make_presentation(RingPtr ring, std::vector<std::int64_t> gen_degs,
                                           std::vector<FreeElem> relations);

// (span(A) + span(B)) / span(B) inside F/span(B): generators the columns
// of A, relations the A-coordinates of the syzygies of [A | B].
GradedModulePresentation subquotient(const FreeModulePtr& F, const std::vector<FreeElem>& A,
                                     const std::vector<FreeElem>& B);

bool is_zero_module(const GradedModulePresentation& M);

// Smallest degree with a nonzero graded piece; kNoDegree when M = 0.
inline constexpr std::int64_t kNoDegree = INT64_MAX;
std::int64_t min_nonzero_degree(const GradedModulePresentation& M);

// dim_k M_d, exact, via standard monomials of the initial module.
std::int64_t graded_piece_dim(const GradedModulePresentation& M, std::int64_t d);

// Krull dimension of M; -1 for the zero module.
int module_dim(const GradedModulePresentation& M);

// m * M = 0, i.e. M is a direct sum of shifted copies of the field.
bool annihilated_by_irrelevant(const GradedModulePresentation& M);

// M(a): the same module regraded so M(a)_j = M_{a+j}.
GradedModulePresentation twist(const GradedModulePresentation& M, std::int64_t a);

// Generators of (N :_F m) in the free cover, N the relation span.
std::vector<FreeElem> colon_irrelevant_gens(const GradedModulePresentation& M);

// Socle (0 :_M m) as a subquotient presentation of the same free cover.
GradedModulePresentation socle_presentation(const GradedModulePresentation& M);
// Degrees of a k-basis of the socle, ascending with multiplicity.
std::vector<std::int64_t> socle_degrees(const GradedModulePresentation& M);

// m-power torsion submodule (N : m^infinity)/N, the largest finite
// length submodule of M.
GradedModulePresentation torsion_presentation(const GradedModulePresentation& M);

// Largest degree with a nonzero piece.  Requires dim M <= 0; kNoTopDegree
// for the zero module.
inline constexpr std::int64_t kNoTopDegree = INT64_MIN;
std::int64_t top_nonzero_degree(const GradedModulePresentation& M);

}  // namespace cofull

#endif
