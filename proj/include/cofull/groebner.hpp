#ifndef COFULL_GROEBNER_HPP
#define COFULL_GROEBNER_HPP

#include <vector>

#include "cofull/free_module.hpp"

namespace cofull {

// f = sum quotients[i] * basis[i] + remainder, no term of remainder
// divisible by a basis lead term.  Divisors are tried in basis order, so
// the result is deterministic for a fixed basis list.
struct Division {
  FreeElem remainder;
  std::vector<Polynomial> quotients;
};

Division divide(const FreeElem& f, const std::vector<FreeElem>& basis);
FreeElem normal_form(const FreeElem& f, const std::vector<FreeElem>& basis);
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Reduced Groebner basis of the submodule generated by gens: monic,
// pairwise tail-reduced, sorted by decreasing lead term.  Unique for a
// fixed module order.  Buchberger with the Gebauer-Moller pair criteria,
// normal (minimal lcm degree) selection.
std::vector<FreeElem> module_gb(std::vector<FreeElem> gens);

// As module_gb, and expresses every output element over the input:
// out[i] = sum reps[i][j] * gens[j].
struct TrackedGB {
  std::vector<FreeElem> gb;
  std::vector<std::vector<Polynomial>> reps;
};
TrackedGB module_gb_tracked(std::vector<FreeElem> gens);

// Syzygies of a Groebner basis, one per surviving S-pair; the result is a
// Groebner basis with respect to the induced Schreyer order on
// syz_module (basis vector i of syz_module maps to gb[i]).
struct Syzygies {
  FreeModulePtr syz_module;
  std::vector<FreeElem> elems;
};
Syzygies syzygies_of_gb(const std::vector<FreeElem>& gb);

// Kernel of the map S^a -> M sending e_j to cols[j], computed by a POT
// block elimination; returns generators inside a rank-a POT module whose
// gen_degs are the column degrees (0 for inhomogeneous columns).
std::vector<FreeElem> kernel_of_map(const std::vector<FreeElem>& cols);

// ---- ideal-level wrappers (rank one) ----

std::vector<Polynomial> ideal_gb(const std::vector<Polynomial>& gens);
bool ideal_contains(const std::vector<Polynomial>& gb, const Polynomial& f);
// Compares two reduced GBs of the same ring.
bool gb_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b);
bool is_unit_ideal(const std::vector<Polynomial>& gb);

std::vector<Polynomial> ideal_intersect(const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b);
// Elimination route, no monomial shortcut; same ideal as ideal_intersect.
std::vector<Polynomial> ideal_intersect_elimination(const std::vector<Polynomial>& a,
                                                    const std::vector<Polynomial>& b);
std::vector<Polynomial> ideal_colon(const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b);
std::vector<Polynomial> ideal_saturate(const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b);

// Exact quotient f / g; fails when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// f in rad(I), by the extra-variable trick: 1 in I + (1 - t f).
bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens);

std::vector<FreeElem> polys_to_elems(const std::vector<Polynomial>& polys,
                                     const FreeModulePtr& mod, int comp = 0);
std::vector<Polynomial> elems_to_polys(const std::vector<FreeElem>& elems, int comp = 0);

}  // namespace cofull

#endif
