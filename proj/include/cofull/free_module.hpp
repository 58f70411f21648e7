#ifndef COFULL_FREE_MODULE_HPP
#define COFULL_FREE_MODULE_HPP

#include <memory>
#include <vector>

#include "cofull/polynomial.hpp"

namespace cofull {

// Term of a free module element: coeff * mono * e_comp.
struct VTerm {
  int comp = 0;
  Monomial mono;
  FieldElement coeff;
  bool operator==(const VTerm&) const = default;
};

enum class ModOrderKind {
  POT,      // position over term: e_0 > e_1 > ..., ties by ring order
  TOP,      // term over position: ring order, ties by position
  Schreyer  // induced by lead terms of a basis in an ambient module
};

class FreeModule;
using FreeModulePtr = std::shared_ptr<const FreeModule>;

// Graded free module S(-d_0) + ... + S(-d_{r-1}) with a module term order.
// gen_degs()[c] is the degree of basis vector e_c.
class FreeModule {
public:
  FreeModule(RingPtr ring, std::vector<std::int64_t> gen_degs,
             ModOrderKind kind = ModOrderKind::POT);

  // Schreyer order: term m e_c compares by (m * lead_monos[c], lead_comps[c])
  // inside the ambient module, ties by smaller c first.
  static FreeModulePtr schreyer(FreeModulePtr ambient,
                                std::vector<std::int64_t> gen_degs,
                                std::vector<Monomial> lead_monos,
                                std::vector<int> lead_comps);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return gen_degs_.size(); }
  const std::vector<std::int64_t>& gen_degs() const { return gen_degs_; }
  ModOrderKind order_kind() const { return kind_; }

  Cmp compare(int comp_a, const Monomial& ma, int comp_b, const Monomial& mb) const;

private:
  RingPtr ring_;
  std::vector<std::int64_t> gen_degs_;
  ModOrderKind kind_;
  FreeModulePtr ambient_;            // Schreyer only
  std::vector<Monomial> lead_monos_; // Schreyer only
  std::vector<int> lead_comps_;      // Schreyer only
};

FreeModulePtr make_free_module(RingPtr ring, std::vector<std::int64_t> gen_degs,
                               ModOrderKind kind = ModOrderKind::POT);

// Element of a free module; terms strictly decreasing in the module order.
class FreeElem {
public:
  FreeElem() = default;
  explicit FreeElem(FreeModulePtr mod) : mod_(std::move(mod)) {}
  FreeElem(FreeModulePtr mod, std::vector<VTerm> terms);

  const FreeModulePtr& module() const { return mod_; }
  const std::vector<VTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  const VTerm& lead() const;

  FreeElem add(const FreeElem& o) const;
  FreeElem sub(const FreeElem& o) const;
  FreeElem neg() const;
  FreeElem scale(const FieldElement& c) const;
  FreeElem mono_mul(const Monomial& m, const FieldElement& c) const;
  FreeElem poly_mul(const Polynomial& f) const;
  FreeElem monic() const;
  // Same terms, reordered for another module of equal rank.
  FreeElem in_module(const FreeModulePtr& target) const;

  // Degree of a homogeneous element; fails on inhomogeneous input.
  std::int64_t degree() const;
  bool is_homogeneous() const;

  // Component c as a plain polynomial.
  Polynomial component(int c) const;

  bool operator==(const FreeElem& o) const { return terms_ == o.terms_; }

private:
  FreeModulePtr mod_;
  std::vector<VTerm> terms_;
};

std::string to_string(const FreeElem& e);

FreeElem unit_vector(const FreeModulePtr& mod, int comp);
FreeElem elem_from_poly(const FreeModulePtr& mod, int comp, const Polynomial& f);
// Element (f_0, ..., f_{r-1}) of mod from polynomial components.
FreeElem elem_from_components(const FreeModulePtr& mod, const std::vector<Polynomial>& comps);

}  // namespace cofull

#endif
