#include "cofull/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cofull/cache.hpp"

namespace cofull {

namespace {

FreeElem drop_lead(const FreeElem& h) {
  std::vector<VTerm> ts(h.terms().begin() + 1, h.terms().end());
  return FreeElem(h.module(), std::move(ts));
}

}  // namespace

Division divide(const FreeElem& f, const std::vector<FreeElem>& basis) {
  const FreeModulePtr& M = f.module();
  const RingPtr& R = M->ring();
  const Field& k = R->field();
  Division out;
  out.quotients.assign(basis.size(), Polynomial(R));
  std::vector<VTerm> rem;
  FreeElem h = f;
  while (!h.is_zero()) {
    const VTerm lt = h.lead();
    int found = -1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      const VTerm& bl = basis[i].lead();
      if (bl.comp == lt.comp && bl.mono.divides(lt.mono)) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found >= 0) {
      const FreeElem& b = basis[static_cast<std::size_t>(found)];
      FieldElement c = k.div(lt.coeff, b.lead().coeff);
      Monomial m = lt.mono.div(b.lead().mono);
      h = h.sub(b.mono_mul(m, c));
      out.quotients[static_cast<std::size_t>(found)] =
          out.quotients[static_cast<std::size_t>(found)].add(poly_monomial(R, m, c));
    } else {
      rem.push_back(lt);
      h = drop_lead(h);
    }
  }
  out.remainder = FreeElem(M, std::move(rem));
  return out;
}

FreeElem normal_form(const FreeElem& f, const std::vector<FreeElem>& basis) {
  // Same loop as divide without quotient bookkeeping.
  const FreeModulePtr& M = f.module();
  const Field& k = M->ring()->field();
  std::vector<VTerm> rem;
  FreeElem h = f;
  while (!h.is_zero()) {
    const VTerm lt = h.lead();
    int found = -1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero()) continue;
      const VTerm& bl = basis[i].lead();
      if (bl.comp == lt.comp && bl.mono.divides(lt.mono)) {
        found = static_cast<int>(i);
        break;
      }
    }
    if (found >= 0) {
      const FreeElem& b = basis[static_cast<std::size_t>(found)];
      h = h.sub(b.mono_mul(lt.mono.div(b.lead().mono), k.div(lt.coeff, b.lead().coeff)));
    } else {
      rem.push_back(lt);
      h = drop_lead(h);
    }
  }
  return FreeElem(M, std::move(rem));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  auto mod = make_free_module(f.ring(), {0});
  FreeElem r = normal_form(elem_from_poly(mod, 0, f), polys_to_elems(basis, mod));
  return r.component(0);
}

// ---- Buchberger ----

namespace {

struct Pair {
  int i, j;        // basis indices, i < j
  int comp;        // shared lead component
  Monomial lcm;
  std::int64_t deg;
};

struct Engine {
  std::vector<FreeElem> basis;
  std::vector<std::vector<Polynomial>> reps;  // tracked only
  bool tracked = false;
  // The product criterion discards pairs whose S-element reduces to zero,
  // which is unsound when the goal is a generating set of syzygies.
  bool use_product_criterion = true;
  std::size_t ngens = 0;
  RingPtr ring;
  std::vector<Pair> pending;

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    Cmp c = ring->order().compare(a.lcm, b.lcm);
    if (c != Cmp::EQ) return c == Cmp::LT;
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }

  // Gebauer-Moller update: build pairs of the new element t against the
  // old basis (criteria M and F), then thin old pairs (criterion B).
  void add_pairs_for(int t) {
    const VTerm& ht = basis[static_cast<std::size_t>(t)].lead();
    std::vector<Pair> cand;
    for (int i = 0; i < t; ++i) {
      const VTerm& bi = basis[static_cast<std::size_t>(i)].lead();
      if (bi.comp != ht.comp) continue;
      Monomial l = bi.mono.lcm(ht.mono);
      cand.push_back({i, t, ht.comp, l, l.degree()});
    }
    // Criterion M: drop a candidate when another candidate's lcm properly
    // divides it, or equals it and came earlier.
    std::vector<bool> drop(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || drop[b] || drop[a]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) &&
            (!(cand[a].lcm == cand[b].lcm) || b < a))
          drop[a] = true;
      }
    }
    // Criterion F: coprime lead monomials reduce to zero.  Only valid when
    // both elements live entirely in the shared component, where the pair
    // behaves like a pair of polynomials.
    auto concentrated = [&](int idx) {
      const FreeElem& g = basis[static_cast<std::size_t>(idx)];
      for (const auto& term : g.terms())
        if (term.comp != g.lead().comp) return false;
      return true;
    };
    std::vector<Pair> fresh;
    bool t_conc = concentrated(t);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (drop[a]) continue;
      const VTerm& bi = basis[static_cast<std::size_t>(cand[a].i)].lead();
      if (use_product_criterion && t_conc && bi.mono.coprime(ht.mono) &&
          concentrated(cand[a].i))
        continue;
      fresh.push_back(cand[a]);
    }
    // Criterion B on surviving old pairs.
    std::vector<Pair> keep;
    keep.reserve(pending.size());
    for (const Pair& p : pending) {
      const VTerm& gi = basis[static_cast<std::size_t>(p.i)].lead();
      const VTerm& gj = basis[static_cast<std::size_t>(p.j)].lead();
      bool killed = false;
      if (p.comp == ht.comp && ht.mono.divides(p.lcm)) {
        Monomial l_ih = gi.mono.lcm(ht.mono);
        Monomial l_hj = ht.mono.lcm(gj.mono);
        if (!(l_ih == p.lcm) && !(l_hj == p.lcm)) killed = true;
      }
      if (!killed) keep.push_back(p);
    }
    keep.insert(keep.end(), fresh.begin(), fresh.end());
    pending = std::move(keep);
  }

  void push_element(FreeElem h, std::vector<Polynomial> rep) {
    basis.push_back(std::move(h));
    if (tracked) reps.push_back(std::move(rep));
    add_pairs_for(static_cast<int>(basis.size()) - 1);
  }

  FreeElem spair(const Pair& p, std::vector<Polynomial>* rep_out) const {
    const FreeElem& gi = basis[static_cast<std::size_t>(p.i)];
    const FreeElem& gj = basis[static_cast<std::size_t>(p.j)];
    const Field& k = ring->field();
    Monomial mi = p.lcm.div(gi.lead().mono);
    Monomial mj = p.lcm.div(gj.lead().mono);
    FieldElement ci = k.inv(gi.lead().coeff);
    FieldElement cj = k.inv(gj.lead().coeff);
    FreeElem s = gi.mono_mul(mi, ci).sub(gj.mono_mul(mj, cj));
    if (rep_out) {
      rep_out->assign(ngens, Polynomial(ring));
      auto addmul = [&](const std::vector<Polynomial>& r, const Monomial& m, const FieldElement& c,
                        bool negate) {
        for (std::size_t t = 0; t < ngens; ++t) {
          Polynomial q = r[t].mono_mul(m, c);
          (*rep_out)[t] = negate ? (*rep_out)[t].sub(q) : (*rep_out)[t].add(q);
        }
      };
      addmul(reps[static_cast<std::size_t>(p.i)], mi, ci, false);
      addmul(reps[static_cast<std::size_t>(p.j)], mj, cj, true);
    }
    return s;
  }

  void run() {
    while (!pending.empty()) {
      std::size_t best = 0;
      for (std::size_t a = 1; a < pending.size(); ++a)
        if (pair_less(pending[a], pending[best])) best = a;
      Pair p = pending[best];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
      std::vector<Polynomial> rep;
      FreeElem s = spair(p, tracked ? &rep : nullptr);
      Division d = divide(s, basis);
      if (d.remainder.is_zero()) continue;
      if (tracked) {
        for (std::size_t l = 0; l < basis.size(); ++l) {
          if (d.quotients[l].is_zero()) continue;
          for (std::size_t t = 0; t < ngens; ++t)
            rep[t] = rep[t].sub(d.quotients[l].mul(reps[l][t]));
        }
      }
      FieldElement lc = d.remainder.lead().coeff;
      FieldElement inv = ring->field().inv(lc);
      FreeElem h = d.remainder.scale(inv);
      if (tracked)
        for (auto& r : rep) r = r.scale(inv);
      push_element(std::move(h), std::move(rep));
    }
  }

  // Minimal, monic, tail-reduced, sorted by decreasing lead.
  void reduce() {
    if (basis.empty()) return;
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const FreeModulePtr M = basis.empty() ? nullptr : basis[0].module();
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const VTerm& ta = basis[a].lead();
      const VTerm& tb = basis[b].lead();
      Cmp c = M->compare(ta.comp, ta.mono, tb.comp, tb.mono);
      if (c != Cmp::EQ) return c == Cmp::LT;
      return a < b;
    });
    std::vector<std::size_t> kept;
    for (std::size_t idx : order) {
      const VTerm& lt = basis[idx].lead();
      bool redundant = false;
      for (std::size_t kidx : kept) {
        const VTerm& kl = basis[kidx].lead();
        if (kl.comp == lt.comp && kl.mono.divides(lt.mono)) {
          redundant = true;
          break;
        }
      }
      if (!redundant) kept.push_back(idx);
    }
    std::vector<FreeElem> out;
    std::vector<std::vector<Polynomial>> out_reps;
    std::vector<FreeElem> kept_elems;
    for (std::size_t kidx : kept) kept_elems.push_back(basis[kidx]);
    for (std::size_t a = 0; a < kept.size(); ++a) {
      FreeElem g = basis[kept[a]];
      FreeElem lead_part(g.module(), {g.lead()});
      FreeElem tail = g.sub(lead_part);
      Division d = divide(tail, kept_elems);
      FreeElem red = lead_part.add(d.remainder);
      FieldElement inv = ring->field().inv(red.lead().coeff);
      if (tracked) {
        std::vector<Polynomial> rep = reps[kept[a]];
        for (std::size_t l = 0; l < kept.size(); ++l) {
          if (d.quotients[l].is_zero()) continue;
          for (std::size_t t = 0; t < ngens; ++t)
            rep[t] = rep[t].sub(d.quotients[l].mul(reps[kept[l]][t]));
        }
        for (auto& r : rep) r = r.scale(inv);
        out_reps.push_back(std::move(rep));
      }
      out.push_back(red.scale(inv));
    }
    // Decreasing lead order for presentation.
    std::vector<std::size_t> ord2(out.size());
    for (std::size_t i = 0; i < ord2.size(); ++i) ord2[i] = i;
    std::sort(ord2.begin(), ord2.end(), [&](std::size_t a, std::size_t b) {
      const VTerm& ta = out[a].lead();
      const VTerm& tb = out[b].lead();
      return M->compare(ta.comp, ta.mono, tb.comp, tb.mono) == Cmp::GT;
    });
    std::vector<FreeElem> fin;
    std::vector<std::vector<Polynomial>> fin_reps;
    for (std::size_t i : ord2) {
      fin.push_back(std::move(out[i]));
      if (tracked) fin_reps.push_back(std::move(out_reps[i]));
    }
    basis = std::move(fin);
    reps = std::move(fin_reps);
  }
};

Engine run_buchberger(std::vector<FreeElem> gens, bool tracked) {
  Engine e;
  e.tracked = tracked;
  e.ngens = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero()) continue;
    if (!e.ring) e.ring = gens[i].module()->ring();
    std::vector<Polynomial> rep;
    if (tracked) {
      rep.assign(gens.size(), Polynomial(gens[i].module()->ring()));
      rep[i] = poly_constant(gens[i].module()->ring(), gens[i].module()->ring()->field().one());
    }
    e.push_element(gens[i], std::move(rep));
  }
  if (e.basis.empty()) return e;
  e.run();
  e.reduce();
  return e;
}

}  // namespace

std::vector<FreeElem> module_gb(std::vector<FreeElem> gens) {
  return run_buchberger(std::move(gens), false).basis;
}

TrackedGB module_gb_tracked(std::vector<FreeElem> gens) {
  Engine e = run_buchberger(std::move(gens), true);
  return {std::move(e.basis), std::move(e.reps)};
}

Syzygies syzygies_of_gb(const std::vector<FreeElem>& gb) {
  Syzygies out;
  if (gb.empty()) return out;
  const FreeModulePtr& M = gb[0].module();
  const RingPtr& R = M->ring();
  const Field& k = R->field();
  // Schreyer module on the basis leads.
  std::vector<std::int64_t> degs;
  std::vector<Monomial> lms;
  std::vector<int> lcs;
  for (const auto& g : gb) {
    degs.push_back(g.lead().mono.degree() +
                   M->gen_degs()[static_cast<std::size_t>(g.lead().comp)]);
    lms.push_back(g.lead().mono);
    lcs.push_back(g.lead().comp);
  }
  out.syz_module = FreeModule::schreyer(M, std::move(degs), std::move(lms), std::move(lcs));

  // Rebuild the surviving S-pair set with the chain criteria only; pairs
  // dropped by the chain criteria have syzygies generated by the kept ones,
  // which is not true of product-criterion pairs.
  Engine e;
  e.ring = R;
  e.use_product_criterion = false;
  for (std::size_t t = 0; t < gb.size(); ++t) {
    e.basis.push_back(gb[t]);
    e.add_pairs_for(static_cast<int>(t));
  }
  std::sort(e.pending.begin(), e.pending.end(),
            [&](const Pair& a, const Pair& b) { return e.pair_less(a, b); });
  for (const Pair& p : e.pending) {
    const FreeElem& gi = gb[static_cast<std::size_t>(p.i)];
    const FreeElem& gj = gb[static_cast<std::size_t>(p.j)];
    Monomial mi = p.lcm.div(gi.lead().mono);
    Monomial mj = p.lcm.div(gj.lead().mono);
    FieldElement ci = k.inv(gi.lead().coeff);
    FieldElement cj = k.inv(gj.lead().coeff);
    FreeElem s = gi.mono_mul(mi, ci).sub(gj.mono_mul(mj, cj));
    Division d = divide(s, gb);
    if (!d.remainder.is_zero())
      fail_internal("E_NOT_GB", "syzygy input is not a Groebner basis");
    std::vector<VTerm> ts;
    ts.push_back({p.i, mi, ci});
    ts.push_back({p.j, mj, k.neg(cj)});
    FreeElem syz(out.syz_module, std::move(ts));
    for (std::size_t l = 0; l < gb.size(); ++l) {
      if (d.quotients[l].is_zero()) continue;
      syz = syz.sub(elem_from_poly(out.syz_module, static_cast<int>(l), d.quotients[l]));
    }
    out.elems.push_back(std::move(syz));
  }
  return out;
}

std::vector<FreeElem> kernel_of_map(const std::vector<FreeElem>& cols) {
  if (cols.empty()) return {};
  const FreeModulePtr& M = cols[0].module();
  const RingPtr& R = M->ring();
  std::size_t b = M->rank(), a = cols.size();
  std::vector<std::int64_t> degs = M->gen_degs();
  bool homog = true;
  for (const auto& c : cols)
    if (!c.is_homogeneous()) homog = false;
  for (const auto& c : cols)
    degs.push_back(homog && !c.is_zero() ? c.degree() : 0);
  auto E = make_free_module(R, degs, ModOrderKind::POT);
  std::vector<FreeElem> gens;
  gens.reserve(a);
  for (std::size_t j = 0; j < a; ++j) {
    std::vector<VTerm> ts = cols[j].terms();
    ts.push_back({static_cast<int>(b + j), Monomial(R->nvars()), R->field().one()});
    gens.emplace_back(E, std::move(ts));
  }
  std::vector<FreeElem> gb = module_gb(std::move(gens));
  std::vector<std::int64_t> aux_degs(degs.begin() + static_cast<std::ptrdiff_t>(b), degs.end());
  auto A = make_free_module(R, aux_degs, ModOrderKind::POT);
  std::vector<FreeElem> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (const auto& t : g.terms())
      if (t.comp < static_cast<int>(b)) {
        pure = false;
        break;
      }
    if (!pure) continue;
    std::vector<VTerm> ts;
    ts.reserve(g.terms().size());
    for (const auto& t : g.terms()) ts.push_back({t.comp - static_cast<int>(b), t.mono, t.coeff});
    out.emplace_back(A, std::move(ts));
  }
  return out;
}

// ---- ideal-level wrappers ----

std::vector<FreeElem> polys_to_elems(const std::vector<Polynomial>& polys,
                                     const FreeModulePtr& mod, int comp) {
  std::vector<FreeElem> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(elem_from_poly(mod, comp, f));
  return out;
}

std::vector<Polynomial> elems_to_polys(const std::vector<FreeElem>& elems, int comp) {
  std::vector<Polynomial> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(e.component(comp));
  return out;
}

std::vector<Polynomial> ideal_gb(const std::vector<Polynomial>& gens) {
  RingPtr R;
  for (const auto& g : gens)
    if (!g.is_zero()) {
      R = g.ring();
      break;
    }
  if (!R) {
    if (gens.empty()) fail_pre("E_EMPTY", "ideal_gb needs at least one generator to fix the ring");
    R = gens[0].ring();
  }
  std::string key;
  if (gb_cache().enabled()) {
    key = GbCache::key_for(R, gens);
    if (auto hit = gb_cache().load(R, key)) return *hit;
  }
  auto mod = make_free_module(R, {0});
  std::vector<Polynomial> gb = elems_to_polys(module_gb(polys_to_elems(gens, mod)));
  if (gb_cache().enabled()) gb_cache().store(key, gb);
  return gb;
}

bool ideal_contains(const std::vector<Polynomial>& gb, const Polynomial& f) {
  return normal_form(f, gb).is_zero();
}

bool gb_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool is_unit_ideal(const std::vector<Polynomial>& gb) {
  for (const auto& g : gb)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

namespace {

bool all_monomial(const std::vector<Polynomial>& v) {
  for (const auto& f : v)
    if (f.is_zero() || !f.is_monomial()) return false;
  return !v.empty();
}

// Drop monomials divisible by another in the list.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> ms) {
  std::vector<Monomial> out;
  std::sort(ms.begin(), ms.end(), [](const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return x.exponents() < y.exponents();
  });
  for (const auto& m : ms) {
    bool red = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

std::string fresh_var_name(const RingPtr& R) {
  std::string base = "t@";
  std::string name = base;
  int i = 0;
  while (R->var_index(name) >= 0) name = base + std::to_string(i++);
  return name;
}

}  // namespace

std::vector<Polynomial> ideal_intersect(const std::vector<Polynomial>& a,
                                        const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return {};
  RingPtr R = a[0].ring();
  require_same_ring(R, b[0].ring());
  if (all_monomial(a) && all_monomial(b)) {
    std::vector<Monomial> lcms;
    for (const auto& f : a)
      for (const auto& g : b) lcms.push_back(f.lead_mono().lcm(g.lead_mono()));
    std::vector<Polynomial> out;
    for (const auto& m : minimalize_monomials(std::move(lcms)))
      out.push_back(poly_monomial(R, m, R->field().one()));
    return out;
  }
  return ideal_intersect_elimination(a, b);
}

std::vector<Polynomial> ideal_intersect_elimination(const std::vector<Polynomial>& a,
                                                    const std::vector<Polynomial>& b) {
  if (a.empty() || b.empty()) return {};
  RingPtr R = a[0].ring();
  require_same_ring(R, b[0].ring());
  RingPtr E = extend_ring_elim(R, fresh_var_name(R));
  Polynomial t = poly_variable(E, 0);
  Polynomial one_minus_t = poly_constant(E, E->field().one()).sub(t);
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t.mul(map_to_ring(f, E)));
  for (const auto& g : b) gens.push_back(one_minus_t.mul(map_to_ring(g, E)));
  std::vector<Polynomial> out;
  for (const auto& h : ideal_gb(gens)) {
    bool has_t = false;
    for (const auto& term : h.terms())
      if (term.mono[0] > 0) {
        has_t = true;
        break;
      }
    if (!has_t) out.push_back(map_to_ring(h, R));
  }
  return out;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) fail_pre("E_DIV_ZERO", "division by the zero polynomial");
  auto mod = make_free_module(f.ring(), {0});
  Division d = divide(elem_from_poly(mod, 0, f), {elem_from_poly(mod, 0, g)});
  if (!d.remainder.is_zero())
    fail_internal("E_BAD_DIVISION", "inexact polynomial division");
  return d.quotients[0];
}

std::vector<Polynomial> ideal_colon(const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b) {
  RingPtr R = a.empty() ? (b.empty() ? nullptr : b[0].ring()) : a[0].ring();
  if (!R) fail_pre("E_EMPTY", "colon of empty ideals");
  std::vector<Polynomial> nonzero_b;
  for (const auto& g : b)
    if (!g.is_zero()) nonzero_b.push_back(g);
  if (nonzero_b.empty()) return {poly_constant(R, R->field().one())};
  std::vector<Polynomial> acc;
  bool first = true;
  for (const auto& g : nonzero_b) {
    std::vector<Polynomial> meet = ideal_intersect(a, {g});
    std::vector<Polynomial> quot;
    for (const auto& h : meet) quot.push_back(exact_divide(h, g));
    if (first) {
      acc = std::move(quot);
      first = false;
    } else {
      acc = ideal_intersect(acc, quot);
    }
  }
  return ideal_gb(acc);
}

std::vector<Polynomial> ideal_saturate(const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b) {
  std::vector<Polynomial> cur = ideal_gb(a);
  for (int guard = 0; guard < 10000; ++guard) {
    std::vector<Polynomial> nxt = ideal_gb(ideal_colon(cur, b));
    if (gb_equal(cur, nxt)) return cur;
    cur = std::move(nxt);
  }
  fail_internal("E_NO_STABILIZE", "saturation did not stabilize");
}

bool radical_membership(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  RingPtr R = f.ring();
  RingPtr E = extend_ring_elim(R, fresh_var_name(R));
  Polynomial t = poly_variable(E, 0);
  std::vector<Polynomial> g;
  for (const auto& h : gens) g.push_back(map_to_ring(h, E));
  g.push_back(poly_constant(E, E->field().one()).sub(t.mul(map_to_ring(f, E))));
  return is_unit_ideal(ideal_gb(g));
}

}  // namespace cofull
