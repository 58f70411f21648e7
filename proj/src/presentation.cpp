#include "cofull/presentation.hpp"

#include <algorithm>
#include <set>

namespace cofull {

GradedModulePresentation make_presentation(RingPtr ring, std::vector<std::int64_t> gen_degs,
                                           std::vector<FreeElem> relations) {
  GradedModulePresentation M;
  M.ring = std::move(ring);
  M.gen_degs = std::move(gen_degs);
  FreeModulePtr F = make_free_module(M.ring, M.gen_degs);
  std::vector<FreeElem> rel;
  rel.reserve(relations.size());
  for (auto& r : relations) {
    if (r.is_zero()) continue;
    rel.push_back(r.in_module(F));
  }
  M.rel_gb = module_gb(rel);
  M.relations = std::move(rel);
  return M;
}

GradedModulePresentation subquotient(const FreeModulePtr& F, const std::vector<FreeElem>& A,
                                     const std::vector<FreeElem>& B) {
  std::vector<FreeElem> combined;
  combined.reserve(A.size() + B.size());
  for (const auto& a : A) combined.push_back(a.in_module(F));
  for (const auto& b : B) combined.push_back(b.in_module(F));
  std::vector<std::int64_t> gdegs;
  gdegs.reserve(A.size());
  for (const auto& a : A)
    gdegs.push_back((!a.is_zero() && a.is_homogeneous()) ? a.degree() : 0);

  std::vector<FreeElem> rels;
  if (!combined.empty()) {
    std::vector<FreeElem> syz = kernel_of_map(combined);
    FreeModulePtr G = make_free_module(F->ring(), gdegs);
    for (const auto& s : syz) {
      std::vector<VTerm> ts;
      for (const auto& t : s.terms())
        if (t.comp < static_cast<int>(A.size())) ts.push_back(t);
      FreeElem proj(G, ts);
      if (!proj.is_zero()) rels.push_back(proj);
    }
  }
  return make_presentation(F->ring(), std::move(gdegs), std::move(rels));
}

bool is_zero_module(const GradedModulePresentation& M) {
  FreeModulePtr F = M.free_cover();
  for (std::size_t l = 0; l < M.gen_degs.size(); ++l)
    if (!normal_form(unit_vector(F, static_cast<int>(l)), M.rel_gb).is_zero()) return false;
  return true;
}

std::int64_t min_nonzero_degree(const GradedModulePresentation& M) {
  FreeModulePtr F = M.free_cover();
  std::int64_t best = kNoDegree;
  for (std::size_t l = 0; l < M.gen_degs.size(); ++l)
    if (!normal_form(unit_vector(F, static_cast<int>(l)), M.rel_gb).is_zero())
      best = std::min(best, M.gen_degs[l]);
  return best;
}

namespace {

// Lead monomials of the relation GB, grouped by component.
std::vector<std::vector<Monomial>> lead_ideals(const GradedModulePresentation& M) {
  std::vector<std::vector<Monomial>> leads(M.gen_degs.size());
  for (const auto& g : M.rel_gb)
    leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mono);
  return leads;
}

}  // namespace

std::int64_t graded_piece_dim(const GradedModulePresentation& M, std::int64_t d) {
  // dim M_d = sum over components of standard monomials of degree d - deg(e_c)
  auto leads = lead_ideals(M);
  std::size_t n = M.ring->nvars();
  std::int64_t dim = 0;
  for (std::size_t c = 0; c < M.gen_degs.size(); ++c) {
    std::int64_t dd = d - M.gen_degs[c];
    if (dd < 0) continue;
    for (const auto& m : monomials_of_degree(n, dd)) {
      bool in = false;
      for (const auto& l : leads[c])
        if (l.divides(m)) {
          in = true;
          break;
        }
      if (!in) ++dim;
    }
  }
  return dim;
}

namespace {

int monomial_dim(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  if (nvars > 24) fail_pre("E_TOO_MANY_VARS", "dimension limited to 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) s |= (1u << i);
    supports.push_back(s);
  }
  int best = -1;
  for (std::uint32_t T = 0; T < (1u << nvars); ++T) {
    bool ok = true;
    for (std::uint32_t s : supports)
      if ((s & ~T) == 0) {
        ok = false;
        break;
      }
    if (ok) best = std::max(best, __builtin_popcount(T));
  }
  return best;
}

}  // namespace

int module_dim(const GradedModulePresentation& M) {
  // dim F/N = dim F/in(N) = max over components of dim S/(lead ideal)
  FreeModulePtr F = M.free_cover();
  auto leads = lead_ideals(M);
  int best = -1;
  for (std::size_t c = 0; c < M.gen_degs.size(); ++c) {
    if (normal_form(unit_vector(F, static_cast<int>(c)), M.rel_gb).is_zero()) continue;
    best = std::max(best, monomial_dim(leads[c], M.ring->nvars()));
  }
  return best;
}

bool annihilated_by_irrelevant(const GradedModulePresentation& M) {
  FreeModulePtr F = M.free_cover();
  const RingPtr& R = M.ring;
  for (std::size_t c = 0; c < M.gen_degs.size(); ++c)
    for (std::size_t v = 0; v < R->nvars(); ++v) {
      FreeElem xe = elem_from_poly(F, static_cast<int>(c), poly_variable(R, v));
      if (!normal_form(xe, M.rel_gb).is_zero()) return false;
    }
  return true;
}

GradedModulePresentation twist(const GradedModulePresentation& M, std::int64_t a) {
  std::vector<std::int64_t> degs = M.gen_degs;
  for (auto& d : degs) d -= a;
  GradedModulePresentation out;
  out.ring = M.ring;
  out.gen_degs = std::move(degs);
  FreeModulePtr F = out.free_cover();
  for (const auto& r : M.relations) out.relations.push_back(r.in_module(F));
  for (const auto& g : M.rel_gb) out.rel_gb.push_back(g.in_module(F));
  return out;
}

std::vector<FreeElem> colon_irrelevant_gens(const GradedModulePresentation& M) {
  const RingPtr& R = M.ring;
  std::size_t n = R->nvars();
  std::size_t rank = M.gen_degs.size();
  FreeModulePtr F = M.free_cover();

  // Kernel of F -> (F/N)^n, v |-> (x_1 v, ..., x_n v): columns are the
  // images of the F generators plus one copy of each relation per block.
  std::vector<std::int64_t> big_degs;
  big_degs.reserve(n * rank);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < rank; ++c) big_degs.push_back(M.gen_degs[c]);
  FreeModulePtr G = make_free_module(R, big_degs);

  std::vector<FreeElem> cols;
  for (std::size_t c = 0; c < rank; ++c) {
    FreeElem img(G);
    for (std::size_t b = 0; b < n; ++b) {
      FreeElem part =
          elem_from_poly(G, static_cast<int>(b * rank + c), poly_variable(R, b));
      img = img.add(part);
    }
    cols.push_back(img);
  }
  for (std::size_t b = 0; b < n; ++b)
    for (const auto& r : M.relations) {
      std::vector<VTerm> ts;
      for (const auto& t : r.terms()) {
        VTerm t2 = t;
        t2.comp += static_cast<int>(b * rank);
        ts.push_back(t2);
      }
      cols.emplace_back(G, ts);
    }

  std::vector<FreeElem> syz = kernel_of_map(cols);
  std::vector<FreeElem> out;
  for (const auto& s : syz) {
    std::vector<VTerm> ts;
    for (const auto& t : s.terms())
      if (t.comp < static_cast<int>(rank)) ts.push_back(t);
    FreeElem proj(F, ts);
    if (!proj.is_zero()) out.push_back(proj);
  }
  return out;
}

GradedModulePresentation socle_presentation(const GradedModulePresentation& M) {
  FreeModulePtr F = M.free_cover();
  GradedModulePresentation soc = subquotient(F, colon_irrelevant_gens(M), M.relations);
  if (!annihilated_by_irrelevant(soc))
    fail_internal("E_SOCLE", "socle candidate not annihilated by the irrelevant ideal");
  return soc;
}

std::vector<std::int64_t> socle_degrees(const GradedModulePresentation& M) {
  GradedModulePresentation soc = socle_presentation(M);
  std::set<std::int64_t> degs(soc.gen_degs.begin(), soc.gen_degs.end());
  std::vector<std::int64_t> out;
  for (std::int64_t d : degs) {
    std::int64_t k = graded_piece_dim(soc, d);
    for (std::int64_t i = 0; i < k; ++i) out.push_back(d);
  }
  return out;
}

GradedModulePresentation torsion_presentation(const GradedModulePresentation& M) {
  // Saturate the relations by m: iterate N -> (N : m) until stable.
  GradedModulePresentation step = M;
  while (true) {
    std::vector<FreeElem> col = colon_irrelevant_gens(step);
    bool grew = false;
    for (const auto& c : col)
      if (!normal_form(c, step.rel_gb).is_zero()) {
        grew = true;
        break;
      }
    if (!grew) break;
    step = make_presentation(M.ring, M.gen_degs, std::move(col));
  }
  return subquotient(M.free_cover(), step.relations, M.relations);
}

std::int64_t top_nonzero_degree(const GradedModulePresentation& M) {
  if (module_dim(M) > 0) fail_pre("E_INFINITE_LENGTH", "module has positive dimension");
  if (is_zero_module(M)) return kNoTopDegree;
  auto leads = lead_ideals(M);
  std::size_t n = M.ring->nvars();
  FreeModulePtr F = M.free_cover();
  // Standard monomials of a finite length component have x_v-exponent
  // below the least pure power of x_v among the leads.
  std::int64_t lo = kNoDegree, hi = kNoTopDegree;
  for (std::size_t c = 0; c < M.gen_degs.size(); ++c) {
    if (normal_form(unit_vector(F, static_cast<int>(c)), M.rel_gb).is_zero()) continue;
    std::int64_t span = 0;
    for (std::size_t v = 0; v < n; ++v) {
      std::int64_t ev = -1;
      for (const auto& m : leads[c]) {
        bool pure = true;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && m[w] > 0) {
            pure = false;
            break;
          }
        if (pure && (ev < 0 || m[v] < ev)) ev = m[v];
      }
      if (ev < 0) fail_internal("E_TORSION_BOUND", "finite module missing a pure power");
      span += ev - 1;
    }
    lo = std::min(lo, M.gen_degs[c]);
    hi = std::max(hi, M.gen_degs[c] + span);
  }
  std::int64_t top = kNoTopDegree;
  for (std::int64_t d = lo; d <= hi; ++d)
    if (graded_piece_dim(M, d) > 0) top = d;
  if (top == kNoTopDegree) fail_internal("E_TORSION_BOUND", "nonzero module with empty support");
  return top;
}

}  // namespace cofull
