#include "cofull/homology.hpp"

#include <algorithm>

namespace cofull {

namespace {

// Dual of F_j, generators in degrees -twists[j].
FreeModulePtr dual_module(const FreeResolution& F, int j) {
  std::vector<std::int64_t> degs = F.twists.at(j);
  for (auto& d : degs) d = -d;
  return make_free_module(F.ring, degs);
}

// Columns of d_{j+1}^T: F_j^* -> F_{j+1}^*; column r is row r of d_{j+1}.
std::vector<FreeElem> transpose_columns(const FreeResolution& F, int j) {
  FreeModulePtr target = dual_module(F, j + 1);
  std::size_t rows = F.twists[j].size();
  std::vector<FreeElem> cols;
  cols.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    FreeElem col(target);
    const auto& dcols = F.diffs[j];
    for (std::size_t c = 0; c < dcols.size(); ++c) {
      Polynomial entry = dcols[c].component(static_cast<int>(r));
      if (!entry.is_zero()) col = col.add(elem_from_poly(target, static_cast<int>(c), entry));
    }
    cols.push_back(col);
  }
  return cols;
}

// Generators of ker(d_{j+1}^T) inside F_j^*; the whole module at the tail.
std::vector<FreeElem> cocycle_gens(const FreeResolution& F, int j) {
  FreeModulePtr Fj = dual_module(F, j);
  if (j >= F.pd()) {
    std::vector<FreeElem> units;
    for (std::size_t l = 0; l < F.twists[j].size(); ++l)
      units.push_back(unit_vector(Fj, static_cast<int>(l)));
    return units;
  }
  std::vector<FreeElem> cols = transpose_columns(F, j);
  std::vector<FreeElem> ker = kernel_of_map(cols);
  // kernel coordinates live in a module with F_j^* generator degrees
  std::vector<FreeElem> out;
  out.reserve(ker.size());
  for (const auto& k : ker) out.push_back(k.in_module(Fj));
  return out;
}

// Columns of d_j^T: F_{j-1}^* -> F_j^* (the coboundaries); empty at j = 0.
std::vector<FreeElem> coboundary_cols(const FreeResolution& F, int j) {
  if (j == 0) return {};
  return transpose_columns(F, j - 1);
}

}  // namespace

GradedModulePresentation ext_from_resolution(const FreeResolution& F, int j) {
  if (j < 0 || j > static_cast<int>(F.ring->nvars()))
    fail_pre("E_BAD_INDEX", "Ext index out of range");
  if (j > F.pd())
    return make_presentation(F.ring, {}, {});
  FreeModulePtr Fj = dual_module(F, j);
  std::vector<FreeElem> A = cocycle_gens(F, j);
  std::vector<FreeElem> B = coboundary_cols(F, j);
  return subquotient(Fj, A, B);
}

GradedModulePresentation ext_presentation(const IdealPtr& I, int j) {
  return ext_from_resolution(free_resolution(I), j);
}

std::vector<std::vector<FreeElem>> lift_comparison(const FreeResolution& small_res,
                                                   const FreeResolution& big_res, int up_to) {
  if (up_to > std::min(small_res.pd(), big_res.pd()))
    fail_pre("E_BAD_INDEX", "lift index beyond both resolutions");
  std::vector<std::vector<FreeElem>> phi(static_cast<std::size_t>(up_to) + 1);
  FreeModulePtr big0 = big_res.module_at(0);
  phi[0] = {unit_vector(big0, 0)};
  for (int i = 1; i <= up_to; ++i) {
    FreeModulePtr big_prev = big_res.module_at(i - 1);
    TrackedGB tracked = module_gb_tracked(big_res.diffs[i - 1]);
    FreeModulePtr big_i = big_res.module_at(i);
    std::vector<FreeElem> level;
    for (const auto& scol : small_res.diffs[i - 1]) {
      // push the small differential column through phi_{i-1}
      FreeElem target(big_prev);
      for (const auto& t : scol.terms())
        target = target.add(phi[i - 1][static_cast<std::size_t>(t.comp)].mono_mul(t.mono, t.coeff));
      Division div = divide(target, tracked.gb);
      if (!div.remainder.is_zero())
        fail_internal("E_LIFT", "comparison lift target not in the image");
      FreeElem x(big_i);
      for (std::size_t k = 0; k < tracked.gb.size(); ++k) {
        if (div.quotients[k].is_zero()) continue;
        FreeElem rep(big_i);
        for (std::size_t c = 0; c < tracked.reps[k].size(); ++c)
          if (!tracked.reps[k][c].is_zero())
            rep = rep.add(elem_from_poly(big_i, static_cast<int>(c), tracked.reps[k][c]));
        x = x.add(rep.poly_mul(div.quotients[k]));
      }
      level.push_back(x);
    }
    phi[i] = std::move(level);
  }
  return phi;
}

namespace {

void require_contained(const IdealPtr& Ismall, const IdealPtr& Ibig) {
  require_same_ring(Ismall->ring(), Ibig->ring());
  for (const auto& g : Ismall->gens())
    if (!Ibig->contains(g))
      fail_pre("E_NOT_CONTAINED", "first ideal is not contained in the second");
}

// dim of span(gens)_d inside the free module, via the initial module.
std::int64_t submodule_piece_dim(const std::vector<FreeElem>& gb,
                                 const std::vector<std::int64_t>& gen_degs,
                                 const RingPtr& R, std::int64_t d) {
  std::vector<std::vector<Monomial>> leads(gen_degs.size());
  for (const auto& g : gb) leads[static_cast<std::size_t>(g.lead().comp)].push_back(g.lead().mono);
  std::int64_t dim = 0;
  for (std::size_t c = 0; c < gen_degs.size(); ++c) {
    std::int64_t dd = d - gen_degs[c];
    if (dd < 0) continue;
    for (const auto& m : monomials_of_degree(R->nvars(), dd)) {
      for (const auto& l : leads[c])
        if (l.divides(m)) {
          ++dim;
          break;
        }
    }
  }
  return dim;
}

}  // namespace

ComparisonKernel ext_comparison_kernel(const IdealPtr& Ismall, const IdealPtr& Ibig, int j) {
  require_contained(Ismall, Ibig);
  FreeResolution Fs = free_resolution(Ismall);
  FreeResolution Fb = free_resolution(Ibig);

  ComparisonKernel out;
  if (j > Fb.pd()) {
    out.ext_big = make_presentation(Ibig->ring(), {}, {});
    out.injective = true;
    return out;
  }
  out.ext_big = ext_from_resolution(Fb, j);
  FreeModulePtr cover = out.ext_big.free_cover();

  if (j > Fs.pd()) {
    // Ext^j of the small quotient vanishes, so the kernel is everything.
    for (std::size_t l = 0; l < out.ext_big.gen_degs.size(); ++l)
      out.kernel_gens.push_back(unit_vector(cover, static_cast<int>(l)));
  } else {
    std::vector<std::vector<FreeElem>> phi = lift_comparison(Fs, Fb, j);
    FreeModulePtr small_dual = dual_module(Fs, j);

    // phi_j^T sends the big dual generator r to sum_c phi[j][c].component(r) e_c^*
    std::size_t big_rank = Fb.twists[j].size();
    std::vector<FreeElem> phi_t(big_rank, FreeElem(small_dual));
    for (std::size_t c = 0; c < phi[j].size(); ++c)
      for (const auto& t : phi[j][c].terms()) {
        FreeElem part(small_dual, {VTerm{static_cast<int>(c), t.mono, t.coeff}});
        phi_t[static_cast<std::size_t>(t.comp)] = phi_t[static_cast<std::size_t>(t.comp)].add(part);
      }

    // images of the ext_big generators (cocycles A) inside F_j(small)^*
    std::vector<FreeElem> A = cocycle_gens(Fb, j);
    std::vector<FreeElem> mapped;
    mapped.reserve(A.size());
    for (const auto& a : A) {
      FreeElem img(small_dual);
      for (const auto& t : a.terms())
        img = img.add(phi_t[static_cast<std::size_t>(t.comp)].mono_mul(t.mono, t.coeff));
      mapped.push_back(img);
    }
    std::vector<FreeElem> Bs = coboundary_cols(Fs, j);

    // preimage of im(d_j(small)^T): syzygy first block of [mapped | Bs]
    bool any_nonzero = false;
    for (const auto& e : mapped)
      if (!e.is_zero()) any_nonzero = true;
    for (const auto& e : Bs)
      if (!e.is_zero()) any_nonzero = true;
    if (!any_nonzero) {
      // everything maps to zero, so the kernel is all of ext_big
      for (std::size_t l = 0; l < A.size(); ++l)
        out.kernel_gens.push_back(unit_vector(cover, static_cast<int>(l)));
    } else {
      std::vector<FreeElem> combined = mapped;
      combined.insert(combined.end(), Bs.begin(), Bs.end());
      std::vector<FreeElem> syz = kernel_of_map(combined);
      for (const auto& s : syz) {
        std::vector<VTerm> ts;
        for (const auto& t : s.terms())
          if (t.comp < static_cast<int>(A.size())) ts.push_back(t);
        FreeElem proj(cover, ts);
        if (!proj.is_zero()) out.kernel_gens.push_back(proj);
      }
    }
  }

  // injective iff every kernel generator already lies in the relations
  std::vector<FreeElem> surviving;
  for (const auto& w : out.kernel_gens) {
    FreeElem nf = normal_form(w.in_module(cover), out.ext_big.rel_gb);
    if (!nf.is_zero()) surviving.push_back(nf);
  }
  out.injective = surviving.empty();
  if (!out.injective) {
    out.witness = to_string(surviving.front());
    // kernel dimensions over the degrees spanned by the surviving classes
    std::vector<FreeElem> W = out.kernel_gens;
    for (const auto& r : out.ext_big.relations) W.push_back(r);
    std::vector<FreeElem> wgb = module_gb(W);
    std::int64_t lo = kNoDegree, hi = INT64_MIN;
    for (const auto& s : surviving)
      if (s.is_homogeneous()) {
        lo = std::min(lo, s.degree());
        hi = std::max(hi, s.degree());
      }
    for (std::int64_t d = lo; d <= hi; ++d) {
      std::int64_t kd = submodule_piece_dim(wgb, out.ext_big.gen_degs, Ibig->ring(), d) -
                        submodule_piece_dim(out.ext_big.rel_gb, out.ext_big.gen_degs,
                                            Ibig->ring(), d);
      if (kd != 0) out.kernel_dims[d] = kd;
    }
  }
  return out;
}

AInvariants a_invariants(const IdealPtr& I) {
  if (!I->is_homogeneous())
    fail_pre("E_NOT_HOMOGENEOUS", "a-invariants need a homogeneous ideal");
  if (I->is_unit()) fail_pre("E_UNIT_IDEAL", "a-invariants need a proper ideal");
  FreeResolution F = free_resolution(I);
  std::int64_t n = static_cast<std::int64_t>(I->ring()->nvars());
  AInvariants out;
  bool any = false;
  for (int j = 0; j <= F.pd(); ++j) {
    GradedModulePresentation E = ext_from_resolution(F, j);
    std::int64_t lo = min_nonzero_degree(E);
    if (lo == kNoDegree) continue;
    int i = static_cast<int>(n) - j;
    out.a[i] = -lo - n;
    if (!any || out.a[i] + i > out.reg) out.reg = out.a[i] + i;
    any = true;
  }
  if (!any) fail_internal("E_EXT_VANISH", "all Ext modules vanished for a proper ideal");
  return out;
}

int finiteness_dimension(const IdealPtr& I) {
  int d = I->dim();
  if (d <= 0) fail_pre("E_DIM_ZERO", "finiteness dimension needs positive dimension");
  FreeResolution F = free_resolution(I);
  int n = static_cast<int>(I->ring()->nvars());
  for (int t = 0; t <= d; ++t) {
    int j = n - t;
    if (j > F.pd()) continue;
    GradedModulePresentation E = ext_from_resolution(F, j);
    if (module_dim(E) > 0) return t;
  }
  fail_internal("E_FINITENESS", "no local cohomology of positive dimension found");
}

HomologicalProfile homological_profile(const IdealPtr& I) {
  if (!I->is_homogeneous())
    fail_pre("E_NOT_HOMOGENEOUS", "profile needs a homogeneous ideal");
  HomologicalProfile P;
  P.n = static_cast<int>(I->ring()->nvars());
  FreeResolution F = free_resolution(I);
  P.pd = F.pd();
  P.depth = P.n - P.pd;
  P.dim = I->dim();
  P.betti = betti_table(F);
  P.ainv = a_invariants(I);
  P.cd_low = I->height();
  P.cd_high = P.pd;
  P.f_m = (P.dim > 0) ? finiteness_dimension(I) : -1;
  return P;
}

}  // namespace cofull
