#include "cofull/resolution.hpp"

#include <algorithm>

namespace cofull {

FreeModulePtr FreeResolution::module_at(int i) const {
  return make_free_module(ring, twists.at(i));
}

std::vector<std::vector<Polynomial>> FreeResolution::matrix_of(int i) const {
  if (i < 1 || i > pd()) fail_pre("E_BAD_INDEX", "differential index out of range");
  std::size_t rows = twists[i - 1].size(), cols = twists[i].size();
  std::vector<std::vector<Polynomial>> M(rows, std::vector<Polynomial>(cols, poly_zero(ring)));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) M[r][c] = diffs[i - 1][c].component(static_cast<int>(r));
  return M;
}

namespace {

std::int64_t column_degree(const FreeElem& e) {
  return (!e.is_zero() && e.is_homogeneous()) ? e.degree() : 0;
}

using Mat = std::vector<std::vector<Polynomial>>;

// Unit entry: nonzero constant (degree-0 homogeneous piece of the matrix).
bool find_unit(const Mat& A, std::size_t& r, std::size_t& c) {
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A[i].size(); ++j)
      if (!A[i][j].is_zero() && A[i][j].is_constant()) {
        r = i;
        c = j;
        return true;
      }
  return false;
}

void erase_row(Mat& A, std::size_t r) { A.erase(A.begin() + r); }
void erase_col(Mat& A, std::size_t c) {
  for (auto& row : A) row.erase(row.begin() + c);
}

bool row_is_zero(const Mat& A, std::size_t r) {
  for (const auto& e : A[r])
    if (!e.is_zero()) return false;
  return true;
}

bool col_is_zero(const Mat& A, std::size_t c) {
  for (const auto& row : A)
    if (!row[c].is_zero()) return false;
  return true;
}

// Prune one unit pivot at mats[i](r, c): clear its row and column with
// elementary operations, mirror them on the neighbouring differentials,
// and delete generator r of F_i and generator c of F_{i+1}.
void prune_pivot(std::vector<Mat>& mats, std::vector<std::vector<std::int64_t>>& twists,
                 std::size_t i, std::size_t r, std::size_t c, const Field& k) {
  Mat& A = mats[i];
  Polynomial u = A[r][c];
  FieldElement uinv = k.inv(u.lead().coeff);

  // clear row r: col_{c'} -= q * col_c on A; row_c += q * row_{c'} on next
  for (std::size_t c2 = 0; c2 < A[r].size(); ++c2) {
    if (c2 == c || A[r][c2].is_zero()) continue;
    Polynomial q = A[r][c2].scale(uinv);
    for (std::size_t rr = 0; rr < A.size(); ++rr) A[rr][c2] = A[rr][c2].sub(A[rr][c].mul(q));
    if (i + 1 < mats.size()) {
      Mat& B = mats[i + 1];
      for (std::size_t cc = 0; cc < B[c].size(); ++cc) B[c][cc] = B[c][cc].add(q.mul(B[c2][cc]));
    }
  }
  // clear column c: row_{r'} -= q * row_r on A; col_r += q * col_{r'} on prev
  for (std::size_t r2 = 0; r2 < A.size(); ++r2) {
    if (r2 == r || A[r2][c].is_zero()) continue;
    Polynomial q = A[r2][c].scale(uinv);
    for (std::size_t cc = 0; cc < A[r2].size(); ++cc) A[r2][cc] = A[r2][cc].sub(q.mul(A[r][cc]));
    if (i > 0) {
      Mat& C = mats[i - 1];
      for (std::size_t rr = 0; rr < C.size(); ++rr) C[rr][r] = C[rr][r].add(C[rr][r2].mul(q));
    }
  }
  // d.d = 0 forces the mirrored row/column to vanish before deletion
  if (i + 1 < mats.size() && !mats[i + 1].empty() && !row_is_zero(mats[i + 1], c))
    fail_internal("E_MINIMALIZE", "next differential row did not clear");
  if (i > 0 && !mats[i - 1].empty() && !col_is_zero(mats[i - 1], r))
    fail_internal("E_MINIMALIZE", "previous differential column did not clear");

  erase_row(A, r);
  erase_col(A, c);
  twists[i].erase(twists[i].begin() + r);
  twists[i + 1].erase(twists[i + 1].begin() + c);
  if (i + 1 < mats.size()) erase_row(mats[i + 1], c);
  if (i > 0) erase_col(mats[i - 1], r);
}

// Greedy irredundant generating set; for graded input (ascending degree)
// this is a minimal generating set by the graded Nakayama lemma.
std::vector<FreeElem> trim_generators(std::vector<FreeElem> gens, bool graded) {
  if (graded)
    std::stable_sort(gens.begin(), gens.end(),
                     [](const FreeElem& a, const FreeElem& b) { return a.degree() < b.degree(); });
  std::vector<FreeElem> kept, kept_gb;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!kept.empty() && normal_form(g, kept_gb).is_zero()) continue;
    kept.push_back(std::move(g));
    kept_gb = module_gb(kept);
  }
  return kept;
}

}  // namespace

FreeResolution free_resolution(const IdealPtr& I) {
  const RingPtr& R = I->ring();
  if (I->is_unit()) fail_pre("E_UNIT_IDEAL", "resolutions need a proper ideal");
  bool homog = I->is_homogeneous();

  FreeResolution res;
  res.ring = R;
  res.twists = {{0}};
  if (I->is_zero_ideal()) {
    res.minimal = true;
    return res;
  }

  std::vector<Polynomial> first = homog ? I->min_gens() : I->gens();
  FreeModulePtr F0 = make_free_module(R, {0});
  std::vector<FreeElem> cols = trim_generators(polys_to_elems(first, F0), homog);

  std::size_t n = R->nvars();
  // With minimal generators at every step the resolution is minimal, so
  // homogeneous chains stop within n steps (Hilbert syzygy theorem).
  std::size_t max_len = homog ? n + 1 : n + 15;
  while (!cols.empty()) {
    if (res.twists.size() > max_len)
      fail_internal("E_RESOLUTION_LENGTH", "resolution did not terminate");
    std::vector<std::int64_t> degs;
    degs.reserve(cols.size());
    for (const auto& c : cols) degs.push_back(column_degree(c));
    res.diffs.push_back(cols);
    res.twists.push_back(degs);
    cols = trim_generators(kernel_of_map(cols), homog);
  }

  if (!homog) return res;

  // Minimalize: repeatedly prune unit pivots, mirroring the elementary
  // operations on the neighbouring differentials.
  std::vector<Mat> mats;
  mats.reserve(res.diffs.size());
  for (int i = 1; i <= res.pd(); ++i) mats.push_back(res.matrix_of(i));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < mats.size(); ++i) {
      std::size_t r = 0, c = 0;
      while (!mats[i].empty() && !mats[i][0].empty() && find_unit(mats[i], r, c)) {
        prune_pivot(mats, res.twists, i, r, c, R->field());
        changed = true;
      }
    }
  }
  // drop trailing zero modules
  while (!res.twists.empty() && res.twists.back().empty()) {
    res.twists.pop_back();
    mats.pop_back();
  }
  for (const auto& t : res.twists)
    if (t.empty()) fail_internal("E_MINIMALIZE", "internal zero module after pruning");

  // rebuild differentials as column elements
  res.diffs.clear();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    FreeModulePtr Fi = make_free_module(R, res.twists[i]);
    std::vector<FreeElem> cs;
    std::size_t ncols = res.twists[i + 1].size();
    for (std::size_t c = 0; c < ncols; ++c) {
      std::vector<Polynomial> comps;
      comps.reserve(mats[i].size());
      for (std::size_t rr = 0; rr < mats[i].size(); ++rr) comps.push_back(mats[i][rr][c]);
      cs.push_back(elem_from_components(Fi, comps));
    }
    res.diffs.push_back(std::move(cs));
  }
  res.minimal = true;
  return res;
}

std::pair<int, int> depth_pd(const IdealPtr& I) {
  if (!I->is_homogeneous())
    fail_pre("E_NOT_HOMOGENEOUS", "depth and projective dimension need a homogeneous ideal");
  FreeResolution F = free_resolution(I);
  int pd = F.pd();
  return {static_cast<int>(I->ring()->nvars()) - pd, pd};
}

std::map<int, std::map<std::int64_t, int>> betti_table(const FreeResolution& F) {
  std::map<int, std::map<std::int64_t, int>> b;
  for (std::size_t i = 0; i < F.twists.size(); ++i)
    for (std::int64_t d : F.twists[i]) b[static_cast<int>(i)][d]++;
  return b;
}

std::map<std::int64_t, std::int64_t> euler_numerator(const FreeResolution& F) {
  std::map<std::int64_t, std::int64_t> num;
  std::int64_t sign = 1;
  for (const auto& level : F.twists) {
    for (std::int64_t d : level) {
      num[d] += sign;
      if (num[d] == 0) num.erase(d);
    }
    sign = -sign;
  }
  return num;
}

bool is_complex(const FreeResolution& F) {
  for (int i = 1; i < F.pd(); ++i) {
    // apply d_i to each column of d_{i+1}
    const auto& next_cols = F.diffs[i];
    const auto& cols = F.diffs[i - 1];
    FreeModulePtr Fprev = F.module_at(i - 1);
    for (const auto& nc : next_cols) {
      FreeElem img(Fprev);
      for (const auto& t : nc.terms()) img = img.add(cols[t.comp].mono_mul(t.mono, t.coeff));
      if (!img.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace cofull
