#include "cofull/ideal.hpp"

#include <algorithm>
#include <set>

#include "cofull/cache.hpp"

namespace cofull {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& IdealHandle::gb() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!gb_) {
    if (gens_.empty()) {
      gb_ = std::vector<Polynomial>{};
    } else if (gb_cache().enabled()) {
      std::string key = GbCache::key_for(ring_, gens_);
      if (auto hit = gb_cache().load(ring_, key)) {
        gb_ = std::move(*hit);
      } else {
        gb_ = ideal_gb(gens_);
        gb_cache().store(key, *gb_);
      }
    } else {
      gb_ = ideal_gb(gens_);
    }
  }
  return *gb_;
}

bool IdealHandle::is_zero_ideal() const { return gb().empty(); }
bool IdealHandle::is_unit() const { return is_unit_ideal(gb()); }

bool IdealHandle::is_monomial() const {
  for (const auto& g : gb())
    if (!g.is_monomial()) return false;
  return true;
}

bool IdealHandle::is_squarefree_monomial() const {
  if (!is_monomial()) return false;
  for (const auto& g : gb())
    if (!(g.lead_mono().radical() == g.lead_mono())) return false;
  return true;
}

bool IdealHandle::is_homogeneous() const {
  for (const auto& g : gens_)
    if (!g.is_homogeneous()) return false;
  return true;
}

const std::vector<Polynomial>& IdealHandle::min_gens() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (min_gens_) return *min_gens_;
  }
  if (!is_homogeneous())
    fail_pre("E_NOT_HOMOGENEOUS", "minimal generators need a homogeneous ideal");
  // Greedy from lowest degree up over the reduced GB, which generates:
  // a homogeneous generator is minimal exactly when it avoids m*I, i.e.
  // the ideal of the previously kept generators in lower or equal degree.
  std::vector<Polynomial> cands = gb();
  std::stable_sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring_->order().compare(a.lead_mono(), b.lead_mono()) == Cmp::GT;
  });
  std::vector<Polynomial> kept;
  std::vector<Polynomial> kept_gb;
  for (const auto& c : cands) {
    if (!kept.empty() && ideal_contains(kept_gb, c)) continue;
    kept.push_back(c);
    kept_gb = ideal_gb(kept);
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (!min_gens_) min_gens_ = std::move(kept);
  return *min_gens_;
}

std::int64_t IdealHandle::delta() const {
  std::int64_t d = 0;
  for (const auto& g : min_gens()) d = std::max(d, g.degree());
  return d;
}

namespace {

// Largest subset of variables containing no generator support; its size is
// the dimension of S/I for a monomial ideal I.
int monomial_quotient_dim(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& g : gens)
    if (g.is_one()) return -1;
  if (gens.empty()) return static_cast<int>(nvars);
  if (nvars > 24) fail_pre("E_TOO_MANY_VARS", "monomial dimension limited to 24 variables");
  std::vector<std::uint32_t> supports;
  supports.reserve(gens.size());
  for (const auto& g : gens) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g[i] > 0) s |= (1u << i);
    supports.push_back(s);
  }
  int best = 0;
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

std::vector<Monomial> lead_monomials(const std::vector<Polynomial>& gb) {
  std::vector<Monomial> ms;
  ms.reserve(gb.size());
  for (const auto& g : gb) ms.push_back(g.lead_mono());
  return ms;
}

}  // namespace

int IdealHandle::dim() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (dim_) return *dim_;
  }
  // dim S/I = dim S/in(I); the lead terms of a GB give the initial ideal.
  int d = monomial_quotient_dim(lead_monomials(gb()), ring_->nvars());
  std::lock_guard<std::mutex> lock(mu_);
  if (!dim_) dim_ = d;
  return *dim_;
}

int IdealHandle::height() const { return static_cast<int>(ring_->nvars()) - dim(); }

bool IdealHandle::same_ideal(const IdealHandle& o) const { return gb_equal(gb(), o.gb()); }

IdealPtr make_ideal(RingPtr ring, std::vector<Polynomial> gens) {
  return std::make_shared<IdealHandle>(std::move(ring), std::move(gens));
}

namespace {

// Divisibility prune for monomial generator lists (smallest kept).
std::vector<Polynomial> prune_monomial_gens(const RingPtr& R, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> kept;
  for (const auto& m : ms) {
    bool red = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) kept.push_back(m);
  }
  std::vector<Polynomial> out;
  out.reserve(kept.size());
  for (const auto& m : kept) out.push_back(poly_monomial(R, m, R->field().one()));
  return out;
}

bool gens_all_monomial(const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (!g.is_monomial()) return false;
  return !gens.empty();
}

}  // namespace

IdealPtr ordinary_power(const IdealPtr& I, int k) {
  const RingPtr& R = I->ring();
  if (k < 0) fail_pre("E_NEGATIVE_EXPONENT", "negative ideal power");
  if (k == 0) return make_ideal(R, {poly_constant(R, R->field().one())});
  const std::vector<Polynomial>& g = I->gens();
  std::vector<Polynomial> cur = g;
  for (int step = 1; step < k; ++step) {
    std::vector<Polynomial> nxt;
    nxt.reserve(cur.size() * g.size());
    for (const auto& a : cur)
      for (const auto& b : g) nxt.push_back(a.mul(b));
    cur = std::move(nxt);
    if (gens_all_monomial(cur)) {
      std::vector<Monomial> ms;
      for (const auto& f : cur) ms.push_back(f.lead_mono());
      cur = prune_monomial_gens(R, std::move(ms));
    }
  }
  return make_ideal(R, std::move(cur));
}

std::uint64_t frobenius_exponent(const RingPtr& ring, int e) {
  std::uint64_t p = ring->field().characteristic();
  if (p == 0)
    fail_pre("E_CHAR_ZERO", "bracket powers need positive characteristic");
  if (e < 0) fail_pre("E_NEGATIVE_EXPONENT", "negative Frobenius exponent");
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > static_cast<std::uint64_t>(kMaxExponent))
      fail_pre("E_EXPONENT_OVERFLOW", "Frobenius power exceeds exponent bound");
    q *= p;
  }
  return q;
}

IdealPtr frobenius_power(const IdealPtr& I, int e) {
  const RingPtr& R = I->ring();
  std::uint64_t q = frobenius_exponent(R, e);
  std::vector<Polynomial> out;
  out.reserve(I->gens().size());
  for (const auto& g : I->gens()) out.push_back(g.pow(q));
  return make_ideal(R, std::move(out));
}

IdealPtr ideal_sum(const IdealPtr& a, const IdealPtr& b) {
  require_same_ring(a->ring(), b->ring());
  std::vector<Polynomial> gens = a->gens();
  gens.insert(gens.end(), b->gens().begin(), b->gens().end());
  return make_ideal(a->ring(), std::move(gens));
}

IdealPtr ideal_product(const IdealPtr& a, const IdealPtr& b) {
  require_same_ring(a->ring(), b->ring());
  std::vector<Polynomial> gens;
  gens.reserve(a->gens().size() * b->gens().size());
  for (const auto& f : a->gens())
    for (const auto& g : b->gens()) gens.push_back(f.mul(g));
  return make_ideal(a->ring(), std::move(gens));
}

IdealPtr monomial_radical(const IdealPtr& I) {
  if (!I->is_monomial())
    fail_pre("E_NOT_MONOMIAL", "radical is implemented for monomial ideals only");
  std::vector<Monomial> ms;
  for (const auto& g : I->gb()) ms.push_back(g.lead_mono().radical());
  return make_ideal(I->ring(), prune_monomial_gens(I->ring(), std::move(ms)));
}

// ---- associated primes of monomial ideals ----

namespace {

using VarSet = std::vector<int>;

VarSet support_of(const Monomial& m) {
  VarSet s;
  for (std::size_t i = 0; i < m.nvars(); ++i)
    if (m[i] > 0) s.push_back(static_cast<int>(i));
  return s;
}

// Leaves of the splitting recursion: ideals generated by pure variable
// powers, which are primary to the prime on their support.
void split_components(const RingPtr& R, std::vector<Monomial> gens,
                      std::vector<std::vector<Monomial>>& out) {
  std::vector<Polynomial> pruned = prune_monomial_gens(R, std::move(gens));
  gens.clear();
  for (const auto& f : pruned) gens.push_back(f.lead_mono());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    VarSet sup = support_of(gens[gi]);
    if (sup.size() < 2) continue;
    // split off the first variable's pure power
    std::vector<Exponent> e1(R->nvars(), 0), e2(R->nvars(), 0);
    for (std::size_t i = 0; i < R->nvars(); ++i) {
      if (static_cast<int>(i) == sup[0])
        e1[i] = gens[gi][i];
      else
        e2[i] = gens[gi][i];
    }
    std::vector<Monomial> a = gens, b = gens;
    a[gi] = Monomial(e1);
    b[gi] = Monomial(e2);
    split_components(R, std::move(a), out);
    split_components(R, std::move(b), out);
    return;
  }
  out.push_back(std::move(gens));
}

}  // namespace

std::vector<std::vector<int>> monomial_associated_primes(const IdealPtr& I) {
  if (!I->is_monomial())
    fail_pre("E_NOT_MONOMIAL", "associated primes are implemented for monomial ideals only");
  const RingPtr& R = I->ring();
  if (I->is_zero_ideal() || I->is_unit()) return {};
  std::vector<Monomial> gens;
  for (const auto& g : I->gb()) gens.push_back(g.lead_mono());
  std::vector<std::vector<Monomial>> comps;
  split_components(R, std::move(gens), comps);
  // Group primary components by radical; the P-primary part is their meet.
  std::map<VarSet, std::vector<Polynomial>> primary;
  for (auto& c : comps) {
    VarSet rad;
    std::set<int> vars;
    for (const auto& m : c)
      for (int v : support_of(m)) vars.insert(v);
    rad.assign(vars.begin(), vars.end());
    std::vector<Polynomial> polys;
    for (const auto& m : c) polys.push_back(poly_monomial(R, m, R->field().one()));
    auto it = primary.find(rad);
    if (it == primary.end())
      primary[rad] = std::move(polys);
    else
      it->second = ideal_intersect(it->second, polys);
  }
  // Irredundant decomposition: drop components containing the meet of the
  // others; survivors' radicals are the associated primes.
  std::vector<VarSet> keys;
  for (const auto& [k, v] : primary) keys.push_back(k);
  std::vector<bool> dropped(keys.size(), false);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::vector<Polynomial> meet;
    bool first = true;
    for (std::size_t j = 0; j < keys.size(); ++j) {
      if (i == j || dropped[j]) continue;
      const auto& comp = primary[keys[j]];
      meet = first ? comp : ideal_intersect(meet, comp);
      first = false;
    }
    if (first) continue;  // only one component left
    auto gb_i = ideal_gb(primary[keys[i]]);
    bool contains_meet = true;
    for (const auto& f : meet)
      if (!ideal_contains(gb_i, f)) {
        contains_meet = false;
        break;
      }
    if (contains_meet) dropped[i] = true;
  }
  std::vector<VarSet> out;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!dropped[i]) out.push_back(keys[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> embedded_primes(const IdealPtr& I) {
  auto ass = monomial_associated_primes(I);
  std::vector<std::vector<int>> out;
  for (const auto& p : ass) {
    for (const auto& q : ass) {
      if (q.size() >= p.size()) continue;
      if (std::includes(p.begin(), p.end(), q.begin(), q.end())) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

// ---- Hilbert series numerator ----

namespace {

std::map<std::int64_t, std::int64_t> hilb_rec(std::vector<Monomial> gens, std::size_t nvars) {
  // prune
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool red = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) kept.push_back(m);
  }
  if (kept.empty()) return {{0, 1}};
  if (!kept.empty() && kept[0].is_one()) return {};
  if (kept.size() == 1) {
    // 1 - t^deg
    std::map<std::int64_t, std::int64_t> r{{0, 1}};
    r[kept[0].degree()] += -1;
    return r;
  }
  Monomial m = kept.back();
  kept.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(kept.size());
  for (const auto& g : kept) colon.push_back(g.div(g.gcd(m)));
  auto a = hilb_rec(kept, nvars);
  auto b = hilb_rec(std::move(colon), nvars);
  for (const auto& [d, c] : b) {
    a[d + m.degree()] -= c;
    if (a[d + m.degree()] == 0) a.erase(d + m.degree());
  }
  return a;
}

}  // namespace

std::map<std::int64_t, std::int64_t> hilbert_numerator(std::vector<Monomial> gens,
                                                       std::size_t nvars) {
  return hilb_rec(std::move(gens), nvars);
}

std::map<std::int64_t, std::int64_t> hilbert_numerator(const IdealPtr& I) {
  return hilbert_numerator(lead_monomials(I->gb()), I->ring()->nvars());
}

}  // namespace cofull
