#include "cofull/free_module.hpp"

#include <algorithm>

namespace cofull {

FreeModule::FreeModule(RingPtr ring, std::vector<std::int64_t> gen_degs, ModOrderKind kind)
    : ring_(std::move(ring)), gen_degs_(std::move(gen_degs)), kind_(kind) {
  if (kind_ == ModOrderKind::Schreyer)
    fail_internal("E_ORDER", "Schreyer modules must be built with FreeModule::schreyer");
}

FreeModulePtr FreeModule::schreyer(FreeModulePtr ambient, std::vector<std::int64_t> gen_degs,
                                   std::vector<Monomial> lead_monos, std::vector<int> lead_comps) {
  if (gen_degs.size() != lead_monos.size() || gen_degs.size() != lead_comps.size())
    fail_internal("E_ORDER", "Schreyer data sizes disagree");
  auto m = std::make_shared<FreeModule>(ambient->ring(), std::move(gen_degs), ModOrderKind::POT);
  m->kind_ = ModOrderKind::Schreyer;
  m->ambient_ = std::move(ambient);
  m->lead_monos_ = std::move(lead_monos);
  m->lead_comps_ = std::move(lead_comps);
  return m;
}

Cmp FreeModule::compare(int ca, const Monomial& ma, int cb, const Monomial& mb) const {
  switch (kind_) {
    case ModOrderKind::POT:
      if (ca != cb) return ca < cb ? Cmp::GT : Cmp::LT;
      return ring_->order().compare(ma, mb);
    case ModOrderKind::TOP: {
      Cmp c = ring_->order().compare(ma, mb);
      if (c != Cmp::EQ) return c;
      if (ca != cb) return ca < cb ? Cmp::GT : Cmp::LT;
      return Cmp::EQ;
    }
    case ModOrderKind::Schreyer: {
      Cmp c = ambient_->compare(lead_comps_[static_cast<std::size_t>(ca)],
                                ma.mul(lead_monos_[static_cast<std::size_t>(ca)]),
                                lead_comps_[static_cast<std::size_t>(cb)],
                                mb.mul(lead_monos_[static_cast<std::size_t>(cb)]));
      if (c != Cmp::EQ) return c;
      if (ca != cb) return ca < cb ? Cmp::GT : Cmp::LT;
      return Cmp::EQ;
    }
  }
  return Cmp::EQ;
}

FreeModulePtr make_free_module(RingPtr ring, std::vector<std::int64_t> gen_degs, ModOrderKind kind) {
  return std::make_shared<const FreeModule>(std::move(ring), std::move(gen_degs), kind);
}

FreeElem::FreeElem(FreeModulePtr mod, std::vector<VTerm> terms)
    : mod_(std::move(mod)), terms_(std::move(terms)) {
  const FreeModule& M = *mod_;
  std::sort(terms_.begin(), terms_.end(), [&](const VTerm& a, const VTerm& b) {
    return M.compare(a.comp, a.mono, b.comp, b.mono) == Cmp::GT;
  });
  std::vector<VTerm> merged;
  merged.reserve(terms_.size());
  const Field& k = mod_->ring()->field();
  for (auto& t : terms_) {
    if (t.coeff.is_zero()) continue;
    if (t.comp < 0 || static_cast<std::size_t>(t.comp) >= mod_->rank())
      fail_internal("E_COMPONENT", "module term component out of range");
    if (!merged.empty() && merged.back().comp == t.comp && merged.back().mono == t.mono) {
      merged.back().coeff = k.add(merged.back().coeff, t.coeff);
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

const VTerm& FreeElem::lead() const {
  if (terms_.empty()) fail_internal("E_ZERO_LEAD", "lead term of a zero module element");
  return terms_.front();
}

FreeElem FreeElem::add(const FreeElem& o) const {
  const FreeModule& M = *mod_;
  const Field& k = mod_->ring()->field();
  std::vector<VTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = M.compare(terms_[i].comp, terms_[i].mono, o.terms_[j].comp, o.terms_[j].mono);
    if (c == Cmp::GT) {
      out.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElement s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) out.push_back({terms_[i].comp, terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  FreeElem r(mod_);
  r.terms_ = std::move(out);
  return r;
}

FreeElem FreeElem::sub(const FreeElem& o) const { return add(o.neg()); }

FreeElem FreeElem::neg() const {
  FreeElem r(*this);
  const Field& k = mod_->ring()->field();
  for (auto& t : r.terms_) t.coeff = k.neg(t.coeff);
  return r;
}

FreeElem FreeElem::scale(const FieldElement& c) const {
  if (c.is_zero()) return FreeElem(mod_);
  FreeElem r(*this);
  const Field& k = mod_->ring()->field();
  for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
  return r;
}

FreeElem FreeElem::mono_mul(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return FreeElem(mod_);
  FreeElem r(mod_);
  r.terms_.reserve(terms_.size());
  const Field& k = mod_->ring()->field();
  for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono.mul(m), k.mul(t.coeff, c)});
  return r;
}

FreeElem FreeElem::poly_mul(const Polynomial& f) const {
  FreeElem acc(mod_);
  std::vector<VTerm> prods;
  prods.reserve(terms_.size() * f.size());
  const Field& k = mod_->ring()->field();
  for (const auto& ft : f.terms())
    for (const auto& t : terms_)
      prods.push_back({t.comp, t.mono.mul(ft.mono), k.mul(t.coeff, ft.coeff)});
  return FreeElem(mod_, std::move(prods));
}

FreeElem FreeElem::monic() const {
  if (is_zero()) return *this;
  return scale(mod_->ring()->field().inv(lead().coeff));
}

FreeElem FreeElem::in_module(const FreeModulePtr& target) const {
  if (target->rank() != mod_->rank())
    fail_internal("E_COMPONENT", "module rank mismatch in reorder");
  std::vector<VTerm> ts = terms_;
  return FreeElem(target, std::move(ts));
}

std::int64_t FreeElem::degree() const {
  if (terms_.empty()) fail_internal("E_DEGREE", "degree of the zero element");
  std::int64_t d = terms_[0].mono.degree() + mod_->gen_degs()[static_cast<std::size_t>(terms_[0].comp)];
  for (const auto& t : terms_)
    if (t.mono.degree() + mod_->gen_degs()[static_cast<std::size_t>(t.comp)] != d)
      fail_pre("E_NOT_HOMOGENEOUS", "inhomogeneous module element has no degree");
  return d;
}

bool FreeElem::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_[0].mono.degree() + mod_->gen_degs()[static_cast<std::size_t>(terms_[0].comp)];
  for (const auto& t : terms_)
    if (t.mono.degree() + mod_->gen_degs()[static_cast<std::size_t>(t.comp)] != d) return false;
  return true;
}

Polynomial FreeElem::component(int c) const {
  std::vector<Term> ts;
  for (const auto& t : terms_)
    if (t.comp == c) ts.push_back({t.mono, t.coeff});
  return Polynomial(mod_->ring(), std::move(ts));
}

FreeElem unit_vector(const FreeModulePtr& mod, int comp) {
  return FreeElem(mod, {{comp, Monomial(mod->ring()->nvars()), mod->ring()->field().one()}});
}

FreeElem elem_from_poly(const FreeModulePtr& mod, int comp, const Polynomial& f) {
  std::vector<VTerm> ts;
  ts.reserve(f.size());
  for (const auto& t : f.terms()) ts.push_back({comp, t.mono, t.coeff});
  return FreeElem(mod, std::move(ts));
}

FreeElem elem_from_components(const FreeModulePtr& mod, const std::vector<Polynomial>& comps) {
  if (comps.size() != mod->rank())
    fail_internal("E_COMPONENT", "component count does not match module rank");
  std::vector<VTerm> ts;
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (const auto& t : comps[c].terms())
      ts.push_back({static_cast<int>(c), t.mono, t.coeff});
  return FreeElem(mod, std::move(ts));
}

std::string to_string(const FreeElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (std::size_t c = 0; c < e.module()->rank(); ++c) {
    Polynomial p = e.component(static_cast<int>(c));
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + p.to_string() + ")*e" + std::to_string(c);
  }
  return out;
}

}  // namespace cofull
