#include "cofull/order.hpp"

#include <numeric>

namespace cofull {

TermOrder::TermOrder(OrderKind kind, std::size_t nvars) : kind_(kind), perm_(nvars) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

TermOrder::TermOrder(OrderKind kind, std::vector<int> perm) : kind_(kind), perm_(std::move(perm)) {}

namespace {

Cmp lex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& perm, std::size_t from) {
  for (std::size_t i = from; i < perm.size(); ++i) {
    Exponent ea = a[static_cast<std::size_t>(perm[i])];
    Exponent eb = b[static_cast<std::size_t>(perm[i])];
    if (ea != eb) return ea > eb ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

// Reverse lex tail comparison on perm[from..]: larger means the last
// differing exponent is smaller.
Cmp revlex_cmp(const Monomial& a, const Monomial& b, const std::vector<int>& perm, std::size_t from) {
  for (std::size_t i = perm.size(); i-- > from;) {
    Exponent ea = a[static_cast<std::size_t>(perm[i])];
    Exponent eb = b[static_cast<std::size_t>(perm[i])];
    if (ea != eb) return ea < eb ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

std::int64_t deg_from(const Monomial& a, const std::vector<int>& perm, std::size_t from) {
  std::int64_t d = 0;
  for (std::size_t i = from; i < perm.size(); ++i) d += a[static_cast<std::size_t>(perm[i])];
  return d;
}

}  // namespace

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      return lex_cmp(a, b, perm_, 0);
    case OrderKind::GrLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::GT : Cmp::LT;
      return lex_cmp(a, b, perm_, 0);
    case OrderKind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? Cmp::GT : Cmp::LT;
      return revlex_cmp(a, b, perm_, 0);
    case OrderKind::ElimFirst: {
      std::size_t t = static_cast<std::size_t>(perm_[0]);
      if (a[t] != b[t]) return a[t] > b[t] ? Cmp::GT : Cmp::LT;
      std::int64_t da = deg_from(a, perm_, 1), db = deg_from(b, perm_, 1);
      if (da != db) return da > db ? Cmp::GT : Cmp::LT;
      return revlex_cmp(a, b, perm_, 1);
    }
  }
  return Cmp::EQ;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::GrLex: return "grlex";
    case OrderKind::ElimFirst: return "elim1";
  }
  return "?";
}

}  // namespace cofull
