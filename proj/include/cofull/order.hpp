#ifndef COFULL_ORDER_HPP
#define COFULL_ORDER_HPP

#include <string>
#include <vector>

#include "cofull/monomial.hpp"

namespace cofull {

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

enum class OrderKind {
  Grevlex,   // degree, then reverse lex (default)
  Lex,
  GrLex,     // degree, then lex
  ElimFirst  // block order: exponent of variable perm[0] first, then Grevlex
             // on the remaining variables; internal, used for elimination
};

// Term order with an explicit variable precedence: perm[0] is the most
// significant variable index, perm[n-1] the least.
class TermOrder {
public:
  TermOrder() = default;
  TermOrder(OrderKind kind, std::size_t nvars);
  TermOrder(OrderKind kind, std::vector<int> perm);

  OrderKind kind() const { return kind_; }
  const std::vector<int>& perm() const { return perm_; }
  std::size_t nvars() const { return perm_.size(); }

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }

  std::string name() const;
  bool operator==(const TermOrder&) const = default;

private:
  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<int> perm_;
};

}  // namespace cofull

#endif
