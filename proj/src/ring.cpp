#include "cofull/ring.hpp"

#include <numeric>
#include <set>

namespace cofull {

Ring::Ring(Field field, std::vector<std::string> vars, TermOrder order)
    : field_(field), vars_(std::move(vars)), order_(std::move(order)) {
  if (vars_.empty()) fail_pre("E_NO_VARS", "a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) fail_pre("E_BAD_VAR", "empty variable name");
    if (!seen.insert(v).second) fail_pre("E_BAD_VAR", "duplicate variable name " + v);
  }
  if (order_.nvars() != vars_.size())
    fail_internal("E_ORDER_ARITY", "term order arity does not match variable count");
}

int Ring::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> vars, OrderKind order) {
  std::size_t n = vars.size();
  return std::make_shared<const Ring>(Field(characteristic), std::move(vars), TermOrder(order, n));
}

RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> vars, TermOrder order) {
  return std::make_shared<const Ring>(Field(characteristic), std::move(vars), std::move(order));
}

RingPtr extend_ring_elim(const RingPtr& ring, const std::string& tname) {
  std::vector<std::string> vars;
  vars.reserve(ring->nvars() + 1);
  vars.push_back(tname);
  for (const auto& v : ring->vars()) {
    if (v == tname)
      fail_internal("E_BAD_VAR", "elimination variable clashes with a ring variable");
    vars.push_back(v);
  }
  TermOrder ord(OrderKind::ElimFirst, vars.size());
  return std::make_shared<const Ring>(ring->field(), std::move(vars), std::move(ord));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b))
    fail_pre("E_RING_MISMATCH", "operands live in different rings");
}

}  // namespace cofull
