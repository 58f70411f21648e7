#ifndef COFULL_RING_HPP
#define COFULL_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "cofull/field.hpp"
#include "cofull/order.hpp"

namespace cofull {

// Polynomial ring descriptor k[x_1..x_n] with a fixed term order.
// Immutable and shared; polynomials hold a pointer to their ring.
class Ring {
public:
  Ring(Field field, std::vector<std::string> vars, TermOrder order);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }
  const TermOrder& order() const { return order_; }
  // -1 when the name is not a variable of this ring.
  int var_index(const std::string& name) const;

  bool same_as(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && order_ == o.order_;
  }

private:
  Field field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> vars,
                  OrderKind order = OrderKind::Grevlex);
RingPtr make_ring(std::uint64_t characteristic, std::vector<std::string> vars, TermOrder order);

// Same coefficients and variables plus one fresh variable named tname in
// front, under the ElimFirst block order.  Used for elimination.
RingPtr extend_ring_elim(const RingPtr& ring, const std::string& tname);

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace cofull

#endif
