#ifndef COFULL_IDEAL_HPP
#define COFULL_IDEAL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "cofull/groebner.hpp"

namespace cofull {

// Ideal with lazily cached invariants.  The caches are guarded: concurrent
// readers see either nothing or a completed value.
class IdealHandle {
public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  const std::vector<Polynomial>& gb() const;
  bool is_zero_ideal() const;
  bool is_unit() const;
  bool is_monomial() const;            // some generating set of monomials
  bool is_squarefree_monomial() const;
  bool is_homogeneous() const;

  // Minimal homogeneous generators, found degree by degree; elements of
  // m*I are excluded, ties broken by the term order.
  const std::vector<Polynomial>& min_gens() const;
  std::size_t mu() const { return min_gens().size(); }
  std::int64_t delta() const;  // largest degree of a minimal generator

  int dim() const;     // Krull dimension of S/I; -1 for the unit ideal
  int height() const;  // nvars - dim

  bool contains(const Polynomial& f) const { return ideal_contains(gb(), f); }
  bool same_ideal(const IdealHandle& o) const;

private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<Polynomial>> gb_;
  mutable std::optional<std::vector<Polynomial>> min_gens_;
  mutable std::optional<int> dim_;
};

using IdealPtr = std::shared_ptr<IdealHandle>;

IdealPtr make_ideal(RingPtr ring, std::vector<Polynomial> gens);

// I^k by k-fold products of generators (k = 0 gives the unit ideal);
// generators are pruned to a minimal set when that is cheap.
IdealPtr ordinary_power(const IdealPtr& I, int k);

// Bracket power I^[p^e]: generators raised to the p^e-th power.
// Requires positive characteristic.
IdealPtr frobenius_power(const IdealPtr& I, int e);
std::uint64_t frobenius_exponent(const RingPtr& ring, int e);

// Sum and product of ideals.
IdealPtr ideal_sum(const IdealPtr& a, const IdealPtr& b);
IdealPtr ideal_product(const IdealPtr& a, const IdealPtr& b);

// Radical of a monomial ideal: squarefree parts, pruned.
IdealPtr monomial_radical(const IdealPtr& I);

// Associated primes of S/I for monomial I, as sorted variable index sets,
// found by recursive splitting on a generator that mixes variables and
// pruning to an irredundant primary decomposition.
std::vector<std::vector<int>> monomial_associated_primes(const IdealPtr& I);
// Members of monomial_associated_primes strictly containing another one.
std::vector<std::vector<int>> embedded_primes(const IdealPtr& I);

// Numerator of the Hilbert series of S/(monomial ideal) over (1-t)^n.
std::map<std::int64_t, std::int64_t> hilbert_numerator(std::vector<Monomial> gens,
                                                       std::size_t nvars);
// Same, via the lead terms of gb(I).
std::map<std::int64_t, std::int64_t> hilbert_numerator(const IdealPtr& I);

}  // namespace cofull

#endif
