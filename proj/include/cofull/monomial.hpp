#ifndef COFULL_MONOMIAL_HPP
#define COFULL_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "cofull/error.hpp"

namespace cofull {

using Exponent = std::int32_t;

// Largest exponent the engine accepts; additions past this fail loudly
// instead of wrapping.  Big enough for Frobenius powers used in practice.
inline constexpr Exponent kMaxExponent = 1 << 26;

// Exponent vector with cached total degree.  Immutable by convention:
// operations return new values.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  Monomial mul(const Monomial& o) const;
  // Exact division; requires o.divides(*this).
  Monomial div(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // *this | o
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial pow(Exponent k) const;
  // Support as squarefree monomial.
  Monomial radical() const;

  bool operator==(const Monomial&) const = default;

private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

// All monomials of total degree exactly d in nvars variables,
// in lexicographically decreasing exponent order.  Deterministic.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d);
std::int64_t count_monomials_of_degree(std::size_t nvars, std::int64_t d);

}  // namespace cofull

#endif
