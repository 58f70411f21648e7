#ifndef COFULL_POLYNOMIAL_HPP
#define COFULL_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cofull/ring.hpp"

namespace cofull {

struct Term {
  Monomial mono;
  FieldElement coeff;
  bool operator==(const Term&) const = default;
};

// Polynomial with terms kept strictly decreasing under the ring order and
// coefficients nonzero.  Values are immutable by convention.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  // Normalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& lead() const;
  const Monomial& lead_mono() const { return lead().mono; }
  const FieldElement& lead_coeff() const { return lead().coeff; }

  std::int64_t degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;

  Polynomial add(const Polynomial& o) const;
  Polynomial sub(const Polynomial& o) const;
  Polynomial neg() const;
  Polynomial scale(const FieldElement& c) const;
  Polynomial mono_mul(const Monomial& m, const FieldElement& c) const;
  Polynomial mul(const Polynomial& o) const;
  // k >= 0; over F_p, k = p^e exponents route through the term-wise
  // Frobenius fast path.
  Polynomial pow(std::uint64_t k) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const {
    return terms_ == o.terms_;
  }

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_zero(const RingPtr& ring);
Polynomial poly_constant(const RingPtr& ring, const FieldElement& c);
Polynomial poly_variable(const RingPtr& ring, std::size_t var);
Polynomial poly_monomial(const RingPtr& ring, const Monomial& m,
                         const FieldElement& c);

// Parses the canonical textual form (names, integer or a/b coefficients,
// + - * ^ and parentheses).  Throws Error(E_POLY_PARSE) with a character
// offset in the message on malformed input.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Transport a polynomial into a ring with a superset of the variables
// (matched by name).  Fails if a used variable is missing in the target.
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

}  // namespace cofull

#endif
