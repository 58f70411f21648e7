#ifndef COFULL_FIELD_HPP
#define COFULL_FIELD_HPP

#include <cstdint>
#include <string>

#include "cofull/error.hpp"

namespace cofull {

// A field element is a canonical fraction num/den:
//   over F_p: den == 1 and 0 <= num < p,
//   over Q:   gcd(|num|, den) == 1 and den > 0.
// Elements are plain values; all arithmetic goes through Field.
struct FieldElement {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_zero() const { return num == 0; }
  bool operator==(const FieldElement&) const = default;
};

// Prime field F_p (p a machine-word prime) or Q (characteristic 0).
class Field {
public:
  // p == 0 selects Q, otherwise p must be prime.
  explicit Field(std::uint64_t p = 0);

  std::uint64_t characteristic() const { return p_; }
  bool is_prime_field() const { return p_ != 0; }
  bool operator==(const Field&) const = default;

  FieldElement zero() const { return {0, 1}; }
  FieldElement one() const { return {1, 1}; }
  FieldElement from_int(std::int64_t n) const;
  FieldElement from_fraction(std::int64_t num, std::int64_t den) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, std::uint64_t k) const;

  std::string to_string(const FieldElement& a) const;

private:
  std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

// Overflow-checked int64 helpers used by the rational path.
std::int64_t checked_add_i64(std::int64_t a, std::int64_t b);
std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b);

}  // namespace cofull

#endif
