#include "cofull/field.hpp"

#include <numeric>

namespace cofull {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail_pre("E_COEFF_OVERFLOW", "rational coefficient overflow in addition");
  return r;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail_pre("E_COEFF_OVERFLOW", "rational coefficient overflow in multiplication");
  return r;
}

Field::Field(std::uint64_t p) : p_(p) {
  if (p != 0) {
    if (!is_prime_u64(p))
      fail_pre("E_NOT_PRIME", "field characteristic " + std::to_string(p) + " is not prime");
    if (p > (1ull << 62))
      fail_pre("E_CHAR_TOO_LARGE", "field characteristic does not fit the supported word range");
  }
}

FieldElement Field::from_int(std::int64_t n) const {
  if (p_ == 0) return {n, 1};
  std::int64_t m = n % static_cast<std::int64_t>(p_);
  if (m < 0) m += static_cast<std::int64_t>(p_);
  return {m, 1};
}

FieldElement Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) fail_pre("E_DIV_ZERO", "zero denominator");
  if (p_ != 0) return div(from_int(num), from_int(den));
  if (num == 0) return {0, 1};
  if (den < 0) { num = -num; den = -den; }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  if (p_ != 0) {
    std::int64_t r = a.num + b.num;
    if (r >= static_cast<std::int64_t>(p_)) r -= static_cast<std::int64_t>(p_);
    return {r, 1};
  }
  std::int64_t num = checked_add_i64(checked_mul_i64(a.num, b.den), checked_mul_i64(b.num, a.den));
  std::int64_t den = checked_mul_i64(a.den, b.den);
  return from_fraction(num, den);
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  return add(a, neg(b));
}

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (p_ != 0)
    return {static_cast<std::int64_t>(mulmod_u64(static_cast<std::uint64_t>(a.num),
                                                 static_cast<std::uint64_t>(b.num), p_)),
            1};
  if (a.num == 0 || b.num == 0) return {0, 1};
  // Cross-reduce first to keep intermediates small.
  std::int64_t an = a.num, ad = a.den, bn = b.num, bd = b.den;
  std::int64_t g1 = std::gcd(an < 0 ? -an : an, bd);
  std::int64_t g2 = std::gcd(bn < 0 ? -bn : bn, ad);
  return from_fraction(checked_mul_i64(an / g1, bn / g2), checked_mul_i64(ad / g2, bd / g1));
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement Field::neg(const FieldElement& a) const {
  if (a.num == 0) return {0, 1};
  if (p_ != 0) return {static_cast<std::int64_t>(p_) - a.num, 1};
  return {-a.num, a.den};
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a.num == 0) fail_pre("E_DIV_ZERO", "division by zero field element");
  if (p_ == 0) {
    std::int64_t num = a.den, den = a.num;
    if (den < 0) { num = -num; den = -den; }
    return {num, den};
  }
  return {static_cast<std::int64_t>(powmod_u64(static_cast<std::uint64_t>(a.num), p_ - 2, p_)), 1};
}

FieldElement Field::pow(const FieldElement& a, std::uint64_t k) const {
  FieldElement r = one(), base = a;
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string Field::to_string(const FieldElement& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace cofull
