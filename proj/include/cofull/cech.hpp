#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cofull/error.hpp"
#include "cofull/monomial.hpp"

namespace cofull {

// Degreewise calculus in H^2_m(B) for B = F_p[x,y,z]/(x^d+y^d+z^d), computed
// on the Cech complex of x, y. Classes are spans of monomials z^a/(x^b y^c)
// with 0 <= a <= d-1 and b, c >= 1; a term whose denominator exponent drops
// below 1 is a coboundary and is discarded. z^d rewrites to -x^d-y^d.

class CechClass {
 public:
  CechClass() = default;
  CechClass(int d, std::uint64_t p) : d_(d), p_(static_cast<std::int64_t>(p)) {}

  int d() const { return d_; }
  std::int64_t p() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  // internal degree of every term, meaningful only for homogeneous classes
  bool is_homogeneous() const;
  std::int64_t degree() const;

  // adds coeff * z^a / (x^b y^c), canonicalizing as needed
  void add_term(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t coeff);
  std::int64_t coeff_of(std::int64_t a, std::int64_t b, std::int64_t c) const;
  const std::map<std::array<std::int64_t, 3>, std::int64_t>& terms() const {
    return terms_;
  }

  CechClass& operator+=(const CechClass& other);
  CechClass operator+(const CechClass& other) const;
  CechClass scaled(std::int64_t c) const;
  bool operator==(const CechClass& other) const {
    return d_ == other.d_ && p_ == other.p_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  int d_ = 0;
  std::int64_t p_ = 0;
  std::map<std::array<std::int64_t, 3>, std::int64_t> terms_;
};

// monomial basis of the degree j slice of H^2_m(B); requires p prime to d
std::vector<CechClass> cech_basis(int d, std::uint64_t p, std::int64_t j);

// the p-th power Frobenius action, term by term
CechClass frobenius_on_class(const CechClass& cls);

// multiplication by the ring monomial x^dx y^dy z^dz
CechClass class_multiply(const CechClass& cls, std::int64_t dx, std::int64_t dy,
                         std::int64_t dz);

struct SegreFullness {
  bool full = false;
  bool frobenius_injective = false;  // Frobenius matrix on the degree 0 slice
  bool degree_one_covered = false;   // H^2_1 inside B_1 * F(H^2_0)
  std::vector<std::vector<std::int64_t>> matrix;  // columns F(b_i) in basis0
  std::vector<CechClass> basis0;
  std::vector<CechClass> basis1;
};

// decides cohomological fullness of the Segre product of B with F_p[s,t]
SegreFullness segre_fullness(int d, std::uint64_t p);

}  // namespace cofull
