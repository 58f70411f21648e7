#include "cofull/cech.hpp"

#include <algorithm>
#include <sstream>

namespace cofull {

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

// binomial coefficient mod p by Pascal's rule; m stays near p in practice
std::int64_t binom_mod(std::int64_t m, std::int64_t k, std::int64_t p) {
  if (k < 0 || k > m) return 0;
  std::vector<std::int64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (std::int64_t i = 1; i <= m; ++i)
    for (std::int64_t j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] =
          (row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)]) % p;
  return row[static_cast<std::size_t>(k)];
}

void check_params(int d, std::int64_t p) {
  if (d < 1) fail_pre("E_BAD_DEGREE", "the Fermat exponent must be at least 1");
  if (p < 2) fail_pre("E_BAD_PRIME", "the characteristic must be a prime");
  if (static_cast<std::int64_t>(d) % p == 0)
    fail_pre("E_P_DIVIDES_D", "the characteristic divides the Fermat exponent");
}

std::string term_string(std::int64_t a, std::int64_t b, std::int64_t c,
                        std::int64_t coeff) {
  std::ostringstream os;
  if (coeff != 1) os << coeff << "*";
  if (a == 0)
    os << "1";
  else if (a == 1)
    os << "z";
  else
    os << "z^" << a;
  os << "/(";
  os << "x";
  if (b != 1) os << "^" << b;
  os << "*y";
  if (c != 1) os << "^" << c;
  os << ")";
  return os.str();
}

}  // namespace

bool CechClass::is_homogeneous() const {
  bool first = true;
  std::int64_t deg = 0;
  for (const auto& [key, coeff] : terms_) {
    (void)coeff;
    std::int64_t t = key[0] - key[1] - key[2];
    if (first) {
      deg = t;
      first = false;
    } else if (t != deg) {
      return false;
    }
  }
  return true;
}

std::int64_t CechClass::degree() const {
  if (terms_.empty() || !is_homogeneous())
    fail_pre("E_NOT_HOMOGENEOUS", "degree of a non homogeneous Cech class");
  const auto& key = terms_.begin()->first;
  return key[0] - key[1] - key[2];
}

void CechClass::add_term(std::int64_t a, std::int64_t b, std::int64_t c,
                         std::int64_t coeff) {
  if (d_ < 1 || p_ < 2) fail_pre("E_BAD_CLASS", "Cech class without parameters");
  coeff = mod_norm(coeff, p_);
  if (coeff == 0 || b < 1 || c < 1 || a < 0) return;
  if (a >= d_) {
    // z^a = z^r (z^d)^m = z^r (-x^d - y^d)^m
    std::int64_t m = a / d_;
    std::int64_t r = a % d_;
    std::int64_t sign = (m % 2 == 0) ? 1 : p_ - 1;
    for (std::int64_t k = 0; k <= m; ++k) {
      std::int64_t bb = b - d_ * k;
      std::int64_t cc = c - d_ * (m - k);
      if (bb < 1 || cc < 1) continue;
      std::int64_t t = sign * binom_mod(m, k, p_) % p_ * coeff % p_;
      add_term(r, bb, cc, t);
    }
    return;
  }
  std::array<std::int64_t, 3> key{a, b, c};
  std::int64_t v = mod_norm(terms_[key] + coeff, p_);
  if (v == 0)
    terms_.erase(key);
  else
    terms_[key] = v;
}

std::int64_t CechClass::coeff_of(std::int64_t a, std::int64_t b, std::int64_t c) const {
  auto it = terms_.find({a, b, c});
  return it == terms_.end() ? 0 : it->second;
}

CechClass& CechClass::operator+=(const CechClass& other) {
  if (d_ == 0 && p_ == 0) {
    d_ = other.d_;
    p_ = other.p_;
  }
  if (d_ != other.d_ || p_ != other.p_)
    fail_pre("E_CLASS_MISMATCH", "Cech classes from different parameter pairs");
  for (const auto& [key, coeff] : other.terms_) add_term(key[0], key[1], key[2], coeff);
  return *this;
}

CechClass CechClass::operator+(const CechClass& other) const {
  CechClass out = *this;
  out += other;
  return out;
}

CechClass CechClass::scaled(std::int64_t c) const {
  CechClass out(d_, static_cast<std::uint64_t>(p_));
  for (const auto& [key, coeff] : terms_)
    out.add_term(key[0], key[1], key[2], mod_norm(coeff * mod_norm(c, p_), p_));
  return out;
}

std::string CechClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    if (!first) os << " + ";
    os << term_string(key[0], key[1], key[2], coeff);
    first = false;
  }
  return os.str();
}

std::vector<CechClass> cech_basis(int d, std::uint64_t p, std::int64_t j) {
  check_params(d, static_cast<std::int64_t>(p));
  std::vector<CechClass> out;
  for (std::int64_t a = std::max<std::int64_t>(0, j + 2); a <= d - 1; ++a)
    for (std::int64_t b = 1; a - b - j >= 1; ++b) {
      CechClass cls(d, p);
      cls.add_term(a, b, a - b - j, 1);
      out.push_back(std::move(cls));
    }
  return out;
}

CechClass frobenius_on_class(const CechClass& cls) {
  check_params(cls.d(), cls.p());
  CechClass out(cls.d(), static_cast<std::uint64_t>(cls.p()));
  for (const auto& [key, coeff] : cls.terms()) {
    if (key[0] > kMaxExponent / cls.p() || key[1] > kMaxExponent / cls.p() ||
        key[2] > kMaxExponent / cls.p())
      fail_pre("E_EXPONENT_OVERFLOW", "Frobenius image exponent is out of range");
    // coeff^p = coeff over the prime field
    out.add_term(key[0] * cls.p(), key[1] * cls.p(), key[2] * cls.p(), coeff);
  }
  return out;
}

CechClass class_multiply(const CechClass& cls, std::int64_t dx, std::int64_t dy,
                         std::int64_t dz) {
  if (dx < 0 || dy < 0 || dz < 0)
    fail_pre("E_BAD_MONOMIAL", "multiplication is by a ring monomial");
  CechClass out(cls.d(), static_cast<std::uint64_t>(cls.p()));
  for (const auto& [key, coeff] : cls.terms())
    out.add_term(key[0] + dz, key[1] - dx, key[2] - dy, coeff);
  return out;
}

namespace {

std::int64_t rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    // scale pivot row to 1 via Fermat inverse
    std::int64_t inv = 1, base = mod_norm(m[r][c], p), e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] = mod_norm(m[r][cc] * inv, p);
    for (std::size_t rr = 0; rr < rows; ++rr) {
      if (rr == r) continue;
      std::int64_t f = mod_norm(m[rr][c], p);
      if (f == 0) continue;
      for (std::size_t cc = 0; cc < cols; ++cc)
        m[rr][cc] = mod_norm(m[rr][cc] - f * m[r][cc], p);
    }
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

std::vector<std::int64_t> coordinates(const CechClass& cls,
                                      const std::vector<CechClass>& basis) {
  std::vector<std::int64_t> coords(basis.size(), 0);
  std::int64_t seen = 0;
  for (const auto& [key, coeff] : cls.terms()) {
    bool found = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const auto& bk = basis[i].terms().begin()->first;
      if (bk == key) {
        coords[i] = coeff;
        found = true;
        break;
      }
    }
    if (!found) fail_internal("E_CECH_BASIS", "class has a term outside the slice basis");
    ++seen;
  }
  (void)seen;
  return coords;
}

}  // namespace

SegreFullness segre_fullness(int d, std::uint64_t p) {
  check_params(d, static_cast<std::int64_t>(p));
  SegreFullness out;
  out.basis0 = cech_basis(d, p, 0);
  out.basis1 = cech_basis(d, p, 1);
  const std::int64_t pp = static_cast<std::int64_t>(p);

  std::size_t n0 = out.basis0.size();
  std::vector<CechClass> images;
  images.reserve(n0);
  out.matrix.assign(n0, std::vector<std::int64_t>(n0, 0));
  for (std::size_t i = 0; i < n0; ++i) {
    CechClass img = frobenius_on_class(out.basis0[i]);
    if (!img.is_zero() && img.degree() != 0)
      fail_internal("E_CECH_DEGREE", "Frobenius moved the degree zero slice");
    std::vector<std::int64_t> col = coordinates(img, out.basis0);
    for (std::size_t r = 0; r < n0; ++r) out.matrix[r][i] = col[r];
    images.push_back(std::move(img));
  }
  out.frobenius_injective =
      n0 == 0 ||
      rank_mod_p(out.matrix, pp) == static_cast<std::int64_t>(n0);

  if (out.basis1.empty()) {
    out.degree_one_covered = true;
  } else {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& img : images) {
      for (int v = 0; v < 3; ++v) {
        CechClass prod = class_multiply(img, v == 0 ? 1 : 0, v == 1 ? 1 : 0,
                                        v == 2 ? 1 : 0);
        if (prod.is_zero()) continue;
        rows.push_back(coordinates(prod, out.basis1));
      }
    }
    out.degree_one_covered =
        !rows.empty() &&
        rank_mod_p(rows, pp) == static_cast<std::int64_t>(out.basis1.size());
  }

  out.full = out.frobenius_injective && out.degree_one_covered;
  return out;
}

}  // namespace cofull
