#include "cofull/monomial.hpp"

#include <algorithm>

namespace cofull {

namespace {
Exponent checked_exp_add(Exponent a, Exponent b) {
  std::int64_t s = static_cast<std::int64_t>(a) + b;
  if (s > kMaxExponent)
    fail_pre("E_EXPONENT_OVERFLOW", "monomial exponent exceeds supported bound");
  return static_cast<Exponent>(s);
}
}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0 || e > kMaxExponent)
      fail_pre("E_EXPONENT_OVERFLOW", "monomial exponent out of range");
    degree_ += e;
  }
}

Monomial Monomial::mul(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = checked_exp_add(r.exps_[i], o.exps_[i]);
  r.degree_ = degree_ + o.degree_;
  return r;
}

Monomial Monomial::div(const Monomial& o) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] -= o.exps_[i];
    if (r.exps_[i] < 0)
      fail_internal("E_BAD_DIVISION", "inexact monomial division");
  }
  r.degree_ = degree_ - o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree_ > o.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::min(exps_[i], o.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && o.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::pow(Exponent k) const {
  if (k < 0) fail_pre("E_NEGATIVE_EXPONENT", "negative monomial power");
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    std::int64_t e = static_cast<std::int64_t>(exps_[i]) * k;
    if (e > kMaxExponent)
      fail_pre("E_EXPONENT_OVERFLOW", "monomial exponent exceeds supported bound");
    r.exps_[i] = static_cast<Exponent>(e);
    r.degree_ += e;
  }
  return r;
}

Monomial Monomial::radical() const {
  Monomial r(*this);
  r.degree_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = exps_[i] > 0 ? 1 : 0;
    r.degree_ += r.exps_[i];
  }
  return r;
}

static void enum_rec(std::size_t nvars, std::size_t i, std::int64_t left,
                     std::vector<Exponent>& cur, std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    cur[i] = static_cast<Exponent>(left);
    out.emplace_back(cur);
    return;
  }
  for (std::int64_t e = left; e >= 0; --e) {
    cur[i] = static_cast<Exponent>(e);
    enum_rec(nvars, i + 1, left - e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::int64_t d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(std::vector<Exponent>{});
    return out;
  }
  std::vector<Exponent> cur(nvars, 0);
  enum_rec(nvars, 0, d, cur, out);
  return out;
}

std::int64_t count_monomials_of_degree(std::size_t nvars, std::int64_t d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  // binomial(d + nvars - 1, nvars - 1)
  std::int64_t r = 1;
  for (std::size_t i = 1; i < nvars; ++i) {
    r = r * (d + static_cast<std::int64_t>(i)) / static_cast<std::int64_t>(i);
  }
  return r;
}

}  // namespace cofull
