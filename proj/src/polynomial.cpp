#include "cofull/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace cofull {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  const TermOrder& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) == Cmp::GT;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  const Field& k = ring_->field();
  for (auto& t : terms_) {
    if (t.coeff.is_zero()) continue;
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff = k.add(merged.back().coeff, t.coeff);
      if (merged.back().coeff.is_zero()) merged.pop_back();
    } else {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) fail_internal("E_ZERO_LEAD", "lead term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::int64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Polynomial Polynomial::add(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const TermOrder& ord = ring_->order();
  const Field& k = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    Cmp c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c == Cmp::GT) {
      out.push_back(terms_[i++]);
    } else if (c == Cmp::LT) {
      out.push_back(o.terms_[j++]);
    } else {
      FieldElement s = k.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!s.is_zero()) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  Polynomial r(ring_);
  r.terms_ = std::move(out);
  return r;
}

Polynomial Polynomial::sub(const Polynomial& o) const { return add(o.neg()); }

Polynomial Polynomial::neg() const {
  Polynomial r(*this);
  const Field& k = ring_->field();
  for (auto& t : r.terms_) t.coeff = k.neg(t.coeff);
  return r;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(*this);
  const Field& k = ring_->field();
  for (auto& t : r.terms_) t.coeff = k.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::mono_mul(const Monomial& m, const FieldElement& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  const Field& k = ring_->field();
  for (const auto& t : terms_)
    r.terms_.push_back({t.mono.mul(m), k.mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * o.terms_.size());
  const Field& k = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prods.push_back({a.mono.mul(b.mono), k.mul(a.coeff, b.coeff)});
  return Polynomial(ring_, std::move(prods));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  const Field& k = ring_->field();
  if (e == 0) return poly_constant(ring_, k.one());
  std::uint64_t p = k.characteristic();
  // (sum c_i m_i)^(p^s) = sum c_i^(p^s) m_i^(p^s) in characteristic p.
  if (p > 1) {
    std::uint64_t q = 1;
    std::uint64_t rest = e;
    while (rest % p == 0 && q <= e) {
      q *= p;
      rest /= p;
    }
    if (q > 1) {
      Polynomial frob(ring_);
      std::vector<Term> ts;
      ts.reserve(terms_.size());
      for (const auto& t : terms_) {
        if (q > static_cast<std::uint64_t>(kMaxExponent))
          fail_pre("E_EXPONENT_OVERFLOW", "Frobenius power exceeds exponent bound");
        ts.push_back({t.mono.pow(static_cast<Exponent>(q)), k.pow(t.coeff, q)});
      }
      frob = Polynomial(ring_, std::move(ts));
      return frob.pow(rest);
    }
  }
  Polynomial base = *this;
  Polynomial r = poly_constant(ring_, k.one());
  while (e) {
    if (e & 1) r = r.mul(base);
    base = base.mul(base);
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(ring_->field().inv(lead_coeff()));
}

Polynomial poly_zero(const RingPtr& ring) { return Polynomial(ring); }

Polynomial poly_constant(const RingPtr& ring, const FieldElement& c) {
  if (c.is_zero()) return Polynomial(ring);
  return Polynomial(ring, {{Monomial(ring->nvars()), c}});
}

Polynomial poly_variable(const RingPtr& ring, std::size_t var) {
  std::vector<Exponent> e(ring->nvars(), 0);
  e[var] = 1;
  return Polynomial(ring, {{Monomial(std::move(e)), ring->field().one()}});
}

Polynomial poly_monomial(const RingPtr& ring, const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return Polynomial(ring);
  return Polynomial(ring, {{m, c}});
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& k = ring_->field();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    FieldElement c = t.coeff;
    if (first) {
      if (k.characteristic() == 0 && c.num < 0) {
        out += "-";
        c = k.neg(c);
      }
    } else {
      if (k.characteristic() == 0 && c.num < 0) {
        out += " - ";
        c = k.neg(c);
      } else {
        out += " + ";
      }
    }
    first = false;
    bool coeff_is_one = (c.num == 1 && c.den == 1);
    if (t.mono.is_one()) {
      out += k.to_string(c);
    } else {
      if (!coeff_is_one) {
        out += k.to_string(c);
        out += "*";
      }
      bool first_var = true;
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        Exponent e = t.mono[i];
        if (e == 0) continue;
        if (!first_var) out += "*";
        first_var = false;
        out += ring_->var_name(i);
        if (e > 1) {
          out += "^";
          out += std::to_string(e);
        }
      }
    }
  }
  return out;
}

// ---- parsing ----

namespace {

struct PolyParser {
  const RingPtr& ring;
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail_parse("E_POLY_PARSE", msg + " at offset " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  std::int64_t parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) err("expected integer");
    std::int64_t v = 0;
    for (std::size_t i = start; i < pos; ++i) {
      v = checked_mul_i64(v, 10);
      v = checked_add_i64(v, s[i] - '0');
    }
    return v;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos >= s.size()) err("unexpected end of polynomial");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Polynomial f = parse_sum();
      if (!eat(')')) err("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t num = parse_int();
      if (eat('/')) {
        std::int64_t den = parse_int();
        return poly_constant(ring, ring->field().from_fraction(num, den));
      }
      return poly_constant(ring, ring->field().from_int(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      int vi = ring->var_index(name);
      if (vi < 0) err("unknown variable '" + name + "'");
      return poly_variable(ring, static_cast<std::size_t>(vi));
    }
    err("unexpected character in polynomial");
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      std::int64_t e = parse_int();
      if (e < 0) err("negative exponent");
      return base.pow(static_cast<std::uint64_t>(e));
    }
    return base;
  }

  Polynomial parse_product() {
    Polynomial f = parse_power();
    for (;;) {
      skip_ws();
      if (eat('*')) {
        f = f.mul(parse_power());
        continue;
      }
      // implicit product before '(' or an identifier, e.g. "3x" or "2(x+y)"
      if (pos < s.size() &&
          (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '(')) {
        f = f.mul(parse_power());
        continue;
      }
      return f;
    }
  }

  Polynomial parse_sum() {
    skip_ws();
    bool neg_first = eat('-');
    Polynomial f = parse_product();
    if (neg_first) f = f.neg();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        f = f.add(parse_product());
      } else if (eat('-')) {
        f = f.sub(parse_product());
      } else {
        return f;
      }
    }
  }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  PolyParser p{ring, text};
  Polynomial f = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) p.err("trailing input after polynomial");
  return f;
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
  if (f.ring().get() == target.get() || f.ring()->same_as(*target)) {
    Polynomial g = f;
    if (f.ring().get() != target.get()) {
      std::vector<Term> ts = f.terms();
      return Polynomial(target, std::move(ts));
    }
    return g;
  }
  if (!(f.ring()->field() == target->field()))
    fail_pre("E_RING_MISMATCH", "coefficient fields differ");
  std::vector<int> where(f.ring()->nvars(), -1);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    where[i] = target->var_index(f.ring()->var_name(i));
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(target->nvars(), 0);
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (where[i] < 0)
        fail_pre("E_RING_MISMATCH",
                 "variable " + f.ring()->var_name(i) + " is absent from the target ring");
      e[static_cast<std::size_t>(where[i])] = t.mono[i];
    }
    out.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

}  // namespace cofull
