#include <doctest.h>

#include "cofull/polynomial.hpp"

using namespace cofull;

TEST_CASE("prime field arithmetic is canonical") {
  Field f7(7);
  CHECK(f7.add(f7.from_int(3), f7.from_int(5)) == f7.from_int(1));
  CHECK(f7.mul(f7.from_int(3), f7.from_int(5)) == f7.from_int(1));
  CHECK(f7.inv(f7.from_int(4)) == f7.from_int(2));
  CHECK(f7.from_int(-1) == f7.from_int(6));
  for (int a = 1; a < 7; ++a)
    CHECK(f7.mul(f7.from_int(a), f7.inv(f7.from_int(a))) == f7.one());
}

TEST_CASE("rational arithmetic reduces fractions") {
  Field q(0);
  FieldElement half = q.from_fraction(1, 2);
  FieldElement third = q.from_fraction(1, 3);
  FieldElement s = q.add(half, third);
  CHECK(s.num == 5);
  CHECK(s.den == 6);
  CHECK(q.from_fraction(2, -4) == q.from_fraction(-1, 2));
  CHECK(q.to_string(q.from_fraction(-3, 6)) == "-1/2");
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(Field(6), Error);
  CHECK_THROWS_AS(Field(1), Error);
  CHECK_NOTHROW(Field(2));
  CHECK_NOTHROW(Field(101));
}

TEST_CASE("rational overflow is detected, not wrapped") {
  Field q(0);
  FieldElement big = q.from_int((std::int64_t{1} << 62));
  CHECK_THROWS_AS(q.mul(big, big), Error);
}

TEST_CASE("term orders on k[x,y]") {
  TermOrder grevlex(OrderKind::Grevlex, 2);
  TermOrder lex(OrderKind::Lex, 2);
  Monomial x2y(std::vector<Exponent>{2, 1});
  Monomial xy2(std::vector<Exponent>{1, 2});
  Monomial x(std::vector<Exponent>{1, 0});
  Monomial y5(std::vector<Exponent>{0, 5});
  CHECK(grevlex.compare(x2y, xy2) == Cmp::GT);
  CHECK(lex.compare(x, y5) == Cmp::GT);
  // graded lex agrees with grevlex in two variables up to ties
  TermOrder grlex(OrderKind::GrLex, 2);
  CHECK(grlex.compare(x2y, xy2) == Cmp::GT);
  CHECK(grlex.compare(y5, x2y) == Cmp::GT);
}

TEST_CASE("variable precedence permutation flips lex") {
  TermOrder lex_yx(OrderKind::Lex, std::vector<int>{1, 0});
  Monomial x(std::vector<Exponent>{1, 0});
  Monomial y(std::vector<Exponent>{0, 1});
  CHECK(lex_yx.compare(x, y) == Cmp::LT);
}

TEST_CASE("exponent overflow detected") {
  Monomial big(std::vector<Exponent>{kMaxExponent, 0});
  Monomial x(std::vector<Exponent>{1, 0});
  CHECK_THROWS_AS(big.mul(x), Error);
}

TEST_CASE("polynomial product over Q") {
  auto R = make_ring(0, {"x", "y"});
  Polynomial x = poly_variable(R, 0), y = poly_variable(R, 1);
  Polynomial prod = x.add(y).mul(x.sub(y));
  CHECK(prod == x.mul(x).sub(y.mul(y)));
  CHECK(prod.to_string() == "x^2 - y^2");
}

TEST_CASE("freshman dream over F_2") {
  auto R = make_ring(2, {"x", "y"});
  Polynomial x = poly_variable(R, 0), y = poly_variable(R, 1);
  Polynomial sq = x.add(y).pow(2);
  CHECK(sq == x.pow(2).add(y.pow(2)));
}

namespace {
// Independent oracle: multinomial coefficient n! / (a! b! c!) mod p via
// plain integer arithmetic.
long long multinomial_mod(int n, int a, int b, int c, long long p) {
  long long num = 1;
  for (int i = 2; i <= n; ++i) num = num * i % (p * 1000000007LL);
  auto fact = [&](int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  long long exact = 1;
  // n <= 6 here, exact fits easily
  long long nf = fact(n);
  exact = nf / (fact(a) * fact(b) * fact(c));
  return exact % p;
}
}  // namespace

TEST_CASE("multinomial coefficient of a sixth power over F_7") {
  auto R = make_ring(7, {"x", "y", "z"});
  Polynomial f = poly_variable(R, 0).pow(3).add(poly_variable(R, 1).pow(3)).add(
      poly_variable(R, 2).pow(3));
  Polynomial f6 = f.pow(6);
  Monomial target(std::vector<Exponent>{6, 6, 6});
  FieldElement found = R->field().zero();
  for (const auto& t : f6.terms())
    if (t.mono == target) found = t.coeff;
  long long expect = multinomial_mod(6, 2, 2, 2, 7);
  CHECK(expect == 90 % 7);
  CHECK(found == R->field().from_int(expect));
}

TEST_CASE("Frobenius fast path agrees with repeated squaring") {
  auto R = make_ring(5, {"x", "y"});
  Polynomial f = poly_variable(R, 0).add(poly_variable(R, 1).pow(2)).add(
      poly_constant(R, R->field().from_int(3)));
  Polynomial slow = f;
  for (int i = 1; i < 25; ++i) slow = slow.mul(f);
  CHECK(f.pow(25) == slow);
}

TEST_CASE("canonical printing round-trips through the parser") {
  auto R = make_ring(5, {"x", "y", "z"});
  Polynomial f = parse_polynomial(R, "x^2*y + 4*z^3 + 2");
  CHECK(f.to_string() == "x^2*y + 4*z^3 + 2");
  CHECK(parse_polynomial(R, f.to_string()) == f);
  auto Q = make_ring(0, {"x", "y"});
  Polynomial g = parse_polynomial(Q, "x^2 - 3/2*y + 1");
  CHECK(parse_polynomial(Q, g.to_string()) == g);
}

TEST_CASE("parser rejects garbage with an offset") {
  auto R = make_ring(5, {"x"});
  CHECK_THROWS_AS(parse_polynomial(R, "x + "), Error);
  CHECK_THROWS_AS(parse_polynomial(R, "w"), Error);
  CHECK_THROWS_AS(parse_polynomial(R, "x ^ -2"), Error);
}

TEST_CASE("ring mismatch raises") {
  auto R1 = make_ring(5, {"x", "y"});
  auto R2 = make_ring(7, {"x", "y"});
  Polynomial a = poly_variable(R1, 0);
  Polynomial b = poly_variable(R2, 0);
  CHECK_THROWS_AS(a.add(b), Error);
}

TEST_CASE("homogeneity and degree") {
  auto R = make_ring(5, {"x", "y"});
  CHECK(parse_polynomial(R, "x^2 + x*y").is_homogeneous());
  CHECK_FALSE(parse_polynomial(R, "x^2 + x").is_homogeneous());
  CHECK(parse_polynomial(R, "x^3*y + y^4").degree() == 4);
  CHECK(poly_zero(R).degree() == -1);
}
