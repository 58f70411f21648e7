#include <algorithm>
#include <functional>

#include "cofull/cech.hpp"
#include "cofull/fullness.hpp"
#include "doctest.h"

using namespace cofull;

namespace {

std::string thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

CechClass one_term(int d, std::uint64_t p, std::int64_t a, std::int64_t b,
                   std::int64_t c, std::int64_t coeff = 1) {
  CechClass cls(d, p);
  cls.add_term(a, b, c, coeff);
  return cls;
}

std::vector<std::string> names(const std::vector<CechClass>& v) {
  std::vector<std::string> out;
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("slice bases of the quartic cohomology module") {
  std::vector<std::string> deg0 = names(cech_basis(4, 5, 0));
  std::sort(deg0.begin(), deg0.end());
  CHECK(deg0 == std::vector<std::string>{"z^2/(x*y)", "z^3/(x*y^2)", "z^3/(x^2*y)"});
  CHECK(names(cech_basis(4, 5, 1)) == std::vector<std::string>{"z^3/(x*y)"});
  CHECK(cech_basis(4, 5, 2).empty());
  CHECK(cech_basis(4, 5, -1).size() == 6);
  CHECK(names(cech_basis(3, 7, 0)) == std::vector<std::string>{"z^2/(x*y)"});
  CHECK(cech_basis(3, 7, 1).empty());
}

TEST_CASE("slice dimensions match the dual ext module of the hypersurface") {
  for (int d : {3, 4}) {
    RingPtr R = make_ring(5, {"x", "y", "z"});
    std::string f = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" +
                    std::to_string(d);
    IdealPtr I = make_ideal(R, {parse_polynomial(R, f)});
    GradedModulePresentation E = ext_presentation(I, 1);
    for (std::int64_t j = -2; j <= 2; ++j)
      CHECK(static_cast<std::int64_t>(cech_basis(d, 5, j).size()) ==
            graded_piece_dim(E, -j - 3));
  }
}

TEST_CASE("canonical reduction drops coboundaries and rewrites top powers") {
  // z * z^3/(x*y) pushes z^4 = -x^4-y^4 whose terms all clear a denominator
  CechClass top = class_multiply(one_term(4, 5, 3, 1, 1), 0, 0, 1);
  CHECK(top.is_zero());
  CHECK(class_multiply(one_term(4, 5, 2, 1, 1), 1, 0, 0).is_zero());
  CHECK(class_multiply(one_term(4, 5, 2, 2, 1), 1, 0, 0) == one_term(4, 5, 2, 1, 1));
  CHECK(class_multiply(one_term(4, 5, 2, 1, 1), 0, 0, 1) == one_term(4, 5, 3, 1, 1));
  // a term entered with z exponent d canonicalizes immediately
  CechClass raw(4, 5);
  raw.add_term(4, 5, 5, 1);
  CechClass expect(4, 5);
  expect.add_term(0, 1, 5, 4);  // -x^4 part
  expect.add_term(0, 5, 1, 4);  // -y^4 part
  CHECK(raw == expect);
}

TEST_CASE("frobenius eigenvalues on the quartic at p equal to five") {
  CechClass u = one_term(4, 5, 2, 1, 1);
  CHECK(frobenius_on_class(u) == u.scaled(2));  // binom(2,1) = 2

  // (z^4)^3 contributes the odd sign, so the eigenvalue is -binom(3,1) = -3
  CechClass v = one_term(4, 5, 3, 2, 1);
  CHECK(frobenius_on_class(v) == v.scaled(-3));
  CHECK(frobenius_on_class(v).coeff_of(3, 2, 1) == 2);  // -3 mod 5
  CechClass w = one_term(4, 5, 3, 1, 2);
  CHECK(frobenius_on_class(w) == w.scaled(-3));
}

TEST_CASE("frobenius eigenvalues on the quartic at p equal to thirteen") {
  CechClass u = one_term(4, 13, 2, 1, 1);
  CHECK(frobenius_on_class(u) == u.scaled(20));  // binom(6,3)
  CHECK(frobenius_on_class(u).coeff_of(2, 1, 1) == 7);
  CechClass v = one_term(4, 13, 3, 2, 1);
  CHECK(frobenius_on_class(v) == v.scaled(-84));  // -binom(9,3)
  CHECK(frobenius_on_class(v).coeff_of(3, 2, 1) == 7);
}

TEST_CASE("frobenius annihilates the quartic degree zero slice at seven") {
  for (const auto& b : cech_basis(4, 7, 0)) CHECK(frobenius_on_class(b).is_zero());
  for (const auto& b : cech_basis(4, 11, 0)) CHECK(frobenius_on_class(b).is_zero());
}

TEST_CASE("frobenius is additive and prime field linear") {
  CechClass u = one_term(4, 5, 2, 1, 1);
  CechClass v = one_term(4, 5, 3, 2, 1);
  CechClass sum = u + v.scaled(2);
  CHECK(frobenius_on_class(sum) ==
        frobenius_on_class(u) + frobenius_on_class(v).scaled(2));
  CHECK((u + u.scaled(4)).is_zero());  // 1 + 4 = 0 mod 5
}

TEST_CASE("segre fullness of the quartic depends on p mod 4") {
  SegreFullness f5 = segre_fullness(4, 5);
  CHECK(f5.full);
  CHECK(f5.frobenius_injective);
  CHECK(f5.degree_one_covered);
  CHECK(f5.matrix.size() == 3);
  CHECK(segre_fullness(4, 13).full);

  SegreFullness f7 = segre_fullness(4, 7);
  CHECK_FALSE(f7.full);
  CHECK_FALSE(f7.frobenius_injective);
  CHECK_FALSE(segre_fullness(4, 11).full);
}

TEST_CASE("segre fullness of the cubic agrees with the fedder criterion") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    SegreFullness sf = segre_fullness(3, p);
    CHECK(sf.degree_one_covered);  // the degree one slice is empty
    CHECK(sf.full == (p % 3 == 1));
    RingPtr R = make_ring(p, {"x", "y", "z"});
    IdealPtr I = make_ideal(R, {parse_polynomial(R, "x^3+y^3+z^3")});
    CHECK(sf.full == fedder_fpure(I).f_pure);
  }
}

TEST_CASE("cech parameter validation") {
  CHECK(thrown_code([] { cech_basis(4, 2, 0); }) == "E_P_DIVIDES_D");
  CHECK(thrown_code([] { segre_fullness(3, 3); }) == "E_P_DIVIDES_D");
  CHECK(thrown_code([] { cech_basis(0, 5, 0); }) == "E_BAD_DEGREE");
  CHECK(thrown_code([] {
          CechClass big = one_term(4, 5, 3, kMaxExponent / 2, 1);
          frobenius_on_class(big);
        }) == "E_EXPONENT_OVERFLOW");
}
