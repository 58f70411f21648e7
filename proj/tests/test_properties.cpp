#include "property_checks.hpp"

#include "doctest.h"

TEST_CASE("consecutive resolution differentials compose to zero") {
  std::string why;
  CHECK_MESSAGE(propcheck::differentials_compose_to_zero(&why), why);
}

TEST_CASE("depth plus projective dimension is the variable count") {
  std::string why;
  CHECK_MESSAGE(propcheck::depth_pd_additive(&why), why);
}

TEST_CASE("the reduced basis ignores generator order") {
  std::string why;
  CHECK_MESSAGE(propcheck::reduced_basis_order_free(&why), why);
}

TEST_CASE("normal forms are idempotent") {
  std::string why;
  CHECK_MESSAGE(propcheck::normal_form_idempotent(&why), why);
}

TEST_CASE("bracket powers distribute over ideal sums") {
  std::string why;
  CHECK_MESSAGE(propcheck::bracket_distributes_over_sum(&why), why);
}

TEST_CASE("bracket powers intersect like their monomial bases") {
  std::string why;
  CHECK_MESSAGE(propcheck::bracket_distributes_over_intersection(&why), why);
}

TEST_CASE("fullness is unchanged by a bracket power") {
  std::string why;
  CHECK_MESSAGE(propcheck::fullness_stable_under_bracket(&why), why);
}

TEST_CASE("F-purity implies fullness") {
  std::string why;
  CHECK_MESSAGE(propcheck::fpure_implies_full(&why), why);
}

TEST_CASE("full one-dimensional quotients are Cohen-Macaulay") {
  std::string why;
  int hits = 0;
  CHECK_MESSAGE(propcheck::full_dim1_implies_cm(&why, &hits), why);
  CHECK(hits > 20);  // the sample must actually exercise the implication
}

TEST_CASE("full monomial quotients have no embedded primes") {
  std::string why;
  int hits = 0;
  CHECK_MESSAGE(propcheck::full_monomial_no_embedded_primes(&why, &hits), why);
  CHECK(hits > 20);
}
