#pragma once

// Randomized structural checks shared by the unit suite and the acceptance
// gate. Each function runs its whole sample and returns true when every
// case satisfies the property; the first failing case lands in *why.

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "cofull/fullness.hpp"
#include "cofull/homology.hpp"
#include "cofull/resolution.hpp"

namespace propcheck {

inline constexpr int kCases = 500;

inline cofull::RingPtr random_ring(std::mt19937& rng, bool char_p_only = false) {
  static const std::vector<std::string> names = {"x", "y", "z"};
  std::uniform_int_distribution<int> nv(2, 3), pc(0, 2);
  int pick = pc(rng);
  std::uint64_t p = char_p_only ? (pick == 0 ? 2 : 3)
                                : (pick == 0 ? 0 : (pick == 1 ? 2 : 3));
  return cofull::make_ring(
      p, std::vector<std::string>(names.begin(), names.begin() + nv(rng)));
}

inline cofull::Polynomial random_monomial(const cofull::RingPtr& R,
                                          std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::vector<cofull::Exponent> e(R->nvars());
  std::int64_t total = 0;
  for (auto& x : e) {
    x = expo(rng);
    total += x;
  }
  if (total == 0) e[0] = 1;
  return cofull::poly_monomial(R, cofull::Monomial(e), R->field().one());
}

inline cofull::IdealPtr random_monomial_ideal(const cofull::RingPtr& R,
                                              std::mt19937& rng,
                                              int max_gens = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::vector<cofull::Polynomial> gens;
  int k = ngens(rng);
  for (int g = 0; g < k; ++g) gens.push_back(random_monomial(R, rng, max_exp));
  return cofull::make_ideal(R, gens);
}

// random homogeneous polynomial: a few monomials of one shared degree
inline cofull::Polynomial random_homogeneous(const cofull::RingPtr& R,
                                             std::mt19937& rng) {
  std::uniform_int_distribution<int> degd(1, 4), nterms(1, 3), coef(1, 6);
  int deg = degd(rng), terms = nterms(rng);
  cofull::Polynomial f = cofull::poly_zero(R);
  for (int t = 0; t < terms; ++t) {
    std::vector<cofull::Exponent> e(R->nvars(), 0);
    std::uniform_int_distribution<int> var(0, static_cast<int>(R->nvars()) - 1);
    for (int d = 0; d < deg; ++d) ++e[var(rng)];
    f = f.add(cofull::poly_monomial(R, cofull::Monomial(e),
                                    R->field().from_int(coef(rng))));
  }
  return f;
}

inline bool fail_case(std::string* why, const char* what, int t) {
  if (why) {
    std::ostringstream os;
    os << what << " violated at case " << t;
    *why = os.str();
  }
  return false;
}

inline bool differentials_compose_to_zero(std::string* why = nullptr) {
  std::mt19937 rng(1001);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng);
    auto F = cofull::free_resolution(random_monomial_ideal(R, rng));
    for (int i = 1; i < F.pd(); ++i) {
      auto A = F.matrix_of(i), B = F.matrix_of(i + 1);
      for (std::size_t r = 0; r < A.size(); ++r)
        for (std::size_t c = 0; c < (B.empty() ? 0 : B[0].size()); ++c) {
          cofull::Polynomial acc = cofull::poly_zero(F.ring);
          for (std::size_t k = 0; k < B.size(); ++k)
            acc = acc.add(A[r][k].mul(B[k][c]));
          if (!acc.is_zero()) return fail_case(why, "d o d = 0", t);
        }
    }
  }
  return true;
}

inline bool depth_pd_additive(std::string* why = nullptr) {
  std::mt19937 rng(1002);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng);
    auto prof = cofull::homological_profile(random_monomial_ideal(R, rng));
    if (prof.depth + prof.pd != prof.n)
      return fail_case(why, "depth + pd = n", t);
  }
  return true;
}

inline bool reduced_basis_order_free(std::string* why = nullptr) {
  std::mt19937 rng(1003);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng);
    std::uniform_int_distribution<int> ngens(1, 3);
    std::vector<cofull::Polynomial> gens;
    int k = ngens(rng);
    for (int g = 0; g < k; ++g) gens.push_back(random_homogeneous(R, rng));
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (!(cofull::ideal_gb(gens) == cofull::ideal_gb(shuffled)))
      return fail_case(why, "reduced basis uniqueness", t);
  }
  return true;
}

inline bool normal_form_idempotent(std::string* why = nullptr) {
  std::mt19937 rng(1004);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng);
    auto gb = cofull::ideal_gb(
        {random_homogeneous(R, rng), random_homogeneous(R, rng)});
    cofull::Polynomial once = cofull::normal_form(random_homogeneous(R, rng), gb);
    if (!(cofull::normal_form(once, gb) == once))
      return fail_case(why, "normal form idempotence", t);
  }
  return true;
}

inline bool bracket_distributes_over_sum(std::string* why = nullptr) {
  std::mt19937 rng(1005);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng);
    cofull::IdealPtr J = random_monomial_ideal(R, rng);
    auto lhs = cofull::frobenius_power(cofull::ideal_sum(I, J), 1);
    auto rhs = cofull::ideal_sum(cofull::frobenius_power(I, 1),
                                 cofull::frobenius_power(J, 1));
    if (!lhs->same_ideal(*rhs))
      return fail_case(why, "bracket power of a sum", t);
  }
  return true;
}

inline bool bracket_distributes_over_intersection(std::string* why = nullptr) {
  std::mt19937 rng(1006);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng);
    cofull::IdealPtr J = random_monomial_ideal(R, rng);
    auto lhs = cofull::frobenius_power(
        cofull::make_ideal(R, cofull::ideal_intersect(I->gens(), J->gens())), 1);
    auto rhs = cofull::make_ideal(
        R, cofull::ideal_intersect(cofull::frobenius_power(I, 1)->gens(),
                                   cofull::frobenius_power(J, 1)->gens()));
    if (!lhs->same_ideal(*rhs))
      return fail_case(why, "bracket power of a monomial intersection", t);
  }
  return true;
}

inline bool fullness_stable_under_bracket(std::string* why = nullptr) {
  std::mt19937 rng(1007);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng, 3, 2);
    auto a = cofull::is_cohomologically_full(I, 1);
    auto b = cofull::is_cohomologically_full(cofull::frobenius_power(I, 1), 1);
    if (a.full != b.full)
      return fail_case(why, "fullness under bracket power", t);
    bool conj = true;
    for (const auto& row : a.per_index) conj = conj && row.full;
    if (a.full != conj)
      return fail_case(why, "aggregate = conjunction of verdicts", t);
  }
  return true;
}

inline bool fpure_implies_full(std::string* why = nullptr) {
  std::mt19937 rng(1008);
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng, 3, 2);
    if (cofull::fedder_fpure(I).f_pure &&
        !cofull::is_cohomologically_full(I, 1).full)
      return fail_case(why, "F-purity implies fullness", t);
  }
  return true;
}

// also reports how many sampled quotients actually hit the hypothesis
inline bool full_dim1_implies_cm(std::string* why = nullptr, int* hits = nullptr) {
  std::mt19937 rng(1009);
  int count = 0;
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng, 3, 3);
    auto prof = cofull::homological_profile(I);
    if (prof.dim != 1) continue;
    if (!cofull::is_cohomologically_full(I, 1).full) continue;
    ++count;
    if (prof.depth != prof.dim)
      return fail_case(why, "full and dim 1 implies Cohen-Macaulay", t);
  }
  if (hits) *hits = count;
  return true;
}

inline bool full_monomial_no_embedded_primes(std::string* why = nullptr,
                                             int* hits = nullptr) {
  std::mt19937 rng(1010);
  int count = 0;
  for (int t = 0; t < kCases; ++t) {
    cofull::RingPtr R = random_ring(rng, /*char_p_only=*/true);
    cofull::IdealPtr I = random_monomial_ideal(R, rng, 4, 3);
    if (!cofull::is_cohomologically_full(I, 1).full) continue;
    ++count;
    if (!cofull::embedded_primes(I).empty())
      return fail_case(why, "full monomial quotient has embedded prime", t);
  }
  if (hits) *hits = count;
  return true;
}

}  // namespace propcheck
