#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "cofull/cache.hpp"
#include "cofull/groebner.hpp"

using namespace cofull;

namespace {

std::vector<Polynomial> parse_all(const RingPtr& R, std::initializer_list<const char*> ss) {
  std::vector<Polynomial> out;
  for (const char* s : ss) out.push_back(parse_polynomial(R, s));
  return out;
}

bool same_ideal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  return gb_equal(ideal_gb(a), ideal_gb(b));
}

// Pairing check: sum syz_i * g_i == 0 in the ambient module.
bool pairs_to_zero(const FreeElem& syz, const std::vector<FreeElem>& gb) {
  if (gb.empty()) return syz.is_zero();
  FreeElem acc(gb[0].module());
  for (std::size_t i = 0; i < gb.size(); ++i)
    acc = acc.add(gb[i].poly_mul(syz.component(static_cast<int>(i))));
  return acc.is_zero();
}

}  // namespace

TEST_CASE("normal form of the lex example reduces to zero") {
  auto R = make_ring(5, {"x", "y"}, OrderKind::Lex);
  auto basis = parse_all(R, {"x^2", "x*y + y^2", "y^3"});
  Polynomial f = parse_polynomial(R, "x*y^2");
  CHECK(normal_form(f, basis).is_zero());
}

TEST_CASE("normal form is idempotent and deterministic") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto basis = ideal_gb(parse_all(R, {"x*y - z^2", "y^2 - x*z"}));
  Polynomial f = parse_polynomial(R, "x^3*y^2 + 2*y^3*z + z");
  Polynomial r1 = normal_form(f, basis);
  CHECK(normal_form(r1, basis) == r1);
}

TEST_CASE("buchberger closes the lex example") {
  auto R = make_ring(5, {"x", "y"}, OrderKind::Lex);
  auto gb = ideal_gb(parse_all(R, {"x^2", "x*y + y^2"}));
  REQUIRE(gb.size() == 3);
  // reduced basis, decreasing lead order
  CHECK(gb[0] == parse_polynomial(R, "x^2"));
  CHECK(gb[1] == parse_polynomial(R, "x*y + y^2"));
  CHECK(gb[2] == parse_polynomial(R, "y^3"));
}

TEST_CASE("reduced GB does not depend on generator order or scaling") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto g1 = parse_all(R, {"x*y - z^2", "y^2 - x*z", "x^2*z - y*z^2"});
  auto g2 = parse_all(R, {"2*y^2 - 2*x*z", "3*x^2*z - 3*y*z^2", "x*y - z^2"});
  CHECK(gb_equal(ideal_gb(g1), ideal_gb(g2)));
}

TEST_CASE("syzygies of the lex example: two, both pair to zero") {
  auto R = make_ring(5, {"x", "y"}, OrderKind::Lex);
  auto gb_p = ideal_gb(parse_all(R, {"x^2", "x*y + y^2", "y^3"}));
  auto mod = make_free_module(R, {0});
  auto gb = polys_to_elems(gb_p, mod);
  Syzygies syz = syzygies_of_gb(gb);
  CHECK(syz.elems.size() == 2);
  for (const auto& s : syz.elems) CHECK(pairs_to_zero(s, gb));
}

TEST_CASE("principal pair syzygy of (xy, xz)") {
  auto R = make_ring(2, {"x", "y", "z"});
  auto gb_p = ideal_gb(parse_all(R, {"x*y", "x*z"}));
  auto mod = make_free_module(R, {0});
  auto gb = polys_to_elems(gb_p, mod);
  Syzygies syz = syzygies_of_gb(gb);
  REQUIRE(syz.elems.size() == 1);
  CHECK(pairs_to_zero(syz.elems[0], gb));
  // the syzygy is (z, -y) up to sign, on whichever order gb lists the gens
  Polynomial c0 = syz.elems[0].component(0);
  Polynomial c1 = syz.elems[0].component(1);
  CHECK(c0.is_monomial());
  CHECK(c1.is_monomial());
  CHECK(c0.degree() + c1.degree() == 2);
}

TEST_CASE("syzygies of a module GB pair to zero") {
  auto R = make_ring(5, {"x", "y"});
  auto mod = make_free_module(R, {0, 1});
  std::vector<FreeElem> gens = {
      elem_from_components(mod, parse_all(R, {"x^2", "y"})),
      elem_from_components(mod, parse_all(R, {"x*y", "x"})),
      elem_from_components(mod, parse_all(R, {"y^2", "0"})),
  };
  auto gb = module_gb(gens);
  Syzygies syz = syzygies_of_gb(gb);
  for (const auto& s : syz.elems) CHECK(pairs_to_zero(s, gb));
}

TEST_CASE("kernel of [x y] is the Koszul syzygy") {
  auto R = make_ring(5, {"x", "y"});
  auto mod = make_free_module(R, {0});
  std::vector<FreeElem> cols = {elem_from_poly(mod, 0, parse_polynomial(R, "x")),
                                elem_from_poly(mod, 0, parse_polynomial(R, "y"))};
  auto ker = kernel_of_map(cols);
  REQUIRE(ker.size() == 1);
  Polynomial a = ker[0].component(0), b = ker[0].component(1);
  Polynomial combo = a.mul(parse_polynomial(R, "x")).add(b.mul(parse_polynomial(R, "y")));
  CHECK(combo.is_zero());
  CHECK_FALSE(ker[0].is_zero());
}

TEST_CASE("kernel and Schreyer syzygies generate the same submodule") {
  auto R = make_ring(3, {"x", "y", "z"});
  std::mt19937 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    int ngen = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ngen; ++i) {
      std::vector<Term> ts;
      int nt = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < nt; ++t) {
        std::vector<Exponent> e(3);
        for (auto& x : e) x = static_cast<Exponent>(rng() % 3);
        ts.push_back({Monomial(e), R->field().from_int(1 + static_cast<int>(rng() % 2))});
      }
      Polynomial f(R, ts);
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    auto mod = make_free_module(R, {0});
    auto gb = polys_to_elems(ideal_gb(gens), mod);
    Syzygies syz = syzygies_of_gb(gb);
    auto ker = kernel_of_map(gb);
    // same rank-|gb| module for both results
    auto target = make_free_module(R, std::vector<std::int64_t>(gb.size(), 0));
    auto as_target = [&](const std::vector<FreeElem>& v) {
      std::vector<FreeElem> out;
      for (const auto& e : v) {
        std::vector<VTerm> ts = e.terms();
        out.emplace_back(target, std::move(ts));
      }
      return module_gb(out);
    };
    auto gb_a = as_target(syz.elems);
    auto gb_b = as_target(ker);
    REQUIRE(gb_a.size() == gb_b.size());
    for (std::size_t i = 0; i < gb_a.size(); ++i) CHECK(gb_a[i] == gb_b[i]);
  }
}

TEST_CASE("tracked GB expresses every element over the input") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto gens = parse_all(R, {"x*y - z^2", "y^2 - x*z", "x^3 - y*z^2 + x"});
  auto mod = make_free_module(R, {0});
  TrackedGB t = module_gb_tracked(polys_to_elems(gens, mod));
  REQUIRE(t.gb.size() == t.reps.size());
  for (std::size_t i = 0; i < t.gb.size(); ++i) {
    Polynomial acc(R);
    for (std::size_t j = 0; j < gens.size(); ++j) acc = acc.add(t.reps[i][j].mul(gens[j]));
    CHECK(acc == t.gb[i].component(0));
  }
}

TEST_CASE("intersection of coordinate ideals, two routes") {
  auto R = make_ring(2, {"x", "y", "z", "w"});
  auto a = parse_all(R, {"x", "y"});
  auto b = parse_all(R, {"z", "w"});
  auto fast = ideal_intersect(a, b);
  auto slow = ideal_intersect_elimination(a, b);
  CHECK(same_ideal(fast, slow));
  CHECK(same_ideal(fast, parse_all(R, {"x*z", "x*w", "y*z", "y*w"})));
  CHECK(fast.size() == 4);
}

TEST_CASE("intersection of non-monomial ideals stays inside both") {
  auto R = make_ring(5, {"x", "y"});
  auto a = parse_all(R, {"x + y"});
  auto b = parse_all(R, {"x - y"});
  auto meet = ideal_intersect(a, b);
  auto gba = ideal_gb(a);
  auto gbb = ideal_gb(b);
  REQUIRE(!meet.empty());
  for (const auto& f : meet) {
    CHECK(ideal_contains(gba, f));
    CHECK(ideal_contains(gbb, f));
  }
  CHECK(same_ideal(meet, parse_all(R, {"x^2 - y^2"})));
}

TEST_CASE("colon examples") {
  auto R = make_ring(5, {"x", "y", "z"});
  CHECK(same_ideal(ideal_colon(parse_all(R, {"x^2", "x*y"}), parse_all(R, {"x"})),
                   parse_all(R, {"x", "y"})));
  CHECK(same_ideal(ideal_colon(parse_all(R, {"x*y", "x*z"}), parse_all(R, {"x"})),
                   parse_all(R, {"y", "z"})));
  // colon by a non-member of the radical gives the whole colon chain
  CHECK(same_ideal(ideal_colon(parse_all(R, {"x*y", "x*z"}), parse_all(R, {"y", "z"})),
                   parse_all(R, {"x"})));
}

TEST_CASE("saturation stabilizes") {
  auto R = make_ring(5, {"x", "y"});
  auto I = parse_all(R, {"x*y", "x^2"});
  auto sat = ideal_saturate(I, parse_all(R, {"y"}));
  CHECK(same_ideal(sat, parse_all(R, {"x"})));
}

TEST_CASE("radical membership by the extra variable trick") {
  auto R = make_ring(7, {"x", "y"});
  Polynomial f = parse_polynomial(R, "x + y");
  CHECK(radical_membership(f, parse_all(R, {"x^2 + 2*x*y + y^2"})));
  CHECK_FALSE(radical_membership(parse_polynomial(R, "x"), parse_all(R, {"y"})));
  CHECK(radical_membership(poly_zero(R), parse_all(R, {"y"})));
}

TEST_CASE("unit ideal detection") {
  auto R = make_ring(5, {"x"});
  CHECK(is_unit_ideal(ideal_gb(parse_all(R, {"x", "x + 1"}))));
  CHECK_FALSE(is_unit_ideal(ideal_gb(parse_all(R, {"x^2"}))));
}

TEST_CASE("disk cache round-trips and survives corruption") {
  auto R = make_ring(7, {"x", "y", "z"});
  auto gens = parse_all(R, {"x*y - z^2", "y^2 - x*z"});
  auto plain = ideal_gb(gens);

  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "cofull_cache_test";
  std::filesystem::remove_all(dir);
  gb_cache().set_dir(dir.string());
  auto first = ideal_gb(gens);   // populates
  auto second = ideal_gb(gens);  // reads back
  CHECK(gb_equal(plain, first));
  CHECK(gb_equal(plain, second));
  REQUIRE(std::filesystem::exists(dir));
  bool saw_file = false;
  for (auto& entry : std::filesystem::directory_iterator(dir)) {
    saw_file = true;
    std::ofstream out(entry.path(), std::ios::trunc);
    out << "garbage";
  }
  CHECK(saw_file);
  auto third = ideal_gb(gens);  // checksum fails, recomputes
  CHECK(gb_equal(plain, third));
  gb_cache().set_dir("");
  std::filesystem::remove_all(dir);
}
