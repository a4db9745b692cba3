#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "soclelab/superchar.hpp"

using namespace soclelab;

namespace {

using P = Partition;

SuperPoly mono(int m, int n, std::vector<int> e, int c) {
  SuperPoly p(m, n);
  p.add_term(e, c);
  return p;
}

Weight random_dominant(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<int> top(-3, 5), step(0, 3);
  Weight w;
  int v = top(rng);
  for (int i = 0; i < m; ++i) {
    w.even.push_back(v);
    v -= step(rng);
  }
  v = top(rng);
  for (int j = 0; j < n; ++j) {
    w.odd.push_back(v);
    v -= step(rng);
  }
  return w;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  SuperPoly p = mono(1, 1, {2, 0}, 1) + mono(1, 1, {-1, 3}, 2);
  SuperPoly q = mono(1, 1, {2, 0}, -1);
  CHECK((p + q) == mono(1, 1, {-1, 3}, 2));
  CHECK((p - p).zero());
  CHECK((p * SuperPoly::constant(1, 1, 1)) == p);
  SuperPoly sq = mono(1, 1, {1, 0}, 1) * mono(1, 1, {-1, 1}, 3);
  CHECK(sq == mono(1, 1, {0, 1}, 3));
  CHECK_THROWS(p.add_term({1}, 1));
}

TEST_CASE("symmetry detection") {
  SuperPoly sym = mono(2, 0, {1, 0}, 1) + mono(2, 0, {0, 1}, 1);
  CHECK(sym.symmetric_in_x());
  SuperPoly asym = mono(2, 0, {1, 0}, 1) + mono(2, 0, {0, 1}, 2);
  CHECK_FALSE(asym.symmetric_in_x());
  CHECK(SuperPoly(0, 0).symmetric_in_x());
}

TEST_CASE("pair substitution") {
  // x1^2 y1 -> t-degree 3; x1 y1 -> degree 2
  SuperPoly p = mono(1, 1, {2, 1}, 1) + mono(1, 1, {1, 1}, 4);
  auto by_deg = p.substitute_pair(1, 1);
  CHECK(by_deg.size() == 2);
  CHECK(by_deg.at(3) == SuperPoly::constant(0, 0, 1));
  CHECK(by_deg.at(2) == SuperPoly::constant(0, 0, 4));
}

TEST_CASE("schur polynomials with signed odd block") {
  CHECK(super_schur(P(), 2, 1) == SuperPoly::constant(2, 1, 1));
  CHECK(super_schur(P::parse("1"), 2, 1) ==
        mono(2, 1, {1, 0, 0}, 1) + mono(2, 1, {0, 1, 0}, 1) + mono(2, 1, {0, 0, 1}, -1));
  CHECK(super_schur(P::parse("1,1"), 1, 1) ==
        mono(1, 1, {0, 2}, 1) + mono(1, 1, {1, 1}, -1));
  CHECK(super_schur(P::parse("2"), 0, 1).zero());  // outside the hook
  CHECK(super_schur(P::parse("1,1,1"), 1, 1) ==
        mono(1, 1, {1, 2}, 1) + mono(1, 1, {0, 3}, -1));
}

TEST_CASE("supersymmetry of schur polynomials") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(5))
        CHECK(is_supersymmetric(super_schur(lambda, m, n)));
}

TEST_CASE("kac polynomial product form") {
  Weight zero = Weight::parse("0|0");
  CHECK(kac_supercharacter(zero, 1, 1) ==
        SuperPoly::constant(1, 1, 1) + mono(1, 1, {-1, 1}, -1));

  Weight w = Weight::parse("3|-2");
  CHECK(kac_supercharacter(w, 1, 1) == mono(1, 1, {3, -2}, 1) + mono(1, 1, {2, -1}, -1));

  CHECK_THROWS(kac_supercharacter(Weight::parse("3,4|0"), 2, 1));
  CHECK_THROWS(kac_supercharacter(zero, 2, 2));
}

TEST_CASE("cancellation property") {
  CHECK(is_supersymmetric(mono(1, 1, {1, 0}, 1) + mono(1, 1, {0, 1}, -1)));
  CHECK_FALSE(is_supersymmetric(mono(1, 1, {1, 0}, 1) + mono(1, 1, {0, 1}, 1)));
  CHECK(is_supersymmetric(SuperPoly::constant(2, 2, 5)));
  CHECK_THROWS(ds_eval(mono(1, 1, {1, 0}, 1) + mono(1, 1, {0, 1}, 1)));
}

TEST_CASE("evaluation examples") {
  CHECK(ds_eval(super_schur(P::parse("1"), 2, 1)) == mono(1, 0, {1}, 1));
  CHECK(ds_power(super_schur(P::parse("1"), 3, 2), 2) == mono(1, 0, {1}, 1));
  CHECK(ds_eval(SuperPoly::constant(1, 1, 1)) == SuperPoly::constant(0, 0, 1));
  CHECK(ds_power(super_schur(P::parse("2,1"), 2, 2), 0) == super_schur(P::parse("2,1"), 2, 2));
  CHECK_THROWS(ds_power(super_schur(P::parse("1"), 2, 1), 2));
  CHECK_THROWS(ds_eval(SuperPoly(0, 3)));
}

TEST_CASE("evaluation kills kac polynomials") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) {
    int m = 1 + static_cast<int>(rng() % 2), n = 1 + static_cast<int>(rng() % 2);
    Weight w = random_dominant(rng, m, n);
    CHECK(ds_eval(kac_supercharacter(w, m, n)).zero());
  }
}

TEST_CASE("evaluation stability on schur polynomials") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& lambda : partitions_up_to(4))
        CHECK(ds_eval(super_schur(lambda, m, n)) == super_schur(lambda, m - 1, n - 1));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(61);
  const auto shapes = partitions_up_to(3);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(shapes.size()) - 1);
  for (int t = 0; t < 100; ++t) {
    SuperPoly f = super_schur(shapes[static_cast<size_t>(pick(rng))], 2, 2);
    SuperPoly g = super_schur(shapes[static_cast<size_t>(pick(rng))], 2, 2);
    CHECK(ds_eval(f * g) == ds_eval(f) * ds_eval(g));
    CHECK(ds_eval(f + g) == ds_eval(f) + ds_eval(g));
  }
}

TEST_CASE("pair independence") {
  for (const auto& lambda : partitions_up_to(3)) {
    SuperPoly f = super_schur(lambda, 2, 2);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) CHECK(pair_independence_check(f, i, j));
  }
  CHECK(pair_independence_check(super_schur(P::parse("2,1"), 2, 2), 1, 1));
  CHECK_THROWS(pair_independence_check(mono(1, 1, {1, 0}, 1) + mono(1, 1, {0, 1}, 1), 1, 1));
}

TEST_CASE("filtration shadow reports") {
  FiltrationReport r = tensor_filtration_shadow(1, 1, 3);
  CHECK(r.ok());
  CHECK(r.kac_checked > 0);
  FiltrationReport r22 = tensor_filtration_shadow(2, 2, 4);
  CHECK(r22.ok());
  FiltrationReport r0 = tensor_filtration_shadow(2, 1, 0);
  CHECK(r0.ok());
  CHECK(r0.kac_checked == 1);
  CHECK(r0.schur_checked == 1);
  CHECK_THROWS(tensor_filtration_shadow(0, 1, 2));
}
