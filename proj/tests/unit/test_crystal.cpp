#include <doctest.h>

#include "helpers.hpp"
#include "spinrsk/crystal.hpp"

using namespace spinrsk;
using spinrsk::test::col;

TEST_CASE("E and F on a column pair over I_{4|3}") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const Column u = col("2,1',1',3'"), v = col("2',2'");
  const auto cfg = pair_normalize(u, v, a);
  CHECK(cfg.a == 2);
  CHECK(cfg.b == 0);
  CHECK(cfg.c == 2);
  CHECK(pair_normalize_scan(u, v, a).a == cfg.a);
  const auto e1 = crystal_E(u, v, a);
  REQUIRE(e1);
  CHECK(to_string(e1->first) == "[1',1',3']");
  CHECK(to_string(e1->second) == "[2,2',2']");
  const auto e2 = crystal_E(e1->first, e1->second, a);
  REQUIRE(e2);
  CHECK(to_string(e2->first) == "[1',1']");
  CHECK_FALSE(crystal_E(e2->first, e2->second, a));
  const auto f = crystal_F(e2->first, e2->second, a);
  REQUIRE(f);
  CHECK(*f == *e1);
  CHECK(pair_epsilon(u, v, a) == 2);
  CHECK(pair_epsilon(u, v, a) + pair_phi(u, v, a) == cfg.a);
}

TEST_CASE("tuple operators agree with the biword oracle") {
  const auto a = GradedAlphabet::barred(2);
  const auto cols = enumerate_columns(a, 2);
  for (const Column& x : cols)
    for (const Column& y : cols)
      for (const Column& z : cols) {
        const ColumnTuple t({x, y, z});
        for (int i = 1; i <= 2; ++i) {
          CHECK(crystal_Ei(t, i, a) == biword_Ei(t, i, a));
          CHECK(crystal_Fi(t, i, a) == biword_Fi(t, i, a));
        }
      }
}

TEST_CASE("sl2 signature on a recording tableau") {
  const SkewTableau q = SkewTableau::from_rows({{num(1), num(1), num(2)}, {num(2)}});
  const auto [eps, phi] = signature(q, 1);
  const auto e = crystal_e(q, 1);
  CHECK(e.has_value() == (eps > 0));
  if (e) CHECK(crystal_f(*e, 1) == q);
  CHECK(crystal_f(q, 1).has_value() == (phi > 0));
  CHECK(weyl_reflect(weyl_reflect(q, 1), 1) == q);
}
