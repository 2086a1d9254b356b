#include <doctest.h>

#include "helpers.hpp"
#include "spinrsk/kn.hpp"
#include "spinrsk/sliding.hpp"

using namespace spinrsk;
using spinrsk::test::col;
using spinrsk::test::str;

namespace {

struct Example {
  GradedAlphabet a = GradedAlphabet::parse("I_{4|3}");
  SpinorBlock t3{col("2,3,1'"), col("4,2'"), a};
  SpinorBlock t2{col("1,2,1',3'"), col("1,3,2'"), a};
  SpinorBlock t1{col("2,1',1',3'"), col("2',2'"), a};
  SpinorTableau t{{t3, t2, t1}};
};

}  // namespace

TEST_CASE("5-conjugate") {
  Example ex;
  CHECK(str(n_conjugate(ex.t, ex.a, 5)) == "([-5,-4,-2][-3,-2])([-5,-4,-3,-1][-5,-4,-3])([-5,-4,-3,-2][-5,-4])");
  CHECK_THROWS_AS(n_conjugate(ex.t, ex.a, 4), std::invalid_argument);
}

TEST_CASE("least skew shape") {
  Example ex;
  const SkewSpinorTableau s = as_skew(ex.t, ex.a);
  CHECK(s.inner() == Partition({2, 1}));
  CHECK(s.inner_corners() == std::vector<int>{1, 2});
  CHECK_FALSE(is_admissible_skew(ex.t, Partition({1, 1}), ex.a));
  CHECK_THROWS_AS(SkewSpinorTableau(ex.t, Partition({1, 1}), ex.a), std::invalid_argument);
}

TEST_CASE("sliding chain to P(T)") {
  Example ex;
  const SkewSpinorTableau s(ex.t, Partition({2, 1}), ex.a);
  const auto x1 = jdt_spin(s, 1, 5);
  CHECK(str(x1.tableau()) == "([2,3,1'][4,2'])([1,2,1'][1,3,2'])([2,1',1',3',3'][2',2'])");
  CHECK(x1.inner() == Partition({2, 2}));
  const auto x2 = jdt_spin(x1, 2, 5);
  CHECK(str(x2.tableau()) == "([2,3,1'][2,4,2'])([1,3,1'][1,2'])([2,1',1',3',3'][2',2'])");
  CHECK(x2.inner() == Partition({1, 1}));
  const auto x3 = jdt_spin(x2, 2, 5);
  const std::string p = "([2,3,1'][2,4])([1,3,1',2'][1,2'])([2,1',1',3',3'][2',2'])";
  CHECK(str(x3.tableau()) == p);
  CHECK(x3.is_straight());
  CHECK(str(p_tableau(s)) == p);
  CHECK(str(p_tableau_by_kn(s)) == p);
  CHECK(str(p_tableau_by_kn(s, 5)) == p);
  CHECK_THROWS_AS(jdt_spin(x1, 1, 5), std::invalid_argument);
}

TEST_CASE("pair slides, cases 1 and 2") {
  Example ex;
  const PairSlide r1 = jdt_spin_pair(ex.t2, ex.t1, ex.a);
  CHECK(r1.kind == 1);
  CHECK(r1.epsilon == 0);
  CHECK(str(SpinorTableau({r1.t2, r1.t1})) == "([1,2,1'][1,3,2'])([2,1',1',3',3'][2',2'])");
  const PairSlide r2 = jdt_spin_pair(ex.t3, SpinorBlock(col("1,2,1'"), col("1,3,2'"), ex.a), ex.a);
  CHECK(r2.kind == 2);
  CHECK(str(SpinorTableau({r2.t2, r2.t1})) == "([2,3,1'][2,4,2'])([1,3,1'][1,2'])");
  const PairSlide r3 =
      jdt_spin_pair(SpinorBlock(col("2,3,1'"), col("2,4,2'"), ex.a), SpinorBlock(col("1,3,1'"), col("1,2'"), ex.a), ex.a);
  CHECK(r3.kind == 1);
  CHECK(r3.epsilon == 1);
  CHECK(str(SpinorTableau({r3.t2, r3.t1})) == "([2,3,1'][2,4])([1,3,1',2'][1,2'])");
}

TEST_CASE("recording shapes split by block") {
  Example ex;
  const auto segs = recording_shapes(ex.t, ex.a, 5);
  REQUIRE(segs.size() == 3);
  CHECK(segs[0].size() == 3);
  CHECK(segs[1].size() == 4);
  CHECK(segs[2].size() == 4);
  CHECK(segs[2].back() == Partition({3, 3, 2, 1}));
}

TEST_CASE("both distances agree over [3~]") {
  const int n = 3;
  const auto a = GradedAlphabet::barred(n);
  std::vector<SpinorBlock> all;
  for (int w = 0; w <= 3; ++w)
    for (const SpinorBlock& b : enumerate_blocks(w, a, 3)) all.push_back(b);
  for (const SpinorBlock& t2 : all)
    for (const SpinorBlock& t1 : all) {
      const int d = skew_distance(t1, t2, a);
      CHECK(d == skew_distance_kn(t1, t2, n));
      CHECK(is_admissible_skew(SpinorTableau({t2, t1}), Partition({d}), a));
      if (d == 0) continue;
      // the slide does not depend on the rank used for the KN replay
      const SkewSpinorTableau s(SpinorTableau({t2, t1}), Partition({d}), a);
      CHECK(jdt_spin(s, 1, n) == jdt_spin(s, 1));
    }
}
