#include <doctest.h>

#include "helpers.hpp"

using namespace spinrsk;
using spinrsk::test::col;
using spinrsk::test::rows;

namespace {

SpinorTableau example(const GradedAlphabet& a) {
  return SpinorTableau({SpinorBlock(col("2,3,1'"), col("2,4"), a), SpinorBlock(col("1,3,1',2'"), col("1,2'"), a),
                        SpinorBlock(col("2,1',1',3',3'"), col("2',2'"), a)});
}

}  // namespace

TEST_CASE("blocks carry their shape and forms") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const SpinorBlock b(col("2,1',1',3',3'"), col("2',2'"), a);
  CHECK(b.width() == 3);
  CHECK(b.depth() == 2);
  CHECK(to_string(b.left_form()) == "[1',1']");
  CHECK(to_string(b.right_form()) == "[2,2',2',3',3']");
  CHECK_THROWS_AS(SpinorBlock(col("2"), col("1,2"), a), std::invalid_argument);
}

TEST_CASE("a spinor tableau over I_{4|3} and its embedding") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const SpinorTableau t = example(a);
  CHECK(t.widths() == std::vector<int>{3, 2, 1});
  CHECK(is_spinor_tableau(t, Partition({3, 2, 1}), 3, a));
  CHECK_FALSE(is_spinor_tableau(t, Partition({3, 2, 2}), 3, a));
  const RskPair r = phi_embedding(t, a);
  CHECK(rows(r.p) == "1,1,2,1',2'|2,2,3,2',3'|3,4,1',2'|1',2',3'|1'|");
  CHECK(rows(r.q) == "1,1,2,2,2|2,2,3,4|3,4,4,6|4,5,5|6,6|");
  CHECK(k_weight_predicate(r.q, Partition({3, 2, 1}), 3));
  CHECK_FALSE(k_weight_predicate(r.q, Partition({2, 2, 1}), 3));
}

TEST_CASE("spinor tableaux over [2~] count by shape") {
  const auto b = GradedAlphabet::barred(2);
  const std::vector<std::size_t> expect = {14, 16, 10, 5, 4, 1};  // (), (1), (1,1), (2), (2,1), (2,2)
  const auto shapes = partitions_in_box(2, 2);
  REQUIRE(shapes.size() == expect.size());
  for (std::size_t k = 0; k < shapes.size(); ++k) CHECK(enumerate_spinor(shapes[k], 2, b, -1).size() == expect[k]);
}

TEST_CASE("an uncapped super alphabet is rejected") {
  CHECK_THROWS_AS(enumerate_columns(GradedAlphabet::super(1, 1), -1), std::invalid_argument);
}

TEST_CASE("precedes needs the narrower block on the left") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const SpinorTableau t = example(a);
  CHECK(precedes(t.block(3), t.block(2), a));
  CHECK(precedes(t.block(2), t.block(1), a));
  CHECK_FALSE(precedes(t.block(2), t.block(3), a));
}
