#include <doctest.h>

#include "helpers.hpp"
#include "spinrsk/rsk.hpp"

using namespace spinrsk;
using spinrsk::test::col;
using spinrsk::test::rows;

TEST_CASE("alphabets order their letters") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  CHECK(a.size() == 7);
  CHECK(a.less(num(4), primed(1)));
  CHECK(a.has_degree_one());
  CHECK_FALSE(GradedAlphabet::barred(3).has_degree_one());
  const auto b = GradedAlphabet::barred(3);
  CHECK(b.less(bar(3), bar(1)));
  const auto s = GradedAlphabet::symplectic(2);
  CHECK(to_string(Word(s.letters())) == "1,2,-2,-1");
  CHECK(GradedAlphabet::parse("[3~]") == b);
  CHECK_THROWS_AS(a.rank(bar(1)), std::invalid_argument);
}

TEST_CASE("letters round-trip through text") {
  for (const char* s : {"3", "-2", "4'"}) CHECK(to_string(parse_letter(s)) == s);
  CHECK_THROWS_AS(parse_letter("x"), std::invalid_argument);
}

TEST_CASE("primed letters may repeat down a column") {
  const auto a = GradedAlphabet::super(1, 1);
  CHECK(is_column(col("1,1',1'"), a));
  CHECK_FALSE(is_column(col("1,1"), a));
  CHECK_FALSE(is_column(col("1',1"), a));
}

TEST_CASE("partitions") {
  const Partition p({3, 1, 1});
  CHECK(p.conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({2, 2, 1}).conjugate() == Partition({3, 2}));
  CHECK(Partition({2, 0, 0}).length() == 1);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(partitions_of(4, -1).size() == 5);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(rho_complement(Partition({1}), 2, 2) == Partition({2, 1}).conjugate());
}

TEST_CASE("column RSK over I_{4|3} inverts") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const ColumnTuple u({col("2,3,1'"), col("4,2'"), col("1,2,1',3'"), col("1,3,2'"), col("2,1',1',3'"), col("2',2'")});
  const RskPair r = rsk(u, a);
  CHECK(rows(r.p) == "1,1,2,1',2'|2,2,3,2',3'|3,4,1',2'|1',2',3'|1'|");
  CHECK(rows(r.q) == "1,1,2,2,4|2,2,3,5|3,3,4,6|4,4,5|6,6|");
  CHECK(r.q.shape() == r.p.shape().conjugate());
  CHECK(rsk_inverse(r.p, r.q, a, 6) == u);
  // the 5-conjugate tuple, read right to left
  const ColumnTuple c = rsk_inverse(highest_barred_tableau(r.p.shape(), 5), r.q, GradedAlphabet::barred(5), 6);
  CHECK(to_string(reading_word(c)) == "-5,-4,-5,-4,-3,-2,-5,-4,-3,-5,-4,-3,-1,-3,-2,-5,-4,-2");
}

TEST_CASE("semistandard tableaux are enumerated once each") {
  CHECK(enumerate_sst(Partition({2, 1}), GradedAlphabet::plain(3)).size() == 8);
  CHECK(enumerate_sst(Partition({1, 1}), GradedAlphabet::primed(1)).size() == 1);
  CHECK(enumerate_sst(Partition({2}), GradedAlphabet::primed(1)).empty());
}
