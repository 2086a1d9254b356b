#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "spinrsk/kn.hpp"

using namespace spinrsk;
using spinrsk::test::col;

TEST_CASE("admissible and coadmissible columns of a block") {
  const SpinorBlock t(col("-4,-3,-1"), col("-2,-1"), GradedAlphabet::barred(5));
  CHECK(to_string(to_admissible(t, 5)) == "[3,5,-3,-1]");
  CHECK(to_string(to_coadmissible(t, 5)) == "[2,5,-2,-1]");
  const auto [l, r] = split_column(col("3,-5,-3"), 5);
  CHECK(to_string(l) == "[2,-5,-3]");
  CHECK(to_string(r) == "[3,-5,-2]");
}

TEST_CASE("column epsilon") {
  const auto [c, e] = column_epsilon(col("1,2,3,4,-5,-4"), 5);
  CHECK(to_string(c) == "[1,2,3,-5]");
  CHECK(e == 1);
}

TEST_CASE("column structure over I_n") {
  for (int n = 1; n <= 3; ++n) {
    for (const Column& c : enumerate_columns(GradedAlphabet::symplectic(n), -1)) {
      CHECK(is_admissible(c, n) == !column_E(c, n).has_value());
      const auto [t, eps] = column_epsilon(c, n);
      CHECK(eps + column_phi(c, n) == n - t.height());
      if (!is_admissible(c, n)) continue;
      const SpinorBlock b = from_admissible(c, n);
      CHECK(to_admissible(b, n) == c);
      const Column s = coadmissible_of(c, n);
      CHECK(from_coadmissible(s, n) == b);
      const auto [l, r] = split_column(c, n);
      CHECK(positive_part(l) == positive_part(s));
      CHECK(negative_part(r) == negative_part(s));
      CHECK(negative_part(l) == negative_part(c));
      CHECK(positive_part(r) == positive_part(c));
    }
  }
}

TEST_CASE("KN insertion of a rank 5 word") {
  const Word w = parse_word("1,-5,-4,2,-5,-4,-3,1,4,-4,-2");
  const SkewTableau p = kn_P(w, 5);
  CHECK(to_string(p) == "[1,5,-5,-4] [1,-5,-3] [-5,-4] (0,0,0)");
  CHECK(kn_P_by_crystal(w, 5) == p);
  CHECK(is_kn(p, 5));
  CHECK(is_kn_by_columns(p, 5));
  CHECK(kn_P(reading_word(p), 5) == p);
  const auto q = kn_Q(w, 5);
  REQUIRE(q.size() == 11);
  CHECK(q.front() == Partition({1}));
  CHECK(q.back() == Partition({3, 3, 2, 1}));
}

TEST_CASE("global row counting matches the column criterion") {
  long per_column_disagrees = 0;
  for (int n = 1; n <= 3; ++n) {
    const auto cols = enumerate_columns(GradedAlphabet::symplectic(n), -1);
    for (const Column& c2 : cols)
      for (const Column& c1 : cols) {
        if (c1.height() > c2.height() || c1.empty()) continue;
        const SkewTableau t({c2, c1}, {0, 0});
        const bool s = is_kn_by_columns(t, n);
        CHECK(is_kn(t, n) == s);
        if (is_kn(t, n, KnRows::per_column) != s) ++per_column_disagrees;
      }
  }
  // counting rows per column is the rejected reading
  CHECK(per_column_disagrees == 30);
}

TEST_CASE("plactic neighbours keep P") {
  std::mt19937 rng(7);
  const int n = 3;
  const auto a = GradedAlphabet::symplectic(n);
  for (int it = 0; it < 500; ++it) {
    Word w;
    for (int k = static_cast<int>(rng() % 7); k > 0; --k) w.push_back(a.at(static_cast<int>(rng() % 6)));
    const SkewTableau p = kn_P(w, n);
    for (const Word& v : plactic_neighbors(w, n)) CHECK(kn_P(v, n) == p);
  }
}

TEST_CASE("relation (5) removes a pair") {
  const auto moves = plactic_moves(parse_word("1,-1"), 1);
  bool found = false;
  for (const PlacticMove& m : moves) found = found || (m.relation == 5 && m.word.empty());
  CHECK(found);
}

TEST_CASE("symplectic jeu de taquin at rank 5") {
  const SkewTableau t1({col("3,-5,-4,-2"), col("3,-5,-3")}, {1, 0});
  CHECK(to_string(jdt_kn(t1, 0, 5)) == "[2,3,-5,-4,-2] [-5,-2] (0,0)");
  const SkewTableau t2({col("3,5,-3,-1"), col("2,3,-5,-4,-2")}, {2, 0});
  const SkewTableau r = jdt_kn(t2, 0, 5);
  CHECK(to_string(r) == "[3,5,-4,-3,-1] [2,3,-5,-2] (1,0)");
  CHECK_THROWS_AS(jdt_kn(t2, 1, 5), std::invalid_argument);
}

TEST_CASE("two-column slides rectify consistently") {
  for (int n = 2; n <= 3; ++n) {
    const auto cols = enumerate_columns(GradedAlphabet::symplectic(n), 3);
    long slides = 0;
    for (const Column& c2 : cols)
      for (const Column& c1 : cols)
        for (int t2 = 0; t2 <= 3; ++t2)
          for (int t1 = 0; t1 <= t2; ++t1) {
            const SkewTableau t({c2, c1}, {t2, t1});
            if (!is_admissible_tableau(t, n)) continue;
            const SkewTableau target = kn_P(reading_word(t), n);
            CHECK(rectify_kn(t, n) == target);
            for (int c = 0; c < 2; ++c) {
              if (t.top(c) < 1 || (c == 0 && t.top(1) >= t.top(0))) continue;
              ++slides;
              const SkewTableau a = jdt_kn(t, c, n);
              CHECK(kn_P(reading_word(a), n) == target);
              // raising the repaired column is always possible
              if (a.size() == t.size() - 2) CHECK_NOTHROW(jdt_kn(t, c, n, ColumnRepair::plactic, RepairTop::raise));
            }
          }
    CHECK(slides > 0);
  }
}

TEST_CASE("highest weight KN tableau") {
  const SkewTableau h = highest_weight_kn(Partition({2, 1, 1}));
  CHECK(to_string(h) == "[1,2,3] [1] (0,0)");
  CHECK(is_highest_weight(reading_word(h), 3));
  CHECK(sp_weight(reading_word(h), 3) == std::vector<int>{2, 1, 1});
}
