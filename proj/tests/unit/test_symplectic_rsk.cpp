#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "spinrsk/symplectic_rsk.hpp"

using namespace spinrsk;
using spinrsk::test::col;
using spinrsk::test::str;

TEST_CASE("the worked example over I_{4|3}") {
  const auto a = GradedAlphabet::parse("I_{4|3}");
  const ColumnTuple t({col("3,1'"), col("2,4,2'"), col("1,2,1',3'"), col("1,3,2'"), col("1',1'"), col("2,2',2',3'")});
  const SymplecticTrace tr = symplectic_rsk_trace(t, a);
  CHECK(str(tr.fmax.blocks) == "([2,3,1'][4,2'])([1,2,1',3'][1,3,2'])([2,1',1',3'][2',2'])");
  CHECK(tr.fmax.phi == std::vector<int>{2, 0, 1});
  CHECK(tr.skew.inner() == Partition({2, 1}));
  CHECK(str(tr.result.p) == "([2,3,1'][2,4])([1,3,1',2'][1,2'])([2,1',1',3',3'][2',2'])");
  const auto q = tr.result.q.tableau().rows();
  REQUIRE(q.size() == 3);
  CHECK(to_string(Word(q[0].begin(), q[0].end())) == "-1,-1,2");
  CHECK(to_string(Word(q[1].begin(), q[1].end())) == "3,-3");
  CHECK(to_string(Word(q[2].begin(), q[2].end())) == "-3");
  CHECK(tr.q.n() == 3);
  CHECK(symplectic_rsk(t, a) == tr.result);
  CHECK(symplectic_rsk_inverse(tr.result.p, tr.result.q, a) == t);
  CHECK(fmax_phi_inverse(tr.fmax.blocks, tr.fmax.phi, a) == t);
}

TEST_CASE("bijective on small inputs") {
  for (const auto& a : {GradedAlphabet::barred(2), GradedAlphabet::super(1, 1)}) {
    const int cap = a.has_degree_one() ? 2 : -1;
    const auto cols = enumerate_columns(a, cap);
    for (int ell = 1; ell <= 2; ++ell) {
      std::set<std::pair<SpinorTableau, std::vector<std::vector<Letter>>>> seen;
      std::map<Partition, long> shapes;
      long inputs = 0;
      std::vector<std::size_t> idx(static_cast<std::size_t>(2 * ell), 0);
      for (;;) {
        ColumnTuple t;
        for (std::size_t k : idx) t.cols.push_back(cols[k]);
        ++inputs;
        const SymplecticPair r = symplectic_rsk(t, a);
        seen.insert({r.p, r.q.tableau().rows()});
        ++shapes[r.q.shape()];
        CHECK(is_spinor_tableau(r.p, r.q.shape(), ell, a));
        CHECK(symplectic_rsk_inverse(r.p, r.q, a) == t);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == cols.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
      CHECK(static_cast<long>(seen.size()) == inputs);
      if (cap < 0)
        for (const auto& [lambda, c] : shapes)
          CHECK(c == static_cast<long>(enumerate_king(lambda, ell).size() * enumerate_spinor(lambda, ell, a, cap).size()));
    }
  }
}

TEST_CASE("mismatched P and Q are rejected") {
  const auto a = GradedAlphabet::barred(2);
  const SymplecticPair r = symplectic_rsk(ColumnTuple({col("-2"), col("-1")}), a);
  const KingTableau other(SkewTableau::from_rows({{num(1), num(1)}}), 1);
  if (r.q.shape() != other.shape()) CHECK_THROWS_AS(symplectic_rsk_inverse(r.p, other, a), std::invalid_argument);
}
