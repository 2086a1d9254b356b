#include <doctest.h>

#include <stdexcept>

#include "spinrsk/characters.hpp"

using namespace spinrsk;

TEST_CASE("small characters") {
  const auto x = GradedAlphabet::plain(1);
  CHECK(sp_character(Partition(), 1).to_string() == "1");
  CHECK(sp_character(Partition({1}), 1).to_string() == "z1^-1 + z1");
  CHECK(sp_character(Partition({2}), 1).to_string() == "1 + z1^-2 + z1^2");
  CHECK(schur(Partition({2}), x, 4).to_string() == "x1^2");
  CHECK((sp_character(Partition({1}), 1) * schur(Partition({1}), x, 4)).to_string() == "x1*z1^-1 + x1*z1");
}

TEST_CASE("identities") {
  CHECK(verify_dual_spinor(1, 1).pass);
  CHECK(verify_dual_spinor(2, 1).pass);
  CHECK(verify_cauchy(GradedAlphabet::barred(2), 1).pass);
  CHECK(verify_cauchy(GradedAlphabet::from_letters({}), 2).pass);
  CHECK(verify_cauchy(GradedAlphabet::super(1, 1), 1, 4).pass);
  CHECK(verify_littlewood(1, 1, 4).pass);
  CHECK_THROWS_AS(verify_littlewood(2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(verify_cauchy(GradedAlphabet::super(1, 1), 1), std::invalid_argument);
}

TEST_CASE("truncated arithmetic") {
  const LaurentPoly g = LaurentPoly::geometric(Monomial::var("x1") * Monomial::var("z1"), 2);
  CHECK(g.to_string() == "1 + x1*z1 + x1^2*z1^2");
}
