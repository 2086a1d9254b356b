#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "spinrsk/serialize.hpp"

using namespace spinrsk;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run call(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("letters and tableaux round-trip through JSON") {
  const Json letters = Json::parse(R"([3, -2, "4'"])");
  for (const Json& j : letters) CHECK(serialize(letter_from_json(j)) == j);
  CHECK_THROWS_AS(letter_from_json(Json(0)), std::invalid_argument);
  const Json sk = Json::parse(R"({"columns": [[1, -1], [2]], "tops": [1, 0]})");
  CHECK(serialize(skew_tableau_from_json(sk)) == sk);
  const auto a = GradedAlphabet::super(1, 1);
  const Json sp = Json::parse(R"([{"left": [1, "1'"], "right": ["1'"]}])");
  CHECK(serialize(spinor_from_json(sp, a)) == sp);
}

TEST_CASE("rsk round trip through the command line") {
  const std::string tuple = R"([[-2], [-1], [], [-2, -1]])";
  const Run fwd = call({"rsk", "--alphabet", "[2~]"}, tuple);
  REQUIRE(fwd.code == cli::ok);
  const Run back = call({"rsk", "--alphabet", "[2~]", "--inverse"}, fwd.out);
  REQUIRE(back.code == cli::ok);
  CHECK(Json::parse(back.out) == Json::parse(tuple));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"rsk", "--alphabet", "nonsense"}, "[]").code == cli::usage_error);
  CHECK(call({"rsk", "--alphabet", "[2~]"}, "not json").code == cli::usage_error);
  CHECK(call({"no-such-command"}).code == cli::usage_error);
  CHECK(call({"enumerate", "spinor", "--alphabet", "I_{1|1}", "--lambda", "1", "--ell", "1"}).code == cli::usage_error);
}

TEST_CASE("verify reports pass and fail") {
  const Run r = call({"verify", "dual-spinor", "-n", "1", "--ell", "1"});
  CHECK(r.code == cli::ok);
  CHECK(Json::parse(r.out).at("status") == "pass");
}

TEST_CASE("enumerate prints one object per line and a count") {
  const Run r = call({"enumerate", "king", "--lambda", "1", "--ell", "1"});
  REQUIRE(r.code == cli::ok);
  std::istringstream lines(r.out);
  std::string line, last;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    last = line;
  }
  CHECK(Json::parse(last).at("count") == n - 1);
}

TEST_CASE("golden examples replay") {
  const Run r = call({"examples", "--replay"});
  INFO(r.out);
  CHECK(r.code == cli::ok);
}
