#include <fstream>
#include <sstream>

#include "doctest.h"
#include "plbranch/cli.hpp"
#include "plbranch/errors.hpp"
#include "plbranch/report_io.hpp"

using namespace plbranch;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json golden(const std::string& name) {
  std::ifstream in(std::string(PLBRANCH_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("split_param and parse_prime_range") {
  CHECK(split_param("4; t^6 + t^7") == std::pair<std::int64_t, std::string>{4, "t^6 + t^7"});
  CHECK_THROWS_AS(split_param("t^6"), InputError);
  CHECK(parse_prime_range("5..19") == std::pair<std::uint64_t, std::uint64_t>{5, 19});
  CHECK_THROWS_AS(parse_prime_range("19..5"), InputError);
  CHECK_THROWS_AS(parse_prime_range("5-19"), InputError);
}

TEST_CASE("exit codes") {
  CHECK(cli({"analyze", "--p", "5", "--param", "4; t^6 + t^7"}).code == kExitOk);
  CHECK(cli({"analyze", "--p", "6", "--param", "4; t^6 + t^7"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5", "--param", "5; t^6 + t^7"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5", "--param", "4; t^3 + t^7"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5", "--param", "4; t^6 + t^8"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5", "--poly", "x + y^2"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5", "--poly", "x^2 + z"}).code == kExitInputError);
  CHECK(cli({"analyze", "--p", "5"}).code == kExitInputError);
  CHECK(cli({"bogus"}).code == kExitInputError);
  CHECK(cli({"--help"}).code == kExitOk);
  // Counter-evidence for the conjecture never changes the exit code.
  CHECK(cli({"conjecture", "--p", "5", "--poly", "x^5 + y^4", "--generators", "4,5"}).code == kExitOk);
}

TEST_CASE("error messages name the kind") {
  const auto o = cli({"analyze", "--p", "5", "--param", "4; t^3 + t^7"});
  CHECK(o.err.find("OrderNotAboveN") != std::string::npos);
  CHECK(o.err.find("ord y > n") != std::string::npos);
}

TEST_CASE("golden reports") {
  auto o = cli({"analyze", "--p", "5", "--param", "4; t^6 + t^7", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(Json::parse(o.out) == golden("analyze_param_p5.json"));

  o = cli({"analyze", "--p", "13", "--poly", "(y^2+x^3)^2+x^5*y", "--generators", "4,6,13", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(Json::parse(o.out) == golden("analyze_poly_p13.json"));

  o = cli({"sweep", "--primes", "5..19", "--param", "4; t^6 + t^7", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(Json::parse(o.out) == golden("sweep_5_19.json"));

  o = cli({"conjecture", "--p", "5", "--poly", "x^7 + y^6 + x^6*y", "--generators", "6,7", "--format", "json"});
  CHECK(o.code == kExitOk);
  CHECK(Json::parse(o.out) == golden("conjecture_small_p_p5.json"));
}

TEST_CASE("text output") {
  const auto o = cli({"analyze", "--p", "5", "--param", "4; t^6 + t^7"});
  CHECK(o.out.find("conductor = 16") != std::string::npos);
  CHECK(o.out.find("mu = 16") != std::string::npos);
}
