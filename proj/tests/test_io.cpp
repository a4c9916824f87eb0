#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/app/trials.hpp"
#include "hecke/io/json.hpp"

using namespace hecke;

TEST_CASE("rationals serialize as a/b strings") {
  CHECK(io::to_json(Rational(-3, 2)) == "-3/2");
  CHECK(io::to_json(Rational(4)) == "4/1");
  CHECK(io::rational_from_json(io::Json("7/21")) == Rational(1, 3));
  CHECK_THROWS(io::rational_from_json(io::Json(3)));
}

TEST_CASE("polynomials round-trip through exponent maps") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 10; ++i) {
    const cubic::MPoly f = cubic::random_cubic_poly(rng);
    const io::Json j = io::to_json(f);
    CHECK(io::mpoly_from_json(j) == f);
    CHECK(io::mpoly_from_json(io::Json::parse(j.dump())) == f);
  }
  CHECK(io::to_json(cubic::X1() * cubic::X3()).dump() == R"({"1,0,1":"1/1"})");
  CHECK_THROWS(io::mpoly_from_json(io::Json::parse(R"({"1,0":"1/1"})")));
  CHECK_THROWS(io::mpoly_from_json(io::Json::parse(R"({"-1,0,0":"1/1"})")));
}

TEST_CASE("seeded random tuples are reproducible and in range") {
  const auto a = app::random_tuples(20, 99), b = app::random_tuples(20, 99);
  CHECK(a == b);
  for (const auto& t : a)
    for (const auto& x : t.as_array()) {
      CHECK(sgn(x) != 0);
      CHECK(abs(x.get_num()) <= 20);
      CHECK(x.get_den() <= 20);
    }
  CHECK(app::random_tuples(5, 1) != app::random_tuples(5, 2));
}

TEST_CASE("reports serialize every check") {
  Report r;
  r.add("a", true);
  r.add("b", false, 3, "why");
  const io::Json j = io::to_json(r);
  CHECK(j["passed"] == false);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][1]["residue_support"] == 3);
  CHECK(j["checks"][1]["note"] == "why");
}
