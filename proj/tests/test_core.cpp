#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/core/factored.hpp"
#include "hecke/core/linalg.hpp"
#include "hecke/core/poly.hpp"
#include "hecke/core/ratfunc.hpp"
#include "hecke/core/sparse.hpp"

using namespace hecke;
using QPoly = Poly<Rational>;

namespace {

QPoly qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

Rational small(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6), e(1, 4);
  Rational r(d(rng), e(rng));
  r.canonicalize();
  return r;
}

RatFuncV random_ratfunc(std::mt19937_64& rng) {
  std::vector<Rational> n(3), d(2);
  for (auto& x : n) x = small(rng);
  d[0] = small(rng);
  d[1] = 1;
  if (sgn(d[0]) == 0) d[0] = 2;
  return RatFuncV(QPoly(n), QPoly(d));
}

}  // namespace

TEST_CASE("rationals print as a/b and parse back") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(rational_pow(Rational(2, 3), -3) == Rational(27, 8));
  CHECK_THROWS_AS(checked_div(Rational(1), Rational(0)), std::domain_error);
}

TEST_CASE("polynomial gcd and division") {
  const QPoly a = qpoly({2, -3, 1});  // (x-1)(x-2)
  const QPoly b = qpoly({-3, 2, 1});  // (x-1)(x+3)
  CHECK(QPoly::gcd(a, b) == qpoly({-1, 1}));
  auto [quo, rem] = QPoly::divmod(a, qpoly({-1, 1}));
  CHECK(quo == qpoly({-2, 1}));
  CHECK(rem.is_zero());
  CHECK(a.derivative() == qpoly({-3, 2}));
  CHECK(a.eval(Rational(2)) == 0);
}

TEST_CASE("subresultant gcd over Q(v) agrees with Euclid") {
  std::mt19937_64 rng(11);
  using BP = Poly<RatFuncV>;
  for (int trial = 0; trial < 6; ++trial) {
    auto rp = [&](int deg) {
      std::vector<RatFuncV> c;
      for (int i = 0; i < deg; ++i) c.push_back(random_ratfunc(rng));
      c.push_back(RatFuncV(Rational(1)));
      return BP(c);
    };
    const BP common = rp(1), f = rp(2), g = rp(1);
    const BP x = common * f, y = common * g;
    const BP fast = BP::gcd(x, y), slow = BP::euclid_gcd(x, y);
    CHECK(fast == slow);
    CHECK(fast.degree() >= 1);
  }
}

TEST_CASE("factored coefficients agree with reduced rational functions") {
  std::mt19937_64 rng(5);
  using FR = FactoredRatFunc<Rational>;
  for (int trial = 0; trial < 30; ++trial) {
    const RatFuncV a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    const FR fa(a), fb(b), fc(c);
    const RatFuncV plain = (a + b) * c - a * b.inverse();
    const FR fact = (fa + fb) * fc - fa * fb.inverse();
    CHECK(fact.reduced() == plain);
    CHECK(FR(a).invert_var().reduced() == a.invert_var());
    CHECK(FR(a).scale_var(Rational(3, 2)).reduced() == a.scale_var(Rational(3, 2)));
  }
  const FR x = FR::var();
  CHECK(((x * x - FR(1L)) / (x - FR(1L))).reduced() == (x + FR(1L)).reduced());
  CHECK((x / x).is_one());
}

TEST_CASE("dense rank") {
  DenseMatrix m{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}, {Rational(0), Rational(1)}};
  CHECK(rank(m) == 2);
  CHECK(rank({}) == 0);
  CHECK(rank({{Rational(0), Rational(0)}}) == 0);
}

TEST_CASE("sparse echelon rank matches dense rank") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> val(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    DenseMatrix m(7, std::vector<Rational>(6));
    SparseEchelon e;
    for (auto& row : m) {
      SparseVec v;
      for (int j = 0; j < 6; ++j) {
        const int x = val(rng);
        row[j] = val(rng) > 0 ? x : 0;
        if (sgn(row[j]) != 0) v[j] = row[j];
      }
      e.insert(v);
    }
    CHECK(e.rank() == rank(m));
  }
}

TEST_CASE("sparse echelon tracks combinations") {
  SparseEchelon e;
  e.insert({{0, Rational(1)}, {1, Rational(1)}}, {{100, Rational(1)}});
  e.insert({{1, Rational(1)}, {2, Rational(1)}}, {{101, Rational(1)}});
  // (1, 2, 1) = row0 + row1
  auto r = e.reduce({{0, Rational(1)}, {1, Rational(2)}, {2, Rational(1)}});
  CHECK(r.residual.empty());
  CHECK(r.combo == SparseVec{{100, Rational(-1)}, {101, Rational(-1)}});
  CHECK(e.insert({{2, Rational(5)}}));
  CHECK_FALSE(e.insert({{0, Rational(3)}, {1, Rational(3)}}));
}
