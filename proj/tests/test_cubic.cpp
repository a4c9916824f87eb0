#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <random>
#include <set>

#include "hecke/app/trials.hpp"
#include "hecke/cubic/singular.hpp"
#include "hecke/cubic/surface.hpp"
#include "hecke/weyl/weyl.hpp"

using namespace hecke;
using namespace hecke::cubic;

namespace {

const daha::ParamTuple kT(Rational(2), Rational(-3, 4), Rational(5, 2), Rational(7, 3));

weyl::TorusPointS pt(std::array<Rational, 4> s, Rational d) { return weyl::TorusPointS::make(s, d); }

}  // namespace

TEST_CASE("polynomial parsing") {
  const MPoly f = parse_mpoly("X1*X2 - 3/2*X3^2 + (X1 + 1)^2");
  CHECK(f == X1() * X2() - X3() * X3() * MPoly(Rational(3, 2)) + (X1() + MPoly(Rational(1))).pow(2));
  CHECK_THROWS(parse_mpoly("X4"));
  CHECK_THROWS(parse_mpoly("X1 +"));
}

TEST_CASE("normal form kills R and is linear in X3") {
  const CubicSurface S = coeffs_from_params(kT);
  CHECK(normal_form(S.R(), S).is_zero());
  const SurfacePoly nf = normal_form(X3().pow(4) + X1() * X3().pow(2), S);
  CHECK(nf.a.degree_in(2) == 0);
  CHECK(nf.b.degree_in(2) == 0);
  CHECK(normal_form(nf.full() - (X3().pow(4) + X1() * X3().pow(2)), S).is_zero());
}

TEST_CASE("Poisson bracket: Jacobi, Casimir, antisymmetry") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 3; ++i) {
    const CubicSurface S = coeffs_from_params(app::random_tuple(rng));
    const Report r = jacobi_check(S, rng);
    CHECK(r.passed());
    for (auto x : {X1(), X2(), X3()}) CHECK(ambient_bracket(S.R(), x, S).is_zero());
    const MPoly f = random_cubic_poly(rng), g = random_cubic_poly(rng);
    CHECK(ambient_bracket(f, g, S) == -ambient_bracket(g, f, S));
  }
}

TEST_CASE("a bracket table that is not a Poisson structure fails Jacobi") {
  const CubicSurface S = coeffs_from_params(kT);
  BracketTable bad = bracket_table(S);
  bad.b12 = bad.b12 + X1();
  CHECK_FALSE(jacobiator_generators(S, bad).is_zero());
}

TEST_CASE("Vieta involutions square to the identity and preserve R") {
  const CubicSurface S = coeffs_from_params(kT);
  for (auto a : {Action::g1, Action::g2, Action::g3}) {
    for (auto x : {X1(), X2(), X3()}) CHECK(k_action({a, a}, x, S).poly.full() == x);
    CHECK(normal_form(k_action({a}, S.R(), S).poly.full(), S).is_zero());
  }
  for (auto a : {Action::g1, Action::g2, Action::g3, Action::sigma, Action::tau, Action::eta})
    CHECK(verify_equivariance(a, S).passed());
  CHECK_FALSE(parse_action("g4").has_value());
}

TEST_CASE("singularities of the stratum witnesses") {
  struct Case {
    weyl::TorusPointS s;
    std::vector<std::string> ade;  // sorted
    int hessian;                   // rank at every point
  };
  const std::vector<Case> cases{
      {pt({Rational(2), Rational(2), Rational(3), Rational(4, 3)}, Rational(4)), {"A1"}, 3},
      {pt({Rational(2), Rational(2), Rational(3), Rational(3)}, Rational(6)), {"A1", "A1"}, 3},
      {pt({Rational(2), Rational(2), Rational(2), Rational(9, 8)}, Rational(3)), {"A2"}, 2},
      {pt({Rational(1), Rational(1), Rational(3), Rational(3)}, Rational(3)), {"A1", "A1", "A1"}, 3},
      {pt({Rational(2), Rational(2), Rational(2), Rational(2)}, Rational(4)), {"A3"}, 2},
      {pt({Rational(1), Rational(-1), Rational(-1), Rational(1)}, Rational(1)), {"A1", "A1", "A1", "A1"}, 3},
      {pt({Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(1)), {"D4"}, 1},
  };
  for (const auto& c : cases) {
    INFO(c.s.str());
    const SingularityReport r = analyze(c.s);
    std::vector<std::string> got;
    for (const auto& p : r.points) {
      got.push_back(p.ade);
      CHECK(p.hessian_rank == c.hessian);
      CHECK(verify_singular(r.surface, p.point));
    }
    std::sort(got.begin(), got.end());
    CHECK(got == c.ade);
    CHECK(r.total_milnor() == r.prediction->total_milnor);
    CHECK(r.completeness == "proved");
    // the same points come out of the elimination alone
    const SingularityReport q = analyze(r.surface);
    CHECK(q.points.size() == r.points.size());
    CHECK(q.total_milnor() == r.total_milnor());
  }
}

TEST_CASE("parameters (1,1,1,1): four nodes at 2(e1,e2,e3) with e1 e2 e3 = 1") {
  const daha::ParamTuple one(Rational(1), Rational(1), Rational(1), Rational(1));
  const SingularityReport r = analyze(weyl::theta(one));
  std::set<Point3> got, want;
  for (const auto& p : r.points) got.insert(p.point);
  for (int e1 : {-1, 1})
    for (int e2 : {-1, 1}) want.insert({Rational(2 * e1), Rational(2 * e2), Rational(2 * e1 * e2)});
  CHECK(got == want);
}

TEST_CASE("generic parameters give smooth surfaces") {
  const auto ts = app::random_tuples(10, 17, true);
  for (const auto& t : ts) {
    const SingularityReport r = analyze(weyl::theta(t));
    CHECK(r.points.empty());
    CHECK(r.elimination == 0);
  }
}

TEST_CASE("Milnor number from jets against hand counts") {
  const CubicSurface S{};
  // the origin is a nondegenerate critical point of R: Morse, so mu = 1
  CHECK(hessian_rank(S, {Rational(0), Rational(0), Rational(0)}) == 3);
  CHECK(milnor_number(S, {Rational(0), Rational(0), Rational(0)}) == 1);
  // the gradient does not vanish at (1, 0, 0): the local algebra is zero
  CHECK(milnor_number(S, {Rational(1), Rational(0), Rational(0)}) == 0);
  CHECK(ade_label(2, 2) == "A2");
  CHECK(ade_label(2, 3) == "unknown");
}

TEST_CASE("irrational singular points are reported approximately") {
  // gradient vanishes at (±√2, ±√2, 2) when p = (0, 0, 2, -4)
  const CubicSurface S{Rational(0), Rational(0), Rational(2), Rational(-4)};
  const SingularityReport r = analyze(S);
  int approx = 0;
  for (const auto& p : r.points) {
    if (p.exact) continue;
    ++approx;
    CHECK(std::fabs(std::fabs(p.approx[0]) - std::sqrt(2.0)) < 1e-9);
    CHECK(std::fabs(p.approx[0] - p.approx[1]) < 1e-9);
    CHECK(std::fabs(p.approx[2] - 2.0) < 1e-9);
  }
  CHECK(approx == 2);
  CHECK(r.completeness == "heuristic");
}
