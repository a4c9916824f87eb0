#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hecke/app/trials.hpp"
#include "hecke/weyl/stabilizer.hpp"
#include "hecke/weyl/weyl.hpp"

using namespace hecke;
using namespace hecke::weyl;

namespace {

TorusPointS pt(std::array<Rational, 4> s, Rational d) { return TorusPointS::make(s, d); }

}  // namespace

TEST_CASE("torus points validate") {
  CHECK_THROWS_AS(pt({Rational(1), Rational(2), Rational(3), Rational(4)}, Rational(5)), std::invalid_argument);
  CHECK_THROWS_AS(pt({Rational(0), Rational(2), Rational(3), Rational(4)}, Rational(0)), std::invalid_argument);
  CHECK_NOTHROW(pt({Rational(2), Rational(2), Rational(3), Rational(3)}, Rational(-6)));
}

TEST_CASE("the group has 192 elements and is closed") {
  const auto& g = weyl_group();
  CHECK(g.size() == 192);
  CHECK(g.front() == WeylElement{});
  std::set<std::pair<std::array<int, 4>, std::array<int, 4>>> seen;
  for (const auto& w : g) {
    CHECK(w.valid());
    seen.insert({w.perm, w.sign});
  }
  CHECK(seen.size() == 192);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, 191);
  const TorusPointS s = pt({Rational(2), Rational(3), Rational(5), Rational(6, 5)}, Rational(6));
  for (int i = 0; i < 40; ++i) {
    const auto& a = g[pick(rng)];
    const auto& b = g[pick(rng)];
    const WeylElement c = compose(a, b);
    CHECK(seen.count({c.perm, c.sign}) == 1);
    CHECK(weyl_act(c, s) == weyl_act(a, weyl_act(b, s)));
    CHECK(compose(a, inverse(a)) == WeylElement{});
  }
}

TEST_CASE("fundamental weight orbits have sizes 8, 24, 8, 8") {
  CHECK(weight_orbit(fundamental_weight(Fundamental::w1)).size() == 8);
  CHECK(weight_orbit(fundamental_weight(Fundamental::w2)).size() == 24);
  CHECK(weight_orbit(fundamental_weight(Fundamental::w3)).size() == 8);
  CHECK(weight_orbit(fundamental_weight(Fundamental::w4)).size() == 8);
}

TEST_CASE("orbit sums against explicit expansions") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    const TorusPointS s = app::random_s_point(rng);
    const auto& x = s.s;
    Rational m1 = 0, m2 = 0, m4 = 0, m3 = 0;
    for (int k = 0; k < 4; ++k) m1 += x[k] + 1 / x[k];
    for (int k = 0; k < 4; ++k)
      for (int l = k + 1; l < 4; ++l) m2 += x[k] * x[l] + 1 / (x[k] * x[l]) + x[k] / x[l] + x[l] / x[k];
    // half-weights (±1,±1,±1,±1)/2: even number of minus signs in ω4's orbit, odd in ω3's
    for (int mask = 0; mask < 16; ++mask) {
      Rational mono = s.delta;
      for (int k = 0; k < 4; ++k)
        if (mask >> k & 1) mono /= x[k];
      (__builtin_popcount(mask) % 2 == 0 ? m4 : m3) += mono;
    }
    CHECK(orbit_sum(Fundamental::w1, s) == m1);
    CHECK(orbit_sum(Fundamental::w2, s) == m2);
    CHECK(orbit_sum(Fundamental::w3, s) == m3);
    CHECK(orbit_sum(Fundamental::w4, s) == m4);
  }
}

TEST_CASE("surface coefficients factor through the torus") {
  for (const auto& res : pi_theta_residues()) CHECK(res.is_zero());
  const auto S = pi(pt({Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(1)));
  CHECK(S.as_array() == std::array<Rational, 4>{Rational(8), Rational(8), Rational(-8), Rational(-32)});
}

TEST_CASE("invariance under W: serial and parallel sweeps") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 5; ++i) {
    const TorusPointS s = app::random_s_point(rng);
    CHECK(invariance_violations_serial(s) == 0);
    CHECK(invariance_violations(s) == 0);
  }
}

TEST_CASE("stabilizer subsystems of the stratum witnesses") {
  struct Case {
    TorusPointS s;
    std::string stratum;
    int milnor;
  };
  const std::vector<Case> cases{
      {pt({Rational(2), Rational(3), Rational(5), Rational(6, 5)}, Rational(6)), "smooth", 0},
      {pt({Rational(2), Rational(2), Rational(3), Rational(4, 3)}, Rational(4)), "Sigma^1_{12}", 1},
      {pt({Rational(2), Rational(2), Rational(3), Rational(3)}, Rational(6)), "Sigma'_{1,1}", 2},
      {pt({Rational(2), Rational(2), Rational(2), Rational(9, 8)}, Rational(3)), "Sigma'_2", 2},
      {pt({Rational(1), Rational(1), Rational(3), Rational(3)}, Rational(3)), "Sigma''_{1,1,1}", 3},
      {pt({Rational(2), Rational(2), Rational(2), Rational(2)}, Rational(4)), "Sigma''_3", 3},
      {pt({Rational(1), Rational(-1), Rational(-1), Rational(1)}, Rational(1)), "Sigma'''_{1,1,1,1}", 4},
      {pt({Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(1)), "Sigma'''_4", 4},
  };
  for (const auto& c : cases) {
    const Prediction p = classify(c.s);
    CHECK(p.stratum == c.stratum);
    CHECK(p.total_milnor == c.milnor);
  }
  CHECK(classify(pt({Rational(2), Rational(1, 2), Rational(3), Rational(1, 3)}, Rational(1))).stratum ==
        "Sigma'_{1,1}");
}

TEST_CASE("theta lands on the torus") {
  const daha::ParamTuple t(Rational(2), Rational(3), Rational(5), Rational(7));
  const TorusPointS s = theta(t);
  CHECK(s.s[0] * s.s[1] * s.s[2] * s.s[3] == s.delta * s.delta);
  CHECK(classify(s).stratum == "smooth");
}
