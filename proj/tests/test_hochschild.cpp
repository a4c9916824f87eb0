#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/hochschild/homology.hpp"

using namespace hecke;
using namespace hecke::hochschild;

namespace {

// δ-operators written out on the monomial basis, independent of the torus product.
Elem delta1(const Elem& c, const Rational& q) {
  Elem r;
  for (const auto& [m, x] : c) {
    r = r + mono(m.first - 2, m.second, x * rational_pow(q, -m.second));
    r = r - mono(m.first, m.second, x);
  }
  return r;
}

Elem delta2(const Elem& c, const Rational& q) {
  Elem r;
  for (const auto& [m, x] : c) {
    r = r + mono(m.first, m.second - 2, x * rational_pow(q, -m.first));
    r = r - mono(m.first, m.second, x);
  }
  return r;
}

Elem random_elem(std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> pos(-radius, radius), val(-3, 3);
  Elem e;
  for (int i = 0; i < 6; ++i) e = e + mono(pos(rng), pos(rng), Rational(val(rng)));
  return e;
}

}  // namespace

TEST_CASE("windows reject roots of unity and tiny radii") {
  CHECK_THROWS_AS(Window::make(Rational(1), 10), std::invalid_argument);
  CHECK_THROWS_AS(Window::make(Rational(-1), 10), std::invalid_argument);
  CHECK_THROWS_AS(Window::make(Rational(0), 10), std::invalid_argument);
  CHECK_THROWS_AS(Window::make(Rational(2), 3), std::invalid_argument);
  CHECK(Window::make(Rational(-3, 2), 8).inner() == 4);
}

TEST_CASE("quantum torus product") {
  const QuantumTorus qt(Rational(3), 50);
  CHECK(qt.mul(mono(0, 1), mono(1, 0)) == mono(1, 1, Rational(3)));  // PX = qXP
  CHECK(qt.mul(mono(1, 0), mono(0, 1)) == mono(1, 1));
  CHECK(qt.qpow(-2) == Rational(1, 9));
  CHECK(qt.qpow(100) == rational_pow(Rational(3), 100));
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10; ++i) {
    const Elem a = random_elem(rng, 3), b = random_elem(rng, 3), c = random_elem(rng, 3);
    CHECK(qt.mul(qt.mul(a, b), c) == qt.mul(a, qt.mul(b, c)));
  }
}

TEST_CASE("untwisted differentials are diagonal on monomials") {
  const Rational q(2);
  const KoszulComplex K(Window::make(q, 10), Twist::untwisted);
  CHECK(K.d1(mono(0, 0)) == Chain{Elem{}, Elem{}});
  CHECK(K.d1(mono(1, 0)) == Chain{Elem{}, mono(1, 0, 1 - q)});
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Chain d = K.d1(mono(a, b));
      CHECK(d[0] == mono(a, b, rational_pow(q, -b) - 1));
      CHECK(d[1] == mono(a, b, 1 - rational_pow(q, a)));
    }
}

TEST_CASE("twisted differentials match the δ-operators") {
  const Rational q(5, 7);
  const KoszulComplex K(Window::make(q, 10), Twist::twisted);
  const Chain d = K.d1(mono(0, 0));
  CHECK(d[0] == mono(-2, 0) - mono(0, 0));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Elem z = random_elem(rng, 5), w = random_elem(rng, 5);
    const Chain dz = K.d1(z);
    CHECK(dz[0] == delta1(z, q));
    CHECK(dz[1] == -delta2(z, q));
    CHECK(K.d0({z, w}) == delta2(z, q) + delta1(w, q));
  }
}

TEST_CASE("complexes and chain maps") {
  for (auto t : {Twist::untwisted, Twist::twisted}) {
    const Report r = complex_check(Window::make(Rational(3, 2), 8), t);
    for (const auto& c : r.checks) {
      INFO(c.name, " ", c.note);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("windowed homology") {
  for (const Rational q : {Rational(2), Rational(3, 2), Rational(5, 7)}) {
    const Window w = Window::make(q, 10);
    const HomologyReport u = homology_dims(w, Twist::untwisted);
    const HomologyReport t = homology_dims(w, Twist::twisted);
    CHECK(u.dims == Dims{1, 2, 1});
    CHECK(t.dims == Dims{4, 0, 0});
    CHECK(u.stabilized);
    CHECK(t.stabilized);
  }
}

TEST_CASE("parallel and serial homology agree") {
  const Window w = Window::make(Rational(-3, 2), 8);
  for (auto t : {Twist::untwisted, Twist::twisted}) {
    const WindowHomology a = window_homology(w, t), b = window_homology_serial(w, t);
    CHECK(a.dims == b.dims);
    CHECK(a.rank_dims == b.rank_dims);
    CHECK(a.action == b.action);
  }
}

TEST_CASE("image characterization on the window") {
  const Report r = image_characterization_check(Window::make(Rational(2), 10));
  for (const auto& c : r.checks) {
    INFO(c.name, " ", c.note);
    CHECK(c.pass);
  }
}

TEST_CASE("involution on homology and the crossed product") {
  const Z2Result z = z2_combine(Window::make(Rational(3, 2), 10));
  CHECK(z.checks.passed());
  CHECK(z.untwisted_invariant == Dims{1, 0, 1});
  CHECK(z.twisted_invariant == Dims{4, 0, 0});
  CHECK(z.combined == Dims{5, 0, 1});
}

TEST_CASE("stabilization needs two comparable windows") {
  CHECK_NOTHROW(homology_dims(Window::make(Rational(2), 6), Twist::twisted));
  CHECK_THROWS_AS(homology_dims(Window::make(Rational(2), 5), Twist::twisted), std::invalid_argument);
}
