#include "hecke/core/ratfunc.hpp"

namespace hecke {

Poly<Rational> divide_linear_power(const Poly<Rational>& p, const Rational& v0, int k) {
  std::vector<Rational> c = p.coeffs();
  for (int step = 0; step < k; ++step) {
    // synthetic division by (v - v0)
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) throw std::domain_error("divide_linear_power: not divisible");
    std::vector<Rational> q(n);
    Rational carry = c[n];
    for (int i = n - 1; i >= 0; --i) {
      q[i] = carry;
      carry = c[i] + carry * v0;
    }
    if (sgn(carry) != 0) throw std::domain_error("divide_linear_power: not divisible");
    c = std::move(q);
  }
  return Poly<Rational>(std::move(c));
}

int root_multiplicity(const Poly<Rational>& p, const Rational& v0) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of zero polynomial");
  int k = 0;
  Poly<Rational> cur = p;
  while (cur.degree() > 0 && sgn(cur.eval(v0)) == 0) {
    cur = divide_linear_power(cur, v0, 1);
    ++k;
  }
  return k;
}

Rational eval_at_v(const RatFuncV& f, const Rational& v0) {
  Rational d = f.den().eval(v0);
  if (sgn(d) == 0)
    throw std::domain_error("pole at v=" + v0.get_str() + " (denominator " + f.den().str("v") + ")");
  return Rational(f.num().eval(v0) / d);
}

}  // namespace hecke

namespace hecke {

namespace {

using QPoly = Poly<Rational>;
using BiPoly = std::vector<QPoly>;  // coefficients in Q[v], lowest X-degree first

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const BiPoly& p) { return static_cast<int>(p.size()) - 1; }

BiPoly clear_denominators(const Poly<RatFuncV>& a) {
  QPoly L(Rational(1));
  for (const auto& c : a.coeffs())
    if (!c.is_zero() && c.den().degree() > 0) L = (L / QPoly::gcd(L, c.den())) * c.den();
  BiPoly out;
  for (const auto& c : a.coeffs()) out.push_back(c.is_zero() ? QPoly() : c.num() * (L / c.den()));
  trim(out);
  return out;
}

// Exact pseudo-remainder: lc(b)^(deg a - deg b + 1) a mod b.
BiPoly prem(BiPoly a, const BiPoly& b) {
  const int db = deg(b);
  const QPoly& lb = b.back();
  int steps = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const int da = deg(a);
    QPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    QPoly m(Rational(1));
    for (int i = 0; i < steps; ++i) m = m * lb;
    for (auto& c : a) c = c * m;
  }
  return a;
}

QPoly qpow(const QPoly& p, int e) {
  QPoly r(Rational(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

// Degree of gcd(a(v*, X), b(v*, X)) at a point where both leading coefficients survive:
// an upper bound for the degree of the gcd over Q(v).
int specialized_gcd_degree(const BiPoly& a, const BiPoly& b) {
  static const Rational points[] = {Rational(7, 3), Rational(-5, 2), Rational(11, 7), Rational(13), Rational(-17, 5)};
  for (const auto& vs : points) {
    if (sgn(a.back().eval(vs)) == 0 || sgn(b.back().eval(vs)) == 0) continue;
    std::vector<Rational> ea, eb;
    for (const auto& c : a) ea.push_back(c.eval(vs));
    for (const auto& c : b) eb.push_back(c.eval(vs));
    return Poly<Rational>::euclid_gcd(Poly<Rational>(ea), Poly<Rational>(eb)).degree();
  }
  return std::min(deg(a), deg(b));
}

}  // namespace

Poly<RatFuncV> PolyGcd<RatFuncV>::gcd(const Poly<RatFuncV>& a0, const Poly<RatFuncV>& b0) {
  using P = Poly<RatFuncV>;
  const P one(RatFuncV(Rational(1)));
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (a0.degree() == 0 || b0.degree() == 0) return one;
  BiPoly a = clear_denominators(a0), b = clear_denominators(b0);
  if (deg(a) < deg(b)) std::swap(a, b);
  if (specialized_gcd_degree(a, b) == 0) return one;

  // subresultant remainder sequence
  QPoly g(Rational(1)), h(Rational(1));
  while (true) {
    const int delta = deg(a) - deg(b);
    BiPoly r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return one;
    QPoly div = g * qpow(h, delta);
    for (auto& c : r) c = c / div;
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = qpow(g, delta) / qpow(h, delta - 1);
    }
  }
  std::vector<RatFuncV> out;
  out.reserve(b.size());
  for (auto& c : b) out.push_back(RatFuncV(std::move(c)));
  return P(std::move(out)).monic();
}

}  // namespace hecke
