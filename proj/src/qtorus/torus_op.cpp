#include "hecke/qtorus/torus_op.hpp"

#include <algorithm>
#include <climits>

namespace hecke {

template class TorusOp<Rational>;
template class TorusOp<RatFuncV>;

namespace {

using QPoly = Poly<Rational>;

QPoly lcm(const QPoly& a, const QPoly& b) {
  return (a / QPoly::gcd(a, b)) * b;
}

// Writes sum_i c_i X^i (c_i in Q(v)) as (1/L) sum_i n_i X^i with n_i, L in Q[v].
struct Cleared {
  std::vector<QPoly> n;
  QPoly L;
};

Cleared clear_denominators(const Poly<RatFuncV>& p) {
  Cleared out;
  out.L = QPoly(Rational(1));
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) out.L = lcm(out.L, c.den());
  for (const auto& c : p.coeffs()) {
    if (c.is_zero())
      out.n.emplace_back();
    else
      out.n.push_back(c.num() * (out.L / c.den()));
  }
  return out;
}

int min_valuation(const std::vector<QPoly>& v, const Rational& v0) {
  int m = INT_MAX;
  for (const auto& p : v)
    if (!p.is_zero()) m = std::min(m, root_multiplicity(p, v0));
  return m;
}

Poly<Rational> lowest_part(const std::vector<QPoly>& v, const Rational& v0, int k) {
  std::vector<Rational> out;
  for (const auto& p : v) out.push_back(p.is_zero() ? Rational(0) : divide_linear_power(p, v0, k).eval(v0));
  return Poly<Rational>(std::move(out));
}

}  // namespace

namespace {

// p = (v - v0)^val * (lead + O(v - v0)) coefficientwise, with lead a nonzero polynomial in X.
struct GaussPart {
  int val;
  Poly<Rational> lead;
};

GaussPart gauss_part(const Poly<RatFuncV>& p, const Rational& v0) {
  Cleared N = clear_denominators(p);
  const int vn = min_valuation(N.n, v0), vl = root_multiplicity(N.L, v0);
  Rational scale = 1 / divide_linear_power(N.L, v0, vl).eval(v0);
  return {vn - vl, lowest_part(N.n, v0, vn).scaled(scale)};
}

}  // namespace

RatFuncX<Rational> specialize_coeff(const RatFuncX<RatFuncV>& f, const Rational& v0) {
  if (f.is_zero()) return {};
  GaussPart n = gauss_part(f.factored_num(), v0);
  int total = n.val;
  Poly<Rational> den(Rational(1));
  for (const auto& a : f.atoms()) {
    GaussPart g = gauss_part(a.poly, v0);
    total -= g.val * a.exp;
    for (int i = 0; i < a.exp; ++i) den = den * g.lead;
  }
  if (total < 0) throw std::domain_error("pole at v=" + v0.get_str());
  if (total > 0) return {};
  return RatFuncX<Rational>(std::move(n.lead), den);
}

TorusOp<Rational> eval_spec(const TorusOp<RatFuncV>& a, const Rational& v0) {
  TorusOp<Rational> r(eval_at_v(a.q_half(), v0));
  for (const auto& [k, f] : a.terms()) {
    RatFuncX<Rational> g;
    try {
      g = specialize_coeff(f, v0);
    } catch (const std::domain_error& e) {
      throw std::domain_error(std::string(e.what()) + " in coefficient of key (j=" + std::to_string(k.j) +
                              ", eps=" + std::to_string(k.eps) + ")");
    }
    r = r + TorusOp<Rational>::monomial(g, k.j, k.eps, r.q_half());
  }
  return r;
}

TorusOp<Rational> divide_and_specialize(const TorusOp<RatFuncV>& a, const RatFuncV& d, const Rational& v0) {
  RatFuncV inv = d.inverse();
  TorusOp<RatFuncV> scaled = a.scaled(inv);
  try {
    return eval_spec(scaled, v0);
  } catch (const std::domain_error& e) {
    throw std::domain_error(std::string("not divisible by ") + d.str("v") + ": " + e.what());
  }
}

}  // namespace hecke
