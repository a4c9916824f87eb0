#include "hecke/cubic/surface.hpp"

#include <stdexcept>

namespace hecke::cubic {

MPoly CubicSurface::R() const {
  return X1() * X2() * X3() - X1().pow(2) - X2().pow(2) - X3().pow(2) + X1().scaled(p1) + X2().scaled(p2) +
         X3().scaled(p3) + MPoly(Rational(p0 + 4));
}

CubicSurface coeffs_from_params(const daha::ParamTuple& t) {
  const Rational kb0 = t.kb0(), kb1 = t.kb1(), ub0 = t.ub0(), ub1 = t.ub1();
  CubicSurface S;
  S.p1 = ub0 * kb0 + kb1 * ub1;
  S.p2 = ub1 * ub0 + kb0 * kb1;
  S.p3 = kb0 * ub1 + kb1 * ub0;
  S.p0 = kb0 * kb0 + kb1 * kb1 + ub0 * ub0 + ub1 * ub1 - kb0 * kb1 * ub0 * ub1;
  return S;
}

SurfacePoly normal_form(const MPoly& f, const CubicSurface& S) {
  // X3^2 = A + B·X3
  const MPoly A = -X1().pow(2) - X2().pow(2) + X1().scaled(S.p1) + X2().scaled(S.p2) + MPoly(Rational(S.p0 + 4));
  const MPoly B = X1() * X2() + MPoly(S.p3);
  const int top = std::max(0, f.degree_in(2));
  std::vector<MPoly> c(top + 1);
  for (const auto& [e, x] : f.terms()) c[e[2]] += MPoly::monomial(x, {e[0], e[1], 0});
  for (int k = top; k >= 2; --k) {
    if (c[k].is_zero()) continue;
    c[k - 1] += c[k] * B;
    c[k - 2] += c[k] * A;
    c[k] = MPoly();
  }
  SurfacePoly r;
  r.a = c[0];
  if (top >= 1) r.b = c[1];
  return r;
}

BracketTable bracket_table(const CubicSurface& S) {
  MPoly R = S.R();
  return {R.derivative(2), R.derivative(0), R.derivative(1)};
}

MPoly ambient_bracket(const MPoly& f, const MPoly& g, const BracketTable& t) {
  std::array<MPoly, 3> df{f.derivative(0), f.derivative(1), f.derivative(2)};
  std::array<MPoly, 3> dg{g.derivative(0), g.derivative(1), g.derivative(2)};
  return (df[0] * dg[1] - df[1] * dg[0]) * t.b12 + (df[1] * dg[2] - df[2] * dg[1]) * t.b23 +
         (df[2] * dg[0] - df[0] * dg[2]) * t.b31;
}

MPoly ambient_bracket(const MPoly& f, const MPoly& g, const CubicSurface& S) {
  return ambient_bracket(f, g, bracket_table(S));
}

SurfacePoly poisson_bracket(const SurfacePoly& f, const SurfacePoly& g, const CubicSurface& S) {
  return normal_form(ambient_bracket(f.full(), g.full(), S), S);
}

MPoly jacobiator_generators(const CubicSurface& S, const BracketTable& t) {
  const MPoly x1 = X1(), x2 = X2(), x3 = X3();
  MPoly j = ambient_bracket(x1, ambient_bracket(x2, x3, t), t) + ambient_bracket(x2, ambient_bracket(x3, x1, t), t) +
            ambient_bracket(x3, ambient_bracket(x1, x2, t), t);
  return normal_form(j, S).full();
}

MPoly random_cubic_poly(std::mt19937_64& rng) {
  MPoly f;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int c = 0; a + b + c <= 3; ++c) {
        long x = static_cast<long>(rng() % 7) - 3;
        if (x) f += MPoly::monomial(Rational(x), {a, b, c});
      }
  return f;
}

Report jacobi_check(const CubicSurface& S, std::mt19937_64& rng, int samples) {
  Report r;
  const BracketTable t = bracket_table(S);
  MPoly jg = jacobiator_generators(S, t);
  r.add("poisson.jacobi.generators", jg.is_zero(), jg.terms().size());
  for (int i = 0; i < samples; ++i) {
    MPoly f = random_cubic_poly(rng), g = random_cubic_poly(rng), h = random_cubic_poly(rng);
    MPoly j = ambient_bracket(f, ambient_bracket(g, h, t), t) + ambient_bracket(g, ambient_bracket(h, f, t), t) +
              ambient_bracket(h, ambient_bracket(f, g, t), t);
    SurfacePoly n = normal_form(j, S);
    r.add("poisson.jacobi.random" + std::to_string(i), n.is_zero(), n.full().terms().size());
  }
  return r;
}

std::optional<Action> parse_action(const std::string& name) {
  if (name == "g1") return Action::g1;
  if (name == "g2") return Action::g2;
  if (name == "g3") return Action::g3;
  if (name == "sigma" || name == "σ") return Action::sigma;
  if (name == "tau" || name == "τ") return Action::tau;
  if (name == "eta" || name == "η") return Action::eta;
  return std::nullopt;
}

std::string action_name(Action a) {
  switch (a) {
    case Action::g1: return "g1";
    case Action::g2: return "g2";
    case Action::g3: return "g3";
    case Action::sigma: return "sigma";
    case Action::tau: return "tau";
    case Action::eta: return "eta";
  }
  return "?";
}

CubicSurface transport(Action a, const CubicSurface& S) {
  CubicSurface T = S;
  if (a == Action::sigma) std::swap(T.p1, T.p2);
  if (a == Action::tau) std::swap(T.p2, T.p3);
  return T;
}

std::array<MPoly, 3> action_images(Action a, const CubicSurface& S) {
  const MPoly x1 = X1(), x2 = X2(), x3 = X3();
  switch (a) {
    case Action::g1: return {-x1 + x2 * x3 + MPoly(S.p1), x2, x3};
    case Action::g2: return {x1, -x2 + x1 * x3 + MPoly(S.p2), x3};
    case Action::g3: return {x1, x2, -x3 + x1 * x2 + MPoly(S.p3)};
    case Action::sigma: return {x2, x1, x1 * x2 - x3 + MPoly(S.p3)};
    case Action::tau: return {x1, x1 * x2 - x3 + MPoly(S.p2), x2};
    case Action::eta: return {x1, x2, x1 * x2 - x3 + MPoly(S.p3)};
  }
  throw std::logic_error("unknown action");
}

ActionResult k_action(const std::vector<Action>& word, const MPoly& f, const CubicSurface& S) {
  MPoly cur = f;
  CubicSurface surf = S;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = cur.substitute(action_images(*it, surf));
    surf = transport(*it, surf);
  }
  return {normal_form(cur, surf), surf};
}

Report verify_equivariance(Action a, const CubicSurface& S) {
  Report r;
  const std::string base = "action." + action_name(a);
  const CubicSurface T = transport(a, S);
  const auto img = action_images(a, S);
  const MPoly pulled = S.R().substitute(img);
  const MPoly RT = T.R();
  SurfacePoly nf = normal_form(pulled, T);
  r.add(base + ".ideal", nf.is_zero(), nf.full().terms().size());
  const Rational lambda = pulled.coeff({1, 1, 1});
  const bool scalar_ok = (lambda == 1 || lambda == -1) && pulled == RT.scaled(lambda);
  r.add(base + ".scalar", scalar_ok, 0, "lambda=" + lambda.get_str());

  // Poisson sign: {φ(Xi), φ(Xj)}_T = ε φ({Xi, Xj}_S)
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
  const BracketTable ts = bracket_table(S), tt = bracket_table(T);
  std::optional<int> sign;
  bool consistent = true;
  for (auto [i, j] : pairs) {
    MPoly lhs = ambient_bracket(img[i], img[j], tt);
    MPoly rhs = ambient_bracket(MPoly::var(i), MPoly::var(j), ts).substitute(img);
    SurfacePoly plus = normal_form(lhs - rhs, T), minus = normal_form(lhs + rhs, T);
    int s = plus.is_zero() ? 1 : (minus.is_zero() ? -1 : 0);
    if (s == 0 || (sign && *sign != s)) consistent = false;
    if (!sign) sign = s;
  }
  r.add(base + ".poisson_sign", consistent, 0, consistent ? "sign=" + std::to_string(*sign) : "no consistent sign");
  return r;
}

}  // namespace hecke::cubic
