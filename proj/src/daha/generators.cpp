#include "hecke/daha/generators.hpp"

namespace hecke::daha {

namespace {

template <class F>
F lift(const Rational& r) {
  return F(r);
}

}  // namespace

template <class F>
GenSet<F> genset_from(const TorusOp<F>& T0, const TorusOp<F>& T1, const TorusOp<F>& T0v, const TorusOp<F>& T1v,
                      const ParamTuple& t) {
  GenSet<F> g{T0, T1, T0v, T1v, T0, T1, T0v, T1v, T0, T0, T0};
  g.T0inv = T0.plus_scalar(lift<F>(Rational(-t.kb0())));
  g.T1inv = T1.plus_scalar(lift<F>(Rational(-t.kb1())));
  g.T0vinv = T0v.plus_scalar(lift<F>(Rational(-t.ub0())));
  g.T1vinv = T1v.plus_scalar(lift<F>(Rational(-t.ub1())));
  g.X = g.T1inv * g.T1vinv;
  g.Y = T1 * T0;
  g.one = TorusOp<F>::identity(T0.q_half());
  return g;
}

template <class F>
GenSet<F> ld_generators(const Params<F>& p) {
  using Op = TorusOp<F>;
  using C = typename Op::Coeff;
  using P = Poly<F>;
  const ParamTuple& t = p.t;
  const F& v = p.q_half;
  const F q = v * v;
  const F zero = FieldTraits<F>::zero(), one = FieldTraits<F>::one();

  C c1(P(std::vector<F>{lift<F>(t.kb1()), lift<F>(t.ub1())}), P(std::vector<F>{one, zero, F(-one)}));
  Op T1 = Op::monomial(c1, 0, 0, v) + Op::monomial(C(lift<F>(t.k1)) - c1, 0, 1, v);

  // c0 = (k̄0 X^2 + ū0 v X)/(X^2 - q)
  C c0(P(std::vector<F>{zero, F(lift<F>(t.ub0()) * v), lift<F>(t.kb0())}), P(std::vector<F>{F(-q), zero, one}));
  Op T0 = Op::monomial(c0, 0, 0, v) + Op::monomial(C(lift<F>(t.k0)) - c0, -1, 1, v);

  Op T1inv = T1.plus_scalar(lift<F>(Rational(-t.kb1())));
  Op T0inv = T0.plus_scalar(lift<F>(Rational(-t.kb0())));
  Op T1v = Op::x_power(-1, v) * T1inv;
  Op T0v = (T0inv * Op::x_power(1, v)).scaled(FieldTraits<F>::inverse(v));
  return genset_from(T0, T1, T0v, T1v, t);
}

template <class F>
Report check_presentation(const GenSet<F>& g, const Params<F>& p) {
  const ParamTuple& t = p.t;
  auto quad = [&](const TorusOp<F>& T, const Rational& k) {
    return T.plus_scalar(lift<F>(Rational(-k))) * T.plus_scalar(lift<F>(Rational(1 / k)));
  };
  const F& v = p.q_half;
  const F q = v * v;
  Report r;
  r.checks.push_back(zero_check("relation.quadratic.V0", quad(g.T0, t.k0)));
  r.checks.push_back(zero_check("relation.quadratic.V1", quad(g.T1, t.k1)));
  r.checks.push_back(zero_check("relation.quadratic.V0v", quad(g.T0v, t.u0)));
  r.checks.push_back(zero_check("relation.quadratic.V1v", quad(g.T1v, t.u1)));
  r.checks.push_back(
      zero_check("relation.product", (g.T1v * g.T1 * g.T0 * g.T0v).plus_scalar(F(-FieldTraits<F>::inverse(v)))));

  const TorusOp<F>& T = g.T1;
  const TorusOp<F>& Tinv = g.T1inv;
  const TorusOp<F>& X = g.X;
  const TorusOp<F> Xinv = g.T1v * g.T1;
  const TorusOp<F>& Y = g.Y;
  const TorusOp<F> Yinv = g.T0inv * g.T1inv;
  const F ub1 = lift<F>(t.ub1()), kb0 = lift<F>(t.kb0()), ub0 = lift<F>(t.ub0());

  // XT = T^{-1}X^{-1} + (u1^{-1} - u1)
  r.checks.push_back(zero_check("xyt.XT", (X * T - Tinv * Xinv).plus_scalar(ub1)));
  // Y^{-1}T = T^{-1}Y + (k0^{-1} - k0)
  r.checks.push_back(zero_check("xyt.YT", (Yinv * T - Tinv * Y).plus_scalar(kb0)));
  r.checks.push_back(zero_check("xyt.T", quad(T, t.k1)));
  // YX = qT^2XY + q(u1 - u1^{-1})TY + (k0 - k0^{-1})TX + v(u0 - u0^{-1})T
  TorusOp<F> rhs = (T * T * X * Y).scaled(q) + (T * Y).scaled(F(q * ub1)) + (T * X).scaled(kb0) +
                   T.scaled(F(v * ub0));
  r.checks.push_back(zero_check("xyt.YX", Y * X - rhs));
  return r;
}

template GenSet<Rational> ld_generators(const Params<Rational>&);
template GenSet<RatFuncV> ld_generators(const Params<RatFuncV>&);
template GenSet<Rational> genset_from(const TorusOp<Rational>&, const TorusOp<Rational>&, const TorusOp<Rational>&,
                                      const TorusOp<Rational>&, const ParamTuple&);
template GenSet<RatFuncV> genset_from(const TorusOp<RatFuncV>&, const TorusOp<RatFuncV>&, const TorusOp<RatFuncV>&,
                                      const TorusOp<RatFuncV>&, const ParamTuple&);
template Report check_presentation(const GenSet<Rational>&, const Params<Rational>&);
template Report check_presentation(const GenSet<RatFuncV>&, const Params<RatFuncV>&);

}  // namespace hecke::daha
