#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/qtorus/torus_op.hpp"

using namespace hecke;

namespace {

template <class F>
struct Basics {
  F qh;
  TorusOp<F> X, Xi, P, Pi, s, one;
  explicit Basics(const F& q_half)
      : qh(q_half),
        X(TorusOp<F>::x_power(1, q_half)),
        Xi(TorusOp<F>::x_power(-1, q_half)),
        P(TorusOp<F>::monomial(RatFuncX<F>(FieldTraits<F>::one()), 1, 0, q_half)),
        Pi(TorusOp<F>::monomial(RatFuncX<F>(FieldTraits<F>::one()), -1, 0, q_half)),
        s(TorusOp<F>::monomial(RatFuncX<F>(FieldTraits<F>::one()), 0, 1, q_half)),
        one(TorusOp<F>::identity(q_half)) {}
};

}  // namespace

TEST_CASE_TEMPLATE("torus relations", F, Rational, RatFuncV) {
  F qh;
  if constexpr (std::is_same_v<F, Rational>)
    qh = Rational(3, 2);
  else
    qh = RatFuncV::var();
  Basics<F> b(qh);
  const F q = qh * qh;
  CHECK(b.P * b.X == (b.X * b.P).scaled(q));
  CHECK(b.X * b.Xi == b.one);
  CHECK(b.P * b.Pi == b.one);
  CHECK(b.s * b.s == b.one);
  CHECK(b.s * b.X * b.s == b.Xi);
  CHECK(b.s * b.P * b.s == b.Pi);
}

TEST_CASE("multiplication is associative on mixed operators") {
  const Rational qh(2, 3);
  Basics<Rational> b(qh);
  using Op = TorusOp<Rational>;
  const RatFuncX<Rational> f(Poly<Rational>(std::vector<Rational>{Rational(1), Rational(2)}),
                             Poly<Rational>(std::vector<Rational>{Rational(-3), Rational(0), Rational(1)}));
  const Op A = Op::monomial(f, 1, 1, qh) + b.X;
  const Op B = b.Pi * Op::monomial(f.invert_var(), 0, 1, qh) + b.s;
  const Op C = b.P * b.P + Op::monomial(f * f, -1, 0, qh);
  CHECK((A * B) * C == A * (B * C));
  CHECK(A * (B + C) == A * B + A * C);
}

TEST_CASE("commutator and specialization") {
  Basics<RatFuncV> b(RatFuncV::var());
  const auto c = commutator(b.P, b.X);  // PX - XP = (q - 1) XP
  const RatFuncV q = RatFuncV::var() * RatFuncV::var();
  CHECK(c == (b.X * b.P).scaled(q - RatFuncV(Rational(1))));
  const auto d = divide_and_specialize(c, q - RatFuncV(Rational(1)), Rational(1));
  Basics<Rational> r(Rational(1));
  CHECK(d == r.X * r.P);
}

TEST_CASE("operators from different modes do not mix") {
  Basics<Rational> a(Rational(2)), b(Rational(3));
  CHECK_THROWS_AS(a.X * b.X, FieldModeError);
}
