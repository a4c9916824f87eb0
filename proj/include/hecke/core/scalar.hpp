#pragma once
#include <stdexcept>

#include "hecke/core/factored.hpp"

namespace hecke {

enum class ArithOp { add, sub, mul, div };

/// Field arithmetic with an explicit error for division by zero.
template <class F>
F scalar_arith(const F& a, const F& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return F(a + b);
    case ArithOp::sub: return F(a - b);
    case ArithOp::mul: return F(a * b);
    case ArithOp::div:
      if (FieldTraits<F>::is_zero(b)) throw std::domain_error("division by zero");
      return F(a * FieldTraits<F>::inverse(b));
  }
  throw std::logic_error("unknown arithmetic op");
}

/// Coefficient functions of X over F.
template <class F>
using RatFuncX = FactoredRatFunc<F>;

/// f(q^m X).
template <class F>
RatFuncX<F> subst_qshift(const RatFuncX<F>& f, int m, const F& q) {
  if (m == 0) return f;
  return f.scale_var(field_pow(q, m));
}

/// f(X^{-1}).
template <class F>
RatFuncX<F> subst_invert(const RatFuncX<F>& f) {
  return f.invert_var();
}

}  // namespace hecke
