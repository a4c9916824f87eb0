#pragma once
// Minimal field interface used by the polynomial templates.
#include <stdexcept>
#include <string>

#include "hecke/core/rational.hpp"

namespace hecke {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static Rational inverse(const Rational& a) {
    if (is_zero(a)) throw std::domain_error("division by zero");
    return Rational(1 / a);
  }
  static std::string str(const Rational& a) { return to_string(a); }
};

template <class F>
F field_pow(const F& base, long exp) {
  if (exp < 0) return field_pow(FieldTraits<F>::inverse(base), -exp);
  F result = FieldTraits<F>::one(), b = base;
  while (exp > 0) {
    if (exp & 1) result = result * b;
    exp >>= 1;
    if (exp) b = b * b;
  }
  return result;
}

}  // namespace hecke
