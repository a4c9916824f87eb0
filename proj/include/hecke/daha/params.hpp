#pragma once
/**
 * Parameters t = (k0, k1, u0, u1) of the algebra and the field mode.
 * Params<RatFuncV> is the symbolic mode (q^{1/2} = v); Params<Rational> is the
 * specialized mode with q^{1/2} = v0 and q = v0^2.
 */
#include <array>
#include <string>

#include "hecke/core/ratfunc.hpp"

namespace hecke::daha {

struct ParamTuple {
  Rational k0{1}, k1{1}, u0{1}, u1{1};

  ParamTuple() = default;
  ParamTuple(Rational a, Rational b, Rational c, Rational d);
  static ParamTuple from_array(const std::array<Rational, 4>& t) { return {t[0], t[1], t[2], t[3]}; }
  std::array<Rational, 4> as_array() const { return {k0, k1, u0, u1}; }

  /// Throws std::invalid_argument("parameters must be nonzero").
  void validate() const;

  Rational kb0() const { return bar(k0); }
  Rational kb1() const { return bar(k1); }
  Rational ub0() const { return bar(u0); }
  Rational ub1() const { return bar(u1); }
  static Rational bar(const Rational& x) { return Rational(x - 1 / x); }

  friend bool operator==(const ParamTuple& a, const ParamTuple& b) {
    return a.k0 == b.k0 && a.k1 == b.k1 && a.u0 == b.u0 && a.u1 == b.u1;
  }
  std::string str() const;
};

template <class F>
struct Params {
  ParamTuple t;
  F q_half;
};

Params<RatFuncV> symbolic_params(const ParamTuple& t);
Params<Rational> specialized_params(const ParamTuple& t, const Rational& v0);

}  // namespace hecke::daha
