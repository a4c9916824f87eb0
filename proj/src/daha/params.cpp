#include "hecke/daha/params.hpp"

#include <stdexcept>

namespace hecke::daha {

ParamTuple::ParamTuple(Rational a, Rational b, Rational c, Rational d)
    : k0(std::move(a)), k1(std::move(b)), u0(std::move(c)), u1(std::move(d)) {
  validate();
}

void ParamTuple::validate() const {
  if (is_zero(k0) || is_zero(k1) || is_zero(u0) || is_zero(u1))
    throw std::invalid_argument("parameters must be nonzero");
}

std::string ParamTuple::str() const {
  return "(" + to_string(k0) + ", " + to_string(k1) + ", " + to_string(u0) + ", " + to_string(u1) + ")";
}

Params<RatFuncV> symbolic_params(const ParamTuple& t) {
  t.validate();
  return {t, v_var()};
}

Params<Rational> specialized_params(const ParamTuple& t, const Rational& v0) {
  t.validate();
  if (is_zero(v0)) throw std::invalid_argument("q^{1/2} must be nonzero");
  return {t, v0};
}

}  // namespace hecke::daha
