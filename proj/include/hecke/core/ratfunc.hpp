#pragma once
/**
 * Univariate rational functions over a field F in reduced form:
 * gcd(num, den) = 1 and den monic. RatFunc<Rational> is Q(v);
 * RatFunc<Rational> and RatFunc<RatFuncV> serve as the X-coefficients
 * of quantum-torus operators.
 */
#include <stdexcept>
#include <string>
#include <utility>

#include "hecke/core/poly.hpp"

namespace hecke {

template <class F>
class RatFunc {
 public:
  using P = Poly<F>;
  using Traits = FieldTraits<F>;

  RatFunc() : den_(Traits::one()) {}
  explicit RatFunc(const F& c) : num_(c), den_(Traits::one()) {}
  explicit RatFunc(long n) : RatFunc(F(n)) {}
  explicit RatFunc(P num) : num_(std::move(num)), den_(Traits::one()) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc var() { return RatFunc(P::var()); }
  /// Builds from parts already known to be coprime with monic denominator.
  static RatFunc from_reduced(P num, P den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.degree() == 0; }
  F constant_value() const { return num_.coeff(0); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const { return from_reduced(-num_, den_); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc::reduce_against(a.num_ + b.num_, a.den_, a.den_);
    P g = P::gcd(a.den_, b.den_);
    if (g.degree() == 0) return from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    P da = a.den_ / g, db = b.den_ / g;
    P n = a.num_ * db + b.num_ * da;
    return reduce_against(std::move(n), da * b.den_, g);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
    P g1 = P::gcd(a.num_, b.den_), g2 = P::gcd(b.num_, a.den_);
    P n1 = g1.degree() > 0 ? a.num_ / g1 : a.num_;
    P d2 = g1.degree() > 0 ? b.den_ / g1 : b.den_;
    P n2 = g2.degree() > 0 ? b.num_ / g2 : b.num_;
    P d1 = g2.degree() > 0 ? a.den_ / g2 : a.den_;
    return from_reduced(n1 * n2, d1 * d2);
  }
  RatFunc scaled(const F& s) const {
    if (Traits::is_zero(s)) return RatFunc();
    return from_reduced(num_.scaled(s), den_);
  }
  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  /// f(c·X); stays reduced, only the denominator's leading coefficient changes.
  RatFunc scale_var(const F& c) const {
    if (Traits::is_zero(c)) throw std::domain_error("scale_var by zero");
    P n = num_.scale_var(c), d = den_.scale_var(c);
    F inv = Traits::inverse(d.lead());
    return from_reduced(n.scaled(inv), d.scaled(inv));
  }

  /// f(1/X).
  RatFunc invert_var() const {
    if (is_zero()) return *this;
    const int dn = num_.degree(), dd = den_.degree();
    P n = num_.reversed(dn), d = den_.reversed(dd);
    if (dd >= dn)
      n = n.shifted(dd - dn);
    else
      d = d.shifted(dn - dd);
    if (num_.low_degree() == 0 && den_.low_degree() == 0) {
      F inv = Traits::inverse(d.lead());
      return from_reduced(n.scaled(inv), d.scaled(inv));
    }
    return RatFunc(std::move(n), std::move(d));
  }

  F eval(const F& x) const {
    F d = den_.eval(x);
    if (Traits::is_zero(d)) throw std::domain_error("pole");
    return num_.eval(x) * Traits::inverse(d);
  }

  std::string str(const std::string& var) const {
    if (den_.is_one()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = P(Traits::one());
      return;
    }
    if (den_.degree() > 0) {
      P g = P::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    if (!Traits::is_one(den_.lead())) {
      F inv = Traits::inverse(den_.lead());
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }
  // n/d where any common factor of n and d divides g; d monic.
  static RatFunc reduce_against(P n, P d, const P& g) {
    if (n.is_zero()) return RatFunc();
    P h = P::gcd(n, g);
    if (h.degree() > 0) {
      n = n / h;
      d = d / h;
    }
    return from_reduced(std::move(n), std::move(d));
  }

  P num_;
  P den_;
};

template <class F>
struct FieldTraits<RatFunc<F>> {
  static RatFunc<F> zero() { return RatFunc<F>(); }
  static RatFunc<F> one() { return RatFunc<F>(FieldTraits<F>::one()); }
  static bool is_zero(const RatFunc<F>& a) { return a.is_zero(); }
  static bool is_one(const RatFunc<F>& a) { return a.is_one(); }
  static RatFunc<F> inverse(const RatFunc<F>& a) { return a.inverse(); }
  static std::string str(const RatFunc<F>& a) { return a.str("v"); }
};

/// Q(v), v = q^{1/2}.
using RatFuncV = RatFunc<Rational>;

inline RatFuncV v_var() { return RatFuncV::var(); }

/// gcd over Q(v) computed by a primitive remainder sequence in Q[v][X];
/// Euclid directly over Q(v) suffers from coefficient growth.
template <>
struct PolyGcd<RatFuncV> {
  static Poly<RatFuncV> gcd(const Poly<RatFuncV>& a, const Poly<RatFuncV>& b);
};

/// Value at v0; throws std::domain_error("pole at v=...") if the reduced denominator vanishes.
Rational eval_at_v(const RatFuncV& f, const Rational& v0);

/// Multiplicity of v0 as a root of p (p nonzero).
int root_multiplicity(const Poly<Rational>& p, const Rational& v0);

/// p / (v - v0)^k, exact.
Poly<Rational> divide_linear_power(const Poly<Rational>& p, const Rational& v0, int k);

}  // namespace hecke
