#pragma once
/**
 * Elements of the localized quantum torus crossed with Z2:
 *   sum over (j, eps) of f_{j,eps}(X) P^j s^eps,  with PX = qXP, sXs = X^{-1}, sPs = P^{-1}.
 *
 * The field mode is the template parameter F (Rational or RatFuncV) together
 * with the value q^{1/2} in F. Operators built over different q^{1/2} do not mix.
 */
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/core/scalar.hpp"

namespace hecke {

struct OpKey {
  int j = 0;
  int eps = 0;
  friend auto operator<=>(const OpKey&, const OpKey&) = default;
};

class FieldModeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class F>
class TorusOp {
 public:
  using Coeff = RatFuncX<F>;
  using Terms = std::map<OpKey, Coeff>;

  explicit TorusOp(const F& q_half) : q_half_(q_half), q_(q_half * q_half) {}

  static TorusOp scalar(const F& c, const F& q_half) { return monomial(Coeff(c), 0, 0, q_half); }
  static TorusOp identity(const F& q_half) { return scalar(FieldTraits<F>::one(), q_half); }
  /// f(X) P^j s^eps.
  static TorusOp monomial(const Coeff& f, int j, int eps, const F& q_half) {
    TorusOp r(q_half);
    if (!f.is_zero()) r.terms_.emplace(OpKey{j, eps & 1}, f);
    return r;
  }
  static TorusOp x_power(int i, const F& q_half) {
    Coeff f = i >= 0 ? Coeff(Poly<F>::monomial(FieldTraits<F>::one(), i))
                     : Coeff(Poly<F>(FieldTraits<F>::one()), Poly<F>::monomial(FieldTraits<F>::one(), -i));
    return monomial(f, 0, 0, q_half);
  }

  const F& q_half() const { return q_half_; }
  const F& q() const { return q_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }
  Coeff coeff_at(int j, int eps) const {
    auto it = terms_.find(OpKey{j, eps});
    return it == terms_.end() ? Coeff() : it->second;
  }
  /// True iff the operator is c·1 for some c in F.
  bool is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == OpKey{0, 0} && terms_.begin()->second.is_constant());
  }

  bool same_mode(const TorusOp& o) const { return q_half_ == o.q_half_; }

  friend bool operator==(const TorusOp& a, const TorusOp& b) { return a.same_mode(b) && a.terms_ == b.terms_; }

  TorusOp operator-() const {
    TorusOp r = *this;
    for (auto& [k, f] : r.terms_) f = -f;
    return r;
  }
  friend TorusOp operator+(const TorusOp& a, const TorusOp& b) {
    check_mode(a, b);
    TorusOp r = a;
    for (const auto& [k, f] : b.terms_) r.add_term(k, f);
    return r;
  }
  friend TorusOp operator-(const TorusOp& a, const TorusOp& b) {
    check_mode(a, b);
    TorusOp r = a;
    for (const auto& [k, f] : b.terms_) r.add_term(k, -f);
    return r;
  }
  TorusOp scaled(const F& c) const {
    TorusOp r(q_half_);
    if (FieldTraits<F>::is_zero(c)) return r;
    for (const auto& [k, f] : terms_) r.terms_.emplace(k, f.scaled(c));
    return r;
  }
  /// c1·a + c2·b.
  static TorusOp linear(const TorusOp& a, const TorusOp& b, const F& c1, const F& c2) {
    return a.scaled(c1) + b.scaled(c2);
  }
  TorusOp plus_scalar(const F& c) const {
    TorusOp r = *this;
    r.add_term(OpKey{0, 0}, Coeff(c));
    return r;
  }

  friend TorusOp operator*(const TorusOp& a, const TorusOp& b) {
    check_mode(a, b);
    TorusOp r(a.q_half_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<int, F> qpow;
    auto qp = [&](int m) -> const F& {
      auto it = qpow.find(m);
      if (it == qpow.end()) it = qpow.emplace(m, field_pow(a.q_, m)).first;
      return it->second;
    };
    std::vector<Coeff> b_inv;
    bool need_inv = false;
    for (const auto& kv : a.terms_) need_inv |= kv.first.eps == 1;
    if (need_inv) {
      b_inv.reserve(b.terms_.size());
      for (const auto& kv : b.terms_) b_inv.push_back(kv.second.invert_var());
    }
    for (const auto& [ka, fa] : a.terms_) {
      std::size_t idx = 0;
      for (const auto& [kb, fb] : b.terms_) {
        // (fa P^ja s^ea)(fb P^jb s^eb) = fa(X) fb((q^ja X)^{±1}) P^{ja ± jb} s^{ea+eb}
        Coeff h = ka.eps ? b_inv[idx] : fb;
        ++idx;
        if (ka.j != 0) h = h.scale_var(qp(ka.j));
        OpKey k{ka.j + (ka.eps ? -kb.j : kb.j), ka.eps ^ kb.eps};
        r.add_term(k, fa * h);
      }
    }
    return r;
  }
  TorusOp& operator+=(const TorusOp& b) { return *this = *this + b; }
  TorusOp& operator-=(const TorusOp& b) { return *this = *this - b; }
  TorusOp& operator*=(const TorusOp& b) { return *this = *this * b; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, f] : terms_) {
      if (!out.empty()) out += " + ";
      out += "[" + f.str("X") + "]";
      if (k.j) out += "*P^" + std::to_string(k.j);
      if (k.eps) out += "*s";
    }
    return out;
  }

 private:
  static void check_mode(const TorusOp& a, const TorusOp& b) {
    if (!a.same_mode(b)) throw FieldModeError("operators over different q modes");
  }
  void add_term(const OpKey& k, const Coeff& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, f);
      return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }

  F q_half_;
  F q_;
  Terms terms_;
};

template <class F>
TorusOp<F> commutator(const TorusOp<F>& a, const TorusOp<F>& b) {
  return a * b - b * a;
}

/// Specializes a symbolic-v coefficient at v = v0 through its (v - v0)-adic expansion:
/// returns the value if the coefficient is regular there, throws std::domain_error otherwise.
RatFuncX<Rational> specialize_coeff(const RatFuncX<RatFuncV>& f, const Rational& v0);

/// Specializes every coefficient at v = v0. Errors name the offending key (j, eps).
TorusOp<Rational> eval_spec(const TorusOp<RatFuncV>& a, const Rational& v0);

/// Divides every coefficient by d and specializes at v0 (used by the deformation bracket).
TorusOp<Rational> divide_and_specialize(const TorusOp<RatFuncV>& a, const RatFuncV& d, const Rational& v0);

extern template class TorusOp<Rational>;
extern template class TorusOp<RatFuncV>;

}  // namespace hecke
