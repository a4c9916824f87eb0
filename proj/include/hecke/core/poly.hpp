#pragma once
/**
 * Dense univariate polynomials over a field F, coefficients lowest degree first.
 * The zero polynomial has an empty coefficient vector and degree -1.
 */
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "hecke/core/field.hpp"

namespace hecke {

template <class F>
class Poly;

/// Customization point for gcd; the default is the monic Euclidean algorithm.
template <class F>
struct PolyGcd {
  static Poly<F> gcd(const Poly<F>& a, const Poly<F>& b) { return Poly<F>::euclid_gcd(a, b); }
};

template <class F>
class Poly {
 public:
  using Traits = FieldTraits<F>;

  Poly() = default;
  explicit Poly(const F& c) {
    if (!Traits::is_zero(c)) c_.push_back(c);
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(const F& c, int deg) {
    if (Traits::is_zero(c)) return Poly();
    std::vector<F> v(deg + 1, Traits::zero());
    v[deg] = c;
    return Poly(std::move(v));
  }
  static Poly var() { return monomial(Traits::one(), 1); }

  const std::vector<F>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && Traits::is_one(c_[0]); }
  const F& lead() const {
    assert(!c_.empty());
    return c_.back();
  }
  F coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Traits::zero(); }
  /// Lowest index with a nonzero coefficient; -1 for zero.
  int low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!Traits::is_zero(c_[i])) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] = r.c_[i] + small.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, Traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly scaled(const F& s) const {
    if (Traits::is_zero(s)) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(a.c_.size() - b.c_.size() + 1, Traits::zero());
    const F inv_lead = Traits::inverse(b.lead());
    const bool monic = Traits::is_one(b.lead());
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
      if (Traits::is_zero(rem[k])) continue;
      F f = monic ? rem[k] : F(rem[k] * inv_lead);
      quo[k - db] = f;
      for (int i = 0; i <= db; ++i) {
        if (Traits::is_zero(b.c_[i])) continue;
        rem[k - db + i] = rem[k - db + i] - f * b.c_[i];
      }
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  Poly monic() const {
    if (is_zero() || Traits::is_one(lead())) return *this;
    return scaled(Traits::inverse(lead()));
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(const Poly& a, const Poly& b) { return PolyGcd<F>::gcd(a, b); }

  static Poly euclid_gcd(Poly a, Poly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_zero()) return a.monic();
    if (b.degree() == 0) return Poly(Traits::one());
    b = b.monic();
    while (!b.is_zero()) {
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
      if (b.degree() == 0) return Poly(Traits::one());
    }
    return a.monic();
  }

  F eval(const F& x) const {
    F acc = Traits::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<F> r(c_.size() - 1, Traits::zero());
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return Poly(std::move(r));
  }

  /// p(s·X).
  Poly scale_var(const F& s) const {
    Poly r = *this;
    F pw = Traits::one();
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      if (i) pw = pw * s;
      r.c_[i] = r.c_[i] * pw;
    }
    r.trim();
    return r;
  }

  /// X^n p(1/X) for n >= degree.
  Poly reversed(int n) const {
    assert(n >= degree());
    std::vector<F> r(n + 1, Traits::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return Poly(std::move(r));
  }

  Poly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> r(k, Traits::zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(std::move(r));
  }

  /// Divides out X^k where k = low_degree().
  Poly strip_low() const {
    int k = low_degree();
    if (k <= 0) return *this;
    return Poly(std::vector<F>(c_.begin() + k, c_.end()));
  }

  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (Traits::is_zero(c_[i])) continue;
      if (!out.empty()) out += " + ";
      std::string cs = Traits::str(c_[i]);
      if (i == 0)
        out += cs;
      else
        out += "(" + cs + ")*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

}  // namespace hecke
