#pragma once
/**
 * Rational functions of X over a field F with the denominator kept as a
 * product of monic atoms. Sums and products never take polynomial gcds:
 * common denominators come from atom exponents, and numerators are only
 * trial-divided by the atoms. The reduced num/den pair is produced on demand.
 *
 * Atoms are monic, and every atom other than X itself has a nonzero constant term.
 */
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke/core/ratfunc.hpp"

namespace hecke {

template <class F>
class FactoredRatFunc {
 public:
  using P = Poly<F>;
  using Traits = FieldTraits<F>;
  struct Atom {
    P poly;
    int exp;
  };

  FactoredRatFunc() = default;
  explicit FactoredRatFunc(const F& c) : num_(c) {}
  explicit FactoredRatFunc(long n) : num_(F(n)) {}
  explicit FactoredRatFunc(P num) : num_(std::move(num)) {}
  FactoredRatFunc(P num, const P& den) : num_(std::move(num)) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) return;
    divide_by(den, 1);
    cancel();
  }
  explicit FactoredRatFunc(const RatFunc<F>& f) : FactoredRatFunc(f.num(), f.den()) {}

  static FactoredRatFunc var() { return FactoredRatFunc(P::var()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return atoms_.empty(); }
  bool is_one() const { return atoms_.empty() && num_.is_one(); }
  bool is_constant() const { return atoms_.empty() && num_.degree() <= 0; }
  F constant_value() const { return num_.coeff(0); }
  const P& factored_num() const { return num_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  P den_product() const {
    P d(Traits::one());
    for (const auto& a : atoms_)
      for (int i = 0; i < a.exp; ++i) d = d * a.poly;
    return d;
  }
  /// Reduced form (one gcd).
  RatFunc<F> reduced() const {
    if (atoms_.empty()) return RatFunc<F>(num_);
    return RatFunc<F>(num_, den_product());
  }
  P num() const { return reduced().num(); }
  P den() const { return reduced().den(); }

  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) { return (a - b).is_zero(); }
  friend bool operator!=(const FactoredRatFunc& a, const FactoredRatFunc& b) { return !(a == b); }

  FactoredRatFunc operator-() const {
    FactoredRatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend FactoredRatFunc operator+(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.atoms_.empty() && b.atoms_.empty()) return FactoredRatFunc(a.num_ + b.num_);
    // common denominator from the maximum exponent of each atom
    FactoredRatFunc r;
    r.atoms_ = a.atoms_;
    P fa(Traits::one()), fb(Traits::one());
    std::vector<bool> used(b.atoms_.size(), false);
    for (auto& ra : r.atoms_) {
      int eb = 0;
      for (std::size_t i = 0; i < b.atoms_.size(); ++i)
        if (!used[i] && b.atoms_[i].poly == ra.poly) {
          eb = b.atoms_[i].exp;
          used[i] = true;
          break;
        }
      for (int i = ra.exp; i < eb; ++i) fa = fa * ra.poly;
      for (int i = eb; i < ra.exp; ++i) fb = fb * ra.poly;
      ra.exp = std::max(ra.exp, eb);
    }
    for (std::size_t i = 0; i < b.atoms_.size(); ++i) {
      if (used[i]) continue;
      for (int k = 0; k < b.atoms_[i].exp; ++k) fa = fa * b.atoms_[i].poly;
      r.atoms_.push_back(b.atoms_[i]);
    }
    r.num_ = a.num_ * fa + b.num_ * fb;
    if (r.num_.is_zero()) return FactoredRatFunc();
    r.cancel();
    return r;
  }
  friend FactoredRatFunc operator-(const FactoredRatFunc& a, const FactoredRatFunc& b) { return a + (-b); }

  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return FactoredRatFunc();
    FactoredRatFunc r;
    r.num_ = a.num_ * b.num_;
    r.atoms_ = a.atoms_;
    for (const auto& at : b.atoms_) r.add_atom(at.poly, at.exp);
    if (!r.atoms_.empty()) r.cancel();
    return r;
  }
  FactoredRatFunc scaled(const F& s) const {
    if (Traits::is_zero(s)) return FactoredRatFunc();
    FactoredRatFunc r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
  }
  FactoredRatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    FactoredRatFunc r(den_product());
    r.divide_by(num_, 1);
    r.cancel();
    return r;
  }
  friend FactoredRatFunc operator/(const FactoredRatFunc& a, const FactoredRatFunc& b) { return a * b.inverse(); }

  FactoredRatFunc& operator+=(const FactoredRatFunc& b) { return *this = *this + b; }
  FactoredRatFunc& operator-=(const FactoredRatFunc& b) { return *this = *this - b; }
  FactoredRatFunc& operator*=(const FactoredRatFunc& b) { return *this = *this * b; }

  /// f(c·X). Atoms map to atoms; the leading coefficients move into the numerator.
  FactoredRatFunc scale_var(const F& c) const {
    if (Traits::is_zero(c)) throw std::domain_error("scale_var by zero");
    FactoredRatFunc r;
    r.num_ = num_.scale_var(c);
    F lead_prod = Traits::one();
    for (const auto& a : atoms_) {
      P s = a.poly.scale_var(c);
      F l = s.lead();
      r.atoms_.push_back(Atom{s.scaled(Traits::inverse(l)), a.exp});
      lead_prod = lead_prod * field_pow(l, a.exp);
    }
    r.num_ = r.num_.scaled(Traits::inverse(lead_prod));
    return r;
  }

  /// f(1/X).
  FactoredRatFunc invert_var() const {
    if (is_zero()) return *this;
    FactoredRatFunc r;
    const int dn = num_.degree();
    P n = num_.reversed(dn);
    int shift = -dn;  // net power of X multiplying the result
    F c_prod = Traits::one();
    for (const auto& a : atoms_) {
      if (a.poly.degree() == 1 && Traits::is_zero(a.poly.coeff(0))) {
        shift += a.exp;
        continue;
      }
      const int d = a.poly.degree();
      P rev = a.poly.reversed(d);
      F l = rev.lead();
      r.atoms_.push_back(Atom{rev.scaled(Traits::inverse(l)), a.exp});
      c_prod = c_prod * field_pow(l, a.exp);
      shift += d * a.exp;
    }
    n = n.scaled(Traits::inverse(c_prod));
    if (shift >= 0) {
      n = n.shifted(shift);
    } else {
      r.atoms_.push_back(Atom{P::var(), -shift});
    }
    r.num_ = std::move(n);
    return r;
  }

  F eval(const F& x) const { return reduced().eval(x); }

  std::string str(const std::string& var) const { return reduced().str(var); }

 private:
  void add_atom(const P& poly, int exp) {
    for (auto& a : atoms_)
      if (a.poly == poly) {
        a.exp += exp;
        return;
      }
    atoms_.push_back(Atom{poly, exp});
  }
  // Divides by d^e, splitting off the power of X and making the rest monic.
  void divide_by(const P& d, int e) {
    const int k = d.low_degree();
    P rest = d.strip_low();
    if (k > 0) add_atom(P::var(), k * e);
    F l = rest.lead();
    num_ = num_.scaled(Traits::inverse(field_pow(l, e)));
    if (rest.degree() > 0) add_atom(rest.scaled(Traits::inverse(l)), e);
  }
  void cancel() {
    for (auto& a : atoms_) {
      while (a.exp > 0 && num_.degree() >= a.poly.degree()) {
        if (a.poly.degree() == 1 && Traits::is_zero(a.poly.coeff(0))) {
          if (num_.low_degree() == 0) break;
          num_ = P(std::vector<F>(num_.coeffs().begin() + 1, num_.coeffs().end()));
          --a.exp;
          continue;
        }
        auto [qt, rm] = P::divmod(num_, a.poly);
        if (!rm.is_zero()) break;
        num_ = std::move(qt);
        --a.exp;
      }
    }
    std::erase_if(atoms_, [](const Atom& a) { return a.exp == 0; });
  }

  P num_;
  std::vector<Atom> atoms_;
};

}  // namespace hecke
