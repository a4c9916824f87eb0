#pragma once
// Sparse polynomials in X1, X2, X3 with rational coefficients.
#include <array>
#include <map>
#include <string>

#include "hecke/core/rational.hpp"

namespace hecke::cubic {

using Exponent = std::array<int, 3>;

class MPoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  MPoly() = default;
  explicit MPoly(const Rational& c);
  static MPoly var(int i);  // i in {0,1,2}
  static MPoly monomial(const Rational& c, const Exponent& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  int total_degree() const;
  int degree_in(int i) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rational& c) const;
  MPoly& operator+=(const MPoly& b);
  MPoly& operator-=(const MPoly& b);
  MPoly pow(int n) const;

  MPoly derivative(int i) const;
  Rational eval(const std::array<Rational, 3>& x) const;
  /// f(images[0], images[1], images[2]).
  MPoly substitute(const std::array<MPoly, 3>& images) const;
  /// Drops all terms of total degree > d.
  MPoly truncated(int d) const;

  /// Human-readable, e.g. "X1*X2 - 2*X3 + 1/2".
  std::string str() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

inline MPoly X1() { return MPoly::var(0); }
inline MPoly X2() { return MPoly::var(1); }
inline MPoly X3() { return MPoly::var(2); }

/// Parses expressions over X1, X2, X3 with + - * ^, parentheses and rational literals (a or a/b).
/// Throws std::invalid_argument on malformed input.
MPoly parse_mpoly(const std::string& text);

}  // namespace hecke::cubic
