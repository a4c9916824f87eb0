#pragma once
/**
 * The quantum torus D_q = Q<X^±1, P^±1>/(PX = qXP) at a rational q, and the
 * length-two Koszul complexes computing H_*(D_q, D_q) and H_*(D_q, D_q s).
 *
 * Chains are finite sums of monomials X^a P^b. Degree 1 chains have two
 * components. Everything is exact; windows only decide which monomials are used.
 */
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/core/rational.hpp"
#include "hecke/core/sparse.hpp"

namespace hecke::hochschild {

using Mono = std::pair<int, int>;  // (a, b) for X^a P^b
using Elem = std::map<Mono, Rational>;
using Chain = std::vector<Elem>;

/// Box |a|, |b| <= N. Chains are measured on the inner box of radius N/2.
struct Window {
  Rational q;
  int N = 0;
  /// Throws std::invalid_argument unless |q| != 1, q != 0 and N >= 4.
  static Window make(const Rational& q, int N);
  int inner() const { return N / 2; }
};

enum class Twist { untwisted, twisted };
std::string twist_name(Twist t);

class QuantumTorus {
 public:
  /// Powers q^e with |e| <= max_exp are tabulated.
  QuantumTorus(const Rational& q, int max_exp);
  const Rational& q() const { return q_; }
  Rational qpow(long e) const;
  /// X^a P^b * X^c P^d = q^{bc} X^{a+c} P^{b+d}.
  Elem mul(const Elem& x, const Elem& y) const;
  Elem mul(const Elem& x, const Elem& y, const Elem& z) const { return mul(mul(x, y), z); }

 private:
  Rational q_;
  int max_exp_;
  std::vector<Rational> table_;
};

Elem mono(int a, int b, const Rational& c = Rational(1));
Elem operator+(const Elem& x, const Elem& y);
Elem operator-(const Elem& x, const Elem& y);
Elem operator-(const Elem& x);
/// The involution X -> X^-1, P -> P^-1.
Elem involute(const Elem& x);

class KoszulComplex {
 public:
  KoszulComplex(const Window& w, Twist t);
  const Window& window() const { return w_; }
  Twist twist() const { return t_; }
  const QuantumTorus& torus() const { return qt_; }

  /// untwisted: z -> (XzX^-1 - z, -PzP^-1 + z);  twisted: z -> (X^-1zX^-1 - z, -P^-1zP^-1 + z).
  Chain d1(const Elem& z) const;
  /// untwisted: Pz1P^-1 - z1 + Xz2X^-1 - z2;  twisted: P^-1z1P^-1 - z1 + X^-1z2X^-1 - z2.
  Elem d0(const Chain& c) const;

  // Chain maps lifting the involution to the complex.
  Elem a0(const Elem& z) const;
  Chain a1(const Chain& c) const;
  Elem a2(const Elem& z) const;

 private:
  Window w_;
  Twist t_;
  QuantumTorus qt_;
  Elem X_, Xi_, P_, Pi_;
};

// Sparse-vector encoding of chains: key = (component, a, b).
long chain_key(int comp, int a, int b);
void decode_key(long key, int& comp, int& a, int& b);
SparseVec to_sparse(const Chain& c);
SparseVec to_sparse(const Elem& z);
Chain chain_from_sparse(const SparseVec& v, int components);

}  // namespace hecke::hochschild
