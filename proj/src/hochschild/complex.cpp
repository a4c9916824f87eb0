#include "hecke/hochschild/complex.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hecke::hochschild {

Window Window::make(const Rational& q, int N) {
  if (sgn(q) == 0 || abs(q) == 1) throw std::invalid_argument("q must satisfy q != 0 and |q| != 1");
  if (N < 4) throw std::invalid_argument("window radius N must be at least 4");
  return {q, N};
}

std::string twist_name(Twist t) { return t == Twist::untwisted ? "untwisted" : "twisted"; }

QuantumTorus::QuantumTorus(const Rational& q, int max_exp) : q_(q), max_exp_(max_exp) {
  table_.resize(2 * max_exp + 1);
  table_[max_exp] = 1;
  const Rational qi = 1 / q;
  for (int e = 1; e <= max_exp; ++e) {
    table_[max_exp + e] = table_[max_exp + e - 1] * q;
    table_[max_exp - e] = table_[max_exp - e + 1] * qi;
  }
}

Rational QuantumTorus::qpow(long e) const {
  if (std::labs(e) <= max_exp_) return table_[max_exp_ + e];
  return rational_pow(q_, e);
}

Elem QuantumTorus::mul(const Elem& x, const Elem& y) const {
  Elem r;
  for (const auto& [m1, c1] : x)
    for (const auto& [m2, c2] : y) {
      const Mono m{m1.first + m2.first, m1.second + m2.second};
      Rational& t = r[m];
      t += c1 * c2 * qpow(static_cast<long>(m1.second) * m2.first);
      if (sgn(t) == 0) r.erase(m);
    }
  return r;
}

Elem mono(int a, int b, const Rational& c) {
  Elem r;
  if (sgn(c) != 0) r[{a, b}] = c;
  return r;
}

Elem operator+(const Elem& x, const Elem& y) {
  Elem r = x;
  for (const auto& [m, c] : y) {
    Rational& t = r[m];
    t += c;
    if (sgn(t) == 0) r.erase(m);
  }
  return r;
}

Elem operator-(const Elem& x) {
  Elem r = x;
  for (auto& [m, c] : r) c = -c;
  return r;
}

Elem operator-(const Elem& x, const Elem& y) { return x + (-y); }

Elem involute(const Elem& x) {
  Elem r;
  for (const auto& [m, c] : x) r[{-m.first, -m.second}] = c;
  return r;
}

KoszulComplex::KoszulComplex(const Window& w, Twist t)
    : w_(w), t_(t), qt_(w.q, (w.N + 8) * (w.N + 8)),
      X_(mono(1, 0)), Xi_(mono(-1, 0)), P_(mono(0, 1)), Pi_(mono(0, -1)) {}

Chain KoszulComplex::d1(const Elem& z) const {
  if (t_ == Twist::untwisted) return {qt_.mul(X_, z, Xi_) - z, z - qt_.mul(P_, z, Pi_)};
  return {qt_.mul(Xi_, z, Xi_) - z, z - qt_.mul(Pi_, z, Pi_)};
}

Elem KoszulComplex::d0(const Chain& c) const {
  if (t_ == Twist::untwisted) return qt_.mul(P_, c[0], Pi_) - c[0] + qt_.mul(X_, c[1], Xi_) - c[1];
  return qt_.mul(Pi_, c[0], Pi_) - c[0] + qt_.mul(Xi_, c[1], Xi_) - c[1];
}

Elem KoszulComplex::a0(const Elem& z) const { return involute(z); }

Chain KoszulComplex::a1(const Chain& c) const {
  const Elem s0 = involute(c[0]), s1 = involute(c[1]);
  if (t_ == Twist::untwisted) return {-qt_.mul(Pi_, s0, P_), -qt_.mul(Xi_, s1, X_)};
  return {-qt_.mul(P_, s0, P_), -qt_.mul(X_, s1, X_)};
}

Elem KoszulComplex::a2(const Elem& z) const {
  const Elem s = involute(z);
  if (t_ == Twist::untwisted) return qt_.mul(qt_.mul(Xi_, Pi_), s, qt_.mul(P_, X_));
  return qt_.mul(qt_.mul(P_, X_), s, qt_.mul(X_, P_));
}

namespace {
constexpr long kOffset = 1 << 12;
constexpr long kSpan = 1 << 13;
}  // namespace

long chain_key(int comp, int a, int b) { return (comp * kSpan + (a + kOffset)) * kSpan + (b + kOffset); }

void decode_key(long key, int& comp, int& a, int& b) {
  b = static_cast<int>(key % kSpan - kOffset);
  key /= kSpan;
  a = static_cast<int>(key % kSpan - kOffset);
  comp = static_cast<int>(key / kSpan);
}

SparseVec to_sparse(const Chain& c) {
  SparseVec v;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    for (const auto& [m, x] : c[i]) v[chain_key(i, m.first, m.second)] = x;
  return v;
}

SparseVec to_sparse(const Elem& z) { return to_sparse(Chain{z}); }

Chain chain_from_sparse(const SparseVec& v, int components) {
  Chain c(components);
  for (const auto& [k, x] : v) {
    int comp, a, b;
    decode_key(k, comp, a, b);
    c.at(comp)[{a, b}] = x;
  }
  return c;
}

}  // namespace hecke::hochschild
