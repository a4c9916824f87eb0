#pragma once
/**
 * The D4 weight torus T = Spec C[P] with coordinates s1..s4, δ (s1s2s3s4 = δ^2),
 * the W(D4) action, θ: t ↦ s, and π: s ↦ (p1, p2, p3, p0) through orbit sums.
 *
 * Weights are stored in half-units: a ∈ Z^4 stands for λ = a/2, all a_i even or all odd.
 * s^λ = ∏ s_i^{a_i/2} if even, δ ∏ s_i^{(a_i-1)/2} if odd.
 */
#include <array>
#include <map>
#include <string>
#include <vector>

#include "hecke/core/rational.hpp"
#include "hecke/cubic/surface.hpp"
#include "hecke/daha/params.hpp"

namespace hecke::weyl {

struct TorusPointS {
  std::array<Rational, 4> s{Rational(1), Rational(1), Rational(1), Rational(1)};
  Rational delta{1};

  /// Throws std::invalid_argument on a zero coordinate or s1s2s3s4 != δ^2.
  static TorusPointS make(const std::array<Rational, 4>& s, const Rational& delta);
  friend bool operator==(const TorusPointS& a, const TorusPointS& b) { return a.s == b.s && a.delta == b.delta; }
  friend bool operator<(const TorusPointS& a, const TorusPointS& b) {
    if (a.s != b.s) return a.s < b.s;
    return a.delta < b.delta;
  }
  std::string str() const;
};

/// (w s)_i = s_{perm[i]}^{sign[i]}, δ ↦ δ ∏_{sign[i] = -1} s_{perm[i]}^{-1}; an even number of signs are -1.
struct WeylElement {
  std::array<int, 4> perm{0, 1, 2, 3};
  std::array<int, 4> sign{1, 1, 1, 1};
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  bool valid() const;
};

/// a ∘ b (b acts first).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);
/// All 192 elements, identity first.
const std::vector<WeylElement>& weyl_group();

TorusPointS weyl_act(const WeylElement& w, const TorusPointS& s);
/// The W-orbit of s, sorted and without repetitions.
std::vector<TorusPointS> orbit(const TorusPointS& s);

using HalfWeight = std::array<int, 4>;
enum class Fundamental { w1, w2, w3, w4 };
HalfWeight fundamental_weight(Fundamental w);
/// The W-orbit of a half-unit weight (signed permutations with an even number of sign changes).
std::vector<HalfWeight> weight_orbit(const HalfWeight& a);

/// s = (t1t2, -t1/t2, -t3/t4, t3t4), δ = t1t3 with t = (k0, k1, u0, u1).
TorusPointS theta(const daha::ParamTuple& t);

Rational monomial(const HalfWeight& a, const TorusPointS& s);
Rational orbit_sum(Fundamental w, const TorusPointS& s);

/// p1 = m_ω4, p2 = m_ω1, p3 = -m_ω3, p0 = -m_ω2 - 8.
cubic::CubicSurface pi(const TorusPointS& s);

/// Laurent polynomials in t1..t4 with rational coefficients.
struct Laurent4 {
  std::map<std::array<int, 4>, Rational> terms;

  static Laurent4 constant(const Rational& c);
  static Laurent4 mono(const Rational& c, std::array<int, 4> e);
  bool is_zero() const { return terms.empty(); }
  Laurent4 operator+(const Laurent4& b) const;
  Laurent4 operator-(const Laurent4& b) const;
  Laurent4 operator*(const Laurent4& b) const;
  Laurent4 scaled(const Rational& c) const;
  friend bool operator==(const Laurent4& a, const Laurent4& b) { return a.terms == b.terms; }
};

/// p_i(t) - (π∘θ)_i(t) as Laurent polynomials, for i = 1, 2, 3, 0; all zero when the identity holds.
std::array<Laurent4, 4> pi_theta_residues();

/// π(ws) = π(s) for every w ∈ W. Returns the number of elements violating it.
int invariance_violations_serial(const TorusPointS& s);
/// OpenMP version of the sweep over W.
int invariance_violations(const TorusPointS& s);

}  // namespace hecke::weyl
