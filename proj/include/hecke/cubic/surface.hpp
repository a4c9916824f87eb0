#pragma once
/**
 * The affine cubic C_p:  R = X1X2X3 - X1^2 - X2^2 - X3^2 + p1X1 + p2X2 + p3X3 + p0 + 4,
 * its coordinate ring in X3-degree <= 1 normal form, the Poisson bracket with
 * {X1,X2} = dR/dX3 (and cyclic), and the polynomial automorphisms g1, g2, g3, σ, τ, η.
 */
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hecke/core/report.hpp"
#include "hecke/cubic/mpoly.hpp"
#include "hecke/daha/params.hpp"

namespace hecke::cubic {

struct CubicSurface {
  Rational p1{0}, p2{0}, p3{0}, p0{0};

  MPoly R() const;
  std::array<Rational, 4> as_array() const { return {p1, p2, p3, p0}; }
  friend bool operator==(const CubicSurface& a, const CubicSurface& b) {
    return a.p1 == b.p1 && a.p2 == b.p2 && a.p3 == b.p3 && a.p0 == b.p0;
  }
};

CubicSurface coeffs_from_params(const daha::ParamTuple& t);

/// a(X1,X2) + b(X1,X2)·X3.
struct SurfacePoly {
  MPoly a, b;
  MPoly full() const { return a + b * X3(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  friend bool operator==(const SurfacePoly& x, const SurfacePoly& y) { return x.a == y.a && x.b == y.b; }
};

SurfacePoly normal_form(const MPoly& f, const CubicSurface& S);

/// Bracket table {X1,X2}, {X2,X3}, {X3,X1}.
struct BracketTable {
  MPoly b12, b23, b31;
};
BracketTable bracket_table(const CubicSurface& S);

/// Bracket in the ambient polynomial ring, before reduction.
MPoly ambient_bracket(const MPoly& f, const MPoly& g, const BracketTable& table);
MPoly ambient_bracket(const MPoly& f, const MPoly& g, const CubicSurface& S);
SurfacePoly poisson_bracket(const SurfacePoly& f, const SurfacePoly& g, const CubicSurface& S);

/// Jacobi on generators plus `samples` random cubic-degree triples drawn from `rng`.
Report jacobi_check(const CubicSurface& S, std::mt19937_64& rng, int samples = 3);
/// Jacobi on generators only, for an arbitrary bracket table (negative controls).
MPoly jacobiator_generators(const CubicSurface& S, const BracketTable& table);

MPoly random_cubic_poly(std::mt19937_64& rng);

enum class Action { g1, g2, g3, sigma, tau, eta };
std::optional<Action> parse_action(const std::string& name);
std::string action_name(Action a);

/// Coefficient data after an action: σ swaps p1,p2; τ swaps p2,p3; η and g_i fix p.
CubicSurface transport(Action a, const CubicSurface& S);
/// Images of X1, X2, X3 as polynomials in the target coordinates.
std::array<MPoly, 3> action_images(Action a, const CubicSurface& S);

struct ActionResult {
  SurfacePoly poly;
  CubicSurface target;
};
/// Applies word[0] ∘ word[1] ∘ ... ∘ word[n-1]: the rightmost letter acts first.
ActionResult k_action(const std::vector<Action>& word, const MPoly& f, const CubicSurface& S);

/// R_source∘φ reduces to zero modulo R_target, and R_source∘φ = λ·R_target with λ = ±1.
/// Also records the measured Poisson sign ε with {φX_i, φX_j} = ε φ{X_i, X_j}.
Report verify_equivariance(Action a, const CubicSurface& S);

}  // namespace hecke::cubic
