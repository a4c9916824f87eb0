#pragma once
/**
 * The elements X1, X2, X3 (central at q = 1), the cubic relation among them,
 * the deformation bracket [F,G]/(v^2-1) at v = 1 and the symmetrizer e.
 */
#include <array>

#include "hecke/cubic/mpoly.hpp"
#include "hecke/daha/generators.hpp"

namespace hecke::daha {

/// X1 = T1v T1 + T0 T0v,  X2 = T1 T0 + T0v T1v,  X3 = T1 T0v + T0v^{-1} T1^{-1}.
template <class F>
std::array<TorusOp<F>, 3> center_generators(const GenSet<F>& g);

template <class F>
std::array<TorusOp<F>, 3> center_generators(const Params<F>& p) {
  return center_generators(ld_generators(p));
}

/// Evaluates a polynomial in X1, X2, X3 on pairwise commuting operators.
template <class F>
TorusOp<F> eval_on_center(const cubic::MPoly& f, const std::array<TorusOp<F>, 3>& X);

/// [X_i, g] = 0 at q = 1 for the four generators.
Report centrality_check(const ParamTuple& t);

/// R_t(X1,X2,X3) = 0 at q = 1 plus the six intermediate operator identities.
Report verify_cubic_relation(const ParamTuple& t);

/// [F,G]/(v^2-1) at v = 1. Throws std::domain_error if some coefficient is not divisible.
TorusOp<Rational> deformation_bracket(const TorusOp<RatFuncV>& F, const TorusOp<RatFuncV>& G);

/// Bracket table of the centers, X1 against the four generators, antisymmetry and Leibniz.
Report bracket_suite(const ParamTuple& t);

/// e = (1 + k1 T1)/(1 + k1^2).
template <class F>
TorusOp<F> symmetrizer(const GenSet<F>& g, const ParamTuple& t);

/// e^2 = e (symbolic), e X_i e = X_i e and Satake multiplicativity at q = 1.
Report symmetrizer_check(const ParamTuple& t);

}  // namespace hecke::daha
