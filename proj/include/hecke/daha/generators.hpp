#pragma once
/**
 * Lusztig–Demazure operators for the C∨C1 algebra H(k0,k1,u0,u1;q):
 *
 *   T1 = k1 s + c1(X)(1 - s),          c1 = (k̄1 + ū1 X)/(1 - X^2)
 *   T0 = k0 P^{-1}s + c0(X)(1 - P^{-1}s), c0 = (k̄0 + ū0 v X^{-1})/(1 - v^2 X^{-2})
 *   T1v = X^{-1} T1^{-1},  T0v = v^{-1} T0^{-1} X
 *
 * with inverses from the quadratic relations, T^{-1} = T - k̄.
 */
#include "hecke/core/report.hpp"
#include "hecke/daha/params.hpp"
#include "hecke/qtorus/torus_op.hpp"

namespace hecke::daha {

template <class F>
struct GenSet {
  TorusOp<F> T0, T1, T0v, T1v;
  TorusOp<F> T0inv, T1inv, T0vinv, T1vinv;
  TorusOp<F> X, Y;  // X = T1^{-1} T1v^{-1}, Y = T1 T0
  TorusOp<F> one;

  const F& q_half() const { return one.q_half(); }
};

template <class F>
GenSet<F> ld_generators(const Params<F>& p);

/// Builds a GenSet from four generator operators, deriving inverses from the given parameters.
template <class F>
GenSet<F> genset_from(const TorusOp<F>& T0, const TorusOp<F>& T1, const TorusOp<F>& T0v, const TorusOp<F>& T1v,
                      const ParamTuple& t);

/// Zero check on a residue operator.
template <class F>
Check zero_check(std::string name, const TorusOp<F>& residue) {
  const bool ok = residue.is_zero();
  return {std::move(name), ok, residue.support_size(), {}};
}

/// The five defining relations and the four X/Y/T relations.
template <class F>
Report check_presentation(const GenSet<F>& g, const Params<F>& p);

}  // namespace hecke::daha
