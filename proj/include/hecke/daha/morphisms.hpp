#pragma once
/**
 * The isomorphisms σ: H(t) → H(σt), τ: H(t) → H(τt), η: H(t;q) → H(t^{-1};q^{-1})
 * as substitutions of words in the target generators, with composition by
 * substitution and free reduction.
 *
 *   σ(t) = (u1,k1,u0,k0),  τ(t) = (u0,k1,k0,u1),  η(t) = t^{-1}.
 */
#include <array>
#include <string>
#include <vector>

#include "hecke/daha/generators.hpp"

namespace hecke::daha {

/// Generator indices: 0 = V0, 1 = V1, 2 = V0v, 3 = V1v.
enum Gen : int { V0 = 0, V1 = 1, V0v = 2, V1v = 3 };

struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
std::string word_str(const Word& w);

enum class Auto { sigma, tau, eta };
std::string auto_name(Auto a);

ParamTuple map_params(Auto a, const ParamTuple& t);

/// A homomorphism H(t) → H(target) given by generator images.
/// `maps` lists the elementary automorphisms, leftmost applied last.
struct Morphism {
  std::string name;
  std::vector<Auto> maps;
  std::array<Word, 4> images;
  bool conj_only = false;  // conjugation inside the source algebra (no parameter change)
};

Morphism identity_morphism();
Morphism automorphism(Auto a);
/// Inner automorphism h ↦ w^{-1} h w.
Morphism conjugation(const Word& w, std::string name);
/// outer ∘ inner.
Morphism compose(const Morphism& outer, const Morphism& inner);
/// Applies the substitution to a word in the source generators.
Word apply(const Morphism& m, const Word& w);

ParamTuple target_tuple(const Morphism& m, const ParamTuple& t);
/// Target parameters; q is inverted once per η.
template <class F>
Params<F> target_params(const Morphism& m, const Params<F>& p);

/// Value of a word on the generators of a GenSet.
template <class F>
TorusOp<F> evaluate(const Word& w, const GenSet<F>& g);

/// Images of V0, V1, V0v, V1v as operators built from the target algebra's generators;
/// inverses come from the source parameters.
template <class F>
GenSet<F> automorphism_images(const Morphism& m, const Params<F>& source);

/// Relation-by-relation homomorphism check for σ, τ, η in symbolic mode.
Report homomorphism_check(Auto a, const ParamTuple& t);

/// (lhs)(h) = (rhs)(h) on the four generators, in symbolic mode.
Report composite_check(const Morphism& lhs, const Morphism& rhs, const ParamTuple& t);

/// σσ = conj(V1), (στ)^3 = conj(V1^2), σστ = τσσ, σησ = η, τητ = η.
struct CompositeRelation {
  Morphism lhs, rhs;
};
std::vector<CompositeRelation> composite_relations();

/// At v = 1, φ(X_i) agrees with the polynomial action formula evaluated on the target X_j.
Report center_transport_check(Auto a, const ParamTuple& t);

/// Homomorphism checks, composite relations and center transport.
Report automorphism_suite(const ParamTuple& t);

}  // namespace hecke::daha
