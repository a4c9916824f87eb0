#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/daha/center.hpp"
#include "hecke/daha/morphisms.hpp"

using namespace hecke;
using namespace hecke::daha;

namespace {

const ParamTuple kT(Rational(2), Rational(-3, 4), Rational(5, 2), Rational(7, 3));

void require_pass(const Report& r) {
  for (const auto& c : r.checks) {
    INFO(c.name, " ", c.note);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("parameters must be nonzero") {
  CHECK_THROWS_WITH_AS(ParamTuple(Rational(0), Rational(1), Rational(1), Rational(1)).validate(),
                       "parameters must be nonzero", std::invalid_argument);
  CHECK_NOTHROW(kT.validate());
}

TEST_CASE("presentation holds symbolically and at a specialization") {
  const auto p = symbolic_params(kT);
  const Report r = check_presentation(ld_generators(p), p);
  CHECK(r.checks.size() == 9);
  require_pass(r);
  const auto ps = specialized_params(kT, Rational(3, 2));
  require_pass(check_presentation(ld_generators(ps), ps));
}

TEST_CASE("presentation check rejects a perturbed generator") {
  const auto p = symbolic_params(kT);
  GenSet<RatFuncV> g = ld_generators(p);
  g = genset_from(g.T0, g.T1 + g.X, g.T0v, g.T1v, kT);
  const Report r = check_presentation(g, p);
  CHECK_FALSE(r.passed());
  bool quad_failed = false;
  for (const auto& c : r.checks) quad_failed |= c.name == "relation.quadratic.V1" && !c.pass;
  CHECK(quad_failed);
}

TEST_CASE("centers, cubic relation, brackets, symmetrizer") {
  require_pass(centrality_check(kT));
  require_pass(verify_cubic_relation(kT));
  require_pass(bracket_suite(kT));
  require_pass(symmetrizer_check(kT));
}

TEST_CASE("degenerate parameters: T1 = s") {
  const ParamTuple one(Rational(1), Rational(1), Rational(1), Rational(1));
  const auto p = specialized_params(one, Rational(2));
  const auto g = ld_generators(p);
  const auto s = TorusOp<Rational>::monomial(RatFuncX<Rational>(Rational(1)), 0, 1, Rational(2));
  CHECK(g.T1 == s);
  require_pass(check_presentation(g, p));
}

TEST_CASE("words reduce freely") {
  const Word w{{V0, 1}, {V1, -1}, {V1, 1}, {V1v, 1}};
  CHECK(free_reduce(w) == Word{{V0, 1}, {V1v, 1}});
  CHECK(free_reduce(concat(w, inverse(w))).empty());
  CHECK(word_str(Word{{V0, 1}, {V1v, -1}}) == "V0*V1v^-1");
}

TEST_CASE("parameter maps are involutions") {
  for (auto a : {Auto::sigma, Auto::tau, Auto::eta}) CHECK(map_params(a, map_params(a, kT)) == kT);
  CHECK(map_params(Auto::sigma, kT) == ParamTuple(kT.u1, kT.k1, kT.u0, kT.k0));
  CHECK(map_params(Auto::tau, kT) == ParamTuple(kT.u0, kT.k1, kT.k0, kT.u1));
}

TEST_CASE("automorphisms, composite relations and transport") {
  const Report r = automorphism_suite(kT);
  require_pass(r);
  CHECK(composite_relations().size() == 5);
}

TEST_CASE("a wrong composite relation is detected") {
  // σσ is conjugation by V1, not the identity
  const Morphism ss = compose(automorphism(Auto::sigma), automorphism(Auto::sigma));
  CHECK_FALSE(composite_check(ss, identity_morphism(), kT).passed());
}
