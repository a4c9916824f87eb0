#include "hecke/daha/morphisms.hpp"

#include <stdexcept>

#include "hecke/cubic/surface.hpp"
#include "hecke/daha/center.hpp"

namespace hecke::daha {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::string word_str(const Word& w) {
  static const char* names[] = {"V0", "V1", "V0v", "V1v"};
  if (w.empty()) return "1";
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += "*";
    s += names[l.gen];
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

std::string auto_name(Auto a) {
  switch (a) {
    case Auto::sigma: return "sigma";
    case Auto::tau: return "tau";
    case Auto::eta: return "eta";
  }
  throw std::logic_error("unknown automorphism");
}

ParamTuple map_params(Auto a, const ParamTuple& t) {
  switch (a) {
    case Auto::sigma: return {t.u1, t.k1, t.u0, t.k0};
    case Auto::tau: return {t.u0, t.k1, t.k0, t.u1};
    case Auto::eta: return {1 / t.k0, 1 / t.k1, 1 / t.u0, 1 / t.u1};
  }
  throw std::logic_error("unknown automorphism");
}

namespace {

Word g(int gen, int exp = 1) { return {{gen, exp}}; }
Word w3(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

}  // namespace

Morphism identity_morphism() {
  return {"id", {}, {g(V0), g(V1), g(V0v), g(V1v)}, true};
}

Morphism automorphism(Auto a) {
  Morphism m{auto_name(a), {a}, {}, false};
  switch (a) {
    case Auto::sigma:
      m.images = {w3(g(V1, -1), g(V1v), g(V1)), g(V1), w3(g(V0), g(V0v), g(V0, -1)), g(V0)};
      break;
    case Auto::tau:
      m.images = {w3(g(V0), g(V0v), g(V0, -1)), g(V1), g(V0), g(V1v)};
      break;
    case Auto::eta:
      m.images = {g(V0, -1), g(V1, -1), w3(g(V0), g(V0v, -1), g(V0, -1)), w3(g(V1, -1), g(V1v, -1), g(V1))};
      break;
  }
  return m;
}

Morphism conjugation(const Word& w, std::string name) {
  Morphism m{std::move(name), {}, {}, true};
  for (int i = 0; i < 4; ++i) m.images[i] = w3(inverse(w), g(i), w);
  return m;
}

Word apply(const Morphism& m, const Word& w) {
  Word out;
  for (const auto& l : w) {
    const Word& img = m.images[l.gen];
    out = concat(out, l.exp > 0 ? img : inverse(img));
  }
  return out;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  Morphism m;
  m.name = outer.name + "." + inner.name;
  m.maps = outer.maps;
  m.maps.insert(m.maps.end(), inner.maps.begin(), inner.maps.end());
  m.conj_only = outer.conj_only && inner.conj_only;
  for (int i = 0; i < 4; ++i) m.images[i] = apply(outer, inner.images[i]);
  return m;
}

ParamTuple target_tuple(const Morphism& m, const ParamTuple& t) {
  ParamTuple r = t;
  for (auto it = m.maps.rbegin(); it != m.maps.rend(); ++it) r = map_params(*it, r);
  return r;
}

template <class F>
Params<F> target_params(const Morphism& m, const Params<F>& p) {
  Params<F> r{target_tuple(m, p.t), p.q_half};
  for (Auto a : m.maps)
    if (a == Auto::eta) r.q_half = FieldTraits<F>::inverse(r.q_half);
  return r;
}

template <class F>
TorusOp<F> evaluate(const Word& w, const GenSet<F>& g) {
  const TorusOp<F>* pos[] = {&g.T0, &g.T1, &g.T0v, &g.T1v};
  const TorusOp<F>* neg[] = {&g.T0inv, &g.T1inv, &g.T0vinv, &g.T1vinv};
  TorusOp<F> r = g.one;
  for (const auto& l : w) r = r * *(l.exp > 0 ? pos[l.gen] : neg[l.gen]);
  return r;
}

template <class F>
GenSet<F> automorphism_images(const Morphism& m, const Params<F>& source) {
  const GenSet<F> tg = ld_generators(target_params(m, source));
  return genset_from(evaluate(m.images[V0], tg), evaluate(m.images[V1], tg), evaluate(m.images[V0v], tg),
                     evaluate(m.images[V1v], tg), source.t);
}

Report homomorphism_check(Auto a, const ParamTuple& t) {
  const Params<RatFuncV> src = symbolic_params(t);
  Report r;
  r.append(check_presentation(automorphism_images(automorphism(a), src), src), "homomorphism." + auto_name(a) + ".");
  return r;
}

Report composite_check(const Morphism& lhs, const Morphism& rhs, const ParamTuple& t) {
  const Params<RatFuncV> src = symbolic_params(t);
  const Params<RatFuncV> tl = target_params(lhs, src), tr = target_params(rhs, src);
  const std::string base = "composite." + lhs.name + "=" + rhs.name;
  Report r;
  if (!(tl.t == tr.t) || tl.q_half != tr.q_half) {
    r.add(base + ".target", false, 0, "target parameters differ");
    return r;
  }
  const GenSet<RatFuncV> tg = ld_generators(tl);
  static const char* names[] = {"V0", "V1", "V0v", "V1v"};
  for (int i = 0; i < 4; ++i)
    r.checks.push_back(zero_check(base + "." + names[i], evaluate(lhs.images[i], tg) - evaluate(rhs.images[i], tg)));
  return r;
}

std::vector<CompositeRelation> composite_relations() {
  const Morphism s = automorphism(Auto::sigma), t = automorphism(Auto::tau), e = automorphism(Auto::eta);
  const Morphism st = compose(s, t);
  std::vector<CompositeRelation> out;
  out.push_back({compose(s, s), conjugation(g(V1), "conj_V1")});
  // (στ)^3 is the identity only up to the inner automorphism (σσ)^2
  out.push_back({compose(st, compose(st, st)), conjugation(concat(g(V1), g(V1)), "conj_V1^2")});
  out.push_back({compose(s, compose(s, t)), compose(t, compose(s, s))});
  out.push_back({compose(s, compose(e, s)), e});
  out.push_back({compose(t, compose(e, t)), e});
  return out;
}

Report center_transport_check(Auto a, const ParamTuple& t) {
  const Params<Rational> src = specialized_params(t, Rational(1));
  const Morphism m = automorphism(a);
  const auto Xs = center_generators(automorphism_images(m, src));
  const auto Xt = center_generators(ld_generators(target_params(m, src)));
  cubic::Action act = a == Auto::sigma ? cubic::Action::sigma : a == Auto::tau ? cubic::Action::tau : cubic::Action::eta;
  const auto formula = cubic::action_images(act, cubic::coeffs_from_params(t));
  Report r;
  for (int i = 0; i < 3; ++i)
    r.checks.push_back(zero_check("transport." + auto_name(a) + ".X" + std::to_string(i + 1),
                                  Xs[i] - eval_on_center(formula[i], Xt)));
  return r;
}

Report automorphism_suite(const ParamTuple& t) {
  Report r;
  for (Auto a : {Auto::sigma, Auto::tau, Auto::eta}) {
    r.append(homomorphism_check(a, t));
    r.append(center_transport_check(a, t));
  }
  for (const auto& rel : composite_relations()) r.append(composite_check(rel.lhs, rel.rhs, t));
  return r;
}

template Params<Rational> target_params(const Morphism&, const Params<Rational>&);
template Params<RatFuncV> target_params(const Morphism&, const Params<RatFuncV>&);
template TorusOp<Rational> evaluate(const Word&, const GenSet<Rational>&);
template TorusOp<RatFuncV> evaluate(const Word&, const GenSet<RatFuncV>&);
template GenSet<Rational> automorphism_images(const Morphism&, const Params<Rational>&);
template GenSet<RatFuncV> automorphism_images(const Morphism&, const Params<RatFuncV>&);

}  // namespace hecke::daha
