#include "hecke/weyl/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hecke::weyl {

TorusPointS TorusPointS::make(const std::array<Rational, 4>& s, const Rational& delta) {
  for (const auto& x : s)
    if (sgn(x) == 0) throw std::invalid_argument("torus coordinates must be nonzero");
  if (sgn(delta) == 0) throw std::invalid_argument("delta must be nonzero");
  if (s[0] * s[1] * s[2] * s[3] != delta * delta) throw std::invalid_argument("s1*s2*s3*s4 must equal delta^2");
  return {s, delta};
}

std::string TorusPointS::str() const {
  return "(" + to_string(s[0]) + ", " + to_string(s[1]) + ", " + to_string(s[2]) + ", " + to_string(s[3]) +
         "; delta=" + to_string(delta) + ")";
}

bool WeylElement::valid() const {
  std::array<int, 4> p = perm;
  std::sort(p.begin(), p.end());
  if (p != std::array<int, 4>{0, 1, 2, 3}) return false;
  int neg = 0;
  for (int x : sign) {
    if (x != 1 && x != -1) return false;
    neg += x < 0;
  }
  return neg % 2 == 0;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement c;
  for (int i = 0; i < 4; ++i) {
    c.perm[i] = b.perm[a.perm[i]];
    c.sign[i] = a.sign[i] * b.sign[a.perm[i]];
  }
  return c;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement r;
  for (int i = 0; i < 4; ++i) r.perm[w.perm[i]] = i;
  for (int i = 0; i < 4; ++i) r.sign[i] = w.sign[r.perm[i]];
  return r;
}

const std::vector<WeylElement>& weyl_group() {
  static const std::vector<WeylElement> group = [] {
    std::vector<WeylElement> g;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        WeylElement w;
        w.perm = p;
        for (int i = 0; i < 4; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
        g.push_back(w);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return g;
  }();
  return group;
}

TorusPointS weyl_act(const WeylElement& w, const TorusPointS& s) {
  TorusPointS r;
  r.delta = s.delta;
  for (int i = 0; i < 4; ++i) {
    const Rational& x = s.s[w.perm[i]];
    if (w.sign[i] > 0) {
      r.s[i] = x;
    } else {
      r.s[i] = 1 / x;
      r.delta /= x;
    }
  }
  return r;
}

std::vector<TorusPointS> orbit(const TorusPointS& s) {
  std::set<TorusPointS> pts;
  for (const auto& w : weyl_group()) pts.insert(weyl_act(w, s));
  return {pts.begin(), pts.end()};
}

HalfWeight fundamental_weight(Fundamental w) {
  switch (w) {
    case Fundamental::w1: return {2, 0, 0, 0};
    case Fundamental::w2: return {2, 2, 0, 0};
    case Fundamental::w3: return {1, 1, 1, -1};
    case Fundamental::w4: return {1, 1, 1, 1};
  }
  throw std::logic_error("unknown weight");
}

std::vector<HalfWeight> weight_orbit(const HalfWeight& a) {
  std::set<HalfWeight> out;
  for (const auto& w : weyl_group()) {
    HalfWeight b;
    for (int i = 0; i < 4; ++i) b[i] = w.sign[i] * a[w.perm[i]];
    out.insert(b);
  }
  return {out.begin(), out.end()};
}

namespace {

template <class R>
R power(const R& x, const R& xinv, int e, const R& one) {
  R r = one;
  for (int i = 0; i < std::abs(e); ++i) r = r * (e > 0 ? x : xinv);
  return r;
}

template <class R>
R monomial_generic(const HalfWeight& a, const std::array<R, 4>& s, const std::array<R, 4>& sinv, const R& delta,
                   const R& one) {
  const bool odd = (a[0] % 2) != 0;
  R r = odd ? delta : one;
  for (int i = 0; i < 4; ++i) {
    const int e = odd ? (a[i] - 1) / 2 : a[i] / 2;
    r = r * power(s[i], sinv[i], e, one);
  }
  return r;
}

template <class R>
R orbit_sum_generic(Fundamental w, const std::array<R, 4>& s, const std::array<R, 4>& sinv, const R& delta,
                    const R& zero, const R& one) {
  static const std::map<Fundamental, std::vector<HalfWeight>> orbits = [] {
    std::map<Fundamental, std::vector<HalfWeight>> m;
    for (auto f : {Fundamental::w1, Fundamental::w2, Fundamental::w3, Fundamental::w4})
      m[f] = weight_orbit(fundamental_weight(f));
    return m;
  }();
  R total = zero;
  for (const auto& a : orbits.at(w)) total = total + monomial_generic(a, s, sinv, delta, one);
  return total;
}

std::array<Rational, 4> inverses(const std::array<Rational, 4>& s) {
  return {1 / s[0], 1 / s[1], 1 / s[2], 1 / s[3]};
}

}  // namespace

TorusPointS theta(const daha::ParamTuple& t) {
  return TorusPointS::make({t.k0 * t.k1, -t.k0 / t.k1, -t.u0 / t.u1, t.u0 * t.u1}, t.k0 * t.u0);
}

Rational monomial(const HalfWeight& a, const TorusPointS& s) {
  return monomial_generic<Rational>(a, s.s, inverses(s.s), s.delta, Rational(1));
}

Rational orbit_sum(Fundamental w, const TorusPointS& s) {
  return orbit_sum_generic<Rational>(w, s.s, inverses(s.s), s.delta, Rational(0), Rational(1));
}

cubic::CubicSurface pi(const TorusPointS& s) {
  cubic::CubicSurface S;
  S.p1 = orbit_sum(Fundamental::w4, s);
  S.p2 = orbit_sum(Fundamental::w1, s);
  S.p3 = -orbit_sum(Fundamental::w3, s);
  S.p0 = -orbit_sum(Fundamental::w2, s) - 8;
  return S;
}

Laurent4 Laurent4::constant(const Rational& c) { return mono(c, {0, 0, 0, 0}); }

Laurent4 Laurent4::mono(const Rational& c, std::array<int, 4> e) {
  Laurent4 r;
  if (sgn(c) != 0) r.terms[e] = c;
  return r;
}

Laurent4 Laurent4::operator+(const Laurent4& b) const {
  Laurent4 r = *this;
  for (const auto& [e, c] : b.terms) {
    Rational& x = r.terms[e];
    x += c;
    if (sgn(x) == 0) r.terms.erase(e);
  }
  return r;
}

Laurent4 Laurent4::operator-(const Laurent4& b) const { return *this + b.scaled(Rational(-1)); }

Laurent4 Laurent4::operator*(const Laurent4& b) const {
  Laurent4 r;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : b.terms) {
      std::array<int, 4> e;
      for (int i = 0; i < 4; ++i) e[i] = e1[i] + e2[i];
      r = r + mono(c1 * c2, e);
    }
  return r;
}

Laurent4 Laurent4::scaled(const Rational& c) const {
  Laurent4 r;
  if (sgn(c) == 0) return r;
  for (const auto& [e, x] : terms) r.terms[e] = x * c;
  return r;
}

std::array<Laurent4, 4> pi_theta_residues() {
  using L = Laurent4;
  auto t = [](int i, int e) {
    std::array<int, 4> v{0, 0, 0, 0};
    v[i] = e;
    return v;
  };
  auto bar = [&](int i) { return L::mono(Rational(1), t(i, 1)) - L::mono(Rational(1), t(i, -1)); };
  const L kb0 = bar(0), kb1 = bar(1), ub0 = bar(2), ub1 = bar(3);
  const L p1 = ub0 * kb0 + kb1 * ub1;
  const L p2 = ub1 * ub0 + kb0 * kb1;
  const L p3 = kb0 * ub1 + kb1 * ub0;
  const L p0 = kb0 * kb0 + kb1 * kb1 + ub0 * ub0 + ub1 * ub1 - kb0 * kb1 * ub0 * ub1;

  const Rational one(1), neg(-1);
  const std::array<L, 4> s{L::mono(one, {1, 1, 0, 0}), L::mono(neg, {1, -1, 0, 0}), L::mono(neg, {0, 0, 1, -1}),
                           L::mono(one, {0, 0, 1, 1})};
  const std::array<L, 4> sinv{L::mono(one, {-1, -1, 0, 0}), L::mono(neg, {-1, 1, 0, 0}),
                              L::mono(neg, {0, 0, -1, 1}), L::mono(one, {0, 0, -1, -1})};
  const L delta = L::mono(one, {1, 0, 1, 0});
  const L zero, unit = L::constant(one);
  auto m = [&](Fundamental f) { return orbit_sum_generic<L>(f, s, sinv, delta, zero, unit); };
  return {p1 - m(Fundamental::w4), p2 - m(Fundamental::w1), p3 + m(Fundamental::w3),
          p0 + m(Fundamental::w2) + L::constant(Rational(8))};
}

int invariance_violations_serial(const TorusPointS& s) {
  const cubic::CubicSurface base = pi(s);
  int bad = 0;
  for (const auto& w : weyl_group()) bad += !(pi(weyl_act(w, s)) == base);
  return bad;
}

int invariance_violations(const TorusPointS& s) {
  const cubic::CubicSurface base = pi(s);
  const auto& group = weyl_group();
  const int n = static_cast<int>(group.size());
  int bad = 0;
#pragma omp parallel for reduction(+ : bad) schedule(static)
  for (int i = 0; i < n; ++i) bad += !(pi(weyl_act(group[i], s)) == base);
  return bad;
}

}  // namespace hecke::weyl
