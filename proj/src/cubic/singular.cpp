#include "hecke/cubic/singular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>

#include "hecke/core/linalg.hpp"
#include "hecke/core/poly.hpp"

namespace hecke::cubic {

using QPoly = Poly<Rational>;

std::vector<Point3> singular_candidates(const weyl::TorusPointS& s0) {
  std::set<Point3> out;
  for (const auto& w : weyl::weyl_group()) {
    const weyl::TorusPointS s = weyl::weyl_act(w, s0);
    const auto& x = s.s;
    const Rational& d = s.delta;
    if (x[0] * x[3] == 1) out.insert({d + 1 / d, x[0] + x[3], -(d / x[1] + x[1] / d)});
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if (x[i] != x[j]) continue;
        int k = -1, l = -1;
        for (int m = 0; m < 4; ++m)
          if (m != i && m != j) (k < 0 ? k : l) = m;
        const Rational f = 1 + 1 / (x[k] * x[l]);
        out.insert({d * f, -x[i] - x[j], d / x[i] * f});
      }
  }
  return {out.begin(), out.end()};
}

namespace {

std::array<MPoly, 4> gradient_system(const CubicSurface& S) {
  const MPoly R = S.R();
  return {R, R.derivative(0), R.derivative(1), R.derivative(2)};
}

// Monomials of total degree <= d, in a fixed order.
std::vector<Exponent> monomials_upto(int d) {
  std::vector<Exponent> out;
  for (int t = 0; t <= d; ++t)
    for (int a = t; a >= 0; --a)
      for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
  return out;
}

QPoly poly_from(std::vector<Rational> c) { return QPoly(std::move(c)); }

QPoly squarefree(const QPoly& g) {
  if (g.degree() <= 0) return g;
  return g / QPoly::gcd(g, g.derivative());
}

// Removes every factor (z - r).
QPoly strip_root(QPoly g, const Rational& r) {
  const QPoly lin = poly_from({-r, Rational(1)});
  while (g.degree() > 0 && sgn(g.eval(r)) == 0) g = g / lin;
  return g;
}

struct ZSystem {
  QPoly D, N1, N2, A, B;
};

ZSystem z_system(const CubicSurface& S) {
  ZSystem z;
  const QPoly Z = QPoly::var();
  auto C = [](const Rational& x) { return QPoly(x); };
  z.D = Z * Z - C(Rational(4));
  z.N2 = -(Z.scaled(S.p1) + C(Rational(2 * S.p2)));
  z.N1 = -(Z.scaled(S.p2) + C(Rational(2 * S.p1)));
  const QPoly D2 = z.D * z.D;
  z.A = z.N1 * z.N2 - (Z.scaled(Rational(2)) - C(S.p3)) * D2;
  z.B = z.N1 * z.N2 * Z - z.N1 * z.N1 - z.N2 * z.N2 - Z * Z * D2 + (z.N1 * z.D).scaled(S.p1) +
        (z.N2 * z.D).scaled(S.p2) + (Z * D2).scaled(S.p3) + D2.scaled(Rational(S.p0 + 4));
  return z;
}

// On the line X3 = z0 (z0 = ±2) with p1 z0 + 2 p2 = 0: X1 = (z0 y + p1)/2, unknown y = X2.
struct YSystem {
  QPoly X1, F3, F;
};

YSystem y_system(const CubicSurface& S, const Rational& z0) {
  const QPoly Y = QPoly::var();
  auto C = [](const Rational& x) { return QPoly(x); };
  YSystem y;
  y.X1 = (Y.scaled(z0) + C(S.p1)).scaled(Rational(1, 2));
  y.F3 = y.X1 * Y + C(Rational(-2 * z0 + S.p3));
  y.F = (y.X1 * Y).scaled(z0) - y.X1 * y.X1 - Y * Y + y.X1.scaled(S.p1) + Y.scaled(S.p2) +
        C(Rational(-z0 * z0 + S.p3 * z0 + S.p0 + 4));
  return y;
}

bool line_consistent(const CubicSurface& S, const Rational& z0) { return sgn(S.p1 * z0 + 2 * S.p2) == 0; }

// Roots of p numerically (Durand-Kerner), p of positive degree.
std::vector<std::complex<long double>> numeric_roots(const QPoly& p) {
  using C = std::complex<long double>;
  const int n = p.degree();
  std::vector<long double> a(n + 1);
  const Rational lead = p.lead();
  for (int i = 0; i <= n; ++i) a[i] = static_cast<long double>(Rational(p.coeff(i) / lead).get_d());
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < n; ++i) z[i] = std::pow(seed, i);
  auto eval = [&](C x) {
    C r = 1;
    for (int i = n - 1; i >= 0; --i) r = r * x + a[i];
    return r;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < n; ++i) {
      C den = 1;
      for (int j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

// Continued-fraction convergents of x, tested exactly against p.
std::optional<Rational> rationalize_root(long double x, const QPoly& p) {
  long double r = x;
  Integer h0(1), h1(0), k0(0), k1(1);
  for (int it = 0; it < 40; ++it) {
    const long double fl = std::floor(r);
    Integer a(static_cast<double>(fl));
    Integer h = a * h0 + h1, k = a * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    Rational cand(h0, k0);
    cand.canonicalize();
    if (sgn(p.eval(cand)) == 0) return cand;
    if (abs(k0) > Integer("1000000000000")) break;
    const long double frac = r - fl;
    if (std::fabs(frac) < 1e-15L) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

struct RootSplit {
  std::vector<Rational> exact;
  std::vector<long double> real_approx;
  std::vector<std::complex<long double>> complex_approx;
};

RootSplit split_roots(const QPoly& g) {
  RootSplit out;
  if (g.degree() <= 0) return out;
  QPoly rest = g;
  for (const auto& z : numeric_roots(g)) {
    if (std::fabs(z.imag()) < 1e-9L * (1 + std::abs(z))) {
      if (auto r = rationalize_root(z.real(), rest)) {
        out.exact.push_back(*r);
        rest = strip_root(rest, *r);
        continue;
      }
    }
    out.complex_approx.push_back(z);
  }
  // any root missed by the numeric pass stays in `rest`
  return out;
}

}  // namespace

bool verify_singular(const CubicSurface& S, const Point3& pt) {
  for (const auto& f : gradient_system(S))
    if (sgn(f.eval(pt)) != 0) return false;
  return true;
}

int hessian_rank(const CubicSurface&, const Point3& pt) {
  const Rational m2(-2);
  DenseMatrix h{{m2, pt[2], pt[1]}, {pt[2], m2, pt[0]}, {pt[1], pt[0], m2}};
  return rank(h);
}

int milnor_number(const CubicSurface& S, const Point3& pt) {
  const MPoly f = S.R().substitute({X1() + MPoly(pt[0]), X2() + MPoly(pt[1]), X3() + MPoly(pt[2])});
  const std::array<MPoly, 3> g{f.derivative(0), f.derivative(1), f.derivative(2)};
  int prev = -1;
  for (int d = 1; d <= 8; ++d) {
    const auto mons = monomials_upto(d);
    std::map<Exponent, int> index;
    for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = static_cast<int>(i);
    DenseMatrix rows;
    for (const auto& gi : g)
      for (const auto& a : monomials_upto(d)) {
        const MPoly prod = (MPoly::monomial(Rational(1), a) * gi).truncated(d);
        if (prod.is_zero()) continue;
        std::vector<Rational> row(mons.size(), Rational(0));
        for (const auto& [e, c] : prod.terms()) row[index.at(e)] = c;
        rows.push_back(std::move(row));
      }
    const int dim = static_cast<int>(mons.size()) - rank(rows);
    if (dim == prev) return dim;
    prev = dim;
  }
  throw std::runtime_error("non-isolated or mu > 4");
}

std::string ade_label(int milnor, int hrank) {
  if (milnor == 1 && hrank == 3) return "A1";
  if (milnor == 2 && hrank == 2) return "A2";
  if (milnor == 3 && hrank == 2) return "A3";
  if (milnor == 4 && hrank == 1) return "D4";
  return "unknown";
}

std::optional<int> elimination_count(const CubicSurface& S) {
  const ZSystem z = z_system(S);
  if (z.A.is_zero() && z.B.is_zero()) return std::nullopt;
  QPoly g = QPoly::gcd(z.A, z.B);
  g = strip_root(strip_root(g, Rational(2)), Rational(-2));
  int count = std::max(0, squarefree(g).degree());
  for (const Rational& z0 : {Rational(2), Rational(-2)}) {
    if (!line_consistent(S, z0)) continue;
    const YSystem y = y_system(S, z0);
    if (y.F3.is_zero() && y.F.is_zero()) return std::nullopt;
    count += std::max(0, squarefree(QPoly::gcd(y.F3, y.F)).degree());
  }
  return count;
}

EliminationRoots elimination_roots(const CubicSurface& S) {
  EliminationRoots out;
  const ZSystem z = z_system(S);
  if (z.A.is_zero() && z.B.is_zero()) {
    out.degenerate = true;
    return out;
  }
  const QPoly g = squarefree(strip_root(strip_root(QPoly::gcd(z.A, z.B), Rational(2)), Rational(-2)));
  const RootSplit zs = split_roots(g);
  for (const auto& r : zs.exact) {
    const Rational d = z.D.eval(r);
    out.exact.push_back({z.N1.eval(r) / d, z.N2.eval(r) / d, r});
  }
  for (const auto& c : zs.complex_approx) {
    auto ev = [&](const QPoly& p) {
      std::complex<long double> acc = 0;
      for (int i = p.degree(); i >= 0; --i) acc = acc * c + static_cast<long double>(p.coeff(i).get_d());
      return acc;
    };
    const auto d = ev(z.D);
    out.approx.push_back({static_cast<double>((ev(z.N1) / d).real()), static_cast<double>((ev(z.N2) / d).real()),
                          static_cast<double>(c.real())});
  }
  for (const Rational& z0 : {Rational(2), Rational(-2)}) {
    if (!line_consistent(S, z0)) continue;
    const YSystem y = y_system(S, z0);
    if (y.F3.is_zero() && y.F.is_zero()) {
      out.degenerate = true;
      continue;
    }
    const RootSplit ys = split_roots(squarefree(QPoly::gcd(y.F3, y.F)));
    for (const auto& r : ys.exact) out.exact.push_back({y.X1.eval(r), r, z0});
    for (const auto& c : ys.complex_approx)
      out.approx.push_back({static_cast<double>((z0.get_d() * c.real() + S.p1.get_d()) / 2),
                            static_cast<double>(c.real()), z0.get_d()});
  }
  return out;
}

int SingularityReport::total_milnor() const {
  int t = 0;
  for (const auto& p : points) t += std::max(0, p.milnor);
  return t;
}

namespace {

SingularPoint describe(const CubicSurface& S, const Point3& pt, const std::string& stratum) {
  SingularPoint sp;
  sp.point = pt;
  for (int i = 0; i < 3; ++i) sp.approx[i] = pt[i].get_d();
  sp.milnor = milnor_number(S, pt);
  sp.hessian_rank = hessian_rank(S, pt);
  sp.ade = ade_label(sp.milnor, sp.hessian_rank);
  sp.witness_stratum = stratum;
  return sp;
}

}  // namespace

SingularityReport analyze(const weyl::TorusPointS& s) {
  SingularityReport rep;
  rep.surface = weyl::pi(s);
  rep.prediction = weyl::classify(s);
  for (const auto& c : singular_candidates(s))
    if (verify_singular(rep.surface, c)) rep.points.push_back(describe(rep.surface, c, rep.prediction->stratum));
  rep.elimination = elimination_count(rep.surface);
  rep.completeness =
      rep.elimination && *rep.elimination == static_cast<int>(rep.points.size()) ? "proved" : "heuristic";
  return rep;
}

SingularityReport analyze(const CubicSurface& S) {
  SingularityReport rep;
  rep.surface = S;
  const EliminationRoots roots = elimination_roots(S);
  for (const auto& pt : roots.exact)
    if (verify_singular(S, pt)) rep.points.push_back(describe(S, pt, "from-elimination"));
  for (const auto& a : roots.approx) {
    SingularPoint sp;
    sp.exact = false;
    sp.approx = a;
    sp.ade = "unknown";
    sp.witness_stratum = "from-elimination";
    rep.points.push_back(sp);
  }
  rep.elimination = elimination_count(S);
  const bool all_exact = roots.approx.empty() && !roots.degenerate;
  rep.completeness = all_exact && rep.elimination && *rep.elimination == static_cast<int>(rep.points.size())
                         ? "proved"
                         : "heuristic";
  return rep;
}

}  // namespace hecke::cubic
