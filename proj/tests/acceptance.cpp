// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hecke/app/trials.hpp"
#include "hecke/cubic/singular.hpp"
#include "hecke/cubic/surface.hpp"
#include "hecke/daha/center.hpp"
#include "hecke/daha/morphisms.hpp"
#include "hecke/hochschild/homology.hpp"
#include "hecke/weyl/stabilizer.hpp"
#include "hecke/weyl/weyl.hpp"

using namespace hecke;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kPresentationBudget = 120.0;  // seconds, all 25 tuples
constexpr double kHochschildBudget = 60.0;     // seconds per (q, N)

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void line(int id, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
  failures += !ok;
}

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->name : "";
}

void criterion_presentation() {
  const auto t0 = Clock::now();
  const auto ts = app::random_tuples(25, kSeed);
  std::size_t relations = 0;
  std::string bad;
  for (const auto& t : ts) {
    const auto p = daha::symbolic_params(t);
    const Report r = daha::check_presentation(daha::ld_generators(p), p);
    relations += r.checks.size();
    if (!r.passed() && bad.empty()) bad = t.str() + " " + first_failure(r);
  }
  const double secs = since(t0);
  const bool ok = bad.empty() && relations == 25 * 9 && secs < kPresentationBudget;
  std::ostringstream d;
  d << relations << " relations over 25 tuples, symbolic v, " << secs << " s" << (bad.empty() ? "" : "; " + bad);
  line(1, "presentation suite", ok, d.str());
}

void criterion_center() {
  const auto ts = app::random_tuples(25, kSeed + 1);
  std::size_t checks = 0, identities = 0;
  std::string bad;
  for (const auto& t : ts) {
    Report r = daha::centrality_check(t);
    const Report c = daha::verify_cubic_relation(t);
    for (const auto& x : c.checks) identities += x.name.rfind("center.identity.", 0) == 0;
    r.append(c);
    checks += r.checks.size();
    if (!r.passed() && bad.empty()) bad = t.str() + " " + first_failure(r);
  }
  const bool ok = bad.empty() && identities == 25 * 6;
  line(2, "center suite", ok,
       std::to_string(checks) + " checks at v = 1, " + std::to_string(identities) + " intermediate identities" +
           (bad.empty() ? "" : "; " + bad));
}

void criterion_brackets() {
  const auto ts = app::random_tuples(10, kSeed + 2);
  std::size_t checks = 0;
  std::string bad;
  const std::set<std::string> required{"bracket.X1X2",   "bracket.X2X3",  "bracket.X3X1",
                                       "bracket.X1.V0",  "bracket.X1.V0v", "bracket.X1.V1",
                                       "bracket.X1.V1v"};
  for (const auto& t : ts) {
    const Report r = daha::bracket_suite(t);
    std::set<std::string> seen;
    for (const auto& c : r.checks)
      if (c.pass) seen.insert(c.name);
    for (const auto& name : required)
      if (!seen.count(name) && bad.empty()) bad = t.str() + " " + name;
    checks += r.checks.size();
    if (!r.passed() && bad.empty()) bad = t.str() + " " + first_failure(r);
  }
  line(3, "bracket suite", bad.empty(),
       std::to_string(checks) + " deformation-bracket identities at v = 1 over 10 tuples" +
           (bad.empty() ? "" : "; " + bad));
}

void criterion_poisson() {
  std::mt19937_64 rng(kSeed + 3);
  std::string bad;
  int n = 0;
  for (int i = 0; i < 10; ++i) {
    const cubic::CubicSurface S = cubic::coeffs_from_params(app::random_tuple(rng));
    const Report j = cubic::jacobi_check(S, rng);
    if (!j.passed() && bad.empty()) bad = first_failure(j);
    for (auto x : {cubic::X1(), cubic::X2(), cubic::X3()})
      if (!cubic::ambient_bracket(S.R(), x, S).is_zero() && bad.empty()) bad = "{R, X_i} != 0";
    for (int k = 0; k < 3; ++k) {
      const cubic::MPoly f = cubic::random_cubic_poly(rng), g = cubic::random_cubic_poly(rng),
                         h = cubic::random_cubic_poly(rng);
      if (!(cubic::ambient_bracket(f, g, S) + cubic::ambient_bracket(g, f, S)).is_zero() && bad.empty())
        bad = "antisymmetry";
      const cubic::MPoly leib = cubic::ambient_bracket(f, g * h, S) - cubic::ambient_bracket(f, g, S) * h -
                                g * cubic::ambient_bracket(f, h, S);
      if (!leib.is_zero() && bad.empty()) bad = "Leibniz";
      ++n;
    }
  }
  line(4, "Poisson suite", bad.empty(),
       "Jacobi in normal form, Casimir R, antisymmetry and Leibniz on " + std::to_string(n) +
           " random triples over 10 surfaces" + (bad.empty() ? "" : "; " + bad));
}

void criterion_actions() {
  const auto ts = app::random_tuples(10, kSeed + 4);
  std::string bad;
  const auto rel = daha::composite_relations().front();  // σσ = conjugation by V1
  for (const auto& t : ts) {
    const cubic::CubicSurface S = cubic::coeffs_from_params(t);
    for (auto a : {cubic::Action::g1, cubic::Action::g2, cubic::Action::g3}) {
      for (auto x : {cubic::X1(), cubic::X2(), cubic::X3()})
        if (!(cubic::k_action({a, a}, x, S).poly.full() == x) && bad.empty()) bad = "g_i^2 != id";
      if (!(S.R().substitute(cubic::action_images(a, S)) == S.R()) && bad.empty()) bad = "R o g_i != R";
    }
    for (auto a : {cubic::Action::sigma, cubic::Action::tau, cubic::Action::eta}) {
      const Report r = cubic::verify_equivariance(a, S);
      if (!r.passed() && bad.empty()) bad = t.str() + " " + first_failure(r);
    }
    const Report c = daha::composite_check(rel.lhs, rel.rhs, t);
    if (!c.passed() && bad.empty()) bad = t.str() + " " + first_failure(c);
  }
  line(5, "action suite", bad.empty(),
       "g_i involutive and R-preserving, sigma/tau/eta transport R into the target ideal, sigma^2 = conj(V1) "
       "as operators, 10 tuples" +
           (bad.empty() ? "" : "; " + bad));
}

void criterion_weyl() {
  bool ok = true;
  std::string detail;
  for (const auto& res : weyl::pi_theta_residues()) ok = ok && res.is_zero();
  detail += ok ? "p = pi(theta(t)) as Laurent polynomials" : "p != pi(theta(t))";
  std::mt19937_64 rng(kSeed + 5);
  int violations = 0;
  for (int i = 0; i < 5; ++i) {
    const auto s = app::random_s_point(rng);
    violations += weyl::invariance_violations(s) + weyl::invariance_violations_serial(s);
  }
  ok = ok && violations == 0;
  detail += ", " + std::to_string(violations) + " invariance violations over 5 points x 192";
  std::vector<std::size_t> sizes;
  for (auto f : {weyl::Fundamental::w1, weyl::Fundamental::w2, weyl::Fundamental::w3, weyl::Fundamental::w4})
    sizes.push_back(weyl::weight_orbit(weyl::fundamental_weight(f)).size());
  const bool orbits = sizes == std::vector<std::size_t>{8, 24, 8, 8} && weyl::weyl_group().size() == 192;
  ok = ok && orbits;
  detail += ", orbits (" + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
            std::to_string(sizes[2]) + "," + std::to_string(sizes[3]) + "), |W| = " +
            std::to_string(weyl::weyl_group().size());
  line(6, "Weyl suite", ok, detail);
}

void criterion_singularities() {
  struct Witness {
    std::array<Rational, 4> s;
    Rational delta;
    std::multiset<std::string> ade;
    std::vector<int> milnor;
  };
  using R = Rational;
  const std::vector<Witness> ws{
      {{R(2), R(2), R(3), R(4, 3)}, R(4), {"A1"}, {1}},
      {{R(2), R(2), R(3), R(3)}, R(6), {"A1", "A1"}, {1, 1}},
      {{R(2), R(2), R(2), R(9, 8)}, R(3), {"A2"}, {2}},
      {{R(1), R(1), R(3), R(3)}, R(3), {"A1", "A1", "A1"}, {1, 1, 1}},
      {{R(2), R(2), R(2), R(2)}, R(4), {"A3"}, {3}},
      {{R(1), R(-1), R(-1), R(1)}, R(1), {"A1", "A1", "A1", "A1"}, {1, 1, 1, 1}},
      {{R(1), R(1), R(1), R(1)}, R(1), {"D4"}, {4}},
  };
  std::string bad;
  for (const auto& w : ws) {
    const auto s = weyl::TorusPointS::make(w.s, w.delta);
    const cubic::SingularityReport r = cubic::analyze(s);
    std::multiset<std::string> ade, predicted;
    std::vector<int> mu;
    for (const auto& c : r.prediction->components) predicted.insert(weyl::ade_name(c.type));
    bool hess = true;
    for (const auto& p : r.points) {
      ade.insert(p.ade);
      mu.push_back(p.milnor);
      const int want = p.ade == "A1" ? 3 : p.ade == "D4" ? 1 : 2;
      hess = hess && p.hessian_rank == want && cubic::verify_singular(r.surface, p.point);
    }
    std::sort(mu.begin(), mu.end());
    if ((ade != w.ade || predicted != w.ade || mu != w.milnor || !hess || r.completeness != "proved") && bad.empty())
      bad = s.str();
  }
  const daha::ParamTuple one(R(1), R(1), R(1), R(1));
  const cubic::SingularityReport r1 = cubic::analyze(weyl::theta(one));
  std::set<cubic::Point3> got, want;
  for (const auto& p : r1.points) got.insert(p.point);
  for (int e1 : {-1, 1})
    for (int e2 : {-1, 1}) want.insert({R(2 * e1), R(2 * e2), R(2 * e1 * e2)});
  if (got != want && bad.empty()) bad = "t = (1,1,1,1)";
  int generic_points = 0;
  for (const auto& t : app::random_tuples(10, kSeed + 6, true)) {
    const auto r = cubic::analyze(weyl::theta(t));
    generic_points += static_cast<int>(r.points.size());
    if ((r.elimination != 0) && bad.empty()) bad = "generic " + t.str() + " not certified smooth";
  }
  if (generic_points != 0 && bad.empty()) bad = "generic tuples have singular points";
  line(7, "singularity suite", bad.empty(),
       "7 stratum witnesses (prediction, exact points, Milnor, Hessian), t = (1,1,1,1) nodes, " +
           std::to_string(generic_points) + " points on 10 generic surfaces" + (bad.empty() ? "" : "; " + bad));
}

void criterion_hochschild() {
  using namespace hochschild;
  std::string bad;
  double worst = 0;
  for (const Rational q : {Rational(2), Rational(3, 2), Rational(5, 7)})
    for (int N : {10, 12}) {
      const auto t0 = Clock::now();
      const Window w = Window::make(q, N);
      const std::string tag = "q=" + to_string(q) + " N=" + std::to_string(N);
      try {
        const HomologyReport u = homology_dims(w, Twist::untwisted), t = homology_dims(w, Twist::twisted);
        if (!(u.dims == Dims{1, 2, 1}) || !(t.dims == Dims{4, 0, 0})) bad = tag + " dims";
        const Z2Result z = z2_combine(w);
        if (!(z.combined == Dims{5, 0, 1}) || !z.checks.passed()) bad = tag + " Z2 " + z.combined.str();
        Report c = image_characterization_check(w);
        c.append(complex_check(w, Twist::untwisted));
        c.append(complex_check(w, Twist::twisted));
        if (!c.passed()) bad = tag + " " + first_failure(c);
      } catch (const std::exception& e) {
        bad = tag + " " + e.what();
      }
      const double secs = since(t0);
      worst = std::max(worst, secs);
      if (secs >= kHochschildBudget) bad = tag + " over budget";
    }
  std::ostringstream d;
  d << "untwisted (1,2,1), twisted (4,0,0), combined (5,0,1), images on-window, q in {2,3/2,5/7}, N in {10,12}, "
    << "slowest " << worst << " s" << (bad.empty() ? "" : "; " + bad);
  line(8, "Hochschild suite", bad.empty(), d.str());
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void criterion_determinism(const std::string& cli) {
  const std::vector<std::string> cmds{"verify --random 2 --seed 11", "classify --random 5 --seed 11",
                                      "surface --t 2,3,5,7", "act --word g1,sigma,eta --poly X1*X3 --t 2,3,5,7",
                                      "hochschild --q 3/2 --N 8"};
  std::string bad;
  const std::string tmp = "acceptance_determinism";
  for (const auto& c : cmds) {
    std::string out[2];
    for (int k = 0; k < 2; ++k) {
      const std::string path = tmp + std::to_string(k) + ".json";
      const std::string full = "\"" + cli + "\" " + c + " --out " + path + " 2>/dev/null";
      const int rc = std::system(full.c_str());
      if (rc != 0 && bad.empty()) bad = c + " exited nonzero";
      out[k] = slurp(path);
      std::remove(path.c_str());
    }
    if ((out[0].empty() || out[0] != out[1]) && bad.empty()) bad = c + " differs between runs";
  }
  line(9, "determinism", bad.empty(),
       std::to_string(cmds.size()) + " CLI commands reproduce byte-identical JSON" + (bad.empty() ? "" : "; " + bad));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : HECKE_CLI_PATH;
  criterion_presentation();
  criterion_center();
  criterion_brackets();
  criterion_poisson();
  criterion_actions();
  criterion_weyl();
  criterion_singularities();
  criterion_hochschild();
  criterion_determinism(cli);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
