#include "hecke/app/trials.hpp"

#include "hecke/cubic/surface.hpp"
#include "hecke/daha/center.hpp"
#include "hecke/daha/morphisms.hpp"
#include "hecke/weyl/stabilizer.hpp"

namespace hecke::app {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mag(1, 20), sign(0, 1);
  const int a = mag(rng), b = mag(rng);
  Rational r(sign(rng) ? -a : a, b);
  r.canonicalize();
  return r;
}

daha::ParamTuple random_tuple(std::mt19937_64& rng) {
  Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng), d = random_rational(rng);
  return {a, b, c, d};
}

daha::ParamTuple random_generic_tuple(std::mt19937_64& rng) {
  for (;;) {
    daha::ParamTuple t = random_tuple(rng);
    if (weyl::stabilizer_subsystem(weyl::theta(t)).empty()) return t;
  }
}

weyl::TorusPointS random_s_point(std::mt19937_64& rng) {
  std::array<Rational, 4> s{random_rational(rng), random_rational(rng), random_rational(rng), Rational(1)};
  const Rational delta = random_rational(rng);
  s[3] = delta * delta / (s[0] * s[1] * s[2]);
  return weyl::TorusPointS::make(s, delta);
}

std::vector<daha::ParamTuple> random_tuples(int n, std::uint64_t seed, bool generic) {
  std::mt19937_64 rng(seed);
  std::vector<daha::ParamTuple> out;
  for (int i = 0; i < n; ++i) out.push_back(generic ? random_generic_tuple(rng) : random_tuple(rng));
  return out;
}

Report verify_tuple(const daha::ParamTuple& t, std::uint64_t seed) {
  t.validate();
  Report r;
  const auto p = daha::symbolic_params(t);
  r.append(daha::check_presentation(daha::ld_generators(p), p), "presentation.");
  r.append(daha::centrality_check(t), "centrality.");
  r.append(daha::verify_cubic_relation(t), "cubic_relation.");
  r.append(daha::bracket_suite(t), "bracket.");
  r.append(daha::symmetrizer_check(t), "symmetrizer.");
  r.append(daha::automorphism_suite(t), "automorphism.");
  const cubic::CubicSurface S = cubic::coeffs_from_params(t);
  std::mt19937_64 rng(seed);
  r.append(cubic::jacobi_check(S, rng), "poisson.");
  for (auto a : {cubic::Action::g1, cubic::Action::g2, cubic::Action::g3, cubic::Action::sigma, cubic::Action::tau,
                 cubic::Action::eta})
    r.append(cubic::verify_equivariance(a, S), "surface.");
  return r;
}

std::vector<Report> verify_batch(const std::vector<daha::ParamTuple>& ts, std::uint64_t seed) {
  std::vector<Report> out(ts.size());
  const int n = static_cast<int>(ts.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) out[i] = verify_tuple(ts[i], seed + i);
  return out;
}

std::vector<Report> verify_batch_serial(const std::vector<daha::ParamTuple>& ts, std::uint64_t seed) {
  std::vector<Report> out;
  for (std::size_t i = 0; i < ts.size(); ++i) out.push_back(verify_tuple(ts[i], seed + i));
  return out;
}

}  // namespace hecke::app
