#pragma once
// Seeded random parameters and batches of verification trials.
#include <cstdint>
#include <random>
#include <vector>

#include "hecke/core/report.hpp"
#include "hecke/daha/params.hpp"
#include "hecke/weyl/weyl.hpp"

namespace hecke::app {

/// ±a/b with a, b uniform in [1, 20].
Rational random_rational(std::mt19937_64& rng);
daha::ParamTuple random_tuple(std::mt19937_64& rng);
/// Redraws until no root fixes θ(t), so the surface is smooth.
daha::ParamTuple random_generic_tuple(std::mt19937_64& rng);
/// Random s1, s2, s3, δ with s4 = δ^2/(s1 s2 s3).
weyl::TorusPointS random_s_point(std::mt19937_64& rng);

std::vector<daha::ParamTuple> random_tuples(int n, std::uint64_t seed, bool generic = false);

/// Every operator and surface suite for one tuple; `seed` drives the random Poisson samples.
Report verify_tuple(const daha::ParamTuple& t, std::uint64_t seed);

/// Trials run concurrently; results are in input order.
std::vector<Report> verify_batch(const std::vector<daha::ParamTuple>& ts, std::uint64_t seed);
std::vector<Report> verify_batch_serial(const std::vector<daha::ParamTuple>& ts, std::uint64_t seed);

}  // namespace hecke::app
