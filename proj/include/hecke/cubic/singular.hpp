#pragma once
/**
 * Singular points of C_p: candidates from the torus point s, exact verification,
 * Milnor numbers from jets of the Jacobian ideal, Hessian ranks, and a
 * completeness count by eliminating X1 and X2.
 */
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hecke/cubic/surface.hpp"
#include "hecke/weyl/stabilizer.hpp"

namespace hecke::cubic {

using Point3 = std::array<Rational, 3>;

/// One-dimensional character (δ + 1/δ, s1 + s4, -δ/s2 - s2/δ) at every W-translate with s1 s4 = 1,
/// plus the stratum formula (δ(1 + 1/(s_k s_l)), -s_i - s_j, δ/s_i (1 + 1/(s_k s_l))) at every
/// translate with s_i = s_j. Duplicates removed; nothing is verified here.
std::vector<Point3> singular_candidates(const weyl::TorusPointS& s);

/// R and its three partials vanish at pt.
bool verify_singular(const CubicSurface& S, const Point3& pt);

int hessian_rank(const CubicSurface& S, const Point3& pt);

/// dim of the local algebra of the Jacobian ideal at pt, from jets of increasing degree.
/// Throws std::runtime_error("non-isolated or mu > 4") if it has not stabilized by degree 8.
int milnor_number(const CubicSurface& S, const Point3& pt);

/// A1..A3, D4 from (μ, Hessian rank); "unknown" otherwise.
std::string ade_label(int milnor, int hessian_rank);

/// Number of distinct singular points over C, or nullopt when the elimination degenerates.
std::optional<int> elimination_count(const CubicSurface& S);

/// Singular points found from the elimination polynomials directly: rational roots exactly,
/// other roots as approximations.
struct EliminationRoots {
  std::vector<Point3> exact;
  std::vector<std::array<double, 3>> approx;
  bool degenerate = false;
};
EliminationRoots elimination_roots(const CubicSurface& S);

struct SingularPoint {
  Point3 point;
  std::array<double, 3> approx{};
  bool exact = true;
  std::string ade;
  int milnor = -1;
  int hessian_rank = -1;
  std::string witness_stratum;
};

struct SingularityReport {
  CubicSurface surface;
  std::optional<weyl::Prediction> prediction;
  std::vector<SingularPoint> points;
  std::optional<int> elimination;
  std::string completeness;  // "proved" or "heuristic"
  int total_milnor() const;
};

/// Candidates from s, verified on π(s).
SingularityReport analyze(const weyl::TorusPointS& s);
/// From p alone: roots of the elimination polynomials.
SingularityReport analyze(const CubicSurface& S);

}  // namespace hecke::cubic
