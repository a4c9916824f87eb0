#pragma once
// Windowed homology of the Koszul complexes, the involution on it, and image tests.
#include <array>
#include <string>
#include <vector>

#include "hecke/core/linalg.hpp"
#include "hecke/core/report.hpp"
#include "hecke/hochschild/complex.hpp"

namespace hecke::hochschild {

struct Dims {
  int h0 = 0, h1 = 0, h2 = 0;
  friend bool operator==(const Dims&, const Dims&) = default;
  int operator[](int k) const { return k == 0 ? h0 : k == 1 ? h1 : h2; }
  int& operator[](int k) { return k == 0 ? h0 : k == 1 ? h1 : h2; }
  std::string str() const;
};

/// Homology on one window, split over the four parity classes of (a, b).
struct WindowHomology {
  Dims dims;        // from explicit representatives
  Dims rank_dims;   // from rank counts: |cycles| - (rank B - rank of B outside the inner box)
  /// Action of the involution on H_k, block diagonal over parity classes; each block h x h.
  std::array<std::vector<DenseMatrix>, 3> action;
  bool action_defined = true;  // every image reduced to a combination of representatives
};

WindowHomology window_homology(const Window& w, Twist t);
WindowHomology window_homology_serial(const Window& w, Twist t);

struct HomologyReport {
  Twist twist;
  Rational q;
  int N;
  Dims dims;          // at N
  Dims dims_smaller;  // at N - 2
  bool stabilized;
};

/// Dims at N and N - 2. Throws std::runtime_error advising a larger N if they differ.
HomologyReport homology_dims(const Window& w, Twist t);

/// d0 d1 = 0 on every inner-box generator; chain-map squares commute.
Report complex_check(const Window& w, Twist t);

/// Twisted images of δ1, δ2 and d0 against their annihilating functionals.
Report image_characterization_check(const Window& w);

struct Z2Result {
  Dims untwisted, twisted;
  Dims untwisted_invariant, twisted_invariant;
  Dims combined;
  Report checks;
};

Z2Result z2_combine(const Window& w);

}  // namespace hecke::hochschild
