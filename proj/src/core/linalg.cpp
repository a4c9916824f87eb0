#include "hecke/core/linalg.hpp"

#include <algorithm>

namespace hecke {

int rank(DenseMatrix m) {
  std::size_t cols = 0;
  for (const auto& r : m) cols = std::max(cols, r.size());
  for (auto& r : m) r.resize(cols, Rational(0));
  int rk = 0;
  const int n = static_cast<int>(m.size());
  for (std::size_t c = 0; c < cols && rk < n; ++c) {
    int piv = -1;
    for (int r = rk; r < n; ++r)
      if (sgn(m[r][c]) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rk], m[piv]);
    const Rational inv = 1 / m[rk][c];
    for (int r = rk + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m[rk][k]) != 0) m[r][k] -= f * m[rk][k];
    }
    ++rk;
  }
  return rk;
}

}  // namespace hecke
