#pragma once
// Dense exact linear algebra over Q.
#include <vector>

#include "hecke/core/rational.hpp"

namespace hecke {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination; rows may have different lengths (missing entries are zero).
int rank(DenseMatrix rows);

}  // namespace hecke
