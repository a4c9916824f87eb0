#pragma once
// Sparse vectors over Q and an incremental row echelon with combination tracking.
#include <map>

#include "hecke/core/rational.hpp"

namespace hecke {

using SparseVec = std::map<long, Rational>;

/// y += a * x, dropping entries that cancel.
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);

/// Rows are kept with leading (smallest) key normalized to 1. Each row carries a tag:
/// the combination of inserted vectors it stands for.
class SparseEchelon {
 public:
  struct Reduced {
    SparseVec residual;  // v minus a combination of rows; no pivot keys left
    SparseVec combo;     // tag minus the same combination of row tags
  };

  Reduced reduce(SparseVec v, SparseVec tag = {}) const;
  /// Adds a reduced vector with nonempty residual as a new row.
  void add(Reduced r);
  /// Reduces and adds; returns false if v was already in the span.
  bool insert(SparseVec v, SparseVec tag = {});
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    SparseVec vec;
    SparseVec tag;
  };
  std::map<long, Row> rows_;
};

}  // namespace hecke
