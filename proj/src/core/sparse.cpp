#include "hecke/core/sparse.hpp"

#include <stdexcept>

namespace hecke {

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, c] : x) {
    auto [it, fresh] = y.try_emplace(k, 0);
    it->second += a * c;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

SparseEchelon::Reduced SparseEchelon::reduce(SparseVec v, SparseVec tag) const {
  auto it = v.begin();
  while (it != v.end()) {
    const auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    const long key = it->first;
    const Rational c = it->second;
    axpy(v, -c, row->second.vec);
    axpy(tag, -c, row->second.tag);
    it = v.upper_bound(key);
  }
  return {std::move(v), std::move(tag)};
}

void SparseEchelon::add(Reduced r) {
  if (r.residual.empty()) throw std::logic_error("SparseEchelon::add: zero residual");
  const long lead = r.residual.begin()->first;
  const Rational inv = 1 / r.residual.begin()->second;
  for (auto& [k, c] : r.residual) c *= inv;
  for (auto& [k, c] : r.combo) c *= inv;
  rows_.emplace(lead, Row{std::move(r.residual), std::move(r.combo)});
}

bool SparseEchelon::insert(SparseVec v, SparseVec tag) {
  Reduced r = reduce(std::move(v), std::move(tag));
  if (r.residual.empty()) return false;
  add(std::move(r));
  return true;
}

}  // namespace hecke
