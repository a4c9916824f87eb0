#include "hecke/hochschild/homology.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hecke::hochschild {

std::string Dims::str() const {
  return "(" + std::to_string(h0) + ", " + std::to_string(h1) + ", " + std::to_string(h2) + ")";
}

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }

std::vector<Mono> box(int radius, int ca, int cb) {
  std::vector<Mono> out;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      if (parity(a) == ca && parity(b) == cb) out.push_back({a, b});
  return out;
}

std::vector<Mono> box(int radius) {
  std::vector<Mono> out;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b) out.push_back({a, b});
  return out;
}

Chain unit_chain(int comp, const Mono& m) {
  Chain c(2);
  c[comp] = mono(m.first, m.second);
  return c;
}

SparseVec outside_part(const SparseVec& v, int n) {
  SparseVec r;
  for (const auto& [k, x] : v) {
    int comp, a, b;
    decode_key(k, comp, a, b);
    if (std::abs(a) > n || std::abs(b) > n) r.emplace(k, x);
  }
  return r;
}

struct CosetData {
  Dims dims, rank_dims;
  std::array<DenseMatrix, 3> action;
  bool action_defined = true;
};

CosetData coset_homology(const KoszulComplex& K, int ca, int cb) {
  const int N = K.window().N, n = K.window().inner();
  const auto outer = box(N, ca, cb), inner = box(n, ca, cb);
  CosetData out;

  // quotient[k]: boundaries from the full box, then homology representatives tagged by index
  std::array<SparseEchelon, 3> quotient;
  std::array<SparseEchelon, 2> outside;
  for (const auto& m : outer) {
    for (int comp = 0; comp < 2; ++comp) {
      SparseVec v = to_sparse(K.d0(unit_chain(comp, m)));
      outside[0].insert(outside_part(v, n));
      quotient[0].insert(std::move(v));
    }
    SparseVec v = to_sparse(K.d1(mono(m.first, m.second)));
    outside[1].insert(outside_part(v, n));
    quotient[1].insert(std::move(v));
  }

  std::array<std::vector<SparseVec>, 3> cycles;
  for (const auto& m : inner) cycles[0].push_back(to_sparse(mono(m.first, m.second)));
  {
    SparseEchelon e;
    for (const auto& m : inner)
      for (int comp = 0; comp < 2; ++comp) {
        auto r = e.reduce(to_sparse(K.d0(unit_chain(comp, m))), {{chain_key(comp, m.first, m.second), Rational(1)}});
        if (r.residual.empty())
          cycles[1].push_back(std::move(r.combo));
        else
          e.add(std::move(r));
      }
  }
  {
    SparseEchelon e;
    for (const auto& m : inner) {
      auto r = e.reduce(to_sparse(K.d1(mono(m.first, m.second))), {{chain_key(0, m.first, m.second), Rational(1)}});
      if (r.residual.empty())
        cycles[2].push_back(std::move(r.combo));
      else
        e.add(std::move(r));
    }
  }

  for (int k = 0; k < 3; ++k) {
    const int boundary_in_box = k < 2 ? quotient[k].rank() - outside[k].rank() : 0;
    out.rank_dims[k] = static_cast<int>(cycles[k].size()) - boundary_in_box;
  }

  std::array<std::vector<SparseVec>, 3> reps;
  for (int k = 0; k < 3; ++k) {
    for (const auto& z : cycles[k]) {
      const long idx = static_cast<long>(reps[k].size());
      auto r = quotient[k].reduce(z, {{idx, Rational(1)}});
      if (r.residual.empty()) continue;
      quotient[k].add(std::move(r));
      reps[k].push_back(z);
    }
    out.dims[k] = static_cast<int>(reps[k].size());
  }

  for (int k = 0; k < 3; ++k) {
    const int h = out.dims[k];
    DenseMatrix M(h, std::vector<Rational>(h, Rational(0)));
    for (int i = 0; i < h; ++i) {
      SparseVec image;
      if (k == 1) {
        image = to_sparse(K.a1(chain_from_sparse(reps[k][i], 2)));
      } else {
        const Elem z = chain_from_sparse(reps[k][i], 1)[0];
        image = to_sparse(k == 0 ? K.a0(z) : K.a2(z));
      }
      auto r = quotient[k].reduce(std::move(image));
      if (!r.residual.empty()) out.action_defined = false;
      for (const auto& [j, c] : r.combo) M[j][i] = -c;
    }
    out.action[k] = std::move(M);
  }
  return out;
}

WindowHomology combine(const std::array<CosetData, 4>& parts) {
  WindowHomology wh;
  for (const auto& p : parts) {
    for (int k = 0; k < 3; ++k) {
      wh.dims[k] += p.dims[k];
      wh.rank_dims[k] += p.rank_dims[k];
      if (p.dims[k] > 0) wh.action[k].push_back(p.action[k]);
    }
    wh.action_defined = wh.action_defined && p.action_defined;
  }
  return wh;
}

}  // namespace

WindowHomology window_homology_serial(const Window& w, Twist t) {
  const KoszulComplex K(w, t);
  std::array<CosetData, 4> parts;
  for (int c = 0; c < 4; ++c) parts[c] = coset_homology(K, c / 2, c % 2);
  return combine(parts);
}

WindowHomology window_homology(const Window& w, Twist t) {
  const KoszulComplex K(w, t);
  std::array<CosetData, 4> parts;
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < 4; ++c) parts[c] = coset_homology(K, c / 2, c % 2);
  return combine(parts);
}

HomologyReport homology_dims(const Window& w, Twist t) {
  if (w.N - 2 < 4) throw std::invalid_argument("N must be at least 6 to compare with N - 2");
  HomologyReport rep{t, w.q, w.N, {}, {}, false};
  rep.dims = window_homology(w, t).dims;
  rep.dims_smaller = window_homology(Window::make(w.q, w.N - 2), t).dims;
  rep.stabilized = rep.dims == rep.dims_smaller;
  if (!rep.stabilized)
    throw std::runtime_error("homology not stabilized between N = " + std::to_string(w.N - 2) + " and N = " +
                             std::to_string(w.N) + "; try a larger N");
  return rep;
}

Report complex_check(const Window& w, Twist t) {
  const KoszulComplex K(w, t);
  const std::string pre = twist_name(t) + ".";
  std::size_t bad_dd = 0, bad_sq1 = 0, bad_sq0 = 0;
  for (const auto& m : box(w.inner())) {
    const Elem z = mono(m.first, m.second);
    bad_dd += K.d0(K.d1(z)).size();
    SparseVec diff = to_sparse(K.d1(K.a2(z)));
    axpy(diff, Rational(-1), to_sparse(K.a1(K.d1(z))));
    bad_sq1 += diff.size();
    for (int comp = 0; comp < 2; ++comp) {
      const Chain c = unit_chain(comp, m);
      bad_sq0 += (K.d0(K.a1(c)) - K.a0(K.d0(c))).size();
    }
  }
  Report r;
  r.add(pre + "d0_after_d1_vanishes", bad_dd == 0, bad_dd);
  r.add(pre + "chain_map_commutes_degree2", bad_sq1 == 0, bad_sq1);
  r.add(pre + "chain_map_commutes_degree1", bad_sq0 == 0, bad_sq0);
  const WindowHomology wh = window_homology(w, t);
  r.add(pre + "rank_count_matches_representatives", wh.dims == wh.rank_dims, 0,
        "representatives " + wh.dims.str() + ", rank count " + wh.rank_dims.str());
  return r;
}

namespace {

struct Weights {
  Rational q;
  Rational operator()(long e) const { return rational_pow(q, e); }
};

// Evaluates every functional group on v; returns how many are nonzero.
template <class Key, class Weight>
std::size_t nonzero_functionals(const SparseVec& v, Key key, Weight weight) {
  std::map<std::array<int, 3>, Rational> sums;
  for (const auto& [k, x] : v) {
    int comp, a, b;
    decode_key(k, comp, a, b);
    sums[key(a, b)] += x * weight(a, b);
  }
  std::size_t bad = 0;
  for (const auto& [g, s] : sums) bad += sgn(s) != 0;
  return bad;
}

struct ImageTest {
  std::size_t violations = 0;
  int dim_in_box = 0;
};

template <class Key, class Weight>
ImageTest image_test(const std::vector<SparseVec>& images, int n, Key key, Weight weight) {
  ImageTest t;
  SparseEchelon all, outside;
  for (const auto& v : images) {
    t.violations += nonzero_functionals(v, key, weight);
    outside.insert(outside_part(v, n));
    all.insert(v);
  }
  t.dim_in_box = all.rank() - outside.rank();
  return t;
}

}  // namespace

Report image_characterization_check(const Window& w) {
  const KoszulComplex K(w, Twist::twisted);
  const int N = w.N, n = w.inner();
  const int box_size = (2 * n + 1) * (2 * n + 1);
  const Weights qp{w.q};
  Report r;

  std::vector<SparseVec> im1, im2, im0;
  for (const auto& m : box(N)) {
    const Chain d = K.d1(mono(m.first, m.second));
    im1.push_back(to_sparse(d[0]));
    im2.push_back(to_sparse(-d[1]));
    for (int comp = 0; comp < 2; ++comp) im0.push_back(to_sparse(K.d0(unit_chain(comp, m))));
  }

  // δ1: one functional per row l and parity ε of the column index, weights q^{-il}
  const auto t1 = image_test(
      im1, n, [](int a, int b) { return std::array<int, 3>{b, parity(a), 0}; },
      [&](int a, int b) { return qp(-static_cast<long>((a - parity(a)) / 2) * b); });
  r.add("image.delta1.functionals_vanish", t1.violations == 0, t1.violations);
  r.add("image.delta1.dimension", t1.dim_in_box == box_size - 2 * (2 * n + 1), 0,
        std::to_string(t1.dim_in_box) + " vs " + std::to_string(box_size - 2 * (2 * n + 1)));

  // δ2: one functional per column k and parity of the row index, weights q^{-jk}
  const auto t2 = image_test(
      im2, n, [](int a, int b) { return std::array<int, 3>{a, parity(b), 0}; },
      [&](int a, int b) { return qp(-static_cast<long>((b - parity(b)) / 2) * a); });
  r.add("image.delta2.functionals_vanish", t2.violations == 0, t2.violations);
  r.add("image.delta2.dimension", t2.dim_in_box == box_size - 2 * (2 * n + 1), 0,
        std::to_string(t2.dim_in_box) + " vs " + std::to_string(box_size - 2 * (2 * n + 1)));

  // d0: four functionals Ψ_ε, weights q^{-(ε2 i + ε1 j + 2ij)} on (ε1 + 2i, ε2 + 2j)
  auto psi_weight = [&](int a, int b) {
    const long e1 = parity(a), e2 = parity(b), i = (a - e1) / 2, j = (b - e2) / 2;
    return qp(-(e2 * i + e1 * j + 2 * i * j));
  };
  auto psi_key = [](int a, int b) { return std::array<int, 3>{parity(a), parity(b), 0}; };
  const auto t0 = image_test(im0, n, psi_key, psi_weight);
  r.add("image.d0.functionals_vanish", t0.violations == 0, t0.violations);
  r.add("image.d0.dimension", t0.dim_in_box == box_size - 4, 0,
        std::to_string(t0.dim_in_box) + " vs " + std::to_string(box_size - 4));

  std::size_t wrong = 0;
  for (int e = 0; e < 4; ++e) {
    const SparseVec v = to_sparse(mono(e / 2, e % 2));
    std::map<std::array<int, 3>, Rational> sums;
    for (const auto& [k, x] : v) {
      int comp, a, b;
      decode_key(k, comp, a, b);
      sums[psi_key(a, b)] += x * psi_weight(a, b);
    }
    for (int f = 0; f < 4; ++f) {
      const Rational val = sums[{f / 2, f % 2, 0}];
      wrong += val != (f == e ? 1 : 0);
    }
  }
  r.add("image.d0.classes_detected", wrong == 0, wrong, "Psi_e(X^e1 P^e2) = [e = e']");
  return r;
}

namespace {

Dims invariants(const WindowHomology& wh, Report& checks, const std::string& pre) {
  Dims inv;
  for (int k = 0; k < 3; ++k) {
    std::size_t bad = 0;
    for (const auto& M : wh.action[k]) {
      const std::size_t h = M.size();
      DenseMatrix sq(h, std::vector<Rational>(h, Rational(0))), shifted = M;
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
          for (std::size_t l = 0; l < h; ++l) sq[i][j] += M[i][l] * M[l][j];
      for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) bad += sq[i][j] != (i == j ? 1 : 0);
      for (std::size_t i = 0; i < h; ++i) shifted[i][i] -= 1;
      inv[k] += static_cast<int>(h) - rank(shifted);
    }
    checks.add(pre + "H" + std::to_string(k) + ".involution", bad == 0, bad);
  }
  checks.add(pre + "action_on_window", wh.action_defined);
  return inv;
}

}  // namespace

Z2Result z2_combine(const Window& w) {
  Z2Result z;
  const WindowHomology u = window_homology(w, Twist::untwisted);
  const WindowHomology t = window_homology(w, Twist::twisted);
  z.untwisted = u.dims;
  z.twisted = t.dims;
  z.untwisted_invariant = invariants(u, z.checks, "z2.untwisted.");
  z.twisted_invariant = invariants(t, z.checks, "z2.twisted.");
  for (int k = 0; k < 3; ++k) z.combined[k] = z.untwisted_invariant[k] + z.twisted_invariant[k];
  return z;
}

}  // namespace hecke::hochschild
