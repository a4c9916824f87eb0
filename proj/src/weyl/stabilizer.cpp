#include "hecke/weyl/stabilizer.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace hecke::weyl {

std::string Root::str() const {
  return "e" + std::to_string(i + 1) + (plus ? "+" : "-") + "e" + std::to_string(j + 1);
}

const std::vector<Root>& positive_roots() {
  static const std::vector<Root> roots = [] {
    std::vector<Root> r;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        r.push_back({i, j, false});
        r.push_back({i, j, true});
      }
    return r;
  }();
  return roots;
}

bool fixes(const Root& r, const TorusPointS& s) {
  return r.plus ? s.s[r.i] * s.s[r.j] == 1 : s.s[r.i] == s.s[r.j];
}

std::string ade_name(AdeType t) {
  switch (t) {
    case AdeType::A1: return "A1";
    case AdeType::A2: return "A2";
    case AdeType::A3: return "A3";
    case AdeType::D4: return "D4";
  }
  throw std::logic_error("unknown type");
}

int milnor_of(AdeType t) {
  switch (t) {
    case AdeType::A1: return 1;
    case AdeType::A2: return 2;
    case AdeType::A3: return 3;
    case AdeType::D4: return 4;
  }
  throw std::logic_error("unknown type");
}

namespace {

std::array<int, 4> vec(const Root& r) {
  std::array<int, 4> v{0, 0, 0, 0};
  v[r.i] = 1;
  v[r.j] = r.plus ? 1 : -1;
  return v;
}

int dot(const Root& a, const Root& b) {
  auto x = vec(a), y = vec(b);
  int d = 0;
  for (int k = 0; k < 4; ++k) d += x[k] * y[k];
  return d;
}

}  // namespace

std::vector<Component> stabilizer_subsystem(const TorusPointS& s) {
  std::vector<Root> fixed;
  for (const auto& r : positive_roots())
    if (fixes(r, s)) fixed.push_back(r);

  const int n = static_cast<int>(fixed.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int a = 0; a < n; ++a) {
    if (comp[a] >= 0) continue;
    std::vector<int> stack{a};
    comp[a] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y)
        if (comp[y] < 0 && dot(fixed[x], fixed[y]) != 0) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
    }
    ++ncomp;
  }

  std::vector<Component> out(ncomp);
  for (int a = 0; a < n; ++a) out[comp[a]].roots.push_back(fixed[a]);
  for (auto& c : out) {
    switch (c.roots.size()) {
      case 1: c.type = AdeType::A1; break;
      case 3: c.type = AdeType::A2; break;
      case 6: c.type = AdeType::A3; break;
      case 12: c.type = AdeType::D4; break;
      default: throw std::logic_error("unexpected root subsystem of size " + std::to_string(c.roots.size()));
    }
  }
  return out;
}

Prediction classify(const TorusPointS& s) {
  Prediction p;
  p.components = stabilizer_subsystem(s);
  int a1 = 0;
  for (const auto& c : p.components) {
    p.total_milnor += milnor_of(c.type);
    a1 += c.type == AdeType::A1;
  }
  const std::size_t nc = p.components.size();
  if (nc == 0) {
    p.stratum = "smooth";
  } else if (nc == 1 && a1 == 1) {
    const Root& r = p.components[0].roots[0];
    p.stratum = std::string("Sigma^") + (r.plus ? "-1" : "1") + "_{" + std::to_string(r.i + 1) +
                std::to_string(r.j + 1) + "}";
  } else if (nc == static_cast<std::size_t>(a1)) {
    static const char* labels[] = {"", "", "Sigma'_{1,1}", "Sigma''_{1,1,1}", "Sigma'''_{1,1,1,1}"};
    p.stratum = a1 <= 4 ? labels[a1] : "other";
  } else if (nc == 1) {
    switch (p.components[0].type) {
      case AdeType::A2: p.stratum = "Sigma'_2"; break;
      case AdeType::A3: p.stratum = "Sigma''_3"; break;
      case AdeType::D4: p.stratum = "Sigma'''_4"; break;
      default: p.stratum = "other";
    }
  } else {
    p.stratum = "other";
  }
  return p;
}

}  // namespace hecke::weyl
