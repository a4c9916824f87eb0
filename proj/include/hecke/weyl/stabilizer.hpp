#pragma once
// Reflection subsystem of W(D4) fixing a torus point, and the singular strata it cuts out.
#include <string>
#include <vector>

#include "hecke/weyl/weyl.hpp"

namespace hecke::weyl {

/// Positive root ε_i - ε_j (plus = false) or ε_i + ε_j (plus = true), i < j, 0-based.
struct Root {
  int i, j;
  bool plus;
  friend bool operator==(const Root&, const Root&) = default;
  std::string str() const;
};

/// The 12 positive roots.
const std::vector<Root>& positive_roots();

/// s_i = s_j for ε_i - ε_j; s_i s_j = 1 for ε_i + ε_j.
bool fixes(const Root& r, const TorusPointS& s);

enum class AdeType { A1, A2, A3, D4 };
std::string ade_name(AdeType t);
int milnor_of(AdeType t);

struct Component {
  AdeType type;
  std::vector<Root> roots;
};

/// Irreducible components of the fixing subsystem, ordered by first root.
std::vector<Component> stabilizer_subsystem(const TorusPointS& s);

struct Prediction {
  std::vector<Component> components;
  std::string stratum;  // deepest stratum: smooth, Sigma^{±1}_{ij}, Sigma'_2, ..., Sigma'''_4
  int total_milnor = 0;
};

Prediction classify(const TorusPointS& s);

}  // namespace hecke::weyl
