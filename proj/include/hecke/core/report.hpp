#pragma once
// Pass/fail records produced by the verification suites.
#include <cstddef>
#include <string>
#include <vector>

namespace hecke {

struct Check {
  std::string name;
  bool pass = false;
  std::size_t residue_support = 0;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool pass, std::size_t residue_support = 0, std::string note = {}) {
    checks.push_back({std::move(name), pass, residue_support, std::move(note)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

}  // namespace hecke
