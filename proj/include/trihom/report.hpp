#pragma once

#include <string>
#include <variant>
#include <vector>

#include "trihom/scalar.hpp"

namespace trihom {

/// One named residual check. Exact checks carry a rational magnitude and
/// pass iff it is exactly zero; numeric entries (solver diagnostics)
/// carry a double and an explicit pass flag.
struct Check {
  std::string name;
  std::variant<Rat, double> residual;
  bool pass = false;

  bool exact() const { return std::holds_alternative<Rat>(residual); }
};

struct Report {
  std::vector<Check> checks;

  void add_exact(std::string name, Rat residual) {
    bool pass = sgn(residual) == 0;
    checks.push_back({std::move(name), std::move(residual), pass});
  }
  void add_numeric(std::string name, double residual, bool pass) {
    checks.push_back({std::move(name), residual, pass});
  }
  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool overall() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace trihom
