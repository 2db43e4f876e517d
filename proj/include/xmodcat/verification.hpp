#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xmodcat/modularization.hpp"

namespace xmodcat {

// Everything the invariant suite and the reports need for one crossed module.
struct CategoryBundle {
  XPtr x;
  SimpleTable table;
  ModularData md;
  VacuumAlgebra vac;
  GroupGX gx;
};
CategoryBundle build_bundle(XPtr x, std::uint64_t seed = kDefaultSeed);

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0;
  std::string detail;
};

struct VerificationSuite {
  std::vector<CheckResult> checks;
  bool all_pass = true;
  bool modular = false;  // |det S| > 1e-6, equivalently the boundary is bijective
};

// The full per-category invariant suite: character orthogonality, the
// Burnside sum, the twist law, S-matrix laws, the three-way transparency
// concordance (including the matrix double-braiding test), vacuum structure
// and Frobenius laws, the G(X) realization, and the modularization legs.
VerificationSuite run_invariant_suite(const CategoryBundle& b,
                                      std::uint64_t seed = kDefaultSeed,
                                      double tol = kTol);

}  // namespace xmodcat
