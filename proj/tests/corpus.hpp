#pragma once

#include <string>
#include <utility>
#include <vector>

#include "xmodcat/crossed_module.hpp"

namespace xmodcat::corpus {

XPtr trivial_x();
XPtr d_z2();
XPtr d_z3();
XPtr d_z4();
XPtr d_s3();
XPtr x4_double_cover();         // Z/4 -> Z/4 by doubling, trivial action
XPtr trivial_boundary_z2();     // X1 trivial, X2 = Z/2
XPtr trivial_boundary_z2_z2();  // X1 = Z/2 acting trivially, X2 = Z/2
XPtr inv_z3();                  // X1 = Z/2 inverting X2 = Z/3, trivial boundary
XPtr d_d4();                    // double of the dihedral group of order 8

std::vector<std::pair<std::string, XPtr>> all_valid();

// components of the Z/4-with-negation fixture; assembling them violates the
// Peiffer identity at (m, n) = (1, 1)
struct RawParts {
  FiniteGroup x1, x2;
  GroupAction mu;
  GroupHom boundary;
};
RawParts peiffer_violation_parts();

}  // namespace xmodcat::corpus
