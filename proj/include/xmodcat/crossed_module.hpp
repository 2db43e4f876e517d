#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "xmodcat/group.hpp"

namespace xmodcat {

// Derived subquotients of a crossed module: K = ker d, I = Im d,
// C = coker d = X1/I, with K and I also re-indexed as groups of their own.
struct Subquotients {
  std::vector<int> k_elements;
  std::vector<int> i_elements;
  Quotient coker;
  SubgroupGroup kgrp;
  SubgroupGroup igrp;
  int d = 0;      // |K| |C|
  int abs_x = 0;  // |X1| |K| = |X2| |C|
};

struct CrossedModule {
  FiniteGroup x1;
  FiniteGroup x2;
  GroupAction mu;      // right action of x1 on x2 by automorphisms
  GroupHom boundary;   // x2 -> x1
  Subquotients sub;

  int act(int m, int g) const { return mu.perm[g][m]; }
  int bd(int m) const { return boundary.map[m]; }
};

using XPtr = std::shared_ptr<const CrossedModule>;

// Validates both axioms exhaustively:
//   equivariance  d(m^g) = g^{-1} (dm) g
//   Peiffer       m^{dn} = n^{-1} m n
// and the derived facts (K central in X2, I normal in X1), then computes the
// subquotients.  Witnesses are reported with the first offending pair.
CrossedModule crossed_module(FiniteGroup x1, FiniteGroup x2, GroupAction mu,
                             GroupHom boundary);

inline XPtr make_xptr(CrossedModule x) {
  return std::make_shared<const CrossedModule>(std::move(x));
}

// X1 = X2 = G, boundary the identity, action by conjugation.
CrossedModule drinfeld_double(const FiniteGroup& g);

// The action of C = coker d on K induced by mu; well-definedness across coset
// representatives is verified (IllDefined on disagreement).  Set indices are
// positions in sub.kgrp.
GroupAction coker_action_on_k(const CrossedModule& x);

// G(X) = K* semidirect C via the dual action chi^c(k) = chi(k^{c^{-1}}).
struct GroupGX {
  FiniteGroup group;
  DualGroup kdual;
  int c_order = 0;
  // flat element index -> (character index in kdual, element of C)
  std::pair<int, int> label(int idx) const { return semidirect_unflatten(idx, c_order); }
  int flat(int chi, int c) const { return chi * c_order + c; }
};
GroupGX group_gx(const CrossedModule& x, std::uint64_t seed = kDefaultSeed);

// Xbar = (I, X2/K, induced action, induced boundary); the boundary of the
// result is a verified bijection.
struct XBarResult {
  CrossedModule xbar;
  std::vector<int> proj_x2;  // X2 element -> X2/K coset index
  std::vector<int> incl_x1;  // Igrp index -> X1 element
};
XBarResult quotient_xbar(const CrossedModule& x);

// X' = (I, X2, mu restricted to I, boundary with restricted codomain); its
// boundary is surjective.
CrossedModule restricted_xprime(const CrossedModule& x);

}  // namespace xmodcat
