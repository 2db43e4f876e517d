#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "xmodcat/linalg.hpp"

namespace xmodcat {

// A finite group as an explicit multiplication table.  Index 0 is always the
// identity, also in every group constructed from another one (quotients,
// duals, semidirect products), so file formats carry no extra conventions.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[i][j] = i * j
  std::vector<int> inverse;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  bool same_table(const FiniteGroup& o) const { return table == o.table; }
};

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table);

FiniteGroup cyclic_group(int n);
FiniteGroup trivial_group();
// Permutations of {0,1,2} in lexicographic one-line order; product is
// composition (p*q)(x) = p(q(x)).
FiniteGroup symmetric_group_s3();

struct GroupHom {
  FiniteGroup source, target;
  std::vector<int> map;  // map[x] in target indices
};
GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map);

// A right action, perm[g][m] = m^g.
struct GroupAction {
  FiniteGroup group;
  int set_size = 0;
  std::vector<std::vector<int>> perm;
  int act(int m, int g) const { return perm[g][m]; }
};
GroupAction make_action(FiniteGroup group, int set_size,
                        std::vector<std::vector<int>> perm);
GroupAction trivial_action(FiniteGroup group, int set_size);
// m^g = g^{-1} m g.
GroupAction conjugation_action(const FiniteGroup& g);
// Throws NotAutomorphism unless every perm[g] is an automorphism of set_group.
void require_action_by_automorphisms(const GroupAction& act,
                                     const FiniteGroup& set_group);

struct ConjClasses {
  std::vector<std::vector<int>> classes;  // sorted by (size, smallest member)
  std::vector<int> reps;                  // smallest member of each class
  std::vector<int> class_of;
};
ConjClasses conjugacy_classes(const FiniteGroup& g);

std::vector<int> kernel(const GroupHom& h);
std::vector<int> image(const GroupHom& h);

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<std::vector<int>> cosets;  // each sorted; identity coset first
};
Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal_subgroup);

// A subgroup re-indexed as a group of its own; elements are listed in
// ascending parent order, which puts the identity at index 0.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<int> elements;
  std::vector<int> index_in_sub;  // parent index -> subgroup index, -1 outside
};
SubgroupGroup subgroup_group(const FiniteGroup& g, const std::vector<int>& elements);

struct CharacterTable {
  FiniteGroup group;
  ConjClasses classes;
  Mat chars;                 // r x r, chars(i, j) = chi_i on class j
  std::vector<int> degrees;  // row order: by (degree, canonical row values)
  cplx value(int irrep, int element) const {
    return chars(irrep, classes.class_of[element]);
  }
};
// Burnside class-sum method: simultaneous diagonalization of the class
// matrices via a random real linear combination; resamples on eigenvalue
// collision (budget 20), then fails with NumericalDegeneracy.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = kDefaultSeed);

// Character group of a finite abelian group.  Row 0 of the pairing is the
// trivial character, matching identity-at-0 in the dual group.
struct DualGroup {
  FiniteGroup group;
  Mat pairing;  // pairing(i, a) = chi_i(a)
};
DualGroup dual_group(const FiniteGroup& a, std::uint64_t seed = kDefaultSeed);

// Multiplication (n1,h1)(n2,h2) = (n1^{h2} * n2, h1 h2) for the stored right
// action n^h; this is the convention compatible with a right action.  Flat
// index n*|H| + h, so (0,0) = identity sits at index 0.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const GroupAction& act);
inline std::pair<int, int> semidirect_unflatten(int idx, int h_order) {
  return {idx / h_order, idx % h_order};
}

std::vector<std::vector<int>> orbits(const GroupAction& act);  // by smallest member
std::vector<int> stabilizer(const GroupAction& act, int point);

// Unitary matrices for every irreducible representation, in the row order of
// ct.  Extraction: isotypic projection of the regular representation, then a
// random equivariant hermitian operator splits off a single copy.
std::vector<std::vector<Mat>> irrep_matrices(const FiniteGroup& g,
                                             const CharacterTable& ct,
                                             std::uint64_t seed = kDefaultSeed);

std::vector<Mat> regular_representation(const FiniteGroup& g);

std::uint64_t group_hash(const FiniteGroup& g);

}  // namespace xmodcat
