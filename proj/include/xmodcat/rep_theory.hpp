#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "xmodcat/crossed_module.hpp"

namespace xmodcat {

// An object of M(X): an X2-graded vector space with compatible X1-action.
// P(m) projects onto the m-th graded component, Q is the X1-representation,
// and P(m) Q(g) = Q(g) P(m^g).
struct RepObject {
  XPtr x;
  int dim = 0;
  std::vector<Mat> p;  // indexed by X2 element
  std::vector<Mat> q;  // indexed by X1 element
};
void validate_rep_object(const RepObject& v, double tol = kTol);

struct CharacterX {
  XPtr x;
  Mat values;  // |X2| x |X1|, psi(m, g) = tr(P(m) Q(g))
};

RepObject unit_object(XPtr x);
RepObject tensor_object(const RepObject& v, const RepObject& w);
RepObject dual_object(const RepObject& v);

// R_{V,W} = (sum_m Q_W(dm) (x) P_V(m)) after the flip, as a matrix
// V (x) W -> W (x) V.
Mat braiding(const RepObject& v, const RepObject& w);

CharacterX character_of(const RepObject& v);

// (bilinear, hermitian) forms; both carry the 1/|X1| prefactor.
std::pair<cplx, cplx> char_forms(const CharacterX& a, const CharacterX& b);
CharacterX tensor_character(const CharacterX& a, const CharacterX& b);

// Simple objects of M(X), one per (mu-orbit, irreducible stabilizer
// character), orbits by smallest member.  The tensor unit is always label 0.
struct SimpleTable {
  struct OrbitData {
    std::vector<int> members;      // ascending
    std::vector<int> transversal;  // smallest g with m0^g = members[i]
    SubgroupGroup stab;            // stabilizer of the smallest member
    CharacterTable stab_ct;
    std::vector<std::vector<Mat>> stab_irreps;
  };
  struct Label {
    int orbit = 0;
    int chi = 0;
    int orbit_rep = 0;
  };

  XPtr x;
  std::vector<OrbitData> orbits;
  std::vector<Label> labels;
  std::vector<int> dims;
  std::vector<CharacterX> chars;
  std::vector<cplx> twists;
  int unit_index = 0;

  int size() const { return static_cast<int>(labels.size()); }
};
SimpleTable simple_objects(XPtr x, std::uint64_t seed = kDefaultSeed);

// Explicit matrices for one simple object (the induced model over the
// stabilizer irrep); its character matches the table entry.
RepObject realize_simple(const SimpleTable& t, int p);

std::vector<int> decompose(const CharacterX& chi, const SimpleTable& t);

using FusionTensor = std::vector<std::vector<std::vector<int>>>;
FusionTensor fusion_tensor(const SimpleTable& t);

struct ModularData {
  std::vector<int> dims;
  std::vector<cplx> twists;
  Mat s;  // normalized, S_pq = s_pq / |X|
  FusionTensor fusion;
  std::vector<bool> transparent;
  int unit_index = 0;
  int abs_x = 0;
  int d_factor = 0;  // |K||C|
};
ModularData modular_data(const SimpleTable& t);
std::vector<int> transparent_simples(const ModularData& md);

// max_{p,q,r} | N_pq^r - sum_s S_ps S_qs conj(S_rs) / S_1s |
double verlinde_residual(const ModularData& md);

// The vacuum object V_K = k[K] (x) k(C) with its algebra structure in the
// basis (k, c), k in K, c in C (flat index k*|C| + c):
//   m((k,c) (x) (k',c')) = delta(c,c') (kk', c)
//   eta(1) = sum_c (e, c)
//   eps((k,c)) = delta(k, e) / |C|
//   Delta((k,c)) = |C| sum_{ab=k} (a,c) (x) (b,c)
// Normalized so that eps . eta = 1 and m . Delta = |K||C| id.
struct VacuumAlgebra {
  RepObject object;
  Mat mult;    // dim x dim^2
  Mat unit;    // dim x 1
  Mat counit;  // 1 x dim
  Mat comult;  // dim^2 x dim
  int k_order = 0;
  int c_order = 0;
  int flat(int k, int c) const { return k * c_order + c; }
};
VacuumAlgebra vacuum_object(XPtr x);

struct FrobeniusReport {
  double assoc = 0, unital = 0, commutative = 0, frobenius_left = 0,
         frobenius_right = 0, special = 0, symmetric = 0;
  cplx beta_1, beta_a;
  bool pass(double tol = kTol) const;
  std::string failed_law(double tol = kTol) const;  // empty when all pass
};
FrobeniusReport check_frobenius(const VacuumAlgebra& a, double tol = kTol);

// The functor F from G(X)-representations into M(X):
//   P(m) = (1/|K|) sum_chi chi(m) rho(chi, I)   for m in K, else 0
//   Q(g) = rho(1, Ig)
RepObject functor_f_from_gx(XPtr x, const GroupGX& gx, const std::vector<Mat>& rho);

}  // namespace xmodcat
