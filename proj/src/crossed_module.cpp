#include "xmodcat/crossed_module.hpp"

#include <string>

#include "xmodcat/errors.hpp"

namespace xmodcat {

CrossedModule crossed_module(FiniteGroup x1, FiniteGroup x2, GroupAction mu,
                             GroupHom boundary) {
  if (mu.group.order != x1.order || mu.set_size != x2.order)
    fail_invalid("NotAnAction", "action shape does not match the groups");
  if (!mu.group.same_table(x1))
    fail_invalid("NotAnAction", "acting group differs from x1");
  if (!boundary.source.same_table(x2) || !boundary.target.same_table(x1))
    fail_invalid("NotAHomomorphism", "boundary endpoints differ from x2 -> x1");
  require_action_by_automorphisms(mu, x2);

  for (int m = 0; m < x2.order; ++m)
    for (int g = 0; g < x1.order; ++g) {
      int lhs = boundary.map[mu.perm[g][m]];
      int rhs = x1.mul(x1.inv(g), x1.mul(boundary.map[m], g));
      if (lhs != rhs)
        fail_invalid("EquivarianceViolation",
                     "d(m^g) != g^-1 (dm) g at (m, g) = (" + std::to_string(m) + ", " +
                         std::to_string(g) + ")",
                     {m, g});
    }
  for (int m = 0; m < x2.order; ++m)
    for (int n = 0; n < x2.order; ++n) {
      int lhs = mu.perm[boundary.map[n]][m];
      int rhs = x2.mul(x2.inv(n), x2.mul(m, n));
      if (lhs != rhs)
        fail_invalid("PeifferViolation",
                     "m^{dn} != n^-1 m n at (m, n) = (" + std::to_string(m) + ", " +
                         std::to_string(n) + ")",
                     {m, n});
    }

  CrossedModule x;
  x.x1 = std::move(x1);
  x.x2 = std::move(x2);
  x.mu = std::move(mu);
  x.boundary = std::move(boundary);

  x.sub.k_elements = kernel(x.boundary);
  x.sub.i_elements = image(x.boundary);
  // derived facts: the axioms force K central in X2 and I normal in X1
  for (int k : x.sub.k_elements)
    for (int m = 0; m < x.x2.order; ++m)
      if (x.x2.mul(k, m) != x.x2.mul(m, k))
        fail_invariant("InvariantFailure", "kernel of the boundary is not central in x2",
                       {k, m});
  x.sub.kgrp = subgroup_group(x.x2, x.sub.k_elements);
  x.sub.igrp = subgroup_group(x.x1, x.sub.i_elements);
  x.sub.coker = quotient(x.x1, x.sub.i_elements);  // throws NotNormal if broken
  x.sub.d = static_cast<int>(x.sub.k_elements.size()) * x.sub.coker.group.order;
  x.sub.abs_x = x.x1.order * static_cast<int>(x.sub.k_elements.size());

  int nk = static_cast<int>(x.sub.k_elements.size());
  int ni = static_cast<int>(x.sub.i_elements.size());
  int nc = x.sub.coker.group.order;
  if (nk * ni != x.x2.order || ni * nc != x.x1.order || x.sub.abs_x != x.x2.order * nc)
    fail_invariant("InvariantFailure", "Lagrange bookkeeping failed for K, I, C");
  return x;
}

CrossedModule drinfeld_double(const FiniteGroup& g) {
  GroupAction conj = conjugation_action(g);
  std::vector<int> id_map(g.order);
  for (int i = 0; i < g.order; ++i) id_map[i] = i;
  GroupHom id = make_hom(g, g, std::move(id_map));
  return crossed_module(g, g, std::move(conj), std::move(id));
}

GroupAction coker_action_on_k(const CrossedModule& x) {
  const auto& kgrp = x.sub.kgrp;
  const auto& coker = x.sub.coker;
  int nk = kgrp.group.order;
  std::vector<std::vector<int>> perm(coker.group.order, std::vector<int>(nk, -1));
  for (int c = 0; c < coker.group.order; ++c) {
    for (int ki = 0; ki < nk; ++ki) {
      int k = kgrp.elements[ki];
      int result = -1;
      for (int g : coker.cosets[c]) {
        int kg = x.act(k, g);
        int kgi = kgrp.index_in_sub[kg];
        if (kgi < 0)
          fail_invariant("IllDefined", "action does not preserve the kernel", {k, g});
        if (result < 0)
          result = kgi;
        else if (result != kgi)
          fail_invariant("IllDefined",
                         "coset representatives disagree on the kernel at (k, coset) = (" +
                             std::to_string(k) + ", " + std::to_string(c) + ")",
                         {k, c});
      }
      perm[c][ki] = result;
    }
  }
  GroupAction act = make_action(coker.group, nk, std::move(perm));
  require_action_by_automorphisms(act, kgrp.group);
  return act;
}

GroupGX group_gx(const CrossedModule& x, std::uint64_t seed) {
  GroupGX gx;
  gx.kdual = dual_group(x.sub.kgrp.group, seed);
  gx.c_order = x.sub.coker.group.order;
  GroupAction hat = coker_action_on_k(x);

  // dual action chi^c(k) = chi(k^{c^{-1}}) as a permutation of the characters
  int nk = gx.kdual.group.order;
  std::vector<std::vector<int>> perm(gx.c_order, std::vector<int>(nk, -1));
  for (int c = 0; c < gx.c_order; ++c) {
    int cinv = x.sub.coker.group.inv(c);
    for (int chi = 0; chi < nk; ++chi) {
      int found = -1;
      for (int cand = 0; cand < nk; ++cand) {
        double dev = 0.0;
        for (int k = 0; k < nk; ++k)
          dev = std::max(dev, std::abs(gx.kdual.pairing(chi, hat.perm[cinv][k]) -
                                       gx.kdual.pairing(cand, k)));
        if (dev <= kTol) {
          found = cand;
          break;
        }
      }
      if (found < 0)
        fail_invariant("InvariantFailure", "dual action image matches no character");
      perm[c][chi] = found;
    }
  }
  GroupAction dual_act = make_action(x.sub.coker.group, nk, std::move(perm));
  require_action_by_automorphisms(dual_act, gx.kdual.group);
  gx.group = semidirect_product(gx.kdual.group, x.sub.coker.group, dual_act);
  if (gx.group.order != x.sub.d)
    fail_invariant("InvariantFailure", "|G(X)| != |K||C|");
  return gx;
}

XBarResult quotient_xbar(const CrossedModule& x) {
  Quotient q2 = quotient(x.x2, x.sub.k_elements);
  const SubgroupGroup& igrp = x.sub.igrp;
  int nq = q2.group.order;
  int ni = igrp.group.order;

  // induced action of I on X2/K, checked across all coset representatives
  std::vector<std::vector<int>> perm(ni, std::vector<int>(nq, -1));
  for (int h = 0; h < ni; ++h) {
    int g = igrp.elements[h];
    for (int c = 0; c < nq; ++c) {
      int result = -1;
      for (int m : q2.cosets[c]) {
        int img = q2.projection.map[x.act(m, g)];
        if (result < 0)
          result = img;
        else if (result != img)
          fail_invariant("InvariantFailure", "induced action on X2/K is ill-defined",
                         {m, g});
      }
      perm[h][c] = result;
    }
  }
  // induced boundary: constant on cosets because K = ker d
  std::vector<int> bmap(nq, -1);
  for (int c = 0; c < nq; ++c) {
    int result = -1;
    for (int m : q2.cosets[c]) {
      int im = igrp.index_in_sub[x.bd(m)];
      if (im < 0)
        fail_invariant("InvariantFailure", "boundary image escapes I");
      if (result < 0)
        result = im;
      else if (result != im)
        fail_invariant("InvariantFailure", "induced boundary on X2/K is ill-defined", {m});
    }
    bmap[c] = result;
  }
  {
    std::vector<char> hit(ni, 0);
    for (int c = 0; c < nq; ++c) hit[bmap[c]] = 1;
    bool bij = (nq == ni);
    for (char h : hit) bij = bij && h;
    if (!bij) fail_invariant("InvariantFailure", "boundary of Xbar is not a bijection");
  }

  XBarResult r;
  r.xbar = crossed_module(igrp.group, q2.group,
                          make_action(igrp.group, nq, std::move(perm)),
                          make_hom(q2.group, igrp.group, std::move(bmap)));
  r.proj_x2 = q2.projection.map;
  r.incl_x1 = igrp.elements;
  return r;
}

CrossedModule restricted_xprime(const CrossedModule& x) {
  const SubgroupGroup& igrp = x.sub.igrp;
  int ni = igrp.group.order;
  std::vector<std::vector<int>> perm(ni);
  for (int h = 0; h < ni; ++h) perm[h] = x.mu.perm[igrp.elements[h]];
  std::vector<int> bmap(x.x2.order);
  for (int m = 0; m < x.x2.order; ++m) {
    bmap[m] = igrp.index_in_sub[x.bd(m)];
    if (bmap[m] < 0) fail_invariant("InvariantFailure", "boundary image escapes I");
  }
  CrossedModule xp = crossed_module(igrp.group, x.x2,
                                    make_action(igrp.group, x.x2.order, std::move(perm)),
                                    make_hom(x.x2, igrp.group, std::move(bmap)));
  if (static_cast<int>(xp.sub.i_elements.size()) != ni)
    fail_invariant("InvariantFailure", "restricted boundary is not surjective");
  return xp;
}

}  // namespace xmodcat
