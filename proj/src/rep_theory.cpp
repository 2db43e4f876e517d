#include "xmodcat/rep_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xmodcat/errors.hpp"

namespace xmodcat {

namespace {

void require_same_x(const XPtr& a, const XPtr& b) {
  if (a.get() != b.get())
    fail_invariant("InvariantFailure", "objects live over different crossed modules");
}

}  // namespace

void validate_rep_object(const RepObject& v, double tol) {
  const CrossedModule& x = *v.x;
  if (static_cast<int>(v.p.size()) != x.x2.order ||
      static_cast<int>(v.q.size()) != x.x1.order)
    fail_invariant("InvariantFailure", "rep object has wrong index sets");
  Mat sum = Mat::Zero(v.dim, v.dim);
  for (int m = 0; m < x.x2.order; ++m) {
    if (v.p[m].rows() != v.dim || v.p[m].cols() != v.dim)
      fail_invariant("InvariantFailure", "projector has wrong shape");
    sum += v.p[m];
  }
  if (!approx_equal(sum, Mat::Identity(v.dim, v.dim), tol))
    fail_invariant("InvariantFailure", "grading projectors do not sum to the identity");
  for (int m = 0; m < x.x2.order; ++m)
    for (int n = 0; n < x.x2.order; ++n) {
      Mat prod = v.p[m] * v.p[n];
      if (m == n ? !approx_equal(prod, v.p[m], tol) : !approx_zero(prod, tol))
        fail_invariant("InvariantFailure", "grading projectors are not orthogonal idempotents",
                       {m, n});
    }
  if (!approx_equal(v.q[0], Mat::Identity(v.dim, v.dim), tol))
    fail_invariant("InvariantFailure", "Q(e) is not the identity");
  for (int g = 0; g < x.x1.order; ++g)
    for (int h = 0; h < x.x1.order; ++h)
      if (!approx_equal(v.q[g] * v.q[h], v.q[x.x1.mul(g, h)], tol))
        fail_invariant("InvariantFailure", "Q is not a representation", {g, h});
  for (int m = 0; m < x.x2.order; ++m)
    for (int g = 0; g < x.x1.order; ++g)
      if (!approx_equal(v.p[m] * v.q[g], v.q[g] * v.p[x.act(m, g)], tol))
        fail_invariant("InvariantFailure", "P(m) Q(g) != Q(g) P(m^g)", {m, g});
}

RepObject unit_object(XPtr x) {
  RepObject v;
  v.x = std::move(x);
  v.dim = 1;
  v.p.assign(v.x->x2.order, Mat::Zero(1, 1));
  v.p[0] = Mat::Identity(1, 1);
  v.q.assign(v.x->x1.order, Mat::Identity(1, 1));
  return v;
}

RepObject tensor_object(const RepObject& v, const RepObject& w) {
  require_same_x(v.x, w.x);
  const CrossedModule& x = *v.x;
  RepObject t;
  t.x = v.x;
  t.dim = v.dim * w.dim;
  t.p.assign(x.x2.order, Mat::Zero(t.dim, t.dim));
  for (int n = 0; n < x.x2.order; ++n)
    for (int l = 0; l < x.x2.order; ++l) t.p[x.x2.mul(n, l)] += kron(v.p[n], w.p[l]);
  t.q.reserve(x.x1.order);
  for (int g = 0; g < x.x1.order; ++g) t.q.push_back(kron(v.q[g], w.q[g]));
  return t;
}

RepObject dual_object(const RepObject& v) {
  const CrossedModule& x = *v.x;
  RepObject d;
  d.x = v.x;
  d.dim = v.dim;
  d.p.reserve(x.x2.order);
  d.q.reserve(x.x1.order);
  for (int m = 0; m < x.x2.order; ++m) d.p.push_back(v.p[x.x2.inv(m)].transpose());
  for (int g = 0; g < x.x1.order; ++g) d.q.push_back(v.q[x.x1.inv(g)].transpose());
  validate_rep_object(d);
  return d;
}

Mat braiding(const RepObject& v, const RepObject& w) {
  require_same_x(v.x, w.x);
  const CrossedModule& x = *v.x;
  Mat r = Mat::Zero(w.dim * v.dim, w.dim * v.dim);
  for (int m = 0; m < x.x2.order; ++m) r += kron(w.q[x.bd(m)], v.p[m]);
  // compose with the flip V (x) W -> W (x) V, applied as a column permutation
  Mat out(w.dim * v.dim, v.dim * w.dim);
  for (int i = 0; i < v.dim; ++i)
    for (int j = 0; j < w.dim; ++j) out.col(i * w.dim + j) = r.col(j * v.dim + i);
  return out;
}

CharacterX character_of(const RepObject& v) {
  const CrossedModule& x = *v.x;
  CharacterX chi;
  chi.x = v.x;
  chi.values = Mat::Zero(x.x2.order, x.x1.order);
  for (int m = 0; m < x.x2.order; ++m)
    for (int g = 0; g < x.x1.order; ++g) chi.values(m, g) = (v.p[m] * v.q[g]).trace();
  return chi;
}

std::pair<cplx, cplx> char_forms(const CharacterX& a, const CharacterX& b) {
  require_same_x(a.x, b.x);
  const CrossedModule& x = *a.x;
  cplx bilinear = 0.0, hermitian = 0.0;
  for (int m = 0; m < x.x2.order; ++m)
    for (int g = 0; g < x.x1.order; ++g) {
      bilinear += a.values(m, x.x1.inv(g)) * b.values(m, g);
      hermitian += std::conj(a.values(m, g)) * b.values(m, g);
    }
  double n = x.x1.order;
  return {bilinear / n, hermitian / n};
}

CharacterX tensor_character(const CharacterX& a, const CharacterX& b) {
  require_same_x(a.x, b.x);
  const CrossedModule& x = *a.x;
  CharacterX t;
  t.x = a.x;
  t.values = Mat::Zero(x.x2.order, x.x1.order);
  for (int n = 0; n < x.x2.order; ++n)
    for (int l = 0; l < x.x2.order; ++l) {
      int m = x.x2.mul(n, l);
      for (int g = 0; g < x.x1.order; ++g)
        t.values(m, g) += a.values(n, g) * b.values(l, g);
    }
  return t;
}

SimpleTable simple_objects(XPtr xp, std::uint64_t seed) {
  const CrossedModule& x = *xp;
  SimpleTable t;
  t.x = xp;

  for (const auto& orbit : orbits(x.mu)) {
    SimpleTable::OrbitData od;
    od.members = orbit;
    int m0 = orbit[0];
    od.transversal.reserve(orbit.size());
    for (int m : orbit) {
      int h = -1;
      for (int g = 0; g < x.x1.order; ++g)
        if (x.act(m0, g) == m) {
          h = g;
          break;
        }
      od.transversal.push_back(h);
    }
    od.stab = subgroup_group(x.x1, stabilizer(x.mu, m0));
    od.stab_ct = character_table(od.stab.group, seed);
    od.stab_irreps = irrep_matrices(od.stab.group, od.stab_ct, seed);
    t.orbits.push_back(std::move(od));
  }

  for (int o = 0; o < static_cast<int>(t.orbits.size()); ++o) {
    const auto& od = t.orbits[o];
    int orbit_size = static_cast<int>(od.members.size());
    for (int chi = 0; chi < static_cast<int>(od.stab_ct.degrees.size()); ++chi) {
      SimpleTable::Label lab;
      lab.orbit = o;
      lab.chi = chi;
      lab.orbit_rep = od.members[0];
      int dim = orbit_size * od.stab_ct.degrees[chi];

      CharacterX psi;
      psi.x = xp;
      psi.values = Mat::Zero(x.x2.order, x.x1.order);
      for (int i = 0; i < orbit_size; ++i) {
        int m = od.members[i];
        int h = od.transversal[i];
        for (int g = 0; g < x.x1.order; ++g) {
          int s = x.x1.mul(h, x.x1.mul(g, x.x1.inv(h)));
          int si = od.stab.index_in_sub[s];
          if (si >= 0) psi.values(m, g) = od.stab_ct.value(chi, si);
        }
      }
      cplx twist = 0.0;
      for (int m = 0; m < x.x2.order; ++m) twist += psi.values(m, x.bd(m));
      twist /= static_cast<double>(dim);

      t.labels.push_back(lab);
      t.dims.push_back(dim);
      t.chars.push_back(std::move(psi));
      t.twists.push_back(twist);
    }
  }
  t.unit_index = 0;

  // Classification invariants, checked before the table is released.
  int np = t.size();
  long long sum_d2 = 0;
  for (int d : t.dims) sum_d2 += static_cast<long long>(d) * d;
  if (sum_d2 != static_cast<long long>(x.x1.order) * x.x2.order)
    fail_invariant("InvariantFailure", "sum of squared dimensions != |X1| |X2|");
  for (int m = 0; m < x.x2.order; ++m)
    if (std::abs(t.chars[0].values(m, 0) - (m == 0 ? 1.0 : 0.0)) > kTol)
      fail_invariant("InvariantFailure", "label 0 is not the tensor unit");
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q) {
      auto [bil, herm] = char_forms(t.chars[p], t.chars[q]);
      cplx want = (p == q) ? 1.0 : 0.0;
      if (std::abs(bil - want) > kTol || std::abs(herm - want) > kTol)
        fail_invariant("InvariantFailure", "character Gram matrix is not the identity",
                       {p, q});
    }
  for (int p = 0; p < np; ++p) {
    double s = 0.0;
    for (int m = 0; m < x.x2.order; ++m) {
      cplx v = t.chars[p].values(m, 0);
      if (std::abs(v.imag()) > kTol || v.real() < -kTol || !near_integer(v.real(), 1e-6))
        fail_invariant("InvariantFailure", "character at the identity is not a "
                                           "nonnegative integer vector",
                       {p, m});
      s += v.real();
    }
    if (std::llround(s) != t.dims[p])
      fail_invariant("InvariantFailure", "character at the identity does not sum to dim",
                     {p});
    // twist law: psi(m, g dm) = omega psi(m, g)
    for (int m = 0; m < x.x2.order; ++m)
      for (int g = 0; g < x.x1.order; ++g) {
        cplx lhs = t.chars[p].values(m, x.x1.mul(g, x.bd(m)));
        cplx rhs = t.twists[p] * t.chars[p].values(m, g);
        if (std::abs(lhs - rhs) > kTol)
          fail_invariant("InvariantFailure", "twist eigenvalue law fails", {p, m, g});
      }
  }
  return t;
}

RepObject realize_simple(const SimpleTable& t, int p) {
  const CrossedModule& x = *t.x;
  const auto& lab = t.labels[p];
  const auto& od = t.orbits[lab.orbit];
  const auto& sigma = od.stab_irreps[lab.chi];
  int deg = t.orbits[lab.orbit].stab_ct.degrees[lab.chi];
  int orbit_size = static_cast<int>(od.members.size());
  std::vector<int> pos(x.x2.order, -1);
  for (int i = 0; i < orbit_size; ++i) pos[od.members[i]] = i;

  RepObject v;
  v.x = t.x;
  v.dim = orbit_size * deg;
  v.p.assign(x.x2.order, Mat::Zero(v.dim, v.dim));
  for (int i = 0; i < orbit_size; ++i)
    v.p[od.members[i]].block(i * deg, i * deg, deg, deg) = Mat::Identity(deg, deg);
  v.q.assign(x.x1.order, Mat::Zero(v.dim, v.dim));
  for (int g = 0; g < x.x1.order; ++g) {
    for (int i = 0; i < orbit_size; ++i) {
      int m = od.members[i];
      int j = pos[x.act(m, g)];  // Q(g) maps the m^g block into the m block
      int s = x.x1.mul(od.transversal[i], x.x1.mul(g, x.x1.inv(od.transversal[j])));
      int si = od.stab.index_in_sub[s];
      if (si < 0) fail_invariant("InvariantFailure", "transversal conjugate escapes stabilizer");
      v.q[g].block(i * deg, j * deg, deg, deg) = sigma[si];
    }
  }
  validate_rep_object(v);
  if (!approx_equal(character_of(v).values, t.chars[p].values, kTol))
    fail_invariant("InvariantFailure", "realized simple does not match its character", {p});
  return v;
}

std::vector<int> decompose(const CharacterX& chi, const SimpleTable& t) {
  require_same_x(chi.x, t.x);
  std::vector<int> mult(t.size());
  long long total = 0;
  for (int p = 0; p < t.size(); ++p) {
    cplx h = char_forms(t.chars[p], chi).second;
    if (std::abs(h.imag()) > 1e-6 || h.real() < -1e-6 || !near_integer(h.real(), 1e-6))
      fail_invalid("NonIntegerMultiplicity",
                   "multiplicity of simple " + std::to_string(p) + " is not a nonnegative "
                   "integer: " + std::to_string(h.real()),
                   {p});
    mult[p] = static_cast<int>(std::llround(h.real()));
    total += static_cast<long long>(mult[p]) * t.dims[p];
  }
  long long dim = std::llround(chi.values.col(0).sum().real());
  if (total != dim)
    fail_invariant("InvariantFailure", "multiplicities do not add up to the dimension");
  return mult;
}

FusionTensor fusion_tensor(const SimpleTable& t) {
  int np = t.size();
  FusionTensor n(np, std::vector<std::vector<int>>(np, std::vector<int>(np, 0)));
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q) {
      CharacterX prod = tensor_character(t.chars[p], t.chars[q]);
      for (int r = 0; r < np; ++r) {
        cplx h = char_forms(t.chars[r], prod).second;
        if (std::abs(h.imag()) > 1e-6 || h.real() < -1e-6 || !near_integer(h.real(), 1e-6))
          fail_invalid("NonIntegerMultiplicity",
                       "fusion coefficient is not a nonnegative integer at (" +
                           std::to_string(p) + ", " + std::to_string(q) + ", " +
                           std::to_string(r) + ")",
                       {p, q, r});
        n[p][q][r] = static_cast<int>(std::llround(h.real()));
      }
    }
  // unit row, symmetry and the dimension sum rule
  for (int q = 0; q < np; ++q)
    for (int r = 0; r < np; ++r)
      if (n[t.unit_index][q][r] != (q == r ? 1 : 0))
        fail_invariant("InvariantFailure", "fusion with the unit is not the identity");
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q) {
      long long s = 0;
      for (int r = 0; r < np; ++r) {
        if (n[p][q][r] != n[q][p][r])
          fail_invariant("InvariantFailure", "fusion tensor is not symmetric");
        s += static_cast<long long>(n[p][q][r]) * t.dims[r];
      }
      if (s != static_cast<long long>(t.dims[p]) * t.dims[q])
        fail_invariant("InvariantFailure", "fusion dimension sum rule fails", {p, q});
    }
  return n;
}

ModularData modular_data(const SimpleTable& t) {
  const CrossedModule& x = *t.x;
  int np = t.size();
  ModularData md;
  md.dims = t.dims;
  md.twists = t.twists;
  md.unit_index = t.unit_index;
  md.abs_x = x.sub.abs_x;
  md.d_factor = x.sub.d;
  md.fusion = fusion_tensor(t);

  md.s = Mat::Zero(np, np);
  for (int p = 0; p < np; ++p)
    for (int q = p; q < np; ++q) {
      cplx s = 0.0;
      for (int m = 0; m < x.x2.order; ++m)
        for (int n = 0; n < x.x2.order; ++n)
          s += t.chars[p].values(m, x.bd(n)) * t.chars[q].values(n, x.bd(m));
      s /= static_cast<double>(md.abs_x);
      md.s(p, q) = s;
      md.s(q, p) = s;
    }
  {
    // symmetry of the double sum and the unit row
    Mat direct = Mat::Zero(np, np);
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        cplx s = 0.0;
        for (int m = 0; m < x.x2.order; ++m)
          for (int n = 0; n < x.x2.order; ++n)
            s += t.chars[q].values(m, x.bd(n)) * t.chars[p].values(n, x.bd(m));
        direct(p, q) = s / static_cast<double>(md.abs_x);
      }
    if (!approx_equal(direct, md.s, kTol))
      fail_invariant("InvariantFailure", "S-matrix is not symmetric");
    for (int q = 0; q < np; ++q)
      if (std::abs(md.s(md.unit_index, q) -
                   cplx(static_cast<double>(md.dims[q]) / md.abs_x, 0.0)) > kTol)
        fail_invariant("InvariantFailure", "S_{1q} != d_q / |X|", {q});
  }

  // transparency by row collinearity, cross-checked against mu_p = D [S^2]_{1p}
  md.transparent.assign(np, false);
  for (int p = 0; p < np; ++p) {
    bool coll = true;
    for (int q = 0; q < np && coll; ++q)
      if (std::abs(md.s(p, q) - static_cast<double>(md.dims[p]) * md.s(md.unit_index, q)) >
          kTol)
        coll = false;
    md.transparent[p] = coll;
  }
  Mat s2 = md.s * md.s;
  for (int p = 0; p < np; ++p) {
    cplx mu = static_cast<double>(md.d_factor) * s2(md.unit_index, p);
    bool in_t = std::abs(mu) > 0.5;
    cplx want = in_t ? cplx(static_cast<double>(md.dims[p]), 0.0) : cplx(0.0, 0.0);
    if (in_t != md.transparent[p] || std::abs(mu - want) > 1e-6)
      fail_invariant("CriterionMismatch",
                     "collinearity and vacuum-multiplicity transparency tests disagree at " +
                         std::to_string(p),
                     {p});
  }
  long long sum_t = 0;
  for (int p = 0; p < np; ++p)
    if (md.transparent[p]) {
      sum_t += static_cast<long long>(md.dims[p]) * md.dims[p];
      if (std::abs(md.twists[p] - cplx(1.0, 0.0)) > kTol)
        fail_invariant("InvariantFailure", "transparent simple with nontrivial twist", {p});
    }
  if (sum_t != md.d_factor)
    fail_invariant("InvariantFailure", "sum of d_p^2 over transparent simples != |K||C|");
  return md;
}

std::vector<int> transparent_simples(const ModularData& md) {
  std::vector<int> t;
  for (int p = 0; p < static_cast<int>(md.transparent.size()); ++p)
    if (md.transparent[p]) t.push_back(p);
  return t;
}

double verlinde_residual(const ModularData& md) {
  int np = static_cast<int>(md.dims.size());
  double worst = 0.0;
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < np; ++q)
      for (int r = 0; r < np; ++r) {
        cplx acc = 0.0;
        for (int s = 0; s < np; ++s)
          acc += md.s(p, s) * md.s(q, s) * std::conj(md.s(r, s)) / md.s(md.unit_index, s);
        worst = std::max(worst, std::abs(acc - cplx(md.fusion[p][q][r], 0.0)));
      }
  return worst;
}

VacuumAlgebra vacuum_object(XPtr xp) {
  const CrossedModule& x = *xp;
  const auto& kgrp = x.sub.kgrp;
  const auto& coker = x.sub.coker;
  int nk = kgrp.group.order;
  int nc = coker.group.order;
  int dim = nk * nc;

  VacuumAlgebra a;
  a.k_order = nk;
  a.c_order = nc;
  a.object.x = xp;
  a.object.dim = dim;

  // grading: the basis vector (x, Iy) sits in the component x^{y^{-1}}
  std::vector<int> grade(dim);
  for (int k = 0; k < nk; ++k)
    for (int c = 0; c < nc; ++c) {
      int y = coker.cosets[c][0];
      grade[a.flat(k, c)] = x.act(kgrp.elements[k], x.x1.inv(y));
    }
  a.object.p.assign(x.x2.order, Mat::Zero(dim, dim));
  for (int i = 0; i < dim; ++i) a.object.p[grade[i]](i, i) = 1.0;

  a.object.q.assign(x.x1.order, Mat::Zero(dim, dim));
  for (int g = 0; g < x.x1.order; ++g)
    for (int k = 0; k < nk; ++k)
      for (int c = 0; c < nc; ++c) {
        int gc = coker.projection.map[x.x1.mul(g, coker.cosets[c][0])];
        a.object.q[g](a.flat(k, gc), a.flat(k, c)) = 1.0;
      }
  validate_rep_object(a.object);

  // character must be |C| [m in K][g in I]
  CharacterX chi = character_of(a.object);
  for (int m = 0; m < x.x2.order; ++m)
    for (int g = 0; g < x.x1.order; ++g) {
      double want = (kgrp.index_in_sub[m] >= 0 && x.sub.igrp.index_in_sub[g] >= 0)
                        ? static_cast<double>(nc)
                        : 0.0;
      if (std::abs(chi.values(m, g) - want) > kTol)
        fail_invariant("InvariantFailure", "vacuum character is off at (m, g)", {m, g});
    }

  a.mult = Mat::Zero(dim, dim * dim);
  for (int k1 = 0; k1 < nk; ++k1)
    for (int k2 = 0; k2 < nk; ++k2)
      for (int c = 0; c < nc; ++c)
        a.mult(a.flat(kgrp.group.mul(k1, k2), c),
               a.flat(k1, c) * dim + a.flat(k2, c)) = 1.0;
  a.unit = Mat::Zero(dim, 1);
  for (int c = 0; c < nc; ++c) a.unit(a.flat(0, c), 0) = 1.0;
  a.counit = Mat::Zero(1, dim);
  for (int c = 0; c < nc; ++c) a.counit(0, a.flat(0, c)) = 1.0 / static_cast<double>(nc);
  a.comult = Mat::Zero(dim * dim, dim);
  for (int k = 0; k < nk; ++k)
    for (int c = 0; c < nc; ++c)
      for (int k1 = 0; k1 < nk; ++k1) {
        int k2 = kgrp.group.mul(kgrp.group.inv(k1), k);
        a.comult(a.flat(k1, c) * dim + a.flat(k2, c), a.flat(k, c)) +=
            static_cast<double>(nc);
      }

  // all four structure maps must be morphisms in M(X)
  RepObject aa = tensor_object(a.object, a.object);
  RepObject one = unit_object(xp);
  auto require_morphism = [&](const Mat& f, const RepObject& src, const RepObject& dst,
                              const char* name) {
    for (int m = 0; m < x.x2.order; ++m)
      if (!approx_equal(f * src.p[m], dst.p[m] * f, kTol))
        fail_invariant("InvariantFailure",
                       std::string(name) + " does not preserve the grading", {m});
    for (int g = 0; g < x.x1.order; ++g)
      if (!approx_equal(f * src.q[g], dst.q[g] * f, kTol))
        fail_invariant("InvariantFailure",
                       std::string(name) + " does not intertwine the action", {g});
  };
  require_morphism(a.mult, aa, a.object, "multiplication");
  require_morphism(a.unit, one, a.object, "unit");
  require_morphism(a.counit, a.object, one, "counit");
  require_morphism(a.comult, a.object, aa, "comultiplication");
  return a;
}

bool FrobeniusReport::pass(double tol) const { return failed_law(tol).empty(); }

std::string FrobeniusReport::failed_law(double tol) const {
  if (assoc > tol) return "associativity (residual " + std::to_string(assoc) + ")";
  if (unital > tol) return "unitality (residual " + std::to_string(unital) + ")";
  if (commutative > tol) return "commutativity (residual " + std::to_string(commutative) + ")";
  if (frobenius_left > tol)
    return "frobenius-left (residual " + std::to_string(frobenius_left) + ")";
  if (frobenius_right > tol)
    return "frobenius-right (residual " + std::to_string(frobenius_right) + ")";
  if (special > tol) return "specialness (residual " + std::to_string(special) + ")";
  if (symmetric > tol) return "symmetry (residual " + std::to_string(symmetric) + ")";
  if (std::abs(beta_1) < tol || std::abs(beta_a) < tol) return "specialness (beta is zero)";
  return "";
}

FrobeniusReport check_frobenius(const VacuumAlgebra& a, double tol) {
  (void)tol;
  int d = a.object.dim;
  Mat id = Mat::Identity(d, d);
  FrobeniusReport r;
  r.assoc = max_abs(apply_kron(a.mult, a.mult, id) - apply_kron(a.mult, id, a.mult));
  r.unital = std::max(max_abs(apply_kron(a.mult, a.unit, id) - id),
                      max_abs(apply_kron(a.mult, id, a.unit) - id));
  Mat r_aa = braiding(a.object, a.object);
  r.commutative = max_abs(a.mult * r_aa - a.mult);
  Mat dm = a.comult * a.mult;
  r.frobenius_left = max_abs(dm - kron_apply(a.mult, id, kron(id, a.comult)));
  r.frobenius_right = max_abs(dm - kron_apply(id, a.mult, kron(a.comult, id)));
  r.beta_1 = (a.counit * a.unit)(0, 0);
  Mat md = a.mult * a.comult;
  r.beta_a = md.trace() / static_cast<double>(d);
  r.special = max_abs(md - r.beta_a * id);

  // Phi_1 = [(eps m) (x) id] (id (x) b),  Phi_2 = [id (x) (eps m)] (bt (x) id)
  Mat em = a.counit * a.mult;  // 1 x d^2
  Mat coev(d * d, 1);          // sum_i e_i (x) e^i; bt has the same coordinates
  coev.setZero();
  for (int i = 0; i < d; ++i) coev(i * d + i, 0) = 1.0;
  Mat phi1 = kron_apply(em, id, kron(id, coev));  // d x d
  Mat phi2 = kron_apply(id, em, kron(coev, id));  // d x d
  r.symmetric = max_abs(phi1 - phi2);
  return r;
}

RepObject functor_f_from_gx(XPtr xp, const GroupGX& gx, const std::vector<Mat>& rho) {
  const CrossedModule& x = *xp;
  if (static_cast<int>(rho.size()) != gx.group.order)
    fail_invariant("InvariantFailure", "representation has wrong index set");
  int dim = static_cast<int>(rho[0].rows());
  const auto& kgrp = x.sub.kgrp;
  int nk = kgrp.group.order;

  RepObject v;
  v.x = xp;
  v.dim = dim;
  v.p.assign(x.x2.order, Mat::Zero(dim, dim));
  for (int m = 0; m < x.x2.order; ++m) {
    int k = kgrp.index_in_sub[m];
    if (k < 0) continue;
    Mat acc = Mat::Zero(dim, dim);
    for (int chi = 0; chi < nk; ++chi)
      acc += gx.kdual.pairing(chi, k) * rho[gx.flat(chi, 0)];
    v.p[m] = acc / static_cast<double>(nk);
  }
  v.q.reserve(x.x1.order);
  for (int g = 0; g < x.x1.order; ++g)
    v.q.push_back(rho[gx.flat(0, x.sub.coker.projection.map[g])]);
  validate_rep_object(v);
  return v;
}

}  // namespace xmodcat
