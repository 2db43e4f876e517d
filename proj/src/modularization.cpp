#include "xmodcat/modularization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "xmodcat/errors.hpp"

namespace xmodcat {

void validate_vac_module(const VacModule& m, double tol) {
  const VacuumAlgebra& a = *m.algebra;
  if (a.object.x.get() != m.underlying.x.get())
    fail_invariant("InvariantFailure", "module and algebra live over different crossed modules");
  validate_rep_object(m.underlying, tol);
  int da = a.object.dim, dv = m.underlying.dim;
  if (m.rho.rows() != dv || m.rho.cols() != da * dv)
    fail_invariant("InvariantFailure", "module action has wrong shape");
  Mat idv = Mat::Identity(dv, dv);
  Mat ida = Mat::Identity(da, da);
  if (!approx_equal(apply_kron(m.rho, a.mult, idv), apply_kron(m.rho, ida, m.rho), tol))
    fail_invariant("InvariantFailure", "module action is not associative");
  if (!approx_equal(apply_kron(m.rho, a.unit, idv), idv, tol))
    fail_invariant("InvariantFailure", "module action is not unital");
  // rho must be a morphism from A (x) V; the tensor structure maps are
  // applied factorwise rather than materialized
  const CrossedModule& x = *m.underlying.x;
  for (int m2 = 0; m2 < x.x2.order; ++m2) {
    Mat lhs = Mat::Zero(dv, da * dv);
    for (int n = 0; n < x.x2.order; ++n)
      lhs += apply_kron(m.rho, a.object.p[n],
                        m.underlying.p[x.x2.mul(x.x2.inv(n), m2)]);
    if (!approx_equal(lhs, m.underlying.p[m2] * m.rho, tol))
      fail_invariant("InvariantFailure", "module action does not preserve the grading", {m2});
  }
  for (int g = 0; g < x.x1.order; ++g)
    if (!approx_equal(apply_kron(m.rho, a.object.q[g], m.underlying.q[g]),
                      m.underlying.q[g] * m.rho, tol))
      fail_invariant("InvariantFailure", "module action does not intertwine the action", {g});
  Mat r_av = braiding(a.object, m.underlying);
  Mat r_va = braiding(m.underlying, a.object);
  if (!approx_equal(Mat((m.rho * r_va) * r_av), m.rho, tol))
    fail_invariant("InvariantFailure", "module is not local");
}

ModularizationContext make_modularization_context(XPtr x) {
  ModularizationContext ctx;
  ctx.x = x;
  ctx.vac = std::make_shared<const VacuumAlgebra>(vacuum_object(x));
  ctx.xprime = make_xptr(restricted_xprime(*x));
  ctx.vac_prime = std::make_shared<const VacuumAlgebra>(vacuum_object(ctx.xprime));
  XBarResult xb = quotient_xbar(*x);
  ctx.xbar = make_xptr(std::move(xb.xbar));
  ctx.proj_x2 = std::move(xb.proj_x2);
  ctx.incl_x1 = std::move(xb.incl_x1);
  ctx.x2k_cosets.assign(ctx.xbar->x2.order, {});
  for (int m = 0; m < x->x2.order; ++m) ctx.x2k_cosets[ctx.proj_x2[m]].push_back(m);

  // the vacuum of X' is k[K] on the same kernel, in the same element order
  if (ctx.vac_prime->c_order != 1 ||
      ctx.xprime->sub.k_elements != x->sub.k_elements)
    fail_invariant("InvariantFailure", "vacuum of X' is not k[K] in matching order");
  return ctx;
}

VacModule induce(const ModularizationContext& ctx, const RepObject& v) {
  if (v.x.get() != ctx.x.get())
    fail_invariant("InvariantFailure", "object to induce lives over the wrong crossed module");
  VacModule m;
  m.underlying = tensor_object(ctx.vac->object, v);
  m.algebra = ctx.vac;
  m.rho = kron(ctx.vac->mult, Mat::Identity(v.dim, v.dim));
  validate_vac_module(m);
  return m;
}

namespace {

// project * t * include, requiring that t maps the image into itself.
Mat restrict_preserving(const SubspaceRealization& sub, const Mat& pi, const Mat& t,
                        const char* what) {
  Mat ti = t * sub.include;
  if (!approx_equal(pi * ti, ti, 1e-7 * std::max(1.0, max_abs(ti))))
    fail_invariant("InvariantFailure",
                   std::string(what) + " does not preserve the restricted subspace");
  return sub.project * ti;
}

}  // namespace

VacModule functor_f_restrict(const ModularizationContext& ctx, const VacModule& m) {
  if (m.algebra.get() != ctx.vac.get())
    fail_invariant("InvariantFailure", "input module is not over the vacuum of X");
  const CrossedModule& x = *ctx.x;
  int dv = m.underlying.dim;
  int da = ctx.vac->object.dim;
  int nc = ctx.vac->c_order;
  int nk = ctx.vac->k_order;

  // idempotent: action by the basis vector (e, I) of the vacuum, flat index 0
  Mat e0 = Mat::Zero(da, 1);
  e0(0, 0) = 1.0;
  Mat pi = m.rho * kron(e0, Mat::Identity(dv, dv));
  SubspaceRealization sub = image_of_idempotent(pi, kTol);
  if (sub.rank * nc != dv)
    fail_invariant("ProjectorRankMismatch",
                   "identity-coset component has rank " + std::to_string(sub.rank) +
                       ", expected dim/|C| = " + std::to_string(dv / nc));

  RepObject u;
  u.x = ctx.xprime;
  u.dim = sub.rank;
  u.p.reserve(x.x2.order);
  for (int m2 = 0; m2 < x.x2.order; ++m2)
    u.p.push_back(restrict_preserving(sub, pi, m.underlying.p[m2], "grading projector"));
  u.q.reserve(ctx.xprime->x1.order);
  for (int h = 0; h < ctx.xprime->x1.order; ++h)
    u.q.push_back(
        restrict_preserving(sub, pi, m.underlying.q[ctx.incl_x1[h]], "restricted action"));
  validate_rep_object(u);

  Mat embed = Mat::Zero(da, nk);
  for (int k = 0; k < nk; ++k) embed(ctx.vac->flat(k, 0), k) = 1.0;
  VacModule out;
  out.underlying = std::move(u);
  out.algebra = ctx.vac_prime;
  out.rho = sub.project * m.rho * kron(embed, sub.include);
  validate_vac_module(out);
  return out;
}

RepObject functor_fprime_coinv(const ModularizationContext& ctx, const VacModule& w) {
  if (w.algebra.get() != ctx.vac_prime.get())
    fail_invariant("InvariantFailure", "input module is not over the vacuum of X'");
  const CrossedModule& xb = *ctx.xbar;
  int dw = w.underlying.dim;
  int nk = ctx.vac_prime->object.dim;

  Mat pi = Mat::Zero(dw, dw);
  for (int k = 0; k < nk; ++k) {
    Mat ek = Mat::Zero(nk, 1);
    ek(k, 0) = 1.0;
    pi += w.rho * kron(ek, Mat::Identity(dw, dw));
  }
  pi /= static_cast<double>(nk);
  SubspaceRealization sub = image_of_idempotent(pi, kTol);
  if (sub.rank * nk != dw)
    fail_invariant("IllDefinedQuotient",
                   "coinvariants have rank " + std::to_string(sub.rank) +
                       ", expected dim/|K| = " + std::to_string(dw / nk));

  RepObject out;
  out.x = ctx.xbar;
  out.dim = sub.rank;
  // The grading component of W_K over a coset Km is the image of the
  // K-invariant projector sum_{m' in Km} P(m'); each single-representative
  // term q P(m') i is the same, which is the well-definedness statement.
  out.p.assign(xb.x2.order, Mat());
  for (int c = 0; c < xb.x2.order; ++c) {
    Mat first;
    Mat total = Mat::Zero(sub.rank, sub.rank);
    bool have_first = false;
    for (int m : ctx.x2k_cosets[c]) {
      Mat cand = sub.project * w.underlying.p[m] * sub.include;
      if (!have_first) {
        first = cand;
        have_first = true;
      } else if (!approx_equal(cand, first, kTol)) {
        fail_invariant("IllDefinedQuotient",
                       "coset representatives induce different projectors on the "
                       "coinvariants",
                       {c, m});
      }
      total += cand;
    }
    out.p[c] = std::move(total);
  }
  out.q.reserve(xb.x1.order);
  for (int h = 0; h < xb.x1.order; ++h)
    out.q.push_back(sub.project * w.underlying.q[h] * sub.include);
  validate_rep_object(out);
  return out;
}

RepObject modularize_object(const ModularizationContext& ctx, const RepObject& v) {
  RepObject out = functor_fprime_coinv(ctx, functor_f_restrict(ctx, induce(ctx, v)));
  if (out.dim != v.dim)
    fail_invariant("InvariantFailure", "modularization did not preserve the dimension");
  return out;
}

VacModule tensor_over_algebra(const VacModule& m, const VacModule& n) {
  if (m.algebra.get() != n.algebra.get())
    fail_invariant("InvariantFailure", "modules are over different algebras");
  const VacuumAlgebra& a = *m.algebra;
  int dm = m.underlying.dim, dn = n.underlying.dim, da = a.object.dim;

  Mat r_ma = braiding(m.underlying, a.object);  // M (x) A -> A (x) M
  Mat left = kron(Mat(m.rho * r_ma), Mat::Identity(dn, dn));
  Mat right = kron(Mat::Identity(dm, dm), n.rho);
  Mat phi = left - right;  // M (x) A (x) N -> M (x) N
  QuotientRealization q = quotient_by_span(phi, dm * dn, kTol);

  RepObject mn = tensor_object(m.underlying, n.underlying);
  const CrossedModule& x = *m.underlying.x;
  RepObject u;
  u.x = m.underlying.x;
  u.dim = static_cast<int>(q.section.cols());
  u.p.reserve(x.x2.order);
  for (int m2 = 0; m2 < x.x2.order; ++m2)
    u.p.push_back(induced_on_quotient(q, mn.p[m2], kTol));
  u.q.reserve(x.x1.order);
  for (int g = 0; g < x.x1.order; ++g) u.q.push_back(induced_on_quotient(q, mn.q[g], kTol));
  validate_rep_object(u);

  Mat rho_mn = kron(m.rho, Mat::Identity(dn, dn));  // A (x) M (x) N -> M (x) N
  Mat ida = Mat::Identity(da, da);
  if (q.sub_basis.cols() > 0 &&
      !approx_zero(q.coords * (rho_mn * kron(ida, q.sub_basis)), 1e-7))
    fail_invariant("InvariantFailure",
                   "algebra action does not descend to the tensor product over A");
  VacModule out;
  out.underlying = std::move(u);
  out.algebra = m.algebra;
  out.rho = q.coords * rho_mn * kron(ida, q.section);
  validate_vac_module(out);
  return out;
}

MatchReport match_modular_data(const ModularData& a, const ModularData& b, double tol) {
  MatchReport rep;
  int n = static_cast<int>(a.dims.size());
  if (static_cast<int>(b.dims.size()) != n) return rep;

  // a matching permutation must also map S-rows to S-rows up to reordering,
  // so candidates are pre-filtered by the sorted row values
  auto sorted_row = [n](const Mat& s, int i) {
    std::vector<cplx> row(n);
    for (int j = 0; j < n; ++j) row[j] = s(i, j);
    std::sort(row.begin(), row.end(),
              [](cplx x, cplx y) { return compare_complex(x, y) < 0; });
    return row;
  };
  std::vector<std::vector<cplx>> rows_a(n), rows_b(n);
  for (int i = 0; i < n; ++i) {
    rows_a[i] = sorted_row(a.s, i);
    rows_b[i] = sorted_row(b.s, i);
  }
  auto rows_close = [&](int i, int j) {
    for (int k = 0; k < n; ++k)
      if (std::abs(rows_a[i][k] - rows_b[j][k]) > tol) return false;
    return true;
  };
  std::vector<std::vector<int>> cand(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.dims[i] != b.dims[j]) continue;
      if (std::abs(a.twists[i] - b.twists[j]) > tol) continue;
      if ((i == a.unit_index) != (j == b.unit_index)) continue;
      if (!rows_close(i, j)) continue;
      cand[i].push_back(j);
    }
    if (cand[i].empty()) return rep;
  }

  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> search = [&](int i) -> bool {
    if (i == n) {
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            if (a.fusion[p][q][r] != b.fusion[perm[p]][perm[q]][perm[r]]) return false;
      return true;
    }
    for (int j : cand[i]) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        if (std::abs(a.s(i, k) - b.s(j, perm[k])) > tol) ok = false;
      if (std::abs(a.s(i, i) - b.s(j, j)) > tol) ok = false;
      if (!ok) continue;
      perm[i] = j;
      used[j] = 1;
      if (search(i + 1)) return true;
      perm[i] = -1;
      used[j] = 0;
    }
    return false;
  };
  if (!search(0)) return rep;

  rep.found = true;
  rep.perm = perm;
  for (int i = 0; i < n; ++i) {
    rep.resid_twists = std::max(rep.resid_twists, std::abs(a.twists[i] - b.twists[perm[i]]));
    for (int j = 0; j < n; ++j)
      rep.resid_s = std::max(rep.resid_s, std::abs(a.s(i, j) - b.s(perm[i], perm[j])));
  }
  return rep;
}

ModularizationReport verify_modularization(XPtr x, std::uint64_t seed, double tol) {
  ModularizationContext ctx = make_modularization_context(x);
  SimpleTable tbar = simple_objects(ctx.xbar, seed);
  ModularData mbar = modular_data(tbar);

  ModularizationReport rep;
  rep.det_s_abs = std::abs(mbar.s.determinant());
  rep.n_transparent = static_cast<int>(transparent_simples(mbar).size());
  rep.xbar_modular = rep.det_s_abs > 1e-6 && rep.n_transparent == 1;

  FiniteGroup im = ctx.xbar->x1;
  SimpleTable tdd = simple_objects(make_xptr(drinfeld_double(im)), seed);
  ModularData mdd = modular_data(tdd);
  rep.match = match_modular_data(mbar, mdd, tol);

  rep.verlinde = verlinde_residual(mbar);

  rep.n_simples = tbar.size();
  for (int d : tbar.dims) rep.sum_d2 += static_cast<long long>(d) * d;
  rep.image_order = im.order;
  rep.counts_ok = rep.sum_d2 == rep.image_order * rep.image_order;
  return rep;
}

}  // namespace xmodcat
