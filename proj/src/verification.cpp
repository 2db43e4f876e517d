#include "xmodcat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace xmodcat {

CategoryBundle build_bundle(XPtr x, std::uint64_t seed) {
  CategoryBundle b;
  b.x = x;
  b.table = simple_objects(x, seed);
  b.md = modular_data(b.table);
  b.vac = vacuum_object(x);
  b.gx = group_gx(*x, seed);
  return b;
}

namespace {

void add(VerificationSuite& s, const std::string& name, bool pass, double residual,
         const std::string& detail = "") {
  s.checks.push_back({name, pass, residual, detail});
  s.all_pass = s.all_pass && pass;
}

}  // namespace

VerificationSuite run_invariant_suite(const CategoryBundle& b, std::uint64_t seed,
                                      double tol) {
  VerificationSuite suite;
  const CrossedModule& x = *b.x;
  const SimpleTable& t = b.table;
  const ModularData& md = b.md;
  int np = t.size();

  {
    long long nk = static_cast<long long>(x.sub.k_elements.size());
    long long ni = static_cast<long long>(x.sub.i_elements.size());
    long long nc = x.sub.coker.group.order;
    bool ok = nk * ni == x.x2.order && ni * nc == x.x1.order &&
              x.sub.abs_x == static_cast<long long>(x.x2.order) * nc;
    add(suite, "lagrange-bookkeeping", ok, 0.0);
  }
  {
    long long sum = 0;
    for (int d : t.dims) sum += static_cast<long long>(d) * d;
    long long want = static_cast<long long>(x.x1.order) * x.x2.order;
    add(suite, "burnside-sum", sum == want, static_cast<double>(std::llabs(sum - want)),
        "sum d^2 = " + std::to_string(sum));
  }
  {
    double worst_h = 0, worst_b = 0;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        auto [bil, herm] = char_forms(t.chars[p], t.chars[q]);
        cplx want = p == q ? 1.0 : 0.0;
        worst_b = std::max(worst_b, std::abs(bil - want));
        worst_h = std::max(worst_h, std::abs(herm - want));
      }
    add(suite, "gram-hermitian", worst_h < tol, worst_h);
    add(suite, "gram-bilinear", worst_b < tol, worst_b);
  }
  {
    double worst = 0;
    for (int p = 0; p < np; ++p)
      for (int m = 0; m < x.x2.order; ++m)
        for (int g = 0; g < x.x1.order; ++g)
          worst = std::max(worst,
                           std::abs(t.chars[p].values(m, x.x1.mul(g, x.bd(m))) -
                                    t.twists[p] * t.chars[p].values(m, g)));
    add(suite, "twist-law", worst < tol, worst);
  }
  {
    double worst = max_abs(md.s - md.s.transpose());
    add(suite, "s-symmetric", worst < tol, worst);
    double unit_row = 0;
    for (int q = 0; q < np; ++q)
      unit_row = std::max(unit_row,
                          std::abs(md.s(md.unit_index, q) -
                                   cplx(static_cast<double>(md.dims[q]) / md.abs_x, 0)));
    add(suite, "s-unit-row", unit_row < tol, unit_row);
  }
  {
    bool unit_ok = true, symm_ok = true, sum_ok = true;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        long long s = 0;
        for (int r = 0; r < np; ++r) {
          if (md.fusion[md.unit_index][q][r] != (q == r ? 1 : 0)) unit_ok = false;
          if (md.fusion[p][q][r] != md.fusion[q][p][r]) symm_ok = false;
          s += static_cast<long long>(md.fusion[p][q][r]) * md.dims[r];
        }
        if (s != static_cast<long long>(md.dims[p]) * md.dims[q]) sum_ok = false;
      }
    add(suite, "fusion-unit-row", unit_ok, unit_ok ? 0.0 : 1.0);
    add(suite, "fusion-symmetry", symm_ok, symm_ok ? 0.0 : 1.0);
    add(suite, "fusion-dimension-rule", sum_ok, sum_ok ? 0.0 : 1.0);
  }

  // explicit matrix models of every simple, for the braiding-level checks
  std::vector<RepObject> simples;
  simples.reserve(np);
  for (int p = 0; p < np; ++p) simples.push_back(realize_simple(t, p));
  std::vector<std::vector<Mat>> braid(np);
  for (int p = 0; p < np; ++p) {
    braid[p].reserve(np);
    for (int q = 0; q < np; ++q) braid[p].push_back(braiding(simples[p], simples[q]));
  }
  {
    // s_pq = tr(R_qp R_pq), against the character double sum
    double worst = 0;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        cplx tr = (braid[q][p] * braid[p][q]).trace() / static_cast<double>(md.abs_x);
        worst = std::max(worst, std::abs(tr - md.s(p, q)));
      }
    add(suite, "s-braiding-trace", worst < tol, worst);
  }
  {
    // three-way transparency concordance; the collinearity and vacuum
    // multiplicity tests already agreed inside modular_data
    bool agree = true;
    double worst = 0;
    for (int p = 0; p < np; ++p) {
      bool matrix_transparent = true;
      double dev = 0;
      for (int q = 0; q < np; ++q) {
        Mat rr = braid[q][p] * braid[p][q];
        double d = max_abs(rr - Mat::Identity(rr.rows(), rr.cols()));
        dev = std::max(dev, d);
        if (d > tol) matrix_transparent = false;
      }
      if (matrix_transparent != md.transparent[p]) agree = false;
      if (md.transparent[p]) worst = std::max(worst, dev);
    }
    add(suite, "transparency-concordance", agree, worst);
  }
  {
    double worst = 0;
    long long sum = 0;
    for (int p = 0; p < np; ++p)
      if (md.transparent[p]) {
        worst = std::max(worst, std::abs(md.twists[p] - cplx(1.0, 0)));
        sum += static_cast<long long>(md.dims[p]) * md.dims[p];
      }
    add(suite, "transparent-twists-one", worst < tol, worst);
    add(suite, "transparent-dim-sum", sum == md.d_factor,
        static_cast<double>(std::llabs(sum - md.d_factor)),
        "sum over T of d^2 = " + std::to_string(sum));
    add(suite, "modularizable-gate", worst < tol, worst);
  }

  CharacterX vac_chi = character_of(b.vac.object);
  {
    double worst = 0;
    for (int m = 0; m < x.x2.order; ++m)
      for (int g = 0; g < x.x1.order; ++g) {
        bool in_k = x.sub.kgrp.index_in_sub[m] >= 0;
        bool in_i = x.sub.igrp.index_in_sub[g] >= 0;
        double want = in_k && in_i ? static_cast<double>(x.sub.coker.group.order) : 0.0;
        worst = std::max(worst, std::abs(vac_chi.values(m, g) - want));
      }
    add(suite, "vacuum-character", worst < tol, worst);
  }
  {
    std::vector<int> mult = decompose(vac_chi, t);
    bool ok = true;
    for (int p = 0; p < np; ++p)
      if (mult[p] != (md.transparent[p] ? md.dims[p] : 0)) ok = false;
    add(suite, "vacuum-multiplicities", ok, ok ? 0.0 : 1.0);
  }
  {
    FrobeniusReport fr = check_frobenius(b.vac, tol);
    double worst = std::max({fr.assoc, fr.unital, fr.commutative, fr.frobenius_left,
                             fr.frobenius_right, fr.special, fr.symmetric});
    add(suite, "frobenius-laws", fr.pass(tol), worst,
        fr.pass(tol) ? "beta_1 * beta_A = " +
                           std::to_string((fr.beta_1 * fr.beta_a).real())
                     : fr.failed_law(tol));
  }

  {
    std::vector<int> deg = character_table(b.gx.group, seed).degrees;
    int n_irr = static_cast<int>(deg.size());
    std::vector<int> td;
    for (int p = 0; p < np; ++p)
      if (md.transparent[p]) td.push_back(md.dims[p]);
    std::sort(td.begin(), td.end());
    std::sort(deg.begin(), deg.end());
    add(suite, "gx-irrep-count", n_irr == static_cast<int>(td.size()),
        std::abs(n_irr - static_cast<double>(td.size())),
        "|Irr(G(X))| = " + std::to_string(n_irr));
    add(suite, "gx-degrees-match", deg == td, deg == td ? 0.0 : 1.0);
  }
  {
    RepObject reg = functor_f_from_gx(b.x, b.gx, regular_representation(b.gx.group));
    double worst = max_abs(character_of(reg).values - vac_chi.values);
    add(suite, "gx-regular-to-vacuum", worst < tol, worst);
  }
  {
    // images of the G(X)-irreducibles are simple, transparent, pairwise
    // distinct, and exhaust the transparent sector
    CharacterTable gct = character_table(b.gx.group, seed);
    auto irreps = irrep_matrices(b.gx.group, gct, seed);
    std::set<int> hit;
    bool ok = true;
    for (const auto& rho : irreps) {
      RepObject img = functor_f_from_gx(b.x, b.gx, rho);
      std::vector<int> mult = decompose(character_of(img), t);
      int found = -1;
      for (int p = 0; p < np; ++p) {
        if (mult[p] == 0) continue;
        if (mult[p] != 1 || found >= 0) ok = false;
        found = p;
      }
      if (found < 0 || !md.transparent[found] || hit.count(found)) ok = false;
      if (found >= 0) hit.insert(found);
    }
    if (static_cast<int>(hit.size()) !=
        static_cast<int>(transparent_simples(md).size()))
      ok = false;
    add(suite, "gx-images-exhaust-transparent", ok, ok ? 0.0 : 1.0);
  }

  {
    double det = std::abs(md.s.determinant());
    bool bijective = static_cast<int>(x.sub.k_elements.size()) == 1 &&
                     static_cast<int>(x.sub.i_elements.size()) == x.x1.order;
    bool ok = (det > 1e-6) == bijective;
    suite.modular = det > 1e-6;
    add(suite, "modular-iff-boundary-bijective", ok, det,
        std::string("|det S| = ") + std::to_string(det) +
            (bijective ? ", boundary bijective" : ", boundary not bijective"));
  }

  // modularization pipeline
  ModularizationContext ctx = make_modularization_context(b.x);
  {
    double worst = 0;
    for (int p = 0; p < np; ++p) {
      VacModule ind = induce(ctx, simples[p]);
      Mat r_av = braiding(ctx.vac->object, ind.underlying);
      Mat r_va = braiding(ind.underlying, ctx.vac->object);
      worst = std::max(worst, max_abs(Mat((ind.rho * r_va) * r_av) - ind.rho));
    }
    add(suite, "induced-modules-local", worst < tol, worst);
  }
  SimpleTable tbar = simple_objects(ctx.xbar, seed);
  {
    bool dims_ok = true, trans_ok = true;
    std::set<int> covered;
    for (int p = 0; p < np; ++p) {
      RepObject img = modularize_object(ctx, simples[p]);
      if (img.dim != simples[p].dim) dims_ok = false;
      std::vector<int> mult = decompose(character_of(img), tbar);
      for (int r = 0; r < tbar.size(); ++r)
        if (mult[r] > 0) covered.insert(r);
      if (md.transparent[p]) {
        for (int r = 0; r < tbar.size(); ++r)
          if (mult[r] != (r == tbar.unit_index ? md.dims[p] : 0)) trans_ok = false;
      }
    }
    add(suite, "modularize-preserves-dims", dims_ok, dims_ok ? 0.0 : 1.0);
    add(suite, "modularize-transparent-to-units", trans_ok, trans_ok ? 0.0 : 1.0);
    add(suite, "modularize-dominance",
        static_cast<int>(covered.size()) == tbar.size(),
        static_cast<double>(tbar.size() - static_cast<int>(covered.size())));
  }
  {
    ModularizationReport mr = verify_modularization(b.x, seed, tol);
    add(suite, "xbar-modular", mr.xbar_modular, mr.det_s_abs,
        "|det S| = " + std::to_string(mr.det_s_abs) + ", |T| = " +
            std::to_string(mr.n_transparent));
    add(suite, "xbar-matches-drinfeld-double", mr.match.found,
        mr.match.found ? std::max(mr.match.resid_s, mr.match.resid_twists) : 1.0);
    add(suite, "xbar-verlinde", mr.verlinde < 1e-6, mr.verlinde);
    add(suite, "xbar-counts", mr.counts_ok,
        static_cast<double>(mr.sum_d2 - mr.image_order * mr.image_order),
        std::to_string(mr.n_simples) + " simples, sum d^2 = " +
            std::to_string(mr.sum_d2));
  }
  return suite;
}

}  // namespace xmodcat
