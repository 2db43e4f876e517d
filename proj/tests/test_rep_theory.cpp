#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "corpus.hpp"
#include "xmodcat/errors.hpp"
#include "xmodcat/rep_theory.hpp"

using namespace xmodcat;

namespace {

// the "regular object" k(X2) (x) k[X1]: basis (n, h), graded by n, with
// Q(g)(n, h) = (n^{g^-1}, g h); it contains every simple with multiplicity
// its dimension
RepObject regular_object(const XPtr& xp) {
  const CrossedModule& x = *xp;
  int n2 = x.x2.order, n1 = x.x1.order;
  RepObject r;
  r.x = xp;
  r.dim = n2 * n1;
  auto flat = [&](int n, int h) { return n * n1 + h; };
  r.p.assign(n2, Mat::Zero(r.dim, r.dim));
  for (int n = 0; n < n2; ++n)
    for (int h = 0; h < n1; ++h) r.p[n](flat(n, h), flat(n, h)) = 1.0;
  r.q.assign(n1, Mat::Zero(r.dim, r.dim));
  for (int g = 0; g < n1; ++g)
    for (int n = 0; n < n2; ++n)
      for (int h = 0; h < n1; ++h)
        r.q[g](flat(x.act(n, x.x1.inv(g)), x.x1.mul(g, h)), flat(n, h)) = 1.0;
  validate_rep_object(r);
  return r;
}

// dimension of the commutant of (P, Q), via the rank of the equivariant
// averaging projector on matrix space (column-major vec convention)
int commutant_dimension(const RepObject& v) {
  const CrossedModule& x = *v.x;
  int d = v.dim;
  Mat phi = Mat::Zero(d * d, d * d);
  for (int g = 0; g < x.x1.order; ++g)
    for (int m = 0; m < x.x2.order; ++m) {
      Mat a = v.q[g] * v.p[m];
      Mat b = v.p[m] * v.q[x.x1.inv(g)];
      phi += kron(b.transpose(), a);  // vec(A M B) = (B^T (x) A) vec(M)
    }
  phi /= static_cast<double>(x.x1.order);
  Eigen::FullPivLU<Mat> lu(phi);
  lu.setThreshold(1e-7);
  return static_cast<int>(lu.rank());
}

}  // namespace

TEST_CASE("simple objects of D(Z/2): closed-form characters and twists") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  REQUIRE(t.size() == 4);
  CHECK(t.dims == std::vector<int>{1, 1, 1, 1});
  // labels in canonical order: (0,+), (0,-), (1,+), (1,-)
  // psi_{(a,chi)}(m, g) = delta(m, a) chi(g), omega = chi(a)
  auto chi_val = [](int chi, int g) { return chi == 1 && g == 1 ? -1.0 : 1.0; };
  int idx = 0;
  for (int a = 0; a < 2; ++a)
    for (int chi = 0; chi < 2; ++chi, ++idx) {
      for (int m = 0; m < 2; ++m)
        for (int g = 0; g < 2; ++g)
          CHECK(std::abs(t.chars[idx].values(m, g) -
                         cplx(m == a ? chi_val(chi, g) : 0.0, 0)) < 1e-10);
      CHECK(std::abs(t.twists[idx] - cplx(chi_val(chi, a), 0)) < 1e-10);
    }
}

TEST_CASE("simple objects of the corpus: counts and dimension vectors") {
  XPtr s3 = corpus::d_s3();
  SimpleTable t = simple_objects(s3);
  CHECK(t.dims == std::vector<int>{1, 1, 2, 3, 3, 2, 2, 2});

  CHECK(simple_objects(corpus::trivial_x()).dims == std::vector<int>{1});
  CHECK(simple_objects(corpus::x4_double_cover()).size() == 16);
  CHECK(simple_objects(corpus::inv_z3()).dims == std::vector<int>{1, 1, 2});
}

TEST_CASE("characters do not depend on the choice of orbit transversal") {
  XPtr xp = corpus::d_s3();
  const CrossedModule& x = *xp;
  SimpleTable t = simple_objects(xp);
  for (int p = 0; p < t.size(); ++p) {
    const auto& od = t.orbits[t.labels[p].orbit];
    int m0 = od.members[0];
    for (std::size_t i = 0; i < od.members.size(); ++i) {
      int m = od.members[i];
      // largest transversal element instead of the smallest
      int h = -1;
      for (int g = x.x1.order - 1; g >= 0; --g)
        if (x.act(m0, g) == m) {
          h = g;
          break;
        }
      REQUIRE(h >= 0);
      for (int g = 0; g < x.x1.order; ++g) {
        int s = x.x1.mul(h, x.x1.mul(g, x.x1.inv(h)));
        int si = od.stab.index_in_sub[s];
        cplx want = si >= 0 ? od.stab_ct.value(t.labels[p].chi, si) : cplx(0, 0);
        CHECK(std::abs(t.chars[p].values(m, g) - want) < 1e-10);
      }
    }
  }
}

TEST_CASE("character forms") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  auto [b00, h00] = char_forms(t.chars[0], t.chars[0]);
  CHECK(std::abs(b00 - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(h00 - cplx(1, 0)) < 1e-10);
  auto [b01, h01] = char_forms(t.chars[0], t.chars[1]);
  CHECK(std::abs(b01) < 1e-10);
  CHECK(std::abs(h01) < 1e-10);

  // hermitian pairing with the vacuum character picks out d_p on the
  // transparent sector
  XPtr x4 = corpus::x4_double_cover();
  SimpleTable t4 = simple_objects(x4);
  ModularData md4 = modular_data(t4);
  CharacterX vac = character_of(vacuum_object(x4).object);
  for (int p = 0; p < t4.size(); ++p) {
    cplx h = char_forms(t4.chars[p], vac).second;
    cplx want = md4.transparent[p] ? cplx(t4.dims[p], 0) : cplx(0, 0);
    CHECK(std::abs(h - want) < 1e-9);
  }
}

TEST_CASE("tensor characters") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  // unit law
  for (int q = 0; q < 4; ++q) {
    CharacterX prod = tensor_character(t.chars[0], t.chars[q]);
    CHECK(approx_equal(prod.values, t.chars[q].values, 1e-10));
  }
  // (1,-) (x) (1,-) has the character of the unit (0,+)
  CharacterX sq = tensor_character(t.chars[3], t.chars[3]);
  CHECK(approx_equal(sq.values, t.chars[0].values, 1e-10));

  // dimension of a tensor character multiplies
  XPtr s3 = corpus::d_s3();
  SimpleTable ts = simple_objects(s3);
  CharacterX pr = tensor_character(ts.chars[3], ts.chars[5]);
  CHECK(std::abs(pr.values.col(0).sum() - cplx(ts.dims[3] * ts.dims[5], 0)) < 1e-9);
}

TEST_CASE("fusion of D(Z/2) is group-like") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  FusionTensor n = fusion_tensor(t);
  // labels (a, chi) multiply as (a+b, chi xi)
  auto index = [](int a, int chi) { return a * 2 + chi; };
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      int want = index((p / 2 + q / 2) % 2, (p % 2) ^ (q % 2));
      for (int r = 0; r < 4; ++r) CHECK(n[p][q][r] == (r == want ? 1 : 0));
    }
}

TEST_CASE("modular data golden values for D(Z/2)") {
  XPtr x = corpus::d_z2();
  ModularData md = modular_data(simple_objects(x));
  double h = 0.5;
  Mat want(4, 4);
  want << h, h, h, h,
          h, h, -h, -h,
          h, -h, h, -h,
          h, -h, -h, h;
  CHECK(max_abs(md.s - want) < 1e-10);
  CHECK(std::abs(md.twists[0] - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(md.twists[1] - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(md.twists[2] - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(md.twists[3] - cplx(-1, 0)) < 1e-10);
  CHECK(transparent_simples(md) == std::vector<int>{0});
}

TEST_CASE("modular data of degenerate examples") {
  ModularData triv = modular_data(simple_objects(corpus::trivial_x()));
  CHECK(triv.s.rows() == 1);
  CHECK(std::abs(triv.s(0, 0) - cplx(1, 0)) < 1e-12);

  // trivial boundary: S_pq = d_p d_q / |X| and everything is transparent
  XPtr tb = corpus::trivial_boundary_z2();
  ModularData md = modular_data(simple_objects(tb));
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      CHECK(std::abs(md.s(p, q) - cplx(1.0 / md.abs_x, 0)) < 1e-10);
  CHECK(transparent_simples(md).size() == 2);

  XPtr x4 = corpus::x4_double_cover();
  ModularData md4 = modular_data(simple_objects(x4));
  auto t4 = transparent_simples(md4);
  CHECK(t4.size() == 4);
  long long sum = 0;
  for (int p : t4) sum += static_cast<long long>(md4.dims[p]) * md4.dims[p];
  CHECK(sum == 4);
}

TEST_CASE("vacuum object") {
  XPtr x4 = corpus::x4_double_cover();
  VacuumAlgebra a = vacuum_object(x4);
  CHECK(a.object.dim == 4);
  CharacterX chi = character_of(a.object);
  for (int m = 0; m < 4; ++m)
    for (int g = 0; g < 4; ++g) {
      double want = (m % 2 == 0 && g % 2 == 0) ? 2.0 : 0.0;
      CHECK(std::abs(chi.values(m, g) - want) < 1e-10);
    }
  // multiplicity vector supported on the transparent sector with weights d_p
  SimpleTable t = simple_objects(x4);
  ModularData md = modular_data(t);
  std::vector<int> mult = decompose(chi, t);
  for (int p = 0; p < t.size(); ++p)
    CHECK(mult[p] == (md.transparent[p] ? md.dims[p] : 0));

  CHECK(vacuum_object(corpus::d_s3()).object.dim == 1);
}

TEST_CASE("braiding matrices") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  ModularData md = modular_data(t);
  std::vector<RepObject> s;
  for (int p = 0; p < 4; ++p) s.push_back(realize_simple(t, p));

  // braiding with the unit is the flip
  RepObject unit = unit_object(x);
  for (int q = 0; q < 4; ++q) {
    Mat r = braiding(unit, s[q]);
    CHECK(approx_equal(r, flip_map(1, s[q].dim), 1e-12));
  }
  // tr(R_qp R_pq) reproduces the S-matrix
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      cplx tr = (braiding(s[q], s[p]) * braiding(s[p], s[q])).trace();
      CHECK(std::abs(tr / static_cast<double>(md.abs_x) - md.s(p, q)) < 1e-10);
    }

  // trivial boundary makes the braiding the flip on everything
  XPtr tb = corpus::trivial_boundary_z2_z2();
  SimpleTable tt = simple_objects(tb);
  for (int p = 0; p < tt.size(); ++p)
    for (int q = 0; q < tt.size(); ++q) {
      RepObject vp = realize_simple(tt, p), vq = realize_simple(tt, q);
      CHECK(approx_equal(braiding(vp, vq), flip_map(vp.dim, vq.dim), 1e-12));
    }
}

TEST_CASE("dual objects") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  RepObject unit = unit_object(x);
  RepObject unit_dual = dual_object(unit);
  CHECK(approx_equal(character_of(unit_dual).values, character_of(unit).values, 1e-12));

  // (1,-) is self-dual
  RepObject v = realize_simple(t, 3);
  CHECK(approx_equal(character_of(dual_object(v)).values, t.chars[3].values, 1e-10));

  // double dual has the character of the original; dimension is preserved
  XPtr s3 = corpus::d_s3();
  SimpleTable ts = simple_objects(s3);
  for (int p : {2, 3, 5}) {
    RepObject w = realize_simple(ts, p);
    RepObject ww = dual_object(dual_object(w));
    CHECK(ww.dim == w.dim);
    CHECK(approx_equal(character_of(ww).values, ts.chars[p].values, 1e-10));
  }
}

TEST_CASE("decompose") {
  XPtr s3 = corpus::d_s3();
  SimpleTable t = simple_objects(s3);
  std::vector<int> e0 = decompose(character_of(unit_object(s3)), t);
  for (int p = 0; p < t.size(); ++p) CHECK(e0[p] == (p == 0 ? 1 : 0));

  // V (x) V* contains the unit exactly once for simple V
  for (int p : {2, 3, 7}) {
    RepObject v = realize_simple(t, p);
    RepObject vv = tensor_object(v, dual_object(v));
    std::vector<int> mult = decompose(character_of(vv), t);
    CHECK(mult[0] == 1);
  }
}

TEST_CASE("functor from G(X)-representations") {
  for (XPtr x : {corpus::x4_double_cover(), corpus::trivial_boundary_z2_z2(),
                 corpus::inv_z3()}) {
    SimpleTable t = simple_objects(x);
    ModularData md = modular_data(t);
    GroupGX gx = group_gx(*x);

    // the trivial representation goes to the tensor unit
    std::vector<Mat> triv(gx.group.order, Mat::Identity(1, 1));
    RepObject unit_img = functor_f_from_gx(x, gx, triv);
    CHECK(approx_equal(character_of(unit_img).values,
                       character_of(unit_object(x)).values, 1e-10));

    // the regular representation goes to the vacuum
    RepObject reg = functor_f_from_gx(x, gx, regular_representation(gx.group));
    CHECK(approx_equal(character_of(reg).values,
                       character_of(vacuum_object(x).object).values, 1e-9));

    // irreducibles map to pairwise distinct transparent simples covering T
    CharacterTable ct = character_table(gx.group);
    auto irreps = irrep_matrices(gx.group, ct);
    std::vector<int> seen;
    for (const auto& rho : irreps) {
      RepObject img = functor_f_from_gx(x, gx, rho);
      std::vector<int> mult = decompose(character_of(img), t);
      int hits = 0, which = -1;
      for (int p = 0; p < t.size(); ++p)
        if (mult[p] != 0) {
          hits += mult[p];
          which = p;
        }
      CHECK(hits == 1);
      REQUIRE(which >= 0);
      CHECK(md.transparent[which]);
      CHECK(std::count(seen.begin(), seen.end(), which) == 0);
      seen.push_back(which);

      // image is transparent at the braiding level
      for (int q = 0; q < t.size(); ++q) {
        RepObject w = realize_simple(t, q);
        Mat rr = braiding(w, img) * braiding(img, w);
        CHECK(approx_zero(rr - Mat::Identity(rr.rows(), rr.cols()), 1e-9));
      }
    }
    CHECK(seen.size() == transparent_simples(md).size());
  }
}

TEST_CASE("Frobenius laws of the vacuum") {
  XPtr x4 = corpus::x4_double_cover();
  VacuumAlgebra a = vacuum_object(x4);
  FrobeniusReport r = check_frobenius(a);
  CHECK(r.pass());
  CHECK(std::abs(r.beta_1 - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(r.beta_1 * r.beta_a - cplx(4, 0)) < 1e-10);

  // the double's vacuum is the tensor unit and passes trivially
  FrobeniusReport rd = check_frobenius(vacuum_object(corpus::d_z3()));
  CHECK(rd.pass());

  // negative control: corrupting the multiplication breaks commutativity
  VacuumAlgebra bad = a;
  bad.mult(0, 1) += 0.25;
  FrobeniusReport rb = check_frobenius(bad);
  CHECK(!rb.pass());
  CHECK(rb.commutative > 1e-3);
}

TEST_CASE("rep object validation rejects broken structures") {
  XPtr x = corpus::d_z2();
  RepObject v = realize_simple(simple_objects(x), 1);
  RepObject broken = v;
  broken.q[1](0, 0) += 0.5;
  CHECK_THROWS_AS(validate_rep_object(broken), Error);
}

TEST_CASE("regular object oracle: commutant rank and completeness") {
  for (XPtr x : {corpus::d_z2(), corpus::d_z3(), corpus::x4_double_cover(),
                 corpus::trivial_boundary_z2_z2(), corpus::inv_z3()}) {
    RepObject r = regular_object(x);
    // the commutant of k(X2) (x) k[X1] has dimension |X1| |X2|, an
    // implementation-independent version of the Burnside sum
    CHECK(commutant_dimension(r) == x->x1.order * x->x2.order);
    // completeness: sum_p d_p psi_p is the character of the regular object
    SimpleTable t = simple_objects(x);
    Mat acc = Mat::Zero(x->x2.order, x->x1.order);
    for (int p = 0; p < t.size(); ++p) acc += double(t.dims[p]) * t.chars[p].values;
    CHECK(approx_equal(acc, character_of(r).values, 1e-9));
    std::vector<int> mult = decompose(character_of(r), t);
    CHECK(mult == t.dims);
  }
}

TEST_CASE("decompose rejects non-integer multiplicities") {
  XPtr x = corpus::d_z2();
  SimpleTable t = simple_objects(x);
  CharacterX half = t.chars[0];
  half.values *= 0.5;
  CHECK_THROWS_WITH_AS(static_cast<void>(decompose(half, t)),
                       doctest::Contains("NonIntegerMultiplicity"), Error);
}
