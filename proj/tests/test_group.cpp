#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "xmodcat/errors.hpp"
#include "xmodcat/group.hpp"

using namespace xmodcat;

namespace {

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x) {
    int acc = x, n = 1;
    while (acc != 0) {
      acc = g.mul(acc, x);
      ++n;
    }
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g).classes) s.push_back(c.size());
  return s;
}

}  // namespace

TEST_CASE("group_from_table accepts Z/2 and computes inverses") {
  FiniteGroup g = group_from_table({{0, 1}, {1, 0}});
  CHECK(g.order == 2);
  CHECK(g.inverse == std::vector<int>{0, 1});
}

TEST_CASE("group_from_table rejects non-permutation rows") {
  CHECK_THROWS_WITH_AS(static_cast<void>(group_from_table({{0, 1}, {0, 1}})),
                       doctest::Contains("NotAGroup"), Error);
}

TEST_CASE("group_from_table rejects a nonassociative loop with a witness") {
  // order-5 loop with two-sided identity but (1*1)*2 != 1*(1*2)
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 3, 4, 0, 1},
                                        {3, 4, 1, 2, 0},
                                        {4, 2, 0, 1, 3}};
  try {
    group_from_table(loop);
    FAIL("expected NotAGroup");
  } catch (const Error& e) {
    CHECK(e.code() == "NotAGroup");
    REQUIRE(e.witness().size() == 3);
    int a = static_cast<int>(e.witness()[0]);
    int b = static_cast<int>(e.witness()[1]);
    int c = static_cast<int>(e.witness()[2]);
    CHECK(loop[loop[a][b]][c] != loop[a][loop[b][c]]);
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(class_sizes(cyclic_group(2)) == std::vector<std::size_t>{1, 1});
  CHECK(class_sizes(cyclic_group(4)) == std::vector<std::size_t>{1, 1, 1, 1});
  // S3: classes of sizes 1 (identity), 2 (3-cycles), 3 (transpositions),
  // sorted by size then smallest member
  CHECK(class_sizes(symmetric_group_s3()) == std::vector<std::size_t>{1, 2, 3});
  // brute-force cross-check: conjugation orbits partition the group
  FiniteGroup s3 = symmetric_group_s3();
  auto cc = conjugacy_classes(s3);
  std::size_t total = 0;
  for (const auto& c : cc.classes) total += c.size();
  CHECK(total == 6);
  for (int x = 0; x < 6; ++x)
    for (int h = 0; h < 6; ++h)
      CHECK(cc.class_of[s3.mul(s3.inv(h), s3.mul(x, h))] == cc.class_of[x]);
}

TEST_CASE("kernel, image, quotient of the doubling map on Z/4") {
  FiniteGroup z4 = cyclic_group(4);
  GroupHom dbl = make_hom(z4, z4, {0, 2, 0, 2});
  CHECK(kernel(dbl) == std::vector<int>{0, 2});
  CHECK(image(dbl) == std::vector<int>{0, 2});
  Quotient q = quotient(z4, {0, 2});
  CHECK(q.group.order == 2);
  CHECK(q.projection.map == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("quotient by a non-normal subgroup fails") {
  FiniteGroup s3 = symmetric_group_s3();
  // {e, t} for a transposition t is not normal
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.mul(x, x) == 0) {
      t = x;
      break;
    }
  REQUIRE(t > 0);
  CHECK_THROWS_WITH_AS(static_cast<void>(quotient(s3, {0, t})),
                       doctest::Contains("NotNormal"), Error);
}

TEST_CASE("character table of Z/2") {
  CharacterTable ct = character_table(cyclic_group(2));
  CHECK(ct.degrees == std::vector<int>{1, 1});
  CHECK(std::abs(ct.value(0, 1) - cplx(1, 0)) < 1e-10);
  CHECK(std::abs(ct.value(1, 1) - cplx(-1, 0)) < 1e-10);
}

TEST_CASE("character table of S3 with regular-representation cross-check") {
  FiniteGroup s3 = symmetric_group_s3();
  CharacterTable ct = character_table(s3);
  CHECK(ct.degrees == std::vector<int>{1, 1, 2});
  // multiplicity of chi_i in the regular character |G| delta_{g,e} is deg_i
  for (int i = 0; i < 3; ++i) {
    cplx m = 0;
    for (int g = 0; g < 6; ++g) m += std::conj(ct.value(i, g)) * (g == 0 ? 6.0 : 0.0);
    m /= 6.0;
    CHECK(std::abs(m - cplx(ct.degrees[i], 0)) < 1e-9);
  }
}

TEST_CASE("character table of Z/3 has third roots of unity") {
  CharacterTable ct = character_table(cyclic_group(3));
  CHECK(ct.degrees == std::vector<int>{1, 1, 1});
  cplx zeta(-0.5, std::sqrt(3.0) / 2);
  for (int i = 0; i < 3; ++i) {
    cplx v = ct.value(i, 1);
    bool root = std::abs(v - cplx(1, 0)) < 1e-9 || std::abs(v - zeta) < 1e-9 ||
                std::abs(v - std::conj(zeta)) < 1e-9;
    CHECK(root);
  }
}

TEST_CASE("dual groups") {
  DualGroup d2 = dual_group(cyclic_group(2));
  CHECK(d2.group.order == 2);
  CHECK(element_orders(d2.group) == std::vector<int>{1, 2});

  DualGroup d4 = dual_group(cyclic_group(4));
  CHECK(d4.group.order == 4);
  CHECK(element_orders(d4.group) == element_orders(cyclic_group(4)));
  // the generator character pairs 1 -> i under the canonical row order
  CHECK(std::abs(d4.pairing(1, 1) - cplx(0, 1)) < 1e-9);
  // oracle: homomorphisms Z/4 -> C* are determined by the image of 1,
  // which must be a fourth root of unity; all four appear
  for (int want = 0; want < 4; ++want) {
    cplx target = std::pow(cplx(0, 1), want);
    bool found = false;
    for (int row = 0; row < 4; ++row)
      if (std::abs(d4.pairing(row, 1) - target) < 1e-9) found = true;
    CHECK(found);
  }
  // bimultiplicativity in the element argument
  FiniteGroup z4 = cyclic_group(4);
  for (int row = 0; row < 4; ++row)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        CHECK(std::abs(d4.pairing(row, z4.mul(a, b)) -
                       d4.pairing(row, a) * d4.pairing(row, b)) < 1e-9);

  CHECK_THROWS_WITH_AS(static_cast<void>(dual_group(symmetric_group_s3())),
                       doctest::Contains("NotAbelian"), Error);
}

TEST_CASE("semidirect product with trivial action equals the direct product") {
  FiniteGroup z2 = cyclic_group(2);
  FiniteGroup g = semidirect_product(z2, z2, trivial_action(z2, 2));
  CHECK(g.order == 4);
  CHECK(element_orders(g) == std::vector<int>{1, 2, 2, 2});
  // table equality with the direct product under the same flat indexing
  for (int n1 = 0; n1 < 2; ++n1)
    for (int h1 = 0; h1 < 2; ++h1)
      for (int n2 = 0; n2 < 2; ++n2)
        for (int h2 = 0; h2 < 2; ++h2)
          CHECK(g.table[n1 * 2 + h1][n2 * 2 + h2] ==
                z2.mul(n1, n2) * 2 + z2.mul(h1, h2));
}

TEST_CASE("Z/3 x| Z/2 with inversion is S3") {
  FiniteGroup z3 = cyclic_group(3);
  FiniteGroup z2 = cyclic_group(2);
  GroupAction inv = make_action(z2, 3, {{0, 1, 2}, {0, 2, 1}});
  FiniteGroup g = semidirect_product(z3, z2, inv);
  CHECK(g.order == 6);
  CHECK(class_sizes(g) == std::vector<std::size_t>{1, 2, 3});
  CHECK(element_orders(g) == element_orders(symmetric_group_s3()));
}

TEST_CASE("semidirect product rejects non-automorphism actions") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  // the shift m -> m+1 is a permutation but not an automorphism
  CHECK_THROWS_WITH_AS(
      static_cast<void>(semidirect_product(
          z4, z2, GroupAction{z2, 4, {{0, 1, 2, 3}, {1, 2, 3, 0}}})),
      doctest::Contains("NotAutomorphism"), Error);
}

TEST_CASE("orbits and stabilizers") {
  FiniteGroup z2 = cyclic_group(2);
  auto triv = trivial_action(z2, 4);
  auto orbs = orbits(triv);
  CHECK(orbs.size() == 4);
  for (int p = 0; p < 4; ++p)
    CHECK(stabilizer(triv, p).size() == 2);

  FiniteGroup s3 = symmetric_group_s3();
  auto conj = conjugation_action(s3);
  auto corbs = orbits(conj);
  REQUIRE(corbs.size() == 3);
  // by smallest member: {e}, transpositions, 3-cycles
  CHECK(corbs[0].size() == 1);
  CHECK(corbs[1].size() == 3);
  CHECK(corbs[2].size() == 2);
  // |orbit| * |stabilizer| = |G|
  for (const auto& o : corbs)
    CHECK(o.size() * stabilizer(conj, o[0]).size() == 6);
  // the stabilizer of a transposition has order 2
  CHECK(stabilizer(conj, corbs[1][0]).size() == 2);
}

TEST_CASE("irreducible representation matrices") {
  for (const FiniteGroup& g :
       {cyclic_group(3), cyclic_group(4), symmetric_group_s3(),
        semidirect_product(cyclic_group(2), cyclic_group(2),
                           trivial_action(cyclic_group(2), 2))}) {
    CharacterTable ct = character_table(g);
    auto reps = irrep_matrices(g, ct);
    REQUIRE(reps.size() == ct.degrees.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
      REQUIRE(static_cast<int>(reps[i][0].rows()) == ct.degrees[i]);
      for (int x = 0; x < g.order; ++x) {
        CHECK(std::abs(reps[i][x].trace() - ct.value(i, x)) < 1e-8);
        CHECK(approx_equal(Mat(reps[i][x].adjoint() * reps[i][x]),
                           Mat::Identity(ct.degrees[i], ct.degrees[i]), 1e-8));
        for (int y = 0; y < g.order; ++y)
          CHECK(approx_equal(Mat(reps[i][x] * reps[i][y]), reps[i][g.mul(x, y)], 1e-8));
      }
    }
  }
}

TEST_CASE("quotients and duals keep the identity at index 0") {
  Quotient q = quotient(cyclic_group(4), {0, 2});
  CHECK(q.projection.map[0] == 0);
  DualGroup d = dual_group(cyclic_group(3));
  for (int a = 0; a < 3; ++a) CHECK(std::abs(d.pairing(0, a) - cplx(1, 0)) < 1e-10);
}
