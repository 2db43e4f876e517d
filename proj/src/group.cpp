#include "xmodcat/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "xmodcat/errors.hpp"

namespace xmodcat {

namespace {

std::string triple(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup group_from_table(const std::vector<std::vector<int>>& table) {
  int n = static_cast<int>(table.size());
  if (n == 0) fail_invalid("NotAGroup", "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail_invalid("NotAGroup", "table is not square at row " + std::to_string(i), {i});
    for (int j = 0; j < n; ++j)
      if (table[i][j] < 0 || table[i][j] >= n)
        fail_invalid("NotAGroup", "entry out of range at " + triple(i, j, table[i][j]),
                     {i, j});
  }
  for (int j = 0; j < n; ++j)
    if (table[0][j] != j)
      fail_invalid("NotAGroup", "index 0 is not a left identity at column " + std::to_string(j),
                   {0, j});
  for (int i = 0; i < n; ++i)
    if (table[i][0] != i)
      fail_invalid("NotAGroup", "index 0 is not a right identity at row " + std::to_string(i),
                   {i, 0});
  // Latin square: each row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]++)
        fail_invalid("NotAGroup", "row " + std::to_string(i) + " is not a permutation", {i, j});
      if (seen_col[table[j][i]]++)
        fail_invalid("NotAGroup", "column " + std::to_string(i) + " is not a permutation",
                     {j, i});
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail_invalid("NotAGroup", "associativity fails at " + triple(a, b, c), {a, b, c});
  FiniteGroup g;
  g.order = n;
  g.table = table;
  g.inverse.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a][b] == 0) g.inverse[a] = b;
  for (int a = 0; a < n; ++a)
    if (g.inverse[a] < 0 || g.table[g.inverse[a]][a] != 0)
      fail_invalid("NotAGroup", "no two-sided inverse for " + std::to_string(a), {a});
  return g;
}

FiniteGroup cyclic_group(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return group_from_table(t);
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup symmetric_group_s3() {
  // one-line notation, lexicographic
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const int p[3]) {
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = index_of(comp);
    }
  return group_from_table(t);
}

GroupHom make_hom(FiniteGroup source, FiniteGroup target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.order)
    fail_invalid("NotAHomomorphism", "map size does not match source order");
  for (int x : map)
    if (x < 0 || x >= target.order)
      fail_invalid("NotAHomomorphism", "map value out of range");
  if (map[0] != 0) fail_invalid("NotAHomomorphism", "identity is not preserved");
  for (int a = 0; a < source.order; ++a)
    for (int b = 0; b < source.order; ++b)
      if (map[source.mul(a, b)] != target.mul(map[a], map[b]))
        fail_invalid("NotAHomomorphism",
                     "multiplicativity fails at (" + std::to_string(a) + ", " +
                         std::to_string(b) + ")",
                     {a, b});
  GroupHom h;
  h.source = std::move(source);
  h.target = std::move(target);
  h.map = std::move(map);
  return h;
}

GroupAction make_action(FiniteGroup group, int set_size,
                        std::vector<std::vector<int>> perm) {
  if (static_cast<int>(perm.size()) != group.order)
    fail_invalid("NotAnAction", "one permutation per group element required");
  for (const auto& p : perm) {
    if (static_cast<int>(p.size()) != set_size)
      fail_invalid("NotAnAction", "permutation has wrong size");
    std::vector<char> seen(set_size, 0);
    for (int v : p) {
      if (v < 0 || v >= set_size || seen[v]++)
        fail_invalid("NotAnAction", "map is not a permutation of the set");
    }
  }
  for (int m = 0; m < set_size; ++m)
    if (perm[0][m] != m) fail_invalid("NotAnAction", "identity does not act trivially");
  // right action: (m^g)^h = m^{gh}
  for (int g = 0; g < group.order; ++g)
    for (int h = 0; h < group.order; ++h) {
      int gh = group.mul(g, h);
      for (int m = 0; m < set_size; ++m)
        if (perm[h][perm[g][m]] != perm[gh][m])
          fail_invalid("NotAnAction",
                       "right-action law fails at (m,g,h) = " + triple(m, g, h), {m, g, h});
    }
  GroupAction a;
  a.group = std::move(group);
  a.set_size = set_size;
  a.perm = std::move(perm);
  return a;
}

GroupAction trivial_action(FiniteGroup group, int set_size) {
  std::vector<int> id(set_size);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> perm(group.order, id);
  return make_action(std::move(group), set_size, std::move(perm));
}

GroupAction conjugation_action(const FiniteGroup& g) {
  std::vector<std::vector<int>> perm(g.order, std::vector<int>(g.order));
  for (int h = 0; h < g.order; ++h)
    for (int m = 0; m < g.order; ++m) perm[h][m] = g.mul(g.inv(h), g.mul(m, h));
  return make_action(g, g.order, std::move(perm));
}

void require_action_by_automorphisms(const GroupAction& act,
                                     const FiniteGroup& set_group) {
  if (act.set_size != set_group.order)
    fail_invalid("NotAutomorphism", "set size does not match group order");
  for (int g = 0; g < act.group.order; ++g) {
    const auto& p = act.perm[g];
    if (p[0] != 0)
      fail_invalid("NotAutomorphism",
                   "element " + std::to_string(g) + " does not fix the identity", {g});
    for (int a = 0; a < set_group.order; ++a)
      for (int b = 0; b < set_group.order; ++b)
        if (p[set_group.mul(a, b)] != set_group.mul(p[a], p[b]))
          fail_invalid("NotAutomorphism",
                       "element " + std::to_string(g) + " is not multiplicative at (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")",
                       {g, a, b});
  }
}

ConjClasses conjugacy_classes(const FiniteGroup& g) {
  std::vector<int> assigned(g.order, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < g.order; ++x) {
    if (assigned[x]) continue;
    std::vector<int> cls;
    for (int h = 0; h < g.order; ++h) cls.push_back(g.mul(g.inv(h), g.mul(x, h)));
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int y : cls) assigned[y] = 1;
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a[0] < b[0];
            });
  ConjClasses cc;
  cc.classes = std::move(classes);
  cc.class_of.assign(g.order, -1);
  for (std::size_t i = 0; i < cc.classes.size(); ++i) {
    cc.reps.push_back(cc.classes[i][0]);
    for (int y : cc.classes[i]) cc.class_of[y] = static_cast<int>(i);
  }
  return cc;
}

std::vector<int> kernel(const GroupHom& h) {
  std::vector<int> k;
  for (int x = 0; x < h.source.order; ++x)
    if (h.map[x] == 0) k.push_back(x);
  return k;
}

std::vector<int> image(const GroupHom& h) {
  std::vector<int> im(h.map.begin(), h.map.end());
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal_subgroup) {
  std::vector<char> in_n(g.order, 0);
  for (int x : normal_subgroup) in_n[x] = 1;
  if (normal_subgroup.empty() || !in_n[0])
    fail_invalid("NotNormal", "subgroup must contain the identity");
  for (int a : normal_subgroup)
    for (int b : normal_subgroup)
      if (!in_n[g.mul(a, b)])
        fail_invalid("NotNormal", "set is not closed under multiplication");
  for (int x = 0; x < g.order; ++x)
    for (int n : normal_subgroup)
      if (!in_n[g.mul(g.inv(x), g.mul(n, x))])
        fail_invalid("NotNormal",
                     "subgroup is not normal: conjugate of " + std::to_string(n) + " by " +
                         std::to_string(x) + " escapes",
                     {n, x});
  // right cosets Nx, keyed by their sorted element lists
  std::vector<int> coset_of(g.order, -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g.order; ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> c;
    for (int n : normal_subgroup) c.push_back(g.mul(n, x));
    std::sort(c.begin(), c.end());
    for (int y : c) coset_of[y] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  std::sort(cosets.begin(), cosets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  for (std::size_t i = 0; i < cosets.size(); ++i)
    for (int y : cosets[i]) coset_of[y] = static_cast<int>(i);
  int q = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) t[i][j] = coset_of[g.mul(cosets[i][0], cosets[j][0])];
  Quotient result;
  result.group = group_from_table(t);
  result.projection = make_hom(g, result.group, coset_of);
  result.cosets = std::move(cosets);
  return result;
}

SubgroupGroup subgroup_group(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<int> idx(g.order, -1);
  for (std::size_t i = 0; i < elems.size(); ++i) idx[elems[i]] = static_cast<int>(i);
  if (elems.empty() || elems[0] != 0)
    fail_invalid("NotAGroup", "subgroup must contain the identity");
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = g.mul(elems[i], elems[j]);
      if (idx[p] < 0)
        fail_invalid("NotAGroup", "subset is not closed under multiplication",
                     {elems[i], elems[j]});
      t[i][j] = idx[p];
    }
  SubgroupGroup s;
  s.group = group_from_table(t);
  s.elements = std::move(elems);
  s.index_in_sub = std::move(idx);
  return s;
}

std::uint64_t group_hash(const FiniteGroup& g) {
  std::vector<int> flat;
  flat.push_back(g.order);
  for (const auto& row : g.table) flat.insert(flat.end(), row.begin(), row.end());
  return hash_ints(flat);
}

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed) {
  ConjClasses cc = conjugacy_classes(g);
  int r = static_cast<int>(cc.classes.size());
  // class sums: Z_i Z_j = sum_k c_ijk Z_k, with c_ijk counted against a fixed
  // representative of class k
  std::vector<Mat> a(r, Mat::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      int z0 = cc.reps[k];
      for (int x : cc.classes[i]) {
        int y = g.mul(g.inv(x), z0);
        a[i](cc.class_of[y], k) += 1.0;
      }
    }
  double amax = 1.0;
  for (const Mat& m : a) amax = std::max(amax, max_abs(m));

  std::mt19937_64 rng(seed ^ group_hash(g));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Mat m = Mat::Zero(r, r);
    for (int i = 0; i < r; ++i) m += cplx(u(rng), 0.0) * a[i];
    Eigen::ComplexEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success) continue;
    Vec ev = es.eigenvalues();
    bool collision = false;
    for (int s = 0; s < r && !collision; ++s)
      for (int t = s + 1; t < r; ++t)
        if (std::abs(ev(s) - ev(t)) < 1e-6 * std::max(1.0, max_abs(ev))) {
          collision = true;
          break;
        }
    if (collision) continue;

    bool ok = true;
    std::vector<std::pair<int, std::vector<cplx>>> rows;  // (degree, values on classes)
    for (int s = 0; s < r && ok; ++s) {
      Vec v = es.eigenvectors().col(s);
      // must be a common eigenvector of the whole commuting family
      for (int i = 0; i < r && ok; ++i) {
        Vec av = a[i] * v;
        cplx lambda = v.dot(av);  // v is unit
        if ((av - lambda * v).norm() > 1e-6 * amax) ok = false;
      }
      if (!ok) break;
      if (std::abs(v(0)) < 1e-8) {
        ok = false;
        break;
      }
      // v(0) corresponds to the class of the identity (always class 0)
      std::vector<cplx> lambda(r);
      for (int j = 0; j < r; ++j) lambda[j] = v(j) / v(0);
      double inv_d2 = 0.0;
      for (int j = 0; j < r; ++j)
        inv_d2 += std::norm(lambda[j]) / static_cast<double>(cc.classes[j].size());
      double d = std::sqrt(static_cast<double>(g.order) / inv_d2);
      if (!near_integer(d, 1e-6) || std::llround(d) < 1) {
        ok = false;
        break;
      }
      int deg = static_cast<int>(std::llround(d));
      std::vector<cplx> chi(r);
      for (int j = 0; j < r; ++j)
        chi[j] = d * lambda[j] / static_cast<double>(cc.classes[j].size());
      rows.emplace_back(deg, std::move(chi));
    }
    if (!ok) continue;

    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return compare_rows(x.second, y.second) < 0;
    });

    CharacterTable ct;
    ct.group = g;
    ct.classes = cc;
    ct.chars = Mat::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      ct.degrees.push_back(rows[i].first);
      for (int j = 0; j < r; ++j) ct.chars(i, j) = rows[i].second[j];
    }
    // orthogonality and the degree sum decide whether this attempt is accepted
    long long sumsq = 0;
    for (int d : ct.degrees) sumsq += static_cast<long long>(d) * d;
    if (sumsq != g.order) continue;
    Mat gram = Mat::Zero(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        cplx s = 0.0;
        for (int k = 0; k < r; ++k)
          s += static_cast<double>(cc.classes[k].size()) * ct.chars(i, k) *
               std::conj(ct.chars(j, k));
        gram(i, j) = s / static_cast<double>(g.order);
      }
    if (!approx_equal(gram, Mat::Identity(r, r), kTol)) continue;
    bool cols_ok = true;
    for (int ka = 0; ka < r && cols_ok; ++ka)
      for (int kb = 0; kb < r && cols_ok; ++kb) {
        cplx s = 0.0;
        for (int i = 0; i < r; ++i) s += ct.chars(i, ka) * std::conj(ct.chars(i, kb));
        cplx want = (ka == kb)
                        ? cplx(static_cast<double>(g.order) /
                                   static_cast<double>(cc.classes[ka].size()),
                               0.0)
                        : cplx(0.0, 0.0);
        if (std::abs(s - want) > kTol * g.order) cols_ok = false;
      }
    if (!cols_ok) continue;
    return ct;
  }
  fail_degenerate("NumericalDegeneracy",
                  "character table: eigenvalue clustering failed after 20 attempts");
}

DualGroup dual_group(const FiniteGroup& a, std::uint64_t seed) {
  for (int i = 0; i < a.order; ++i)
    for (int j = 0; j < a.order; ++j)
      if (a.table[i][j] != a.table[j][i])
        fail_invalid("NotAbelian", "group is not abelian at (" + std::to_string(i) + ", " +
                                       std::to_string(j) + ")",
                     {i, j});
  CharacterTable ct = character_table(a, seed);
  int n = a.order;
  // abelian: classes are singletons ordered by member, so class j = element j
  for (int j = 0; j < n; ++j)
    if (ct.classes.classes[j] != std::vector<int>{j})
      fail_invariant("InvariantFailure", "abelian class order broken");
  for (int i = 0; i < n; ++i)
    if (ct.degrees[i] != 1) fail_invariant("InvariantFailure", "abelian degree not 1");
  if (!approx_equal(ct.chars.row(0), Mat::Ones(1, n), kTol))
    fail_invariant("InvariantFailure", "trivial character is not row 0");

  auto match_row = [&](const Vec& row) {
    for (int k = 0; k < n; ++k) {
      double dev = 0.0;
      for (int c = 0; c < n; ++c) dev = std::max(dev, std::abs(row(c) - ct.chars(k, c)));
      if (dev <= kTol) return k;
    }
    fail_invariant("InvariantFailure", "character product matches no table row");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec prod(n);
      for (int c = 0; c < n; ++c) prod(c) = ct.chars(i, c) * ct.chars(j, c);
      t[i][j] = match_row(prod);
    }
  DualGroup d;
  d.group = group_from_table(t);
  d.pairing = ct.chars;
  // Gram of the pairing must be the identity
  Mat gram = d.pairing * d.pairing.adjoint() / static_cast<double>(n);
  if (!approx_equal(gram, Mat::Identity(n, n), kTol))
    fail_invariant("InvariantFailure", "dual pairing Gram is not the identity");
  return d;
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const GroupAction& act) {
  if (act.group.order != h.order || act.set_size != n.order)
    fail_invalid("NotAutomorphism", "action shape does not match the factors");
  require_action_by_automorphisms(act, n);
  int order = n.order * h.order;
  auto flat = [&](int a, int b) { return a * h.order + b; };
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int n1 = 0; n1 < n.order; ++n1)
    for (int h1 = 0; h1 < h.order; ++h1)
      for (int n2 = 0; n2 < n.order; ++n2)
        for (int h2 = 0; h2 < h.order; ++h2)
          t[flat(n1, h1)][flat(n2, h2)] =
              flat(n.mul(act.perm[h2][n1], n2), h.mul(h1, h2));
  return group_from_table(t);
}

std::vector<std::vector<int>> orbits(const GroupAction& act) {
  std::vector<int> seen(act.set_size, 0);
  std::vector<std::vector<int>> out;
  for (int m = 0; m < act.set_size; ++m) {
    if (seen[m]) continue;
    std::vector<int> orb;
    for (int g = 0; g < act.group.order; ++g) orb.push_back(act.perm[g][m]);
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    for (int y : orb) seen[y] = 1;
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  return out;
}

std::vector<int> stabilizer(const GroupAction& act, int point) {
  std::vector<int> s;
  for (int g = 0; g < act.group.order; ++g)
    if (act.perm[g][point] == point) s.push_back(g);
  return s;
}

std::vector<Mat> regular_representation(const FiniteGroup& g) {
  std::vector<Mat> l(g.order, Mat::Zero(g.order, g.order));
  for (int x = 0; x < g.order; ++x)
    for (int h = 0; h < g.order; ++h) l[x](g.mul(x, h), h) = 1.0;
  return l;
}

std::vector<std::vector<Mat>> irrep_matrices(const FiniteGroup& g,
                                             const CharacterTable& ct,
                                             std::uint64_t seed) {
  int n = g.order;
  int r = static_cast<int>(ct.degrees.size());
  std::vector<Mat> l = regular_representation(g);
  std::mt19937_64 rng(seed ^ (group_hash(g) * 0x9e3779b97f4a7c15ull));

  std::vector<std::vector<Mat>> result;
  for (int i = 0; i < r; ++i) {
    int d = ct.degrees[i];
    Mat proj = Mat::Zero(n, n);
    for (int x = 0; x < n; ++x)
      proj += std::conj(ct.value(i, x)) * l[x];
    proj *= static_cast<double>(d) / static_cast<double>(n);

    bool done = false;
    for (int attempt = 0; attempt < 20 && !done; ++attempt) {
      Mat pinched = proj * random_hermitian(n, rng) * proj;
      Mat t = Mat::Zero(n, n);
      for (int x = 0; x < n; ++x) {
        int xi = g.inv(x);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) t(a, b) += pinched(g.mul(xi, a), g.mul(xi, b));
      }
      t /= static_cast<double>(n);
      t = 0.5 * (t + Mat(t.adjoint()));
      Eigen::SelfAdjointEigenSolver<Mat> es(t);
      if (es.info() != Eigen::Success) continue;
      Eigen::VectorXd ev = es.eigenvalues();
      double top = ev(n - 1);
      double ctol = 1e-7 * std::max(1.0, std::abs(top));
      int first = n;
      while (first > 0 && ev(first - 1) >= top - ctol) --first;
      if (n - first != d) continue;
      if (std::abs(top) < 1e-6) continue;
      if (first > 0 && ev(first - 1) > top - 1e-5 * std::max(1.0, std::abs(top))) continue;
      Mat basis = es.eigenvectors().rightCols(d);
      std::vector<Mat> rep(n);
      for (int x = 0; x < n; ++x) rep[x] = basis.adjoint() * l[x] * basis;
      bool ok = approx_equal(rep[0], Mat::Identity(d, d), kTol);
      for (int x = 0; x < n && ok; ++x) {
        if (std::abs(rep[x].trace() - ct.value(i, x)) > kTol) ok = false;
        if (!approx_equal(rep[x].adjoint() * rep[x], Mat::Identity(d, d), kTol)) ok = false;
      }
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          if (!approx_equal(rep[x] * rep[y], rep[g.mul(x, y)], kTol)) ok = false;
      if (!ok) continue;
      result.push_back(std::move(rep));
      done = true;
    }
    if (!done)
      fail_degenerate("NumericalDegeneracy",
                      "irreducible representation extraction failed after 20 attempts");
  }
  return result;
}

}  // namespace xmodcat
