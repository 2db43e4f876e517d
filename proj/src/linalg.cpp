#include "xmodcat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "xmodcat/errors.hpp"

namespace xmodcat {

double max_abs(const Mat& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

bool approx_equal(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

bool approx_zero(const Mat& a, double tol) { return max_abs(a) <= tol; }

Mat kron(const Mat& a, const Mat& b) {
  Mat c = Mat::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == cplx(0.0, 0.0)) continue;
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  return c;
}

Mat kron_apply(const Mat& a, const Mat& b, const Mat& x) {
  Eigen::Index ra = a.rows(), ca = a.cols(), rb = b.rows(), cb = b.cols();
  if (x.rows() != ca * cb)
    fail_invariant("InvariantFailure", "kron_apply shape mismatch");
  Mat out(ra * rb, x.cols());
  Mat y(ca, cb);
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    for (Eigen::Index i = 0; i < ca; ++i)
      for (Eigen::Index j = 0; j < cb; ++j) y(i, j) = x(i * cb + j, c);
    Mat z = a * y * b.transpose();
    for (Eigen::Index i = 0; i < ra; ++i)
      for (Eigen::Index j = 0; j < rb; ++j) out(i * rb + j, c) = z(i, j);
  }
  return out;
}

Mat apply_kron(const Mat& x, const Mat& a, const Mat& b) {
  return kron_apply(a.transpose(), b.transpose(), x.transpose()).transpose();
}

Mat flip_map(int dim_v, int dim_w) {
  Mat f = Mat::Zero(dim_w * dim_v, dim_v * dim_w);
  for (int i = 0; i < dim_v; ++i)
    for (int j = 0; j < dim_w; ++j) f(j * dim_v + i, i * dim_w + j) = 1.0;
  return f;
}

bool near_integer(double x, double guard) {
  return std::abs(x - std::round(x)) <= guard;
}

long long round_integer(double x, double guard, const char* what) {
  if (!near_integer(x, guard))
    fail_invariant("InvariantFailure",
                   std::string(what) + " is not an integer within guard: " + std::to_string(x));
  return static_cast<long long>(std::llround(x));
}

namespace {
long long grid9(double x) { return std::llround(x * 1e9); }
}  // namespace

int compare_complex(cplx a, cplx b) {
  long long ra = grid9(a.real()), rb = grid9(b.real());
  if (ra != rb) return ra > rb ? -1 : 1;
  long long ia = grid9(a.imag()), ib = grid9(b.imag());
  if (ia != ib) return ia > ib ? -1 : 1;
  return 0;
}

int compare_rows(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare_complex(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

namespace {

// Greedy modified Gram-Schmidt over the columns of a; records both the
// picked column indices and the orthonormal vectors.
void greedy_gs(const Mat& a, double tol, std::vector<int>* picked,
               std::vector<Vec>* basis) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Vec v = a.col(j);
    double orig = v.norm();
    if (orig <= tol) continue;
    for (const Vec& b : *basis) v -= b.dot(v) * b;
    for (const Vec& b : *basis) v -= b.dot(v) * b;  // second pass for stability
    if (v.norm() > tol * std::max(1.0, orig)) {
      if (picked) picked->push_back(static_cast<int>(j));
      basis->push_back(v.normalized());
    }
  }
}

}  // namespace

std::vector<int> greedy_independent_columns(const Mat& a, double tol) {
  std::vector<int> picked;
  std::vector<Vec> basis;
  greedy_gs(a, tol, &picked, &basis);
  return picked;
}

Mat orthonormal_colspace(const Mat& a, double tol) {
  std::vector<Vec> basis;
  greedy_gs(a, tol, nullptr, &basis);
  Mat b(a.rows(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = basis[k];
  return b;
}

SubspaceRealization image_of_idempotent(const Mat& pi, double tol) {
  if (pi.rows() != pi.cols())
    fail_invariant("InvariantFailure", "idempotent must be square");
  double scale = std::max(1.0, max_abs(pi));
  if (!approx_zero(pi * pi - pi, 1e-3 * scale))
    fail_invariant("InvariantFailure", "matrix is not idempotent, residual " +
                                           std::to_string(max_abs(pi * pi - pi)));
  SubspaceRealization r;
  r.include = orthonormal_colspace(pi, 1e-7 * scale);
  r.project = r.include.adjoint() * pi;
  r.rank = static_cast<int>(r.include.cols());
  if (!approx_equal(pi * r.include, r.include, 1e-6 * scale) ||
      !approx_equal(r.project * r.include,
                    Mat::Identity(r.rank, r.rank), 1e-6 * scale))
    fail_invariant("InvariantFailure", "idempotent image realization failed");
  (void)tol;
  return r;
}

QuotientRealization quotient_by_span(const Mat& span_cols, int n, double tol) {
  QuotientRealization q;
  q.sub_basis = span_cols.size() == 0 ? Mat::Zero(n, 0)
                                      : orthonormal_colspace(span_cols, 1e-7);
  int r = static_cast<int>(q.sub_basis.cols());
  // complete with standard basis vectors, greedily in index order
  std::vector<Vec> basis;
  for (int k = 0; k < r; ++k) basis.push_back(q.sub_basis.col(k));
  std::vector<int> chosen;
  for (int j = 0; j < n && static_cast<int>(chosen.size()) < n - r; ++j) {
    Vec v = Vec::Zero(n);
    v(j) = 1.0;
    for (const Vec& b : basis) v -= b.dot(v) * b;
    for (const Vec& b : basis) v -= b.dot(v) * b;
    if (v.norm() > 1e-7) {
      chosen.push_back(j);
      basis.push_back(v.normalized());
    }
  }
  int qdim = static_cast<int>(chosen.size());
  if (r + qdim != n)
    fail_invariant("InvariantFailure", "quotient basis completion failed");
  q.section = Mat::Zero(n, qdim);
  for (int k = 0; k < qdim; ++k) q.section(chosen[k], k) = 1.0;
  Mat b(n, n);
  b.leftCols(r) = q.sub_basis;
  b.rightCols(qdim) = q.section;
  Mat binv = b.fullPivLu().solve(Mat::Identity(n, n));
  q.coords = binv.bottomRows(qdim);
  if (!approx_equal(q.coords * q.section, Mat::Identity(qdim, qdim), 1e-8) ||
      !approx_zero(q.coords * q.sub_basis, 1e-8))
    fail_invariant("InvariantFailure", "quotient realization failed");
  (void)tol;
  return q;
}

Mat induced_on_quotient(const QuotientRealization& q, const Mat& t, double tol) {
  double scale = std::max(1.0, max_abs(t));
  if (q.sub_basis.cols() > 0 && !approx_zero(q.coords * (t * q.sub_basis), tol * scale))
    fail_invariant("InvariantFailure",
                   "operator does not preserve the subspace being factored out");
  return q.coords * t * q.section;
}

Mat random_hermitian(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = cplx(u(rng), u(rng));
  return 0.5 * (m + Mat(m.adjoint()));
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t hash_ints(const std::vector<int>& v, std::uint64_t basis) {
  std::uint64_t h = basis;
  for (int x : v) {
    std::uint64_t w = static_cast<std::uint64_t>(static_cast<long long>(x));
    for (int b = 0; b < 8; ++b) {
      h ^= (w >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace xmodcat
