#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace xmodcat {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kTol = 1e-8;
inline constexpr std::uint64_t kDefaultSeed = 1234567;

double max_abs(const Mat& a);
bool approx_equal(const Mat& a, const Mat& b, double tol);
bool approx_zero(const Mat& a, double tol);

Mat kron(const Mat& a, const Mat& b);

// kron(a, b) * x and x * kron(a, b) without materializing the Kronecker
// product, via per-column reshaping.
Mat kron_apply(const Mat& a, const Mat& b, const Mat& x);
Mat apply_kron(const Mat& x, const Mat& a, const Mat& b);

// Transposition V (x) W -> W (x) V on Kronecker coordinates.
Mat flip_map(int dim_v, int dim_w);

bool near_integer(double x, double guard = 1e-6);
// Nearest integer; throws InvariantFailure when farther away than the guard.
long long round_integer(double x, double guard = 1e-6, const char* what = "value");

// Entry order used for canonical character sorting: larger real part first,
// then larger imaginary part, compared on a 1e-9 grid.
int compare_complex(cplx a, cplx b);
int compare_rows(const std::vector<cplx>& a, const std::vector<cplx>& b);

// Indices of a maximal linearly independent subset of columns, chosen
// greedily in column order (deterministic).
std::vector<int> greedy_independent_columns(const Mat& a, double tol);

// Orthonormal basis of the column space via greedy modified Gram-Schmidt.
Mat orthonormal_colspace(const Mat& a, double tol);

// Image of an idempotent with an orthonormal basis.  project * include = id
// and project realizes the quotient map v -> coordinates of pi(v).
struct SubspaceRealization {
  Mat include;  // n x r
  Mat project;  // r x n
  int rank = 0;
};
SubspaceRealization image_of_idempotent(const Mat& pi, double tol);

// Quotient of C^n by the column span of span_cols, realized on a complement
// spanned by standard basis vectors (chosen greedily, deterministic).
struct QuotientRealization {
  Mat sub_basis;  // n x r, orthonormal basis of the subspace
  Mat section;    // n x q, the chosen standard basis vectors
  Mat coords;     // q x n, v -> quotient coordinates
};
QuotientRealization quotient_by_span(const Mat& span_cols, int n, double tol);

// coords * t * section, after checking that t maps the subspace into itself.
Mat induced_on_quotient(const QuotientRealization& q, const Mat& t, double tol);

Mat random_hermitian(int n, std::mt19937_64& rng);

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t hash_ints(const std::vector<int>& v,
                        std::uint64_t basis = 1469598103934665603ull);

}  // namespace xmodcat
