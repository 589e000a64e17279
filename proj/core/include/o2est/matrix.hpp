#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace o2est {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

// Thrown when an operation's stated precondition fails (bad operand,
// non-finite entry, incomplete basis, ...).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a construction is well-posed but cannot be carried out at
// the requested scale (dimension caps).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a greedy/search construction hits a genuine obstruction
// (empty spectral intersection, degenerate branch point, ...).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default tolerances, shared across the suites.
inline constexpr double kEqTol = 1e-10;     // equality-style postconditions
inline constexpr double kIneqSlack = 1e-9;  // inequality verification slack

bool all_finite(const ComplexMatrix& m);

/// Largest singular value.  Dense SVD up to `dense_cutoff`; power iteration
/// on M*M above it (threshold 1e-12, capped at 1e5 iterations).
double operator_norm(const ComplexMatrix& m, int dense_cutoff = 512);

/// Matrix-free operator norm for structured operators.  `apply` must
/// implement v -> M v and `apply_adjoint` v -> M* v on C^dim.
double operator_norm_matfree(
    int dim, const std::function<ComplexVector(const ComplexVector&)>& apply,
    const std::function<ComplexVector(const ComplexVector&)>& apply_adjoint,
    double tol = 1e-12, int max_iter = 100000);

struct HermitianEigen {
  Eigen::VectorXd eigenvalues;  // ascending
  ComplexMatrix eigenvectors;   // unitary, columns
};

HermitianEigen hermitian_eigen(const ComplexMatrix& m, double tol = kEqTol);

/// Eigenvalues of a normal matrix, with per-pair residual check
/// ||Mv - lambda v|| <= tol.  Rejects non-normal input.
std::vector<Complex> spectrum_normal(const ComplexMatrix& m,
                                     double tol = 1e-8);

enum class ScalarFn { Sqrt, InvSqrt };

/// f applied on the spectrum of a Hermitian matrix via eigendecomposition.
ComplexMatrix hermitian_function(const ComplexMatrix& m, ScalarFn f,
                                 double tol = 1e-8);

/// exp(i t M) for Hermitian M.
ComplexMatrix exp_i_t(const ComplexMatrix& m, double t, double tol = 1e-8);

/// Hermitian h with exp(ih) = U and sp(h) in (phi - 2*pi, phi), for a
/// unitary U with no eigenvalue at the branch point exp(i*phi).
ComplexMatrix log_branch(const ComplexMatrix& u, double phi,
                         double tol = 1e-8);

struct PolarIsometry {
  ComplexMatrix v;  // partial isometry with v*v = p
  double delta;     // ||x*x - p||
  double bound;     // 1 - sqrt(1 - delta)
};

/// v = x (x*x)^(-1/2), functional calculus in the corner pAp.
/// Requires xp = x and delta = ||x*x - p|| < 1; then v*v = p and
/// ||v - x|| <= 1 - sqrt(1 - delta) <= delta.
PolarIsometry polar_partial_isometry(const ComplexMatrix& x,
                                     const ComplexMatrix& p,
                                     double tol = 1e-8);

// small helpers used throughout the suites
ComplexMatrix adjoint(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-8);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-8);
bool is_projection(const ComplexMatrix& m, double tol = 1e-8);
/// ||s*s - 1_k|| for a rectangular n x k candidate isometry.
double isometry_defect(const ComplexMatrix& s);

}  // namespace o2est
