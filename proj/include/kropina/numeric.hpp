#pragma once

#include <Eigen/Dense>

#include <random>

namespace kropina {

// Relative singular-value threshold used when extracting kernels of the
// linear maps that define centers, Killing spaces and isotropy-invariant
// complements.
inline constexpr double kKernelRelTol = 1e-10;

// Orthonormal (Euclidean) basis of ker(M), columns sorted deterministically.
// Singular values below rel_tol * max(sigma_max, scale) count as zero.  The
// scale parameter matters when M is assembled by cancellation: a matrix whose
// entries are pure rounding noise has a tiny sigma_max of its own, so the
// caller must supply the magnitude of the quantities that cancelled (pass 0
// to fall back to sigma_max alone).  Each basis vector is sign-normalized so
// that its first coordinate of significant magnitude is positive, which
// makes repeated runs byte-for-byte reproducible.
Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M, double rel_tol = kKernelRelTol,
                             double scale = 0.0);

// Flip v so its first coordinate with |v_i| > 1e-9 * max|v| is positive.
Eigen::VectorXd sign_normalized(const Eigen::VectorXd& v);

// Modified Gram-Schmidt against the inner product x^T g y, processing the
// columns of V in order.  Columns that become numerically dependent (norm
// below drop_tol relative to the original) are dropped.
Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& V, const Eigen::MatrixXd& g,
                             double drop_tol = 1e-12);

// <A, B> = sum_ij A_ij B_ij.
double frobenius_ip(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

// Deterministic pseudo-random source for sampling-based checks.  All draws
// are derived from the raw 64-bit stream of a seeded mt19937_64 through fully
// specified arithmetic, so identical seeds give identical samples on any
// platform; none of the distribution classes from <random> (whose output is
// implementation-defined) are involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);
  // Componentwise uniform in [-1, 1).
  Eigen::VectorXd box(int dim);
  // Uniform in the closed Euclidean ball of the given radius (Gaussian
  // direction plus radial transform; no rejection, so it works in any
  // dimension).
  Eigen::VectorXd ball(int dim, double radius);

 private:
  std::mt19937_64 gen_;  // raw stream only; its output is fully specified
};

}  // namespace kropina
