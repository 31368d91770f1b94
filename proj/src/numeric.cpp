#include "kropina/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "kropina/errors.hpp"

namespace kropina {

Eigen::VectorXd sign_normalized(const Eigen::VectorXd& v) {
  const double scale = v.cwiseAbs().maxCoeff();
  if (scale == 0.0) return v;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-9 * scale) return v[i] < 0.0 ? Eigen::VectorXd(-v) : v;
  }
  return v;
}

Eigen::MatrixXd kernel_basis(const Eigen::MatrixXd& M, double rel_tol, double scale) {
  const int n = static_cast<int>(M.cols());
  if (M.rows() == 0 || M.isZero(rel_tol * scale)) {
    return Eigen::MatrixXd::Identity(n, n);  // no constraints: full space
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = rel_tol * std::max(sv[0], scale);
  int rank = 0;
  while (rank < sv.size() && sv[rank] > cutoff) ++rank;
  Eigen::MatrixXd K(n, n - rank);
  for (int j = rank; j < n; ++j) {
    K.col(j - rank) = sign_normalized(svd.matrixV().col(j));
  }
  return K;
}

Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& V, const Eigen::MatrixXd& g,
                             double drop_tol) {
  Eigen::MatrixXd out(V.rows(), V.cols());
  int kept = 0;
  for (int j = 0; j < V.cols(); ++j) {
    Eigen::VectorXd v = V.col(j);
    const double norm0 = std::sqrt(v.dot(g * v));
    for (int k = 0; k < kept; ++k) {
      v -= out.col(k).dot(g * v) * out.col(k);
    }
    const double norm = std::sqrt(std::max(0.0, v.dot(g * v)));
    if (norm <= drop_tol * std::max(1.0, norm0)) continue;
    out.col(kept++) = v / norm;
  }
  out.conservativeResize(Eigen::NoChange, kept);
  return out;
}

double frobenius_ip(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) {
  return (A.array() * B.array()).sum();
}

double Rng::uniform() {
  // 53-bit mantissa draw; exact IEEE arithmetic, identical on every platform.
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

Eigen::VectorXd Rng::box(int dim) {
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = uniform(-1.0, 1.0);
  return v;
}

Eigen::VectorXd Rng::ball(int dim, double radius) {
  // Gaussian direction (Box-Muller) + radial transform: uniform in the ball
  // in any dimension, with no rejection loop.
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; i += 2) {
    double u1 = uniform(), u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    v[i] = r * std::cos(2.0 * M_PI * u2);
    if (i + 1 < dim) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
  }
  const double n = v.norm();
  if (n == 0.0) return Eigen::VectorXd::Zero(dim);
  return radius * std::pow(uniform(), 1.0 / dim) / n * v;
}

}  // namespace kropina
