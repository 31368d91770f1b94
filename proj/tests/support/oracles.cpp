#include "support/oracles.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace oracles {

Eigen::MatrixXd so_matrix(int n, int i, int j) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  m(i - 1, j - 1) = 1.0;
  m(j - 1, i - 1) = -1.0;
  return m;
}

kropina::LieAlgebra so_from_matrices(int n) {
  std::vector<Eigen::MatrixXd> basis;
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      basis.push_back(so_matrix(n, i, j));
      names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));
    }
  const int N = static_cast<int>(basis.size());

  // Coordinates of an antisymmetric matrix: read the upper triangle in the
  // same order the basis was laid out.
  auto coords = [&](const Eigen::MatrixXd& c) {
    Eigen::VectorXd v(N);
    int at = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) v[at++] = c(i, j);
    return v;
  };

  std::vector<Eigen::MatrixXd> ad(N, Eigen::MatrixXd::Zero(N, N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      ad[a].col(b) = coords(basis[a] * basis[b] - basis[b] * basis[a]);
  return kropina::LieAlgebra::from_adjoint_list(std::move(names), std::move(ad));
}

Eigen::MatrixXd so_killing_from_trace(int n) {
  std::vector<Eigen::MatrixXd> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) basis.push_back(so_matrix(n, i, j));
  const int N = static_cast<int>(basis.size());
  Eigen::MatrixXd B(N, N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) B(a, b) = (n - 2) * (basis[a] * basis[b]).trace();
  return B;
}

Eigen::Matrix3d milnor_ricci(const Eigen::Vector3d& a, const Eigen::Vector3d& lambda) {
  const double l1 = lambda[0], l2 = lambda[1], l3 = lambda[2];
  const double a1 = a[0] * std::sqrt(l1 / (l2 * l3));
  const double a2 = a[1] * std::sqrt(l2 / (l3 * l1));
  const double a3 = a[2] * std::sqrt(l3 / (l1 * l2));
  const double k1 = 0.5 * (a2 + a3 - a1);
  const double k2 = 0.5 * (a3 + a1 - a2);
  const double k3 = 0.5 * (a1 + a2 - a3);
  const double K12 = a3 * k3 - k1 * k2;
  const double K23 = a1 * k1 - k2 * k3;
  const double K31 = a2 * k2 - k3 * k1;
  Eigen::Matrix3d ric = Eigen::Matrix3d::Zero();
  ric(0, 0) = l1 * (K12 + K31);
  ric(1, 1) = l2 * (K12 + K23);
  ric(2, 2) = l3 * (K23 + K31);
  return ric;
}

double richardson_derivative(const std::function<double(double)>& f, double x, double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace oracles
