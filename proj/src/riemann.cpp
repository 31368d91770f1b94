#include "kropina/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "kropina/errors.hpp"
#include "kropina/numeric.hpp"

namespace kropina {

Eigen::VectorXd ConnectionTable::nabla(const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v) const {
  const int dim = static_cast<int>(gamma.size());
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    if (u[i] != 0.0) out.noalias() += u[i] * (gamma[i] * v);
  }
  return out;
}

Eigen::VectorXd CurvatureTable::apply(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                                      const Eigen::VectorXd& w) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const double c = u[i] * v[j];
      if (c != 0.0) out.noalias() += c * ((*this)(i, j) * w);
    }
  }
  return out;
}

ConnectionTable koszul_connection(const LieAlgebra& A, const InnerProduct& g) {
  if (g.dim() != A.dim()) throw InputError("metric dimension does not match algebra");
  const int n = A.dim();
  ConnectionTable conn;
  conn.gamma.assign(n, Eigen::MatrixXd(n, n));
  const Eigen::MatrixXd& gm = g.matrix();
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      Eigen::VectorXd rhs(n);
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        // 2 <nabla_i e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>
        rhs[k] = 0.5 * (A.bracket(ei, ej).dot(gm * ek) - A.bracket(ej, ek).dot(gm * ei) +
                        A.bracket(ek, ei).dot(gm * ej));
      }
      conn.gamma[i].col(j) = g.solve(rhs);
    }
  }
  return conn;
}

CurvatureTable riemann_curvature(const LieAlgebra& A, const InnerProduct& g) {
  const int n = A.dim();
  const ConnectionTable conn = koszul_connection(A, g);
  CurvatureTable R;
  R.dim = n;
  R.op.assign(n * n, Eigen::MatrixXd::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    for (int j = 0; j < n; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      const Eigen::VectorXd bij = A.bracket(ei, ej);
      Eigen::MatrixXd& out = R.op[i * n + j];
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        out.col(k) = conn.nabla(ei, conn.nabla(ej, ek)) -
                     conn.nabla(ej, conn.nabla(ei, ek)) - conn.nabla(bij, ek);
      }
    }
  }
  return R;
}

Eigen::MatrixXd riemann_ricci(const LieAlgebra& A, const InnerProduct& g) {
  const int n = A.dim();
  const CurvatureTable R = riemann_curvature(A, g);
  const Eigen::MatrixXd frame =
      gram_schmidt(Eigen::MatrixXd::Identity(n, n), g.matrix());
  if (frame.cols() != n) throw InputError("metric produced a degenerate frame");
  Eigen::MatrixXd ric(n, n);
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
    for (int j = i; j < n; ++j) {
      const Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      double s = 0.0;
      for (int k = 0; k < n; ++k) {
        const Eigen::VectorXd fk = frame.col(k);
        s += g.ip(R.apply(fk, ei, ej), fk);
      }
      ric(i, j) = ric(j, i) = s;
    }
  }
  return ric;
}

EinsteinFit einstein_fit(const Eigen::MatrixXd& ric, const Eigen::MatrixXd& g) {
  EinsteinFit fit;
  const double gg = frobenius_ip(g, g);
  fit.sigma = frobenius_ip(ric, g) / gg;
  fit.residual = (ric - fit.sigma * g).norm() / std::sqrt(gg);
  return fit;
}

Eigen::MatrixXd killing_space(const LieAlgebra& A, const InnerProduct& g) {
  if (g.dim() != A.dim()) throw InputError("metric dimension does not match algebra");
  const int n = A.dim();
  // Column i of the stacked system is vec(ad(e_i) + ad*(e_i)); the kernel of
  // w -> ad(w) + ad*(w) is the space sought.
  Eigen::MatrixXd M(n * n, n);
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const Eigen::MatrixXd op =
        A.ad_basis(i) + g.solve(Eigen::MatrixXd(A.ad_basis(i).transpose() * g.matrix()));
    M.col(i) = Eigen::Map<const Eigen::VectorXd>(op.data(), n * n);
    // The symmetrization can cancel to rounding noise (bi-invariant metrics),
    // so the kernel cutoff must be measured against the ad magnitude instead.
    scale = std::max(scale, A.ad_basis(i).norm());
  }
  const Eigen::MatrixXd ker = kernel_basis(M, kKernelRelTol, scale);
  Eigen::MatrixXd out = gram_schmidt(ker, g.matrix());
  for (int j = 0; j < out.cols(); ++j) out.col(j) = sign_normalized(out.col(j));
  return out;
}

}  // namespace kropina
