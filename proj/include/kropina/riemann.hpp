#pragma once

#include <Eigen/Dense>

#include <vector>

#include "kropina/lie_algebra.hpp"

namespace kropina {

// Levi-Civita connection of a left-invariant metric, tabulated on the basis:
// gamma[i].col(j) holds the coordinates of nabla_{e_i} e_j.
struct ConnectionTable {
  std::vector<Eigen::MatrixXd> gamma;

  // nabla_u v for constant-coefficient (left-invariant) fields.
  Eigen::VectorXd nabla(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;
};

// Full curvature tensor on the basis: R(e_i, e_j) e_k.
struct CurvatureTable {
  int dim = 0;
  // op[i*dim + j] is the matrix whose column k is R(e_i, e_j) e_k.
  std::vector<Eigen::MatrixXd> op;

  const Eigen::MatrixXd& operator()(int i, int j) const { return op[i * dim + j]; }
  Eigen::VectorXd apply(const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                        const Eigen::VectorXd& w) const;
};

// Least-squares proportionality of the Ricci tensor to the metric:
// sigma = <Ric, g>_F / <g, g>_F, residual = ||Ric - sigma g||_F / ||g||_F.
struct EinsteinFit {
  double sigma = 0.0;
  double residual = 0.0;
};

// Connection from the Koszul formula
//   2 <nabla_u v, w> = <[u,v],w> - <[v,w],u> + <[w,u],v>.
ConnectionTable koszul_connection(const LieAlgebra& A, const InnerProduct& g);

// R(u,v)w = nabla_u nabla_v w - nabla_v nabla_u w - nabla_[u,v] w.
CurvatureTable riemann_curvature(const LieAlgebra& A, const InnerProduct& g);

// Ricci tensor on the basis, Ric(u,v) = sum_k <R(f_k, u)v, f_k> over a
// g-orthonormal frame f_k (Gram-Schmidt on the basis in order).
Eigen::MatrixXd riemann_ricci(const LieAlgebra& A, const InnerProduct& g);

EinsteinFit einstein_fit(const Eigen::MatrixXd& ric, const Eigen::MatrixXd& g);

// Solution space of ad(w) + ad*(w) = 0: the left-invariant vectors whose
// associated fields are Killing for the left-invariant metric g.  Columns are
// g-orthonormal and sign-normalized.
Eigen::MatrixXd killing_space(const LieAlgebra& A, const InnerProduct& g);

}  // namespace kropina
