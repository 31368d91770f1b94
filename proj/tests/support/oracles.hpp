#pragma once

// Independent reference computations the tests compare the library against.
// Each one reaches its answer by a route the library never takes: explicit
// matrix realizations, closed-form frame curvature for three-dimensional
// groups, and divided differences with Richardson extrapolation.

#include <Eigen/Dense>

#include <functional>

#include "kropina/lie_algebra.hpp"

namespace oracles {

// The antisymmetric matrix with +1 in entry (i,j) and -1 in entry (j,i),
// 1-based indices, i < j <= n.
Eigen::MatrixXd so_matrix(int n, int i, int j);

// so(n) built from explicit matrix commutators (coordinates read off the
// upper triangle), not from a structure-constant formula.
kropina::LieAlgebra so_from_matrices(int n);

// Killing form of so(n) computed as (n-2) tr(XY) on the matrix realization.
Eigen::MatrixXd so_killing_from_trace(int n);

// Ricci tensor (basis coordinates, diagonal) of a three-dimensional algebra
// in cyclic form
//   [e2,e3] = a1 e1,  [e3,e1] = a2 e2,  [e1,e2] = a3 e3
// with the diagonal metric diag(lambda), through the orthonormal-frame
// curvature of such metrics: with ai' = ai sqrt(li / (lj lk)) and
// ki = (aj' + ak' - ai')/2, the sectional curvatures are
// K(fi,fj) = ak' kk - ki kj and Ricci follows by summing.
Eigen::Matrix3d milnor_ricci(const Eigen::Vector3d& a, const Eigen::Vector3d& lambda);

// Derivative of f at x by central differences with steps h and h/2 combined
// by Richardson extrapolation (error O(h^4)).
double richardson_derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace oracles
