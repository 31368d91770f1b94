#include "kropina/lie_algebra.hpp"

#include <cmath>
#include <utility>

#include "kropina/errors.hpp"
#include "kropina/numeric.hpp"

namespace kropina {

namespace {

void check_names(int dim, std::vector<std::string>& names) {
  if (names.empty()) {
    names.reserve(dim);
    for (int i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  if (static_cast<int>(names.size()) != dim) {
    throw InputError("basis name count does not match dimension");
  }
}

}  // namespace

LieAlgebra::LieAlgebra(std::vector<std::string> names, std::vector<Eigen::MatrixXd> ad)
    : dim_(static_cast<int>(ad.size())), names_(std::move(names)), ad_(std::move(ad)) {}

LieAlgebra LieAlgebra::from_adjoint_list_unchecked(std::vector<std::string> names,
                                                   std::vector<Eigen::MatrixXd> ad) {
  const int dim = static_cast<int>(ad.size());
  if (dim == 0) throw InputError("Lie algebra must have positive dimension");
  for (const auto& m : ad) {
    if (m.rows() != dim || m.cols() != dim) {
      throw InputError("adjoint matrix dimensions inconsistent with algebra dimension");
    }
  }
  check_names(dim, names);
  return LieAlgebra(std::move(names), std::move(ad));
}

LieAlgebra LieAlgebra::from_adjoint_list(std::vector<std::string> names,
                                         std::vector<Eigen::MatrixXd> ad) {
  LieAlgebra a = from_adjoint_list_unchecked(std::move(names), std::move(ad));
  if (!a.antisymmetric()) {
    throw InputError("structure constants are not antisymmetric: c^k_ij != -c^k_ji");
  }
  const double defect = a.jacobi_defect();
  if (!(defect <= 1e-12)) {
    throw InputError("Jacobi identity violated (defect " + std::to_string(defect) + ")");
  }
  return a;
}

LieAlgebra LieAlgebra::from_brackets(int dim, std::vector<std::string> names,
                                     const std::vector<BracketTerm>& brackets) {
  if (dim <= 0) throw InputError("Lie algebra must have positive dimension");
  std::vector<Eigen::MatrixXd> ad(dim, Eigen::MatrixXd::Zero(dim, dim));
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= dim || b.j >= dim) {
      throw InputError("bracket index out of range");
    }
    if (b.i >= b.j) throw InputError("brackets must be listed once per pair with i < j");
    if (b.coeffs.size() != dim) throw InputError("bracket coefficient vector has wrong length");
    for (int k = 0; k < dim; ++k) {
      ad[b.i](k, b.j) = b.coeffs[k];
      ad[b.j](k, b.i) = -b.coeffs[k];
    }
  }
  return from_adjoint_list(std::move(names), std::move(ad));
}

Eigen::VectorXd LieAlgebra::bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  if (u.size() != dim_ || v.size() != dim_) {
    throw InputError("bracket argument dimension mismatch");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (u[i] != 0.0) out.noalias() += u[i] * (ad_[i] * v);
  }
  return out;
}

Eigen::MatrixXd LieAlgebra::ad_matrix(const Eigen::VectorXd& w) const {
  if (w.size() != dim_) throw InputError("ad_matrix argument dimension mismatch");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    if (w[i] != 0.0) out.noalias() += w[i] * ad_[i];
  }
  return out;
}

Eigen::MatrixXd LieAlgebra::ad_star_matrix(const Eigen::VectorXd& w,
                                           const Eigen::MatrixXd& g) const {
  InnerProduct ip(g);  // validates SPD
  return ip.solve(Eigen::MatrixXd(ad_matrix(w).transpose() * g));
}

Eigen::MatrixXd LieAlgebra::killing_form() const {
  Eigen::MatrixXd B(dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      B(i, j) = B(j, i) = (ad_[i] * ad_[j]).trace();
    }
  }
  return B;
}

Eigen::MatrixXd LieAlgebra::center() const {
  // Stack the linear map w -> ad(w) as a (dim^2 x dim) matrix; its kernel is
  // the center.
  Eigen::MatrixXd M(dim_ * dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    M.col(i) = Eigen::Map<const Eigen::VectorXd>(ad_[i].data(), dim_ * dim_);
  }
  return kernel_basis(M);
}

double LieAlgebra::jacobi_defect() const {
  double worst = 0.0;
  Eigen::VectorXd ei(dim_), ej(dim_), ek(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = j + 1; k < dim_; ++k) {
        ei = Eigen::VectorXd::Unit(dim_, i);
        ej = Eigen::VectorXd::Unit(dim_, j);
        ek = Eigen::VectorXd::Unit(dim_, k);
        const Eigen::VectorXd cycle = bracket(ei, bracket(ej, ek)) +
                                      bracket(ej, bracket(ek, ei)) +
                                      bracket(ek, bracket(ei, ej));
        worst = std::max(worst, cycle.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

bool LieAlgebra::antisymmetric() const {
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        if (ad_[i](k, j) != -ad_[j](k, i)) return false;
      }
    }
  }
  return true;
}

BilinearForm::BilinearForm(Eigen::MatrixXd g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw InputError("bilinear form matrix must be square");
  if ((g_.array() != g_.transpose().array()).any()) {
    throw InputError("bilinear form matrix must be symmetric");
  }
}

InnerProduct::InnerProduct(Eigen::MatrixXd g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw InputError("metric matrix must be square");
  if ((g_.array() != g_.transpose().array()).any()) {
    throw InputError("metric matrix must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw InputError("metric matrix is not positive definite");
  }
  llt_.compute(g_);
}

double InnerProduct::norm(const Eigen::VectorXd& u) const {
  return std::sqrt(std::max(0.0, ip(u, u)));
}

Eigen::VectorXd InnerProduct::solve(const Eigen::VectorXd& rhs) const {
  return llt_.solve(rhs);
}

Eigen::MatrixXd InnerProduct::solve(const Eigen::MatrixXd& rhs) const {
  return llt_.solve(rhs);
}

}  // namespace kropina
