#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace kropina {

// One defining bracket [e_i, e_j] = sum_k coeffs[k] e_k with i < j; the
// antisymmetric partner is implied.
struct BracketTerm {
  int i = 0;
  int j = 0;
  Eigen::VectorXd coeffs;
};

// Finite-dimensional real Lie algebra given by structure constants on a fixed
// basis.  Stored as the family of adjoint matrices ad(e_i); everything else
// (brackets, Killing form, center) is derived from them.  No matrix
// realization of the algebra elements is ever required.
class LieAlgebra {
 public:
  // Validated constructors: reject non-antisymmetric data exactly and any
  // Jacobi defect above 1e-12.
  static LieAlgebra from_brackets(int dim, std::vector<std::string> basis_names,
                                  const std::vector<BracketTerm>& brackets);
  static LieAlgebra from_adjoint_list(std::vector<std::string> basis_names,
                                      std::vector<Eigen::MatrixXd> ad_basis);

  // Skips validation; for inspecting candidate structure constants that may
  // fail the Lie axioms (jacobi_defect stays callable on the result).
  static LieAlgebra from_adjoint_list_unchecked(std::vector<std::string> basis_names,
                                                std::vector<Eigen::MatrixXd> ad_basis);

  int dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }

  // ad(e_i) as a matrix: column j holds the coordinates of [e_i, e_j].
  const Eigen::MatrixXd& ad_basis(int i) const { return ad_[i]; }

  // [u, v] in basis coordinates.
  Eigen::VectorXd bracket(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

  // ad(w) = sum_i w_i ad(e_i).
  Eigen::MatrixXd ad_matrix(const Eigen::VectorXd& w) const;

  // Metric adjoint of ad(w) with respect to an SPD matrix g:
  // ad*(w) = g^{-1} ad(w)^T g, so <ad*(w)u, v>_g = <u, [w,v]>_g.
  Eigen::MatrixXd ad_star_matrix(const Eigen::VectorXd& w, const Eigen::MatrixXd& g) const;

  // Killing form B(u,v) = tr(ad u ad v), returned as a symmetric matrix on
  // the basis.
  Eigen::MatrixXd killing_form() const;

  // Euclidean-orthonormal basis of {w : [w, .] = 0}, columns sign-normalized.
  Eigen::MatrixXd center() const;

  // max over basis triples of ||[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] +
  // [e_k,[e_i,e_j]]||_inf.  Zero (up to 1e-12) iff the data is a Lie algebra.
  double jacobi_defect() const;

  // Exact check c^k_{ij} = -c^k_{ji}.
  bool antisymmetric() const;

 private:
  LieAlgebra(std::vector<std::string> names, std::vector<Eigen::MatrixXd> ad);

  int dim_;
  std::vector<std::string> names_;
  std::vector<Eigen::MatrixXd> ad_;
};

// Symmetric bilinear form on a fixed basis; used for ambient forms that need
// not be definite (e.g. trace forms restricted later).
class BilinearForm {
 public:
  explicit BilinearForm(Eigen::MatrixXd g);
  const Eigen::MatrixXd& matrix() const { return g_; }
  int dim() const { return static_cast<int>(g_.rows()); }
  double operator()(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(g_ * v);
  }

 private:
  Eigen::MatrixXd g_;
};

// Positive-definite inner product; the left-invariant metric data of the
// library.  Construction verifies symmetry (exactly, as stored) and positive
// definiteness.
class InnerProduct {
 public:
  explicit InnerProduct(Eigen::MatrixXd g);

  const Eigen::MatrixXd& matrix() const { return g_; }
  int dim() const { return static_cast<int>(g_.rows()); }

  double ip(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
    return u.dot(g_ * v);
  }
  double norm(const Eigen::VectorXd& u) const;

  // Solve g x = rhs (Cholesky).
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;

 private:
  Eigen::MatrixXd g_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
};

}  // namespace kropina
