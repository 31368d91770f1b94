#include "kropina/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "kropina/errors.hpp"
#include "kropina/numeric.hpp"

namespace kropina {

namespace {

// Exactly symmetric copy (averages the off-diagonal pairs), so the result is
// acceptable to the strict symmetry check in InnerProduct.
Eigen::MatrixXd symmetrized(const Eigen::MatrixXd& A) {
  Eigen::MatrixXd S(A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i) {
    S(i, i) = A(i, i);
    for (int j = i + 1; j < A.cols(); ++j) {
      const double v = 0.5 * (A(i, j) + A(j, i));
      S(i, j) = v;
      S(j, i) = v;
    }
  }
  return S;
}

double rel_defect(const Eigen::VectorXd& part, const Eigen::VectorXd& whole) {
  const double scale = std::max(1.0, whole.cwiseAbs().maxCoeff());
  return part.cwiseAbs().maxCoeff() / scale;
}

}  // namespace

ReductiveSpace::ReductiveSpace(LieAlgebra ambient, Eigen::MatrixXd H, Eigen::MatrixXd M,
                               Eigen::MatrixXd T_inv, InnerProduct metric_m)
    : ambient_(std::move(ambient)),
      H_(std::move(H)),
      M_(std::move(M)),
      T_inv_(std::move(T_inv)),
      metric_m_(std::move(metric_m)) {}

void ReductiveSpace::decompose(const Eigen::VectorXd& v, Eigen::VectorXd* m_part,
                               Eigen::VectorXd* h_part) const {
  if (v.size() != ambient_.dim()) throw InputError("ambient vector has wrong dimension");
  const Eigen::VectorXd c = T_inv_ * v;
  if (m_part) *m_part = c.head(m_dim());
  if (h_part) *h_part = c.tail(h_dim());
}

Eigen::VectorXd ReductiveSpace::to_m_coords(const Eigen::VectorXd& v, double tol) const {
  Eigen::VectorXd m_part, h_part;
  decompose(v, &m_part, &h_part);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  if (h_dim() > 0 && h_part.cwiseAbs().maxCoeff() > tol * scale) {
    throw InputError("vector does not lie in the invariant complement");
  }
  return m_part;
}

Eigen::VectorXd ReductiveSpace::bracket_m(const Eigen::VectorXd& u_m,
                                          const Eigen::VectorXd& v_m) const {
  const Eigen::VectorXd w = ambient_.bracket(M_ * u_m, M_ * v_m);
  Eigen::VectorXd m_part;
  decompose(w, &m_part, nullptr);
  return m_part;
}

Eigen::VectorXd ReductiveSpace::bracket_h(const Eigen::VectorXd& u_m,
                                          const Eigen::VectorXd& v_m) const {
  const Eigen::VectorXd w = ambient_.bracket(M_ * u_m, M_ * v_m);
  Eigen::VectorXd h_part;
  decompose(w, nullptr, &h_part);
  return h_part;
}

Eigen::VectorXd ReductiveSpace::isotropy_action(const Eigen::VectorXd& h_coords,
                                                const Eigen::VectorXd& u_m) const {
  const Eigen::VectorXd w = ambient_.bracket(H_ * h_coords, M_ * u_m);
  Eigen::VectorXd m_part;
  decompose(w, &m_part, nullptr);
  return m_part;
}

ReductiveSpace build_reductive(const LieAlgebra& ambient, const Eigen::MatrixXd& h_basis,
                               const BilinearForm& Q,
                               const std::optional<Eigen::MatrixXd>& metric_override) {
  const int n = ambient.dim();
  if (Q.dim() != n) throw InputError("ambient form dimension does not match the algebra");
  Eigen::MatrixXd H = h_basis;
  if (H.cols() == 0) {
    H.resize(n, 0);
  } else if (H.rows() != n) {
    throw InputError("subalgebra basis has wrong dimension");
  }
  const int hd = static_cast<int>(H.cols());
  if (hd > 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(H);
    if (qr.rank() < hd) throw InputError("subalgebra basis is linearly dependent");
  }

  // Complement: Q-orthogonal to every subalgebra vector.
  Eigen::MatrixXd M;
  if (hd == 0) {
    M = Eigen::MatrixXd::Identity(n, n);
  } else {
    M = kernel_basis(Eigen::MatrixXd(H.transpose() * Q.matrix()));
  }
  const int md = static_cast<int>(M.cols());
  if (md + hd != n) {
    throw InputError("ambient form is degenerate across the subalgebra split");
  }

  Eigen::MatrixXd T(n, n);
  T.leftCols(md) = M;
  T.rightCols(hd) = H;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(T);
  if (!lu.isInvertible()) {
    throw InputError("subalgebra and complement do not span the algebra");
  }
  const Eigen::MatrixXd T_inv = lu.inverse();

  auto m_defect = [&](const Eigen::VectorXd& w) {
    return rel_defect((T_inv * w).head(md), w);
  };
  auto h_defect = [&](const Eigen::VectorXd& w) {
    return rel_defect((T_inv * w).tail(hd), w);
  };

  // Subalgebra: brackets of h-vectors may not leak into m.
  for (int i = 0; i < hd; ++i) {
    for (int j = i + 1; j < hd; ++j) {
      const Eigen::VectorXd w = ambient.bracket(H.col(i), H.col(j));
      if (w.cwiseAbs().maxCoeff() > 0 && m_defect(w) > 1e-10) {
        throw InputError("the given vectors do not span a subalgebra");
      }
    }
  }
  // Reductive: brackets [h, m] may not leak into h.
  for (int i = 0; i < hd; ++i) {
    for (int a = 0; a < md; ++a) {
      const Eigen::VectorXd w = ambient.bracket(H.col(i), M.col(a));
      if (w.cwiseAbs().maxCoeff() > 0 && h_defect(w) > 1e-10) {
        throw InputError("the complement is not stable under the isotropy action");
      }
    }
  }

  Eigen::MatrixXd Mm;
  if (metric_override) {
    if (metric_override->rows() != n || metric_override->cols() != n) {
      throw InputError("metric override must be an ambient-dimension form");
    }
    Mm = symmetrized(M.transpose() * symmetrized(*metric_override) * M);
  } else {
    Mm = symmetrized(M.transpose() * Q.matrix() * M);
  }
  InnerProduct metric_m{Mm};  // rejects non-positive-definite restrictions

  ReductiveSpace S(ambient, H, M, T_inv, std::move(metric_m));

  // Isotropy invariance of the inner product on m.
  double worst = 0.0;
  for (int j = 0; j < hd; ++j) {
    const Eigen::VectorXd hj = Eigen::VectorXd::Unit(hd, j);
    for (int a = 0; a < md; ++a) {
      const Eigen::VectorXd ha = S.isotropy_action(hj, Eigen::VectorXd::Unit(md, a));
      for (int b = a; b < md; ++b) {
        const Eigen::VectorXd hb = S.isotropy_action(hj, Eigen::VectorXd::Unit(md, b));
        const double lhs = (Mm * ha)(b) + (Mm * hb)(a);
        worst = std::max(worst, std::abs(lhs));
      }
    }
  }
  const double scale = std::max(1.0, Mm.cwiseAbs().maxCoeff());
  if (worst > 1e-10 * scale) {
    throw InputError("the inner product is not invariant under the isotropy action");
  }
  return S;
}

Eigen::MatrixXd invariant_vectors(const ReductiveSpace& S) {
  const int md = S.m_dim();
  const int hd = S.h_dim();
  if (hd == 0) {
    return gram_schmidt(Eigen::MatrixXd::Identity(md, md), S.metric().matrix());
  }
  Eigen::MatrixXd stacked(hd * md, md);
  double scale = 0.0;
  for (int j = 0; j < hd; ++j) {
    const Eigen::VectorXd hj = Eigen::VectorXd::Unit(hd, j);
    const Eigen::VectorXd h_ambient = S.h_basis() * hj;
    for (int a = 0; a < md; ++a) {
      stacked.block(j * md, a, md, 1) =
          S.isotropy_action(hj, Eigen::VectorXd::Unit(md, a));
      // Projection of a bracket; measure the cutoff against the bracket
      // itself so an isotropy action of pure rounding noise counts as zero.
      scale = std::max(
          scale, S.ambient().bracket(h_ambient, S.m_basis().col(a)).norm());
    }
  }
  Eigen::MatrixXd K = kernel_basis(stacked, kKernelRelTol, scale);
  K = gram_schmidt(K, S.metric().matrix());
  for (int j = 0; j < K.cols(); ++j) K.col(j) = sign_normalized(K.col(j));
  return K;
}

CurvatureTable nomizu_curvature(const ReductiveSpace& S) {
  const int d = S.m_dim();
  const Eigen::MatrixXd& Mm = S.metric().matrix();

  std::vector<std::vector<Eigen::VectorXd>> mb(d), hb(d);
  for (int a = 0; a < d; ++a) {
    mb[a].resize(d);
    hb[a].resize(d);
    for (int b = 0; b < d; ++b) {
      const Eigen::VectorXd ea = Eigen::VectorXd::Unit(d, a);
      const Eigen::VectorXd eb = Eigen::VectorXd::Unit(d, b);
      mb[a][b] = S.bracket_m(ea, eb);
      hb[a][b] = S.bracket_h(ea, eb);
    }
  }

  // Connection operator Lambda(e_a) e_b = 1/2 [e_a, e_b]_m + U(e_a, e_b) with
  // <U(X,Y), Z> = 1/2 (<[Z,X]_m, Y> + <X, [Z,Y]_m>).
  std::vector<Eigen::MatrixXd> L(d, Eigen::MatrixXd(d, d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Eigen::VectorXd rhs(d);
      for (int z = 0; z < d; ++z) {
        rhs[z] = 0.5 * ((Mm * mb[z][a])(b) + (Mm * mb[z][b])(a));
      }
      L[a].col(b) = 0.5 * mb[a][b] + S.metric().solve(rhs);
    }
  }

  CurvatureTable R;
  R.dim = d;
  R.op.resize(d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Eigen::MatrixXd lam_ab = Eigen::MatrixXd::Zero(d, d);
      for (int c = 0; c < d; ++c) {
        if (mb[a][b][c] != 0.0) lam_ab += mb[a][b][c] * L[c];
      }
      Eigen::MatrixXd K(d, d);
      for (int c = 0; c < d; ++c) {
        K.col(c) = S.isotropy_action(hb[a][b], Eigen::VectorXd::Unit(d, c));
      }
      R.op[a * d + b] = L[a] * L[b] - L[b] * L[a] - lam_ab - K;
    }
  }
  return R;
}

Eigen::MatrixXd nomizu_ricci(const ReductiveSpace& S) {
  const int d = S.m_dim();
  const Eigen::MatrixXd& Mm = S.metric().matrix();
  const CurvatureTable R = nomizu_curvature(S);
  const Eigen::MatrixXd f = gram_schmidt(Eigen::MatrixXd::Identity(d, d), Mm);

  Eigen::MatrixXd ric(d, d);
  for (int a = 0; a < d; ++a) {
    for (int b = a; b < d; ++b) {
      double sum = 0.0;
      for (int k = 0; k < d; ++k) {
        // R(f_k, e_a) e_b by bilinearity in the first slot.
        Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
        for (int c = 0; c < d; ++c) {
          if (f(c, k) != 0.0) v += f(c, k) * R(c, a).col(b);
        }
        sum += f.col(k).dot(Mm * v);
      }
      ric(a, b) = sum;
      ric(b, a) = sum;
    }
  }
  return ric;
}

double sectional_curvature(const ReductiveSpace& S, const Eigen::VectorXd& X,
                           const Eigen::VectorXd& Y) {
  const int d = S.m_dim();
  if (X.size() != d || Y.size() != d) throw InputError("plane vectors have wrong dimension");
  const CurvatureTable R = nomizu_curvature(S);
  const Eigen::MatrixXd& Mm = S.metric().matrix();
  const double gram = S.metric().ip(X, X) * S.metric().ip(Y, Y) -
                      S.metric().ip(X, Y) * S.metric().ip(X, Y);
  if (gram <= 1e-14) throw InputError("vectors do not span a plane");
  return X.dot(Mm * R.apply(X, Y, Y)) / gram;
}

Certificate homogeneous_kropina_certificate(const ReductiveSpace& S,
                                            const Eigen::VectorXd& W,
                                            const HomogeneousCertificateOptions& opt) {
  const int d = S.m_dim();
  if (W.size() != d) throw InputError("wind vector has wrong dimension");
  Certificate cert;

  const Eigen::MatrixXd ric = nomizu_ricci(S);
  const EinsteinFit fit = einstein_fit(ric, S.metric().matrix());
  cert.sigma = fit.sigma;
  {
    CheckResult c;
    c.name = "einstein_metric";
    c.value = fit.residual;
    c.tolerance = opt.tol_einstein;
    c.pass = c.value < c.tolerance;
    cert.checks.push_back(c);
  }
  {
    CheckResult c;
    c.name = "unit_wind";
    c.value = std::abs(S.metric().norm(W) - 1.0);
    c.tolerance = opt.tol_unit;
    c.pass = c.value < c.tolerance;
    cert.checks.push_back(c);
  }
  {
    const Eigen::MatrixXd K = invariant_vectors(S);
    Eigen::VectorXd res = W;
    for (int j = 0; j < K.cols(); ++j) {
      res -= S.metric().ip(K.col(j), W) * K.col(j);
    }
    CheckResult c;
    c.name = "invariant_direction";
    c.value = S.metric().norm(res);
    c.tolerance = opt.tol_membership;
    c.pass = c.value < c.tolerance;
    cert.checks.push_back(c);
  }

  const bool einstein = cert.checks[0].pass;
  const bool unit = cert.checks[1].pass;
  const bool invariant = cert.checks[2].pass;
  cert.verified = einstein && unit && invariant;
  if (cert.verified) {
    cert.classification = "homogeneous Einstein Kropina";
  } else if (einstein && unit) {
    cert.classification = "Einstein, non-homogeneous";
  } else {
    cert.classification = "falsified";
  }
  cert.ricci_constant = cert.verified && d >= 3;
  return cert;
}

}  // namespace kropina
