#include "kropina/kropina_metric.hpp"

#include <cmath>
#include <utility>

#include "kropina/errors.hpp"

namespace kropina {

KropinaAlgebraic::KropinaAlgebraic(InnerProduct a_in, Eigen::VectorXd X_in)
    : a(std::move(a_in)), X(std::move(X_in)) {
  if (X.size() != a.dim()) throw InputError("drift vector dimension mismatch");
  if (!(a.ip(X, X) > 0.0)) throw InputError("drift vector must satisfy a(X,X) > 0");
}

NavigationData::NavigationData(InnerProduct h_in, Eigen::VectorXd W_in, double scale_in)
    : h(std::move(h_in)), W(std::move(W_in)), scale(scale_in) {
  if (W.size() != h.dim()) throw InputError("wind vector dimension mismatch");
  if (std::abs(h.norm(W) - 1.0) > 1e-12) {
    throw InputError("wind vector must be h-unit (||W||_h = 1 within 1e-12)");
  }
  if (!(scale > 0.0)) throw InputError("conversion scale must be positive");
}

double kropina_F(const KropinaAlgebraic& k, const Eigen::VectorXd& y) {
  if (y.size() != k.a.dim()) throw InputError("argument dimension mismatch");
  const double beta = k.a.ip(k.X, y);
  if (!(beta > 0.0)) throw DomainError("argument outside the admissible half-cone beta(y) > 0");
  return k.a.ip(y, y) / beta;
}

double kropina_F(const NavigationData& n, const Eigen::VectorXd& y) {
  if (y.size() != n.h.dim()) throw InputError("argument dimension mismatch");
  const double w0 = n.h.ip(n.W, y);
  if (!(w0 > 0.0)) throw DomainError("argument outside the admissible half-cone h(W,y) > 0");
  return n.h.ip(y, y) / (2.0 * w0);
}

NavigationData to_navigation(const KropinaAlgebraic& k) {
  const double b2 = k.a.ip(k.X, k.X);
  const double scale = 4.0 / b2;  // e^{2 rho}
  return NavigationData(InnerProduct(scale * k.a.matrix()), 0.5 * k.X, scale);
}

KropinaAlgebraic from_navigation(const NavigationData& n) {
  return KropinaAlgebraic(InnerProduct(n.h.matrix()), 2.0 * n.W);
}

double finsler_condition_generic(double phi, double dphi, double ddphi, double b,
                                 double s) {
  return phi - s * dphi + (b * b - s * s) * ddphi;
}

double finsler_condition(double b, double s) {
  if (!(b > 0.0)) throw InputError("b must be positive");
  if (!(s > 0.0)) throw DomainError("s must be positive on the Kropina half-cone");
  if (s > b) throw InputError("s must not exceed b = ||beta||_alpha");
  const double phi = 1.0 / s;
  const double dphi = -1.0 / (s * s);
  const double ddphi = 2.0 / (s * s * s);
  return finsler_condition_generic(phi, dphi, ddphi, b, s);
}

}  // namespace kropina
