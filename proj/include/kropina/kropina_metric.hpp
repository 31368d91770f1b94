#pragma once

#include <Eigen/Dense>

#include "kropina/lie_algebra.hpp"

namespace kropina {

// Kropina metric in algebraic form F = alpha^2 / beta = a(y,y) / beta(y)
// with beta(y) = a(X, y), defined on the half-cone beta(y) > 0.
struct KropinaAlgebraic {
  InnerProduct a;
  Eigen::VectorXd X;  // drift vector; a(X,X) > 0 enforced

  KropinaAlgebraic(InnerProduct a_in, Eigen::VectorXd X_in);
};

// Navigation form of the same metric: F = h(y,y) / (2 h(W, y)) with a unit
// wind, h(W,W) = 1.  The conformal scale relating h to the algebraic metric
// it was converted from is recorded for round-trip audits; it plays no role
// in evaluation.
struct NavigationData {
  InnerProduct h;
  Eigen::VectorXd W;   // unit vector for h; enforced to 1e-12
  double scale = 1.0;  // conversion factor e^{2 rho}; positive

  NavigationData(InnerProduct h_in, Eigen::VectorXd W_in, double scale_in = 1.0);
};

// Metric value at a covector argument y in the admissible half-cone;
// throws DomainError when beta(y) <= 0.
double kropina_F(const KropinaAlgebraic& k, const Eigen::VectorXd& y);
double kropina_F(const NavigationData& n, const Eigen::VectorXd& y);

// Exact correspondence between the two presentations.  With b^2 = a(X,X) the
// conformal scale e^{2 rho} = 4 / b^2 satisfies h = e^{2 rho} a and W = X/2,
// which is automatically h-unit; both directions preserve F pointwise.
// Here b is the alpha-norm of the drift covector beta.
NavigationData to_navigation(const KropinaAlgebraic& k);

// Canonical algebraic representative of navigation data: a = h, X = 2 W
// (so b^2 = 4 and the conformal scale is 1).
KropinaAlgebraic from_navigation(const NavigationData& n);

// Generic strong-convexity quantity phi(s) - s phi'(s) + (b^2 - s^2) phi''(s)
// for a metric F = alpha phi(s), s = beta/alpha, evaluated through the
// supplied derivative triple.
double finsler_condition_generic(double phi, double dphi, double ddphi, double b, double s);

// The same quantity for the Kropina choice phi(s) = 1/s, routed through the
// generic evaluator; it reduces to 2 b^2 / s^3.  Requires 0 < s <= b.
double finsler_condition(double b, double s);

}  // namespace kropina
