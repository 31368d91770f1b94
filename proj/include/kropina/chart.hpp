#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "kropina/jet.hpp"
#include "kropina/kropina_metric.hpp"
#include "kropina/lie_algebra.hpp"

namespace kropina {

// Invariance type of the wind field generated by a Lie-algebra vector.
enum class WKind { Left, Right, Central };

WKind parse_w_kind(const std::string& s);
const char* to_string(WKind k);

// Exponential-chart (first kind) configuration.  Within the stated radius the
// truncated differential-of-exp series at order 10 is accurate to well below
// every tolerance used here, and the frame matrices stay well conditioned.
struct ChartConfig {
  int series_order = 10;
  double radius = 0.3;
  double fd_step = 1e-4;  // used only by divided-difference cross-checks
  int samples = 20;
  std::uint64_t seed = 1;

  void validate() const;
};

// Truncated series Phi(x) = sum_{k<=order} (-ad x)^k / (k+1)!, the left
// logarithmic derivative of the chart: a chart velocity v corresponds to the
// algebra value Phi(x) v under left trivialization.
Eigen::MatrixXd phi_series(const LieAlgebra& A, const Eigen::VectorXd& x, int order);

// Same series with +ad x: the right-trivialization counterpart.
Eigen::MatrixXd psi_series(const LieAlgebra& A, const Eigen::VectorXd& x, int order);

// Chart component matrices of the invariant frames: column i of left_frame is
// the chart expression of the left-invariant field with value e_i at the
// origin (and likewise on the right).  Throws DomainError when the frame is
// ill-conditioned (condition number >= 1e6), which signals a chart radius
// past its validity.
Eigen::MatrixXd left_frame(const LieAlgebra& A, const Eigen::VectorXd& x,
                           const ChartConfig& cfg);
Eigen::MatrixXd right_frame(const LieAlgebra& A, const Eigen::VectorXd& x,
                            const ChartConfig& cfg);

// Chart expression G(x) = Phi(x)^T g Phi(x) of the left-invariant metric.
Eigen::MatrixXd metric_chart(const LieAlgebra& A, const InnerProduct& g,
                             const Eigen::VectorXd& x, const ChartConfig& cfg);

// One evaluation of the full Finsler pipeline at a chart point.
struct FinslerSample {
  Eigen::VectorXd x;
  Eigen::VectorXd y;
  double F = 0.0;
  Eigen::VectorXd F_x;     // dF/dx_i, for divided-difference cross-checks
  Eigen::VectorXd F_y;     // dF/dy_i (Euler identity: y . F_y = F)
  Eigen::MatrixXd g_y;     // fundamental tensor at (x, y)
  Eigen::VectorXd spray;   // geodesic spray coefficients G^i(x, y)
  double ricci = 0.0;      // trace of the curvature operator R^m_m(x, y)
};

// Reusable evaluator for one Kropina instance in its exponential chart.
// Construction fixes the algebra, navigation data, wind kind and chart
// configuration; evaluations share the interned jet spaces.
class FinslerChart {
 public:
  FinslerChart(const LieAlgebra& A, const NavigationData& nav, WKind kind,
               const ChartConfig& cfg);

  // Fundamental tensor, spray and curvature trace at (x, y) via degree-4
  // truncated Taylor propagation in the 2n chart/fiber variables.
  FinslerSample sample(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Plain scalar F(x, y); no derivatives.
  double F_value(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  // Chart components of the wind field at x.
  Eigen::VectorXd wind(const Eigen::VectorXd& x) const;

  // Deterministic admissible sample points: x in the chart ball, y in the
  // half-cone with cos angle(W(x), y) >= 0.1 in G(x).
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> draw(int count,
                                                                std::uint64_t seed) const;

  const ChartConfig& config() const { return cfg_; }

 private:
  LieAlgebra A_;
  NavigationData nav_;
  WKind kind_;
  ChartConfig cfg_;
  std::shared_ptr<const JetSpace> sp4_;  // 2n vars, degree 4
};

// Chart-coordinate Ricci tensor of the left-invariant metric at x, computed
// through Christoffel symbols of G(x) -- a code path with nothing in common
// with the basis-frame curvature in riemann.hpp, which it cross-checks.
Eigen::MatrixXd riemann_ricci_chart(const LieAlgebra& A, const InnerProduct& g,
                                    const Eigen::VectorXd& x, const ChartConfig& cfg);

// Lie derivative (L_V G)_ij at chart point x of the chart metric along the
// invariant field generated by W.  Zero (to series truncation) iff that field
// is Killing.
Eigen::MatrixXd lie_derivative_metric(const LieAlgebra& A, const InnerProduct& g,
                                      const Eigen::VectorXd& W, WKind kind,
                                      const Eigen::VectorXd& x, const ChartConfig& cfg);

// max over sampled (x, u) of |F(x, P(x) u) - F(0, u)| / F(0, u): zero for
// genuinely left-invariant data, order-0.1 for a right-invariant wind on a
// non-bi-invariant metric.
double left_invariance_check(const LieAlgebra& A, const NavigationData& nav, WKind kind,
                             const ChartConfig& cfg);

// max over sampled x (including 0) of | ||exp(ad x) W||_g - 1 |: whether the
// Ad-orbit of W stays on the unit sphere, i.e. whether the right-invariant
// extension of W has pointwise unit length.
double ad_orbit_norm(const LieAlgebra& A, const InnerProduct& g, const Eigen::VectorXd& W,
                     const ChartConfig& cfg);

// Ricci quadratic form of a Riemannian metric run through the same spray
// machinery as the Kropina pipeline (F^2 = y^T G(x) y); used to pin the
// curvature conventions against the Christoffel route.
double riemann_spray_ricci(const LieAlgebra& A, const InnerProduct& g,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                           const ChartConfig& cfg);

// Max entrywise deviation between the basis-frame Ricci tensor (Koszul route)
// and the chart Ricci pulled back through the left frame, at x = 0 and at
// extra_points sampled chart points.  The two routes share no curvature code,
// so a small value certifies both.
double ricci_route_deviation(const LieAlgebra& A, const InnerProduct& g,
                             const ChartConfig& cfg, int extra_points);

}  // namespace kropina
