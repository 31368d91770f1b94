#include "kropina/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "kropina/errors.hpp"
#include "kropina/numeric.hpp"
#include "kropina/riemann.hpp"

namespace kropina {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

// sum_{k<=order} (sign * ad x)^k / (k+1)!  by Horner evaluation.
Eigen::MatrixXd dexp_series_plain(const LieAlgebra& A, const Eigen::VectorXd& x,
                                  int order, double sign) {
  const int n = A.dim();
  const Eigen::MatrixXd adx = sign * A.ad_matrix(x);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd T = id / factorial(order + 1);
  for (int k = order - 1; k >= 0; --k) T = id / factorial(k + 1) + adx * T;
  return T;
}

Eigen::MatrixXd exp_series_plain(const Eigen::MatrixXd& M, int order) {
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(M.rows(), M.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= order; ++k) {
    term = (term * M) / static_cast<double>(k);
    sum += term;
  }
  return sum;
}

double condition_number(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  const double smin = sv[sv.size() - 1];
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return sv[0] / smin;
}

// ad(x) with jet entries: linear in the seeded x variables.
JetMatrix ad_jet(const LieAlgebra& A, const JetSpace* sp, const std::vector<Jet>& xj,
                 double sign) {
  const int n = A.dim();
  JetMatrix M(sp, n, n);
  for (int k = 0; k < n; ++k) {
    const Eigen::MatrixXd& adk = A.ad_basis(k);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (adk(r, c) != 0.0) M.at(r, c) += xj[k] * (sign * adk(r, c));
      }
    }
  }
  return M;
}

JetMatrix dexp_series_jet(const LieAlgebra& A, const JetSpace* sp,
                          const std::vector<Jet>& xj, int order, double sign) {
  const int n = A.dim();
  const JetMatrix adx = ad_jet(A, sp, xj, sign);
  JetMatrix T = JetMatrix::identity(sp, n);
  T.scale(1.0 / factorial(order + 1));
  for (int k = order - 1; k >= 0; --k) {
    JetMatrix next = adx * T;
    const double c = 1.0 / factorial(k + 1);
    for (int i = 0; i < n; ++i) next.at(i, i) += c;
    T = std::move(next);
  }
  return T;
}

void check_point(const Eigen::VectorXd& x, int n, const ChartConfig& cfg) {
  if (x.size() != n) throw InputError("chart point has wrong dimension");
  if (x.norm() > cfg.radius + 1e-12) {
    throw InputError("chart point lies outside the configured radius");
  }
}

}  // namespace

WKind parse_w_kind(const std::string& s) {
  if (s == "left") return WKind::Left;
  if (s == "right") return WKind::Right;
  if (s == "central") return WKind::Central;
  throw InputError("unknown wind kind '" + s + "' (expected left, right or central)");
}

const char* to_string(WKind k) {
  switch (k) {
    case WKind::Left: return "left";
    case WKind::Right: return "right";
    case WKind::Central: return "central";
  }
  return "?";
}

void ChartConfig::validate() const {
  if (series_order < 4 || series_order > 30) {
    throw InputError("series order must lie in [4, 30]");
  }
  if (!(radius > 0.0) || radius > 1.5) {
    throw InputError("chart radius must lie in (0, 1.5]");
  }
  if (!(fd_step > 0.0)) throw InputError("finite-difference step must be positive");
  if (samples < 1) throw InputError("sample count must be at least 1");
}

Eigen::MatrixXd phi_series(const LieAlgebra& A, const Eigen::VectorXd& x, int order) {
  return dexp_series_plain(A, x, order, -1.0);
}

Eigen::MatrixXd psi_series(const LieAlgebra& A, const Eigen::VectorXd& x, int order) {
  return dexp_series_plain(A, x, order, +1.0);
}

Eigen::MatrixXd left_frame(const LieAlgebra& A, const Eigen::VectorXd& x,
                           const ChartConfig& cfg) {
  cfg.validate();
  const Eigen::MatrixXd Phi = phi_series(A, x, cfg.series_order);
  if (condition_number(Phi) >= 1e6) {
    throw DomainError("chart frame is ill-conditioned at this point; reduce the radius");
  }
  return Phi.inverse();
}

Eigen::MatrixXd right_frame(const LieAlgebra& A, const Eigen::VectorXd& x,
                            const ChartConfig& cfg) {
  cfg.validate();
  const Eigen::MatrixXd Psi = psi_series(A, x, cfg.series_order);
  if (condition_number(Psi) >= 1e6) {
    throw DomainError("chart frame is ill-conditioned at this point; reduce the radius");
  }
  return Psi.inverse();
}

Eigen::MatrixXd metric_chart(const LieAlgebra& A, const InnerProduct& g,
                             const Eigen::VectorXd& x, const ChartConfig& cfg) {
  cfg.validate();
  check_point(x, A.dim(), cfg);
  const Eigen::MatrixXd Phi = phi_series(A, x, cfg.series_order);
  return Phi.transpose() * g.matrix() * Phi;
}

FinslerChart::FinslerChart(const LieAlgebra& A, const NavigationData& nav, WKind kind,
                           const ChartConfig& cfg)
    : A_(A), nav_(nav), kind_(kind), cfg_(cfg) {
  cfg_.validate();
  if (nav_.h.dim() != A_.dim()) {
    throw InputError("navigation data dimension does not match the algebra");
  }
  sp4_ = JetSpace::get(2 * A_.dim(), 4);
}

FinslerSample FinslerChart::sample(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  const int n = A_.dim();
  check_point(x, n, cfg_);
  if (y.size() != n) throw InputError("fiber vector has wrong dimension");

  const JetSpace* sp = sp4_.get();
  std::vector<Jet> xj(n), yj(n);
  for (int i = 0; i < n; ++i) {
    xj[i] = Jet::variable(sp, i, x[i]);
    yj[i] = Jet::variable(sp, n + i, y[i]);
  }

  const JetMatrix Phi = dexp_series_jet(A_, sp, xj, cfg_.series_order, -1.0);
  const JetMatrix G =
      Phi.transpose() * JetMatrix::constant(sp, nav_.h.matrix()) * Phi;

  const JetMatrix Wc = JetMatrix::constant(sp, Eigen::MatrixXd(nav_.W));
  JetMatrix V;
  if (kind_ == WKind::Right) {
    const JetMatrix Psi = dexp_series_jet(A_, sp, xj, cfg_.series_order, +1.0);
    V = Psi.inverse() * Wc;
  } else {
    // Left-invariant wind; a central wind satisfies ad(x) W = 0, so its two
    // invariant extensions agree and this path covers it exactly.
    V = Phi.inverse() * Wc;
  }

  // Gy[i] = sum_j G_ij y^j, reused for both quadratic forms.
  std::vector<Jet> Gy(n);
  for (int i = 0; i < n; ++i) {
    Jet acc = Jet::constant(sp, 0.0);
    for (int j = 0; j < n; ++j) fma_into(acc, G.at(i, j), yj[j]);
    Gy[i] = acc;
  }
  Jet N = Jet::constant(sp, 0.0);
  Jet D = Jet::constant(sp, 0.0);
  for (int i = 0; i < n; ++i) {
    fma_into(N, yj[i], Gy[i]);
    fma_into(D, V.at(i, 0), Gy[i]);
  }
  if (D.value() <= 0.0) {
    throw DomainError("sample outside the admissible cone: h(W(x), y) <= 0");
  }

  const Jet F = N / (D * 2.0);
  const Jet F2 = F * F;

  JetMatrix gy(sp, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Jet d = F2.derivative(n + i).derivative(n + j) * 0.5;
      gy.at(j, i) = d;
      gy.at(i, j) = std::move(d);
    }
  }
  const Eigen::MatrixXd gyv = gy.values();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gyv);
    if (es.eigenvalues().minCoeff() <= 0.0) {
      throw DomainError("fundamental tensor is not positive definite at this sample");
    }
  }
  const JetMatrix ginv = gy.inverse();

  // Spray coefficients G^i = 1/4 g^{il} (d2F2/dy^l dx^k y^k - dF2/dx^l).
  std::vector<Jet> rhs(n);
  for (int l = 0; l < n; ++l) {
    Jet r = Jet::constant(sp, 0.0);
    const Jet dFl = F2.derivative(n + l);
    for (int k = 0; k < n; ++k) fma_into(r, dFl.derivative(k), yj[k]);
    r -= F2.derivative(l);
    rhs[l] = r;
  }
  std::vector<Jet> spray(n);
  for (int i = 0; i < n; ++i) {
    Jet s = Jet::constant(sp, 0.0);
    for (int l = 0; l < n; ++l) fma_into(s, ginv.at(i, l), rhs[l]);
    s *= 0.25;
    spray[i] = s;
  }

  // ricci = R^m_m with
  // R^i_k = 2 dG^i/dx^k - y^j d2G^i/dx^j dy^k + 2 G^j d2G^i/dy^j dy^k
  //         - dG^i/dy^j dG^j/dy^k.
  double ric = 0.0;
  for (int m = 0; m < n; ++m) {
    ric += 2.0 * spray[m].derivative(m).value();
    for (int j = 0; j < n; ++j) {
      ric -= y[j] * spray[m].derivative(j).derivative(n + m).value();
      ric += 2.0 * spray[j].value() * spray[m].derivative(n + j).derivative(n + m).value();
      ric -= spray[m].derivative(n + j).value() * spray[j].derivative(n + m).value();
    }
  }

  FinslerSample out;
  out.x = x;
  out.y = y;
  out.F = F.value();
  out.F_x.resize(n);
  out.F_y.resize(n);
  for (int i = 0; i < n; ++i) {
    out.F_x[i] = F.derivative(i).value();
    out.F_y[i] = F.derivative(n + i).value();
  }
  out.g_y = gyv;
  out.spray.resize(n);
  for (int i = 0; i < n; ++i) out.spray[i] = spray[i].value();
  out.ricci = ric;
  return out;
}

Eigen::VectorXd FinslerChart::wind(const Eigen::VectorXd& x) const {
  const int n = A_.dim();
  check_point(x, n, cfg_);
  if (kind_ == WKind::Right) {
    return psi_series(A_, x, cfg_.series_order).partialPivLu().solve(nav_.W);
  }
  return phi_series(A_, x, cfg_.series_order).partialPivLu().solve(nav_.W);
}

double FinslerChart::F_value(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  const int n = A_.dim();
  check_point(x, n, cfg_);
  if (y.size() != n) throw InputError("fiber vector has wrong dimension");
  const Eigen::MatrixXd Phi = phi_series(A_, x, cfg_.series_order);
  const Eigen::MatrixXd G = Phi.transpose() * nav_.h.matrix() * Phi;
  const Eigen::VectorXd V = wind(x);
  const double den = 2.0 * V.dot(G * y);
  if (den <= 0.0) {
    throw DomainError("sample outside the admissible cone: h(W(x), y) <= 0");
  }
  return y.dot(G * y) / den;
}

std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> FinslerChart::draw(
    int count, std::uint64_t seed) const {
  const int n = A_.dim();
  Rng rng(seed);
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    const Eigen::VectorXd x = rng.ball(n, cfg_.radius);
    const Eigen::MatrixXd Phi = phi_series(A_, x, cfg_.series_order);
    const Eigen::MatrixXd G = Phi.transpose() * nav_.h.matrix() * Phi;
    const Eigen::VectorXd V = wind(x);
    const double wnorm = std::sqrt(V.dot(G * V));
    Eigen::VectorXd y;
    bool found = false;
    for (int tries = 0; tries < 500 && !found; ++tries) {
      y = rng.box(n);
      const double yn = std::sqrt(y.dot(G * y));
      if (yn < 1e-8) continue;
      const double cosine = V.dot(G * y) / (yn * wnorm);
      if (cosine >= 0.1) found = true;
    }
    if (!found) y = V;  // the wind itself is always admissible
    out.emplace_back(x, y);
  }
  return out;
}

Eigen::MatrixXd riemann_ricci_chart(const LieAlgebra& A, const InnerProduct& g,
                                    const Eigen::VectorXd& x, const ChartConfig& cfg) {
  cfg.validate();
  const int n = A.dim();
  check_point(x, n, cfg);
  auto sp_holder = JetSpace::get(n, 2);
  const JetSpace* sp = sp_holder.get();

  std::vector<Jet> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = Jet::variable(sp, i, x[i]);
  const JetMatrix Phi = dexp_series_jet(A, sp, xj, cfg.series_order, -1.0);
  const JetMatrix G = Phi.transpose() * JetMatrix::constant(sp, g.matrix()) * Phi;
  const JetMatrix Ginv = G.inverse();

  // dG[v](i,j) = dG_ij/dx^v as jets (still differentiable once).
  std::vector<JetMatrix> dG(n);
  for (int v = 0; v < n; ++v) {
    JetMatrix M(sp, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M.at(i, j) = G.at(i, j).derivative(v);
    dG[v] = std::move(M);
  }

  // gamma[i](j,k) = Gamma^i_jk = 1/2 G^{il} (dG_lk/dx^j + dG_jl/dx^k - dG_jk/dx^l).
  std::vector<JetMatrix> gamma(n);
  for (int i = 0; i < n; ++i) {
    JetMatrix M(sp, n, n);
    for (int j = 0; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        Jet acc = Jet::constant(sp, 0.0);
        for (int l = 0; l < n; ++l) {
          Jet sum = dG[j].at(l, k) + dG[k].at(j, l) - dG[l].at(j, k);
          fma_into(acc, Ginv.at(i, l), sum);
        }
        acc *= 0.5;
        M.at(k, j) = acc;
        M.at(j, k) = std::move(acc);
      }
    }
    gamma[i] = std::move(M);
  }

  // Ric_sv = d Gamma^m_vs/dx^m - d Gamma^m_ms/dx^v
  //          + Gamma^m_ml Gamma^l_vs - Gamma^m_vl Gamma^l_ms.
  Eigen::MatrixXd ric(n, n);
  for (int s = 0; s < n; ++s) {
    for (int v = 0; v < n; ++v) {
      double r = 0.0;
      for (int m = 0; m < n; ++m) {
        r += gamma[m].at(v, s).derivative(m).value();
        r -= gamma[m].at(m, s).derivative(v).value();
        for (int l = 0; l < n; ++l) {
          r += gamma[m].at(m, l).value() * gamma[l].at(v, s).value();
          r -= gamma[m].at(v, l).value() * gamma[l].at(m, s).value();
        }
      }
      ric(s, v) = r;
    }
  }
  return 0.5 * (ric + ric.transpose());
}

Eigen::MatrixXd lie_derivative_metric(const LieAlgebra& A, const InnerProduct& g,
                                      const Eigen::VectorXd& W, WKind kind,
                                      const Eigen::VectorXd& x, const ChartConfig& cfg) {
  cfg.validate();
  const int n = A.dim();
  check_point(x, n, cfg);
  if (W.size() != n) throw InputError("wind vector has wrong dimension");
  auto sp_holder = JetSpace::get(n, 1);
  const JetSpace* sp = sp_holder.get();

  std::vector<Jet> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = Jet::variable(sp, i, x[i]);
  const JetMatrix Phi = dexp_series_jet(A, sp, xj, cfg.series_order, -1.0);
  const JetMatrix G = Phi.transpose() * JetMatrix::constant(sp, g.matrix()) * Phi;

  const JetMatrix Wc = JetMatrix::constant(sp, Eigen::MatrixXd(W));
  JetMatrix V;
  if (kind == WKind::Right) {
    const JetMatrix Psi = dexp_series_jet(A, sp, xj, cfg.series_order, +1.0);
    V = Psi.inverse() * Wc;
  } else {
    V = Phi.inverse() * Wc;
  }

  // (L_V G)_ij = V^k dG_ij/dx^k + G_kj dV^k/dx^i + G_ik dV^k/dx^j.
  Eigen::MatrixXd L(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k) {
        acc += V.at(k, 0).value() * G.at(i, j).derivative(k).value();
        acc += G.at(k, j).value() * V.at(k, 0).derivative(i).value();
        acc += G.at(i, k).value() * V.at(k, 0).derivative(j).value();
      }
      L(i, j) = acc;
    }
  }
  return L;
}

double left_invariance_check(const LieAlgebra& A, const NavigationData& nav, WKind kind,
                             const ChartConfig& cfg) {
  cfg.validate();
  const int n = A.dim();
  const FinslerChart chart(A, nav, kind, cfg);
  Rng rng(cfg.seed);
  double worst = 0.0;
  for (int s = 0; s < cfg.samples; ++s) {
    const Eigen::VectorXd x = rng.ball(n, cfg.radius);
    // Admissible direction at the origin, with a margin in the h-cone.
    Eigen::VectorXd u;
    bool found = false;
    for (int tries = 0; tries < 500 && !found; ++tries) {
      u = rng.box(n);
      const double un = nav.h.norm(u);
      if (un < 1e-8) continue;
      if (nav.h.ip(nav.W, u) >= 0.1 * un) found = true;
    }
    if (!found) u = nav.W;
    const double F0 = chart.F_value(Eigen::VectorXd::Zero(n), u);
    const Eigen::VectorXd v = left_frame(A, x, cfg) * u;
    double rel;
    try {
      rel = std::abs(chart.F_value(x, v) - F0) / F0;
    } catch (const DomainError&) {
      rel = 1.0;  // the admissible cone itself moved: invariance fails outright
    }
    worst = std::max(worst, rel);
  }
  return worst;
}

double ad_orbit_norm(const LieAlgebra& A, const InnerProduct& g, const Eigen::VectorXd& W,
                     const ChartConfig& cfg) {
  cfg.validate();
  const int n = A.dim();
  if (W.size() != n) throw InputError("wind vector has wrong dimension");
  Rng rng(cfg.seed);
  double worst = std::abs(g.norm(W) - 1.0);  // x = 0 is always included
  for (int s = 0; s < cfg.samples; ++s) {
    const Eigen::VectorXd x = rng.ball(n, cfg.radius);
    const Eigen::MatrixXd M = exp_series_plain(A.ad_matrix(x), cfg.series_order);
    worst = std::max(worst, std::abs(g.norm(M * W) - 1.0));
  }
  return worst;
}

double ricci_route_deviation(const LieAlgebra& A, const InnerProduct& g,
                             const ChartConfig& cfg, int extra_points) {
  cfg.validate();
  const int n = A.dim();
  const Eigen::MatrixXd ric_alg = riemann_ricci(A, g);
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  double worst = (riemann_ricci_chart(A, g, origin, cfg) - ric_alg).cwiseAbs().maxCoeff();
  Rng rng(cfg.seed);
  for (int s = 0; s < extra_points; ++s) {
    const Eigen::VectorXd x = rng.ball(n, cfg.radius);
    const Eigen::MatrixXd P = left_frame(A, x, cfg);
    const Eigen::MatrixXd pulled =
        P.transpose() * riemann_ricci_chart(A, g, x, cfg) * P;
    worst = std::max(worst, (pulled - ric_alg).cwiseAbs().maxCoeff());
  }
  return worst;
}

double riemann_spray_ricci(const LieAlgebra& A, const InnerProduct& g,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                           const ChartConfig& cfg) {
  cfg.validate();
  const int n = A.dim();
  check_point(x, n, cfg);
  if (y.size() != n) throw InputError("fiber vector has wrong dimension");
  auto sp_holder = JetSpace::get(2 * n, 4);
  const JetSpace* sp = sp_holder.get();

  std::vector<Jet> xj(n), yj(n);
  for (int i = 0; i < n; ++i) {
    xj[i] = Jet::variable(sp, i, x[i]);
    yj[i] = Jet::variable(sp, n + i, y[i]);
  }
  const JetMatrix Phi = dexp_series_jet(A, sp, xj, cfg.series_order, -1.0);
  const JetMatrix G = Phi.transpose() * JetMatrix::constant(sp, g.matrix()) * Phi;

  Jet F2 = Jet::constant(sp, 0.0);
  for (int i = 0; i < n; ++i) {
    Jet acc = Jet::constant(sp, 0.0);
    for (int j = 0; j < n; ++j) fma_into(acc, G.at(i, j), yj[j]);
    fma_into(F2, yj[i], acc);
  }

  JetMatrix gy(sp, n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Jet d = F2.derivative(n + i).derivative(n + j) * 0.5;
      gy.at(j, i) = d;
      gy.at(i, j) = std::move(d);
    }
  }
  const JetMatrix ginv = gy.inverse();

  std::vector<Jet> rhs(n);
  for (int l = 0; l < n; ++l) {
    Jet r = Jet::constant(sp, 0.0);
    const Jet dFl = F2.derivative(n + l);
    for (int k = 0; k < n; ++k) fma_into(r, dFl.derivative(k), yj[k]);
    r -= F2.derivative(l);
    rhs[l] = r;
  }
  std::vector<Jet> spray(n);
  for (int i = 0; i < n; ++i) {
    Jet s = Jet::constant(sp, 0.0);
    for (int l = 0; l < n; ++l) fma_into(s, ginv.at(i, l), rhs[l]);
    s *= 0.25;
    spray[i] = s;
  }

  double ric = 0.0;
  for (int m = 0; m < n; ++m) {
    ric += 2.0 * spray[m].derivative(m).value();
    for (int j = 0; j < n; ++j) {
      ric -= y[j] * spray[m].derivative(j).derivative(n + m).value();
      ric += 2.0 * spray[j].value() * spray[m].derivative(n + j).derivative(n + m).value();
      ric -= spray[m].derivative(n + j).value() * spray[j].derivative(n + m).value();
    }
  }
  return ric;
}

}  // namespace kropina
