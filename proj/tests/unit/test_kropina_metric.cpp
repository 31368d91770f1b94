#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "kropina/catalog.hpp"
#include "kropina/errors.hpp"
#include "kropina/kropina_metric.hpp"
#include "kropina/numeric.hpp"

using kropina::DomainError;
using kropina::from_navigation;
using kropina::InnerProduct;
using kropina::InputError;
using kropina::KropinaAlgebraic;
using kropina::kropina_F;
using kropina::NavigationData;
using kropina::to_navigation;

namespace {

Eigen::VectorXd e(int dim, int k, double s = 1.0) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[k] = s;
  return v;
}

// A seeded admissible covector argument: flip the sample until beta(y) > 0.
Eigen::VectorXd admissible(kropina::Rng& rng, const InnerProduct& a,
                           const Eigen::VectorXd& X) {
  for (int tries = 0; tries < 100; ++tries) {
    Eigen::VectorXd y = rng.box(static_cast<int>(X.size()));
    const double beta = a.ip(X, y);
    if (beta > 1e-6) return y;
    if (beta < -1e-6) return -y;
  }
  return X;  // always admissible
}

}  // namespace

TEST_CASE("frozen conversion: unit drift of length two") {
  const KropinaAlgebraic k(InnerProduct(Eigen::MatrixXd::Identity(3, 3)), e(3, 0, 2.0));
  const NavigationData nav = to_navigation(k);
  CHECK((nav.h.matrix() - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((nav.W - e(3, 0)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(nav.scale == 1.0);

  // F((1,1,0)) = a(y,y)/a(X,y) = 2/2 = 1 on both sides
  Eigen::VectorXd y(3);
  y << 1.0, 1.0, 0.0;
  CHECK(kropina_F(k, y) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(kropina_F(nav, y) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("frozen conversion: short drift rescales conformally") {
  const KropinaAlgebraic k(InnerProduct(Eigen::MatrixXd::Identity(3, 3)), e(3, 0));
  const NavigationData nav = to_navigation(k);
  CHECK((nav.h.matrix() - 4.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() ==
        0.0);
  CHECK((nav.W - e(3, 0, 0.5)).cwiseAbs().maxCoeff() == 0.0);
  CHECK(nav.scale == 4.0);
  CHECK(nav.h.ip(nav.W, nav.W) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("frozen navigation value on so(3) with the bi-invariant metric") {
  // h = 2 id (the -B metric of so(3) in the pair basis), W = E12 / sqrt(2).
  const NavigationData nav(InnerProduct(2.0 * Eigen::MatrixXd::Identity(3, 3)),
                           e(3, 0, 1.0 / std::sqrt(2.0)));
  CHECK(kropina_F(nav, e(3, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("conversion preserves F on random instances") {
  kropina::Rng rng(2024);
  for (int inst = 0; inst < 20; ++inst) {
    const int dim = 2 + inst % 4;
    Eigen::MatrixXd M(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) M(r, c) = rng.uniform(-1.0, 1.0);
    const Eigen::MatrixXd g =
        M * M.transpose() + 0.3 * Eigen::MatrixXd::Identity(dim, dim);
    Eigen::VectorXd X = rng.ball(dim, 2.0);
    if (X.norm() < 1e-3) X = e(dim, 0);
    const KropinaAlgebraic k(InnerProduct(g), X);
    const NavigationData nav = to_navigation(k);
    const KropinaAlgebraic back = from_navigation(nav);

    CHECK(nav.h.ip(nav.W, nav.W) == doctest::Approx(1.0).epsilon(1e-12));
    const double b2 = k.a.ip(k.X, k.X);
    CHECK(nav.scale == doctest::Approx(4.0 / b2).epsilon(1e-13));

    for (int s = 0; s < 50; ++s) {
      const Eigen::VectorXd y = admissible(rng, k.a, k.X);
      const double f0 = kropina_F(k, y);
      CHECK(std::abs(kropina_F(nav, y) - f0) <= 1e-12 * std::max(1.0, f0));
      CHECK(std::abs(kropina_F(back, y) - f0) <= 1e-12 * std::max(1.0, f0));
    }
  }
}

TEST_CASE("evaluation outside the half-cone throws") {
  const KropinaAlgebraic k(InnerProduct(Eigen::MatrixXd::Identity(3, 3)), e(3, 0, 2.0));
  CHECK_THROWS_AS(kropina_F(k, e(3, 1)), DomainError);        // beta = 0
  CHECK_THROWS_AS(kropina_F(k, e(3, 0, -1.0)), DomainError);  // beta < 0
  const NavigationData nav = to_navigation(k);
  CHECK_THROWS_AS(kropina_F(nav, e(3, 1)), DomainError);
}

TEST_CASE("constructors validate their data") {
  const Eigen::MatrixXd id3 = Eigen::MatrixXd::Identity(3, 3);
  CHECK_THROWS_AS(KropinaAlgebraic(InnerProduct(id3), Eigen::VectorXd::Zero(3)), InputError);
  CHECK_THROWS_AS(NavigationData(InnerProduct(id3), e(3, 0, 2.0)), InputError);
  CHECK_THROWS_AS(NavigationData(InnerProduct(id3), e(3, 0), -1.0), InputError);
  Eigen::MatrixXd bad = id3;
  bad(0, 0) = -1.0;
  CHECK_THROWS_AS(InnerProduct{bad}, InputError);
}

TEST_CASE("strong-convexity quantity: frozen values and generic agreement") {
  // phi(s) = 1/s gives phi - s phi' + (b^2 - s^2) phi'' = 2 b^2 / s^3
  CHECK(kropina::finsler_condition(2.0, 1.0) == doctest::Approx(8.0).epsilon(1e-15));
  for (const double b : {0.5, 1.0, 2.0}) {
    CHECK(kropina::finsler_condition(b, b) == doctest::Approx(2.0 / b).epsilon(1e-14));
    for (int i = 1; i * 0.1 <= b + 1e-12; ++i) {
      const double s = std::min(i * 0.1, b);
      const double closed = 2.0 * b * b / (s * s * s);
      const double via_generic = kropina::finsler_condition_generic(
          1.0 / s, -1.0 / (s * s), 2.0 / (s * s * s), b, s);
      CHECK(std::abs(kropina::finsler_condition(b, s) - closed) <= 1e-14 * closed);
      CHECK(std::abs(via_generic - closed) <= 1e-14 * closed);
      CHECK(via_generic > 0.0);
    }
  }
}

TEST_CASE("navigation round trips across the catalog metrics") {
  for (const auto& name : kropina::catalog_names()) {
    const kropina::CatalogEntry entry = kropina::catalog_get(name);
    const InnerProduct& g = entry.metric;
    const int dim = g.dim();
    kropina::Rng rng(91);
    for (int t = 0; t < 10; ++t) {
      Eigen::VectorXd X = rng.ball(dim, 1.5);
      if (X.norm() < 1e-3) X = e(dim, 0);
      const KropinaAlgebraic k(g, X);
      const NavigationData nav = to_navigation(k);
      CHECK(std::abs(nav.h.ip(nav.W, nav.W) - 1.0) <= 1e-12);
      for (int s = 0; s < 10; ++s) {
        const Eigen::VectorXd y = admissible(rng, k.a, k.X);
        const double f0 = kropina_F(k, y);
        CHECK(std::abs(kropina_F(nav, y) - f0) <= 1e-12 * std::max(1.0, f0));
      }
    }
  }
}
