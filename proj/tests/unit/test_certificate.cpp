#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "kropina/catalog.hpp"
#include "kropina/certificate.hpp"
#include "kropina/errors.hpp"
#include "kropina/kropina_metric.hpp"
#include "kropina/riemann.hpp"

using kropina::CatalogEntry;
using kropina::Certificate;
using kropina::CertificateOptions;
using kropina::CheckResult;
using kropina::InnerProduct;
using kropina::NavigationData;
using kropina::WKind;

namespace {

NavigationData unit_wind(const InnerProduct& g, Eigen::VectorXd dir) {
  dir /= g.norm(dir);
  return NavigationData(g, dir);
}

}  // namespace

TEST_CASE("certificate verifies the compact family with a right wind") {
  const CatalogEntry entry = kropina::catalog_get("so_n", {{"n", 3.0}});
  const NavigationData nav = unit_wind(entry.metric, entry.vectors.at("W_thm3"));
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Right);

  CHECK(cert.verified);
  CHECK(cert.classification == "Einstein Kropina");
  CHECK(cert.sigma == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cert.ricci_constant);

  REQUIRE(cert.find("einstein_metric") != nullptr);
  REQUIRE(cert.find("killing_field_chart") != nullptr);
  REQUIRE(cert.find("unit_wind") != nullptr);
  REQUIRE(cert.find("orbit_unit_norm") != nullptr);
  CHECK(cert.find("killing_field_chart")->value <= 1e-6);
  CHECK(cert.find("orbit_unit_norm")->value <= 1e-8);

  // The deviation from left invariance is reported but never gates.
  const CheckResult* dev = cert.find("left_invariance_deviation");
  REQUIRE(dev != nullptr);
  CHECK_FALSE(dev->gating);
  CHECK(dev->pass);
}

TEST_CASE("certificate verifies flat solvable instances with a left wind") {
  const CatalogEntry entry = kropina::catalog_get("e0tilde2", {{"nu", 2.0}});
  const NavigationData nav = unit_wind(entry.metric, Eigen::Vector3d(0, 0, 1));
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Left);

  CHECK(cert.verified);
  CHECK(cert.sigma == doctest::Approx(0.0));
  REQUIRE(cert.find("killing_field") != nullptr);
  CHECK(cert.find("killing_field")->pass);
  REQUIRE(cert.find("unit_wind") != nullptr);
  CHECK(cert.find("unit_wind")->value <= 1e-12);
  // Left winds need no orbit sampling: invariance keeps the length constant.
  CHECK(cert.find("orbit_unit_norm") == nullptr);
}

TEST_CASE("certificate verifies the round three-sphere at another scale") {
  const CatalogEntry entry = kropina::catalog_get("su2_round", {{"lambda", 2.0}});
  const NavigationData nav = unit_wind(entry.metric, Eigen::Vector3d(1, 0, 0));
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Left);
  CHECK(cert.verified);
  CHECK(cert.sigma == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cert.ricci_constant);
}

TEST_CASE("certificate rejects a non-Einstein base metric") {
  const CatalogEntry entry = kropina::catalog_get("heisenberg3");
  const NavigationData nav = unit_wind(entry.metric, Eigen::Vector3d(0, 0, 1));
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Central);

  CHECK_FALSE(cert.verified);
  CHECK(cert.classification == "falsified");
  CHECK_FALSE(cert.ricci_constant);
  REQUIRE(cert.find("einstein_metric") != nullptr);
  CHECK_FALSE(cert.find("einstein_metric")->pass);
  // The wind itself is fine; only the metric fails.
  REQUIRE(cert.find("central_direction") != nullptr);
  CHECK(cert.find("central_direction")->pass);
  REQUIRE(cert.find("unit_wind") != nullptr);
  CHECK(cert.find("unit_wind")->pass);
}

TEST_CASE("certificate rejects a wind outside the Killing space") {
  const CatalogEntry entry = kropina::catalog_get("su2_diag", {});
  const NavigationData nav = unit_wind(entry.metric, Eigen::Vector3d(1, 0, 0));
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Left);

  CHECK_FALSE(cert.verified);
  REQUIRE(cert.find("killing_field") != nullptr);
  CHECK_FALSE(cert.find("killing_field")->pass);
}

TEST_CASE("certificate sigma scales inversely with the metric") {
  for (const double c : {0.25, 4.0}) {
    CatalogEntry entry = kropina::catalog_get("su2_round");
    const InnerProduct scaled(c * entry.metric.matrix());
    const NavigationData nav = unit_wind(scaled, Eigen::Vector3d(1, 0, 0));
    const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Left);
    CHECK(cert.verified);
    CHECK(cert.sigma == doctest::Approx(0.5 / c).epsilon(1e-12));
  }
}

TEST_CASE("constancy of the Ricci factor is only claimed from dimension three") {
  // A flat plane group: verified, but the dimension-two caveat applies.
  const kropina::LieAlgebra plane = kropina::LieAlgebra::from_brackets(2, {"e1", "e2"}, {});
  const InnerProduct g(Eigen::MatrixXd::Identity(2, 2));
  const NavigationData nav = unit_wind(g, Eigen::Vector2d(1, 0));
  const Certificate cert = kropina::einstein_certificate(plane, nav, WKind::Left);
  CHECK(cert.verified);
  CHECK_FALSE(cert.ricci_constant);

  const CatalogEntry r3 = kropina::catalog_get("r3_abelian");
  const NavigationData nav3 = unit_wind(r3.metric, Eigen::Vector3d(1, 0, 0));
  const Certificate cert3 = kropina::einstein_certificate(r3.algebra, nav3, WKind::Left);
  CHECK(cert3.verified);
  CHECK(cert3.ricci_constant);
}

TEST_CASE("certificate option tolerances are honoured") {
  const CatalogEntry entry = kropina::catalog_get("su2_round");
  const NavigationData nav = unit_wind(entry.metric, Eigen::Vector3d(1, 0, 0));
  CertificateOptions opt;
  opt.tol_einstein = 1e-30;  // impossibly strict: numerical noise now fails
  const Certificate cert = kropina::einstein_certificate(entry.algebra, nav, WKind::Left, opt);
  REQUIRE(cert.find("einstein_metric") != nullptr);
  CHECK(cert.find("einstein_metric")->tolerance == 1e-30);
}
