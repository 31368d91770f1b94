#include <Eigen/Dense>

#include "doctest.h"
#include "kropina/errors.hpp"
#include "kropina/lie_algebra.hpp"
#include "kropina/numeric.hpp"
#include "support/oracles.hpp"

using kropina::BracketTerm;
using kropina::InnerProduct;
using kropina::InputError;
using kropina::LieAlgebra;

namespace {

Eigen::VectorXd e(int dim, int k, double s = 1.0) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[k] = s;
  return v;
}

LieAlgebra su2() {
  return LieAlgebra::from_brackets(
      3, {"x", "y", "z"}, {{0, 1, e(3, 2)}, {0, 2, e(3, 1, -1.0)}, {1, 2, e(3, 0)}});
}

}  // namespace

TEST_CASE("su2 structure constants and adjoint matrices") {
  const LieAlgebra A = su2();
  CHECK(A.dim() == 3);
  CHECK(A.antisymmetric());
  CHECK(A.jacobi_defect() == doctest::Approx(0.0).epsilon(1e-14));

  // [x,y] = z, [y,x] = -z, [y,z] = x
  CHECK((A.bracket(e(3, 0), e(3, 1)) - e(3, 2)).norm() == 0.0);
  CHECK((A.bracket(e(3, 1), e(3, 0)) + e(3, 2)).norm() == 0.0);
  CHECK((A.bracket(e(3, 1), e(3, 2)) - e(3, 0)).norm() == 0.0);

  // ad is linear in both slots
  kropina::Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const Eigen::VectorXd u = rng.box(3), v = rng.box(3), w = rng.box(3);
    const Eigen::VectorXd lhs = A.bracket(u + 2.0 * v, w);
    const Eigen::VectorXd rhs = A.bracket(u, w) + 2.0 * A.bracket(v, w);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
    CHECK((A.bracket(u, v) + A.bracket(v, u)).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((A.ad_matrix(u) * v - A.bracket(u, v)).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("Jacobi violations are rejected") {
  // [e1,e2] = e3 and [e1,e3] = e1 leave a Jacobi defect of e3.
  CHECK_THROWS_AS(
      LieAlgebra::from_brackets(3, {"a", "b", "c"}, {{0, 1, e(3, 2)}, {0, 2, e(3, 0)}}),
      InputError);
}

TEST_CASE("Killing form of su2 is -2 id") {
  const Eigen::MatrixXd B = su2().killing_form();
  CHECK((B + 2.0 * Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("metric adjoint is the actual adjoint") {
  const LieAlgebra A = su2();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(3, 3);
  g.diagonal() << 1.0, 2.0, 3.0;
  kropina::Rng rng(5);
  for (int t = 0; t < 25; ++t) {
    const Eigen::VectorXd w = rng.box(3), u = rng.box(3), v = rng.box(3);
    const double lhs = (A.ad_star_matrix(w, g) * u).dot(g * v);
    const double rhs = u.dot(g * A.bracket(w, v));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("centers of the small models") {
  const LieAlgebra heis =
      LieAlgebra::from_brackets(3, {"x", "y", "z"}, {{0, 1, e(3, 2)}});
  const Eigen::MatrixXd c = heis.center();
  REQUIRE(c.cols() == 1);
  CHECK((c.col(0) - e(3, 2)).cwiseAbs().maxCoeff() < 1e-14);

  CHECK(su2().center().cols() == 0);

  const LieAlgebra r3 = LieAlgebra::from_brackets(3, {"x", "y", "z"}, {});
  CHECK(r3.center().cols() == 3);
}

TEST_CASE("so(n) from the matrix realization") {
  for (const int n : {3, 4, 5}) {
    const LieAlgebra A = oracles::so_from_matrices(n);
    CHECK(A.dim() == n * (n - 1) / 2);
    CHECK(A.jacobi_defect() == 0.0);

    // Killing form B = (n-2) tr(XY): diagonal, value -2(n-2).
    const Eigen::MatrixXd B = A.killing_form();
    const Eigen::MatrixXd expect =
        -2.0 * (n - 2) * Eigen::MatrixXd::Identity(A.dim(), A.dim());
    CHECK((B - expect).cwiseAbs().maxCoeff() == 0.0);
    CHECK((B - oracles::so_killing_from_trace(n)).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("so(3) bracket table in the pair basis") {
  const LieAlgebra A = oracles::so_from_matrices(3);
  // basis order: E12, E13, E23
  CHECK((A.bracket(e(3, 0), e(3, 1)) + e(3, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((A.bracket(e(3, 0), e(3, 2)) - e(3, 1)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((A.bracket(e(3, 1), e(3, 2)) + e(3, 0)).cwiseAbs().maxCoeff() == 0.0);
}
