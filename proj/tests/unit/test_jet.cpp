#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "kropina/errors.hpp"
#include "kropina/jet.hpp"
#include "kropina/numeric.hpp"

using kropina::DomainError;
using kropina::Jet;
using kropina::JetMatrix;
using kropina::JetSpace;

TEST_CASE("polynomial jets carry exact Taylor coefficients") {
  auto sp = JetSpace::get(2, 4);
  const Jet x = Jet::variable(sp.get(), 0, 2.0);
  const Jet y = Jet::variable(sp.get(), 1, -1.0);

  // f = x^2 y + 3 y at (2, -1): value -7
  const Jet f = x * x * y + 3.0 * y;
  CHECK(f.value() == doctest::Approx(-7.0).epsilon(1e-15));
  // df/dx = 2xy = -4
  CHECK(f.derivative(0).value() == doctest::Approx(-4.0).epsilon(1e-15));
  // df/dy = x^2 + 3 = 7
  CHECK(f.derivative(1).value() == doctest::Approx(7.0).epsilon(1e-15));
  // d2f/dxdy = 2x = 4, symmetric in the order of differentiation
  CHECK(f.derivative(0).derivative(1).value() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(f.derivative(1).derivative(0).value() == doctest::Approx(4.0).epsilon(1e-15));
  // d3f/dx2dy = 2
  CHECK(f.derivative(0).derivative(0).derivative(1).value() ==
        doctest::Approx(2.0).epsilon(1e-15));
  // d2f/dy2 = 0
  CHECK(f.derivative(1).derivative(1).value() == 0.0);
}

TEST_CASE("quotient inverts the product") {
  auto sp = JetSpace::get(3, 4);
  const Jet x = Jet::variable(sp.get(), 0, 0.7);
  const Jet y = Jet::variable(sp.get(), 1, -0.2);
  const Jet z = Jet::variable(sp.get(), 2, 1.3);
  const Jet f = 1.0 + x + x * y * z + z * z;
  const Jet g = 2.0 + x * x + y;
  const Jet h = (f * g) / g;
  for (int i = 0; i < sp->size(); ++i)
    CHECK(h.coeff(i) == doctest::Approx(f.coeff(i)).epsilon(1e-13));
}

TEST_CASE("inverse matches the geometric series") {
  auto sp = JetSpace::get(1, 4);
  const Jet x = Jet::variable(sp.get(), 0, 0.0);
  const Jet inv = (1.0 + x).inverse();  // 1 - x + x^2 - x^3 + x^4
  for (int d = 0; d <= 4; ++d)
    CHECK(inv.coeff(d) == doctest::Approx((d % 2 == 0) ? 1.0 : -1.0).epsilon(1e-14));

  const Jet one = inv * (1.0 + x);
  CHECK(one.coeff(0) == doctest::Approx(1.0).epsilon(1e-14));
  for (int d = 1; d <= 4; ++d) CHECK(std::abs(one.coeff(d)) < 1e-14);
}

TEST_CASE("inverse of a zero constant term is rejected") {
  auto sp = JetSpace::get(1, 3);
  const Jet x = Jet::variable(sp.get(), 0, 0.0);
  CHECK_THROWS_AS(x.inverse(), DomainError);
}

TEST_CASE("fma_into accumulates a product") {
  auto sp = JetSpace::get(2, 3);
  const Jet x = Jet::variable(sp.get(), 0, 0.4);
  const Jet y = Jet::variable(sp.get(), 1, -0.9);
  const Jet a = 1.0 + x * y;
  const Jet b = 2.0 + y;
  Jet acc = x;
  fma_into(acc, a, b);
  const Jet expect = x + a * b;
  for (int i = 0; i < sp->size(); ++i)
    CHECK(acc.coeff(i) == doctest::Approx(expect.coeff(i)).epsilon(1e-14));
}

TEST_CASE("Euler identity for a homogeneous cubic") {
  auto sp = JetSpace::get(2, 4);
  const Jet x = Jet::variable(sp.get(), 0, 1.1);
  const Jet y = Jet::variable(sp.get(), 1, 0.6);
  const Jet f = x * x * y;  // homogeneous of degree 3
  const double euler =
      1.1 * f.derivative(0).value() + 0.6 * f.derivative(1).value();
  CHECK(euler == doctest::Approx(3.0 * f.value()).epsilon(1e-13));
}

TEST_CASE("jet matrix inverse") {
  auto sp = JetSpace::get(2, 2);
  const Jet x = Jet::variable(sp.get(), 0, 0.0);
  const Jet y = Jet::variable(sp.get(), 1, 0.0);

  JetMatrix M(sp.get(), 3, 3);
  M.at(0, 0) = 2.0 + x;
  M.at(0, 1) = x * y;
  M.at(0, 2) = Jet::constant(sp.get(), 0.3);
  M.at(1, 0) = y;
  M.at(1, 1) = 1.0 + y;
  M.at(1, 2) = x;
  M.at(2, 0) = Jet::constant(sp.get(), 0.0);
  M.at(2, 1) = 0.5 * x;
  M.at(2, 2) = 1.0 + x * y;

  const JetMatrix I = M * M.inverse();
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < sp->size(); ++k) {
        const double expect = (r == c && k == 0) ? 1.0 : 0.0;
        CHECK(I.at(r, c).coeff(k) == doctest::Approx(expect).epsilon(1e-12));
      }

  JetMatrix S(sp.get(), 2, 2);
  S.at(0, 0) = x;  // zero constant term: singular at the base point
  S.at(0, 1) = Jet::constant(sp.get(), 0.0);
  S.at(1, 0) = Jet::constant(sp.get(), 0.0);
  S.at(1, 1) = 1.0 + y;
  CHECK_THROWS_AS(S.inverse(), DomainError);
}

TEST_CASE("derivatives truncate to zero beyond the budget") {
  auto sp = JetSpace::get(1, 2);
  const Jet x = Jet::variable(sp.get(), 0, 0.5);
  const Jet f = x * x;
  const Jet d3 = f.derivative(0).derivative(0).derivative(0);
  for (int i = 0; i < sp->size(); ++i) CHECK(d3.coeff(i) == 0.0);
}

TEST_CASE("jet space bookkeeping") {
  auto sp = JetSpace::get(3, 4);
  CHECK(sp->nvars() == 3);
  CHECK(sp->degree() == 4);
  CHECK(sp->size() == 35);  // C(3+4, 4)
  CHECK(sp->count_up_to_degree(0) == 1);
  CHECK(sp->count_up_to_degree(1) == 4);
  CHECK(sp->count_up_to_degree(2) == 10);
  CHECK(sp->monomial_degree(0) == 0);
  CHECK(sp->monomial_degree(sp->var_index(2)) == 1);
  // interning: same shape gives the same object
  CHECK(JetSpace::get(3, 4).get() == sp.get());
}
