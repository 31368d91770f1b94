#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace kropina {

// Truncated multivariate Taylor arithmetic.
//
// A Jet over JetSpace(m, K) stores the coefficients of a polynomial in m
// formal displacement variables truncated at total degree K.  Seeding
// variable i with base value x_i and propagating a composite function through
// +,-,*,/ yields the exact Taylor coefficients of that function at the base
// point, up to degree K.  Formal partial derivatives then expose mixed
// partials directly: jet.derivative(i).derivative(j).value() is exactly
// d2 f / dx_i dx_j at the base point (valid while the differentiation order
// stays within the truncation budget).
//
// This is the only differentiation mechanism used in the curvature
// pipelines; divided differences exist solely as a cross-check in the tests.

// Monomial bookkeeping shared by all jets of a given shape.  Instances are
// interned via JetSpace::get and immutable afterwards.
class JetSpace {
 public:
  static std::shared_ptr<const JetSpace> get(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int size() const { return static_cast<int>(exps_.size()); }

  // Total degree of monomial i; monomials are graded so degrees are
  // nondecreasing in the index.
  int monomial_degree(int i) const { return deg_[i]; }
  // Number of monomials of total degree <= d.
  int count_up_to_degree(int d) const { return cum_[d]; }

  // Index of the product monomial, or -1 when the degrees overflow K.
  int product_index(int i, int j) const;
  // Index of monomial i with one power of var removed (-1 if none) and the
  // exponent that was removed.
  int derivative_index(int i, int var, int* exponent) const;

  // Index of the linear monomial of a variable.
  int var_index(int v) const { return 1 + v; }

  JetSpace(const JetSpace&) = delete;
  JetSpace& operator=(const JetSpace&) = delete;

 private:
  JetSpace(int nvars, int degree);
  int lookup(const std::vector<std::uint8_t>& e) const;

  int nvars_, degree_;
  std::vector<std::vector<std::uint8_t>> exps_;
  std::vector<int> deg_;
  std::vector<int> cum_;  // cum_[d] = #monomials with degree <= d
  std::map<std::vector<std::uint8_t>, int> index_;
  std::vector<std::int32_t> prod_;   // full pair table when size is moderate
  std::vector<std::int32_t> deriv_;  // size*nvars table
  std::vector<std::int32_t> dexp_;   // exponent removed alongside deriv_
};

class Jet {
 public:
  Jet() = default;
  static Jet constant(const JetSpace* sp, double v);
  static Jet variable(const JetSpace* sp, int var, double base);

  const JetSpace* space() const { return sp_; }
  double value() const { return c_[0]; }
  double coeff(int i) const { return c_[i]; }

  // Formal partial derivative with respect to variable var (degree drops by
  // one; coefficients beyond the reduced validity order are zero).
  Jet derivative(int var) const;

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator+=(double s);
  Jet& operator*=(double s);

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, double s) { return a += s; }
  friend Jet operator+(double s, Jet a) { return a += s; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);

  // acc += a * b without allocating a temporary.
  friend void fma_into(Jet& acc, const Jet& a, const Jet& b);

  // Multiplicative inverse; requires a nonzero constant term.
  Jet inverse() const;

 private:
  Jet(const JetSpace* sp, Eigen::VectorXd c) : sp_(sp), c_(std::move(c)) {}

  const JetSpace* sp_ = nullptr;
  Eigen::VectorXd c_;
};

// Dense matrix over the jet ring; dimensions stay small (the algebra
// dimension), so a plain vector of jets with hand-rolled Gauss-Jordan solves
// is appropriate.
class JetMatrix {
 public:
  JetMatrix() = default;
  JetMatrix(const JetSpace* sp, int rows, int cols);
  static JetMatrix identity(const JetSpace* sp, int n);
  static JetMatrix constant(const JetSpace* sp, const Eigen::MatrixXd& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Jet& at(int i, int j) { return m_[i * cols_ + j]; }
  const Jet& at(int i, int j) const { return m_[i * cols_ + j]; }

  JetMatrix operator*(const JetMatrix& o) const;
  JetMatrix operator+(const JetMatrix& o) const;
  JetMatrix transpose() const;
  JetMatrix& scale(double s);

  // Gauss-Jordan inverse with pivoting on constant terms; throws DomainError
  // when the constant-term matrix is singular.
  JetMatrix inverse() const;

  // Constant terms as a plain matrix.
  Eigen::MatrixXd values() const;

 private:
  int rows_ = 0, cols_ = 0;
  const JetSpace* sp_ = nullptr;
  std::vector<Jet> m_;
};

}  // namespace kropina
