#include "kropina/jet.hpp"

#include <mutex>

#include "kropina/errors.hpp"

namespace kropina {

namespace {

void enumerate_exponents(int nvars, int pos, int remaining, std::vector<std::uint8_t>& cur,
                         std::vector<std::vector<std::uint8_t>>& out) {
  if (pos == nvars - 1) {
    cur[pos] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    cur[pos] = static_cast<std::uint8_t>(c);
    enumerate_exponents(nvars, pos + 1, remaining - c, cur, out);
  }
}

// Pair tables beyond this size fall back to map lookups inside multiply.
constexpr int kProductTableLimit = 2048;

}  // namespace

JetSpace::JetSpace(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw InputError("invalid jet space shape");
  std::vector<std::uint8_t> cur(nvars, 0);
  for (int d = 0; d <= degree; ++d) {
    enumerate_exponents(nvars, 0, d, cur, exps_);
    cum_.push_back(static_cast<int>(exps_.size()));
  }
  deg_.resize(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    int d = 0;
    for (auto e : exps_[i]) d += e;
    deg_[i] = d;
    index_[exps_[i]] = static_cast<int>(i);
  }
  const int n = size();
  deriv_.assign(static_cast<std::size_t>(n) * nvars_, -1);
  dexp_.assign(static_cast<std::size_t>(n) * nvars_, 0);
  for (int i = 0; i < n; ++i) {
    for (int v = 0; v < nvars_; ++v) {
      if (exps_[i][v] == 0) continue;
      std::vector<std::uint8_t> e = exps_[i];
      --e[v];
      deriv_[static_cast<std::size_t>(i) * nvars_ + v] = lookup(e);
      dexp_[static_cast<std::size_t>(i) * nvars_ + v] = exps_[i][v];
    }
  }
  if (n <= kProductTableLimit) {
    prod_.assign(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::uint8_t> sum(nvars_);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (deg_[i] + deg_[j] > degree_) continue;
        for (int v = 0; v < nvars_; ++v) {
          sum[v] = static_cast<std::uint8_t>(exps_[i][v] + exps_[j][v]);
        }
        prod_[static_cast<std::size_t>(i) * n + j] = lookup(sum);
      }
    }
  }
}

int JetSpace::lookup(const std::vector<std::uint8_t>& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

int JetSpace::product_index(int i, int j) const {
  if (deg_[i] + deg_[j] > degree_) return -1;
  if (!prod_.empty()) return prod_[static_cast<std::size_t>(i) * size() + j];
  std::vector<std::uint8_t> sum(nvars_);
  for (int v = 0; v < nvars_; ++v) {
    sum[v] = static_cast<std::uint8_t>(exps_[i][v] + exps_[j][v]);
  }
  return lookup(sum);
}

int JetSpace::derivative_index(int i, int var, int* exponent) const {
  *exponent = dexp_[static_cast<std::size_t>(i) * nvars_ + var];
  return deriv_[static_cast<std::size_t>(i) * nvars_ + var];
}

std::shared_ptr<const JetSpace> JetSpace::get(int nvars, int degree) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetSpace>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto sp = std::shared_ptr<const JetSpace>(new JetSpace(nvars, degree));
  cache[key] = sp;
  return sp;
}

Jet Jet::constant(const JetSpace* sp, double v) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(sp->size());
  c[0] = v;
  return Jet(sp, std::move(c));
}

Jet Jet::variable(const JetSpace* sp, int var, double base) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(sp->size());
  c[0] = base;
  if (sp->degree() >= 1) c[sp->var_index(var)] = 1.0;
  return Jet(sp, std::move(c));
}

Jet Jet::derivative(int var) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(sp_->size());
  for (int i = 0; i < sp_->size(); ++i) {
    if (c_[i] == 0.0) continue;
    int e = 0;
    const int tgt = sp_->derivative_index(i, var, &e);
    if (tgt >= 0) out[tgt] += e * c_[i];
  }
  return Jet(sp_, std::move(out));
}

Jet Jet::operator-() const {
  Jet out = *this;
  out.c_ = -out.c_;
  return out;
}

Jet& Jet::operator+=(const Jet& o) {
  c_ += o.c_;
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_ -= o.c_;
  return *this;
}

Jet& Jet::operator+=(double s) {
  c_[0] += s;
  return *this;
}

Jet& Jet::operator*=(double s) {
  c_ *= s;
  return *this;
}

void fma_into(Jet& acc, const Jet& a, const Jet& b) {
  const JetSpace* sp = a.sp_;
  const int K = sp->degree();
  for (int i = 0; i < sp->size(); ++i) {
    const double ai = a.c_[i];
    if (ai == 0.0) continue;
    const int jmax = sp->count_up_to_degree(K - sp->monomial_degree(i));
    for (int j = 0; j < jmax; ++j) {
      const double bj = b.c_[j];
      if (bj == 0.0) continue;
      acc.c_[sp->product_index(i, j)] += ai * bj;
    }
  }
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out = Jet::constant(a.sp_, 0.0);
  fma_into(out, a, b);
  return out;
}

Jet Jet::inverse() const {
  const double a0 = c_[0];
  if (a0 == 0.0) throw DomainError("jet with zero constant term is not invertible");
  // 1/(a0 (1+r)) = (1 - r + r^2 - ...)/a0 with r nilpotent in the truncation.
  Jet r = *this;
  r.c_ /= a0;
  r.c_[0] = 0.0;
  Jet acc = Jet::constant(sp_, 1.0);
  Jet pow = Jet::constant(sp_, 1.0);
  double sign = 1.0;
  for (int k = 1; k <= sp_->degree(); ++k) {
    pow = pow * r;
    sign = -sign;
    acc += sign * pow;
  }
  acc.c_ /= a0;
  return acc;
}

Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

JetMatrix::JetMatrix(const JetSpace* sp, int rows, int cols)
    : rows_(rows), cols_(cols), sp_(sp), m_(static_cast<std::size_t>(rows) * cols) {
  for (auto& e : m_) e = Jet::constant(sp, 0.0);
}

JetMatrix JetMatrix::identity(const JetSpace* sp, int n) {
  JetMatrix out(sp, n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = Jet::constant(sp, 1.0);
  return out;
}

JetMatrix JetMatrix::constant(const JetSpace* sp, const Eigen::MatrixXd& m) {
  JetMatrix out(sp, static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Jet::constant(sp, m(i, j));
  }
  return out;
}

JetMatrix JetMatrix::operator*(const JetMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("jet matrix product dimension mismatch");
  JetMatrix out(sp_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      for (int k = 0; k < cols_; ++k) {
        fma_into(out.at(i, j), at(i, k), o.at(k, j));
      }
    }
  }
  return out;
}

JetMatrix JetMatrix::operator+(const JetMatrix& o) const {
  JetMatrix out = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) out.m_[i] += o.m_[i];
  return out;
}

JetMatrix JetMatrix::transpose() const {
  JetMatrix out(sp_, cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

JetMatrix& JetMatrix::scale(double s) {
  for (auto& e : m_) e *= s;
  return *this;
}

JetMatrix JetMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("jet matrix inverse requires a square matrix");
  const int n = rows_;
  JetMatrix a = *this;
  JetMatrix inv = identity(sp_, n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a.at(r, col).value()) > std::abs(a.at(piv, col).value())) piv = r;
    }
    if (a.at(piv, col).value() == 0.0) {
      throw DomainError("jet matrix is singular at its base point");
    }
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Jet pivinv = a.at(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * pivinv;
      inv.at(col, j) = inv.at(col, j) * pivinv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const Jet f = -a.at(r, col);
      if (f.value() == 0.0) {
        bool zero = true;
        for (int q = 0; q < f.space()->size(); ++q) {
          if (f.coeff(q) != 0.0) {
            zero = false;
            break;
          }
        }
        if (zero) continue;
      }
      for (int j = 0; j < n; ++j) {
        fma_into(a.at(r, j), f, a.at(col, j));
        fma_into(inv.at(r, j), f, inv.at(col, j));
      }
    }
  }
  return inv;
}

Eigen::MatrixXd JetMatrix::values() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = at(i, j).value();
  }
  return out;
}

}  // namespace kropina
