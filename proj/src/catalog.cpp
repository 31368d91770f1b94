#include "kropina/catalog.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "kropina/errors.hpp"

namespace kropina {
namespace {

// ---------------------------------------------------------------------------
// Parameter plumbing

struct ParamSpec {
  std::string key;
  double def = 0.0;
  bool integer = false;
  // Integers: inclusive bounds.  Reals: only strict positivity is required.
  int lo = 0;
  int hi = 0;
};

std::string range_text(const ParamSpec& ps) {
  std::ostringstream os;
  if (ps.integer) {
    os << "an integer with " << ps.lo << " <= " << ps.key << " <= " << ps.hi;
  } else {
    os << "a real number > 0";
  }
  return os.str();
}

using Params = std::map<std::string, double>;

struct EntryDef {
  std::vector<ParamSpec> specs;
  std::function<CatalogEntry(const Params&)> build;
};

Params resolve_params(const std::string& name, const std::vector<ParamSpec>& specs,
                      const Params& given) {
  for (const auto& [key, value] : given) {
    (void)value;
    bool known = false;
    for (const auto& ps : specs) known = known || ps.key == key;
    if (!known) {
      std::ostringstream os;
      os << "unknown parameter '" << key << "' for '" << name << "'";
      if (specs.empty()) {
        os << " (it takes none)";
      } else {
        os << "; expected:";
        for (const auto& ps : specs) os << " " << ps.key;
      }
      throw InputError(os.str());
    }
  }
  Params out;
  for (const auto& ps : specs) {
    auto it = given.find(ps.key);
    const double v = it == given.end() ? ps.def : it->second;
    const bool ok = ps.integer ? (v == std::floor(v) && v >= ps.lo && v <= ps.hi)
                               : (std::isfinite(v) && v > 0.0);
    if (!ok) {
      std::ostringstream os;
      os << "parameter '" << ps.key << "' of '" << name << "' must be "
         << range_text(ps) << ", got " << v;
      throw InputError(os.str());
    }
    out[ps.key] = v;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small builders

Eigen::VectorXd unit(int dim, int k, double scale = 1.0) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  v[k] = scale;
  return v;
}

std::vector<BracketTerm> su2_brackets() {
  // [x,y] = z, [x,z] = -y, [y,z] = x.
  return {{0, 1, unit(3, 2)}, {0, 2, unit(3, 1, -1.0)}, {1, 2, unit(3, 0)}};
}

CatalogEntry make_r3(const Params& p) {
  auto A = LieAlgebra::from_brackets(3, {"x", "y", "z"}, {});
  InnerProduct g(Eigen::MatrixXd::Identity(3, 3));
  CatalogEntry e{"r3_abelian", p, std::move(A), std::move(g), {}, {}, {}};
  e.vectors["W_thm3"] = unit(3, 0);
  e.expected = {0.0, true, 3, {}, "abelian, flat; every direction is Killing"};
  return e;
}

CatalogEntry make_e0tilde2(const Params& p) {
  const double nu = p.at("nu");
  // [x,z] = y, [y,z] = -x: the universal cover of the Euclidean motion group.
  auto A = LieAlgebra::from_brackets(
      3, {"x", "y", "z"}, {{0, 2, unit(3, 1)}, {1, 2, unit(3, 0, -1.0)}});
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(2, 2) = nu;
  CatalogEntry e{"e0tilde2", p, std::move(A), InnerProduct(m), {}, {}, {}};
  e.vectors["W_thm3"] = unit(3, 2, 1.0 / std::sqrt(nu));
  e.expected = {0.0, true, 1,
                {}, "flat solvable geometry for every nu; only the z-axis is Killing"};
  return e;
}

CatalogEntry make_su2_round(const Params& p) {
  const double lambda = p.at("lambda");
  auto A = LieAlgebra::from_brackets(3, {"x", "y", "z"}, su2_brackets());
  InnerProduct g(lambda * Eigen::MatrixXd::Identity(3, 3));
  CatalogEntry e{"su2_round", p, std::move(A), std::move(g), {}, {}, {}};
  e.vectors["W_thm3"] = unit(3, 0);  // direction; normalized when certified
  e.expected = {1.0 / (2.0 * lambda), true, 3,
                {}, "bi-invariant round metric on SU(2), Ricci = (1/2) id as a bilinear form"};
  return e;
}

CatalogEntry make_su2_diag(const Params& p) {
  const double l1 = p.at("lambda1"), l2 = p.at("lambda2"), l3 = p.at("lambda3");
  auto A = LieAlgebra::from_brackets(3, {"x", "y", "z"}, su2_brackets());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 3);
  m.diagonal() << l1, l2, l3;
  CatalogEntry e{"su2_diag", p, std::move(A), InnerProduct(m), {}, {}, {}};
  const bool all_equal = l1 == l2 && l2 == l3;
  const bool two_equal = l1 == l2 || l2 == l3 || l1 == l3;
  e.expected.einstein = all_equal;
  if (all_equal) e.expected.sigma = 1.0 / (2.0 * l1);
  e.expected.killing_dim = all_equal ? 3 : (two_equal ? 1 : 0);
  e.expected.notes =
      "diagonal metrics on SU(2); Einstein only when the three weights coincide";
  return e;
}

CatalogEntry make_heisenberg(const Params& p) {
  auto A = LieAlgebra::from_brackets(3, {"x", "y", "z"}, {{0, 1, unit(3, 2)}});
  InnerProduct g(Eigen::MatrixXd::Identity(3, 3));
  CatalogEntry e{"heisenberg3", p, std::move(A), std::move(g), {}, {}, {}};
  e.vectors["W_center"] = unit(3, 2);
  e.expected = {{}, false, 1, {}, "nilpotent; Ricci is indefinite, never Einstein"};
  return e;
}

CatalogEntry make_su2_plus_r1(const Params& p) {
  std::vector<BracketTerm> br;
  for (auto& t : su2_brackets()) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(4);
    c.head(3) = t.coeffs;
    br.push_back({t.i, t.j, c});
  }
  auto A = LieAlgebra::from_brackets(4, {"x", "y", "z", "t"}, br);
  InnerProduct g(Eigen::MatrixXd::Identity(4, 4));
  CatalogEntry e{"su2_plus_r1", p, std::move(A), std::move(g), {}, {}, {}};
  e.vectors["W_center"] = unit(4, 3);
  e.expected = {{}, false, 4,
                {}, "product with a flat line; Ricci vanishes on the central factor"};
  return e;
}

// 0-based index of the pair (i,j), 1 <= i < j <= n, in lexicographic order.
int pair_index(int n, int i, int j) { return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1); }

CatalogEntry make_so_n(const Params& p) {
  const int n = static_cast<int>(p.at("n"));
  auto A = so_algebra(n);
  const int N = A.dim();
  const double k = 2.0 * (n - 2);  // -B = 2(n-2) id in this basis
  InnerProduct g(k * Eigen::MatrixXd::Identity(N, N));
  CatalogEntry e{"so_n", p, std::move(A), std::move(g), {}, {}, {}};
  e.vectors["W_thm3"] = unit(N, pair_index(n, 1, 2), 1.0 / std::sqrt(k));
  e.expected = {0.25, true, N,
                {}, "bi-invariant metric -B on so(n); sigma = 1/4 independently of n"};
  return e;
}

CatalogEntry make_sphere_so(const Params& p) {
  const int n = static_cast<int>(p.at("n"));
  auto ambient = so_algebra(n + 1);
  const int N = ambient.dim();
  // Isotropy so(n): the pairs not touching the last index.
  Eigen::MatrixXd H(N, n * (n - 1) / 2);
  int col = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) H.col(col++) = unit(N, pair_index(n + 1, i, j));
  const double k = 2.0 * (n - 1);  // -B of so(n+1)
  Eigen::MatrixXd q = k * Eigen::MatrixXd::Identity(N, N);
  auto S = build_reductive(ambient, H, BilinearForm(q));
  CatalogEntry e{"sphere_so", p, std::move(ambient), InnerProduct(q), {}, std::move(S), {}};
  e.expected = {0.5, true, {}, 0,
                "round sphere S^n as SO(n+1)/SO(n) with the normal metric; no invariant directions"};
  return e;
}

CatalogEntry make_sphere_u(const Params& p) {
  const int n = static_cast<int>(p.at("n"));
  const int m = n + 1;
  auto ambient = u_algebra(m);
  const int N = ambient.dim();  // m^2
  // Isotropy u(n): everything supported on rows/columns 2..m.
  Eigen::MatrixXd H(N, n * n);
  int col = 0;
  for (int kk = 2; kk <= m; ++kk) H.col(col++) = unit(N, kk - 1);
  for (int i = 2; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      H.col(col++) = unit(N, m + 2 * pair_index(m, i, j));
      H.col(col++) = unit(N, m + 2 * pair_index(m, i, j) + 1);
    }
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(N, N);
  auto S = build_reductive(ambient, H, BilinearForm(q));
  CatalogEntry e{"sphere_u", p, std::move(ambient), InnerProduct(q), {}, std::move(S), {}};
  e.vectors["hopf"] = unit(N, 0);  // D_1, ambient coordinates
  e.expected = {2.0 * n, true, {}, 1,
                "round S^(2n+1) as U(n+1)/U(n); the Hopf direction spans the invariant line"};
  return e;
}

const std::vector<std::pair<std::string, EntryDef>>& registry() {
  static const std::vector<std::pair<std::string, EntryDef>> reg = {
      {"r3_abelian", {{}, make_r3}},
      {"e0tilde2", {{{"nu", 1.0}}, make_e0tilde2}},
      {"su2_round", {{{"lambda", 1.0}}, make_su2_round}},
      {"su2_diag",
       {{{"lambda1", 1.0}, {"lambda2", 2.0}, {"lambda3", 3.0}}, make_su2_diag}},
      {"so_n", {{{"n", 3.0, true, 3, 12}}, make_so_n}},
      {"heisenberg3", {{}, make_heisenberg}},
      {"sphere_so", {{{"n", 2.0, true, 2, 11}}, make_sphere_so}},
      {"sphere_u", {{{"n", 1.0, true, 1, 5}}, make_sphere_u}},
      {"su2_plus_r1", {{}, make_su2_plus_r1}},
  };
  return reg;
}

const EntryDef& lookup(const std::string& name) {
  for (const auto& [key, def] : registry())
    if (key == name) return def;
  std::ostringstream os;
  os << "unknown instance '" << name << "'; available:";
  for (const auto& [key, def] : registry()) {
    (void)def;
    os << " " << key;
  }
  throw InputError(os.str());
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [key, def] : registry()) {
    (void)def;
    out.push_back(key);
  }
  return out;
}

std::vector<std::string> catalog_param_names(const std::string& name) {
  std::vector<std::string> out;
  for (const auto& ps : lookup(name).specs) out.push_back(ps.key);
  return out;
}

std::map<std::string, double> catalog_default_params(const std::string& name) {
  std::map<std::string, double> out;
  for (const auto& ps : lookup(name).specs) out[ps.key] = ps.def;
  return out;
}

CatalogEntry catalog_get(const std::string& name,
                         const std::map<std::string, double>& params) {
  const EntryDef& def = lookup(name);
  return def.build(resolve_params(name, def.specs, params));
}

LieAlgebra so_algebra(int n) {
  if (n < 2) throw InputError("so(n) requires n >= 2");
  const int N = n * (n - 1) / 2;
  std::vector<std::string> names(N);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      names[pair_index(n, i, j)] = "E" + std::to_string(i) + "_" + std::to_string(j);

  // Coefficients of E-hat_{pq} (any p != q) relative to the i<j basis.
  auto add_hat = [&](Eigen::VectorXd& c, int pp, int qq, double s) {
    if (pp == qq) return;
    if (pp < qq)
      c[pair_index(n, pp, qq)] += s;
    else
      c[pair_index(n, qq, pp)] -= s;
  };

  std::vector<BracketTerm> terms;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          const int a = pair_index(n, i, j), b = pair_index(n, k, l);
          if (a >= b) continue;
          Eigen::VectorXd c = Eigen::VectorXd::Zero(N);
          if (j == k) add_hat(c, i, l, 1.0);
          if (i == k) add_hat(c, j, l, -1.0);
          if (j == l) add_hat(c, i, k, -1.0);
          if (i == l) add_hat(c, j, k, 1.0);
          if (c.cwiseAbs().maxCoeff() > 0.0) terms.push_back({a, b, c});
        }
  return LieAlgebra::from_brackets(N, std::move(names), terms);
}

LieAlgebra u_algebra(int n) {
  if (n < 1) throw InputError("u(n) requires n >= 1");
  using Mat = Eigen::MatrixXcd;
  const std::complex<double> im(0.0, 1.0);
  const int N = n * n;

  std::vector<Mat> basis;
  std::vector<std::string> names;
  basis.reserve(N);
  for (int k = 1; k <= n; ++k) {
    Mat z = Mat::Zero(n, n);
    z(k - 1, k - 1) = im;
    basis.push_back(z);
    names.push_back("D" + std::to_string(k));
  }
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      Mat a = Mat::Zero(n, n), s = Mat::Zero(n, n);
      a(j - 1, k - 1) = 1.0;
      a(k - 1, j - 1) = -1.0;
      s(j - 1, k - 1) = im;
      s(k - 1, j - 1) = im;
      basis.push_back(a);
      names.push_back("A" + std::to_string(j) + "_" + std::to_string(k));
      basis.push_back(s);
      names.push_back("S" + std::to_string(j) + "_" + std::to_string(k));
    }

  // Coordinates of an anti-Hermitian matrix in the basis above.
  auto coords = [&](const Mat& c) {
    Eigen::VectorXd v(N);
    for (int k = 0; k < n; ++k) v[k] = c(k, k).imag();
    int at = n;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        v[at++] = c(j, k).real();
        v[at++] = c(j, k).imag();
      }
    return v;
  };

  std::vector<BracketTerm> terms;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      const Mat c = basis[a] * basis[b] - basis[b] * basis[a];
      const Eigen::VectorXd v = coords(c);
      Mat rebuilt = Mat::Zero(n, n);
      for (int k = 0; k < N; ++k) rebuilt += v[k] * basis[k];
      if ((rebuilt - c).cwiseAbs().maxCoeff() > 1e-14)
        throw DomainError("u(n) commutator left the coordinate span");
      if (v.cwiseAbs().maxCoeff() > 0.0) terms.push_back({a, b, v});
    }
  return LieAlgebra::from_brackets(N, std::move(names), terms);
}

}  // namespace kropina
