// Command-line front end: every library claim reachable from one shell line.
//
// Exit codes: 0 = all checks verified, 1 = input/usage error, 2 = well-formed
// input whose hypothesis the checks falsified.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kropina/catalog.hpp"
#include "kropina/certificate.hpp"
#include "kropina/chart.hpp"
#include "kropina/errors.hpp"
#include "kropina/homogeneous.hpp"
#include "kropina/instance_io.hpp"
#include "kropina/kropina_metric.hpp"
#include "kropina/riemann.hpp"

namespace {

using kropina::BilinearForm;
using kropina::CatalogEntry;
using kropina::Certificate;
using kropina::CertificateOptions;
using kropina::ChartConfig;
using kropina::CheckResult;
using kropina::DomainError;
using kropina::InnerProduct;
using kropina::InputError;
using kropina::InstanceData;
using kropina::Json;
using kropina::LieAlgebra;
using kropina::NavigationData;
using kropina::WKind;

// ---------------------------------------------------------------------------
// Options shared by the subcommands (each parses the subset it registers).

struct Options {
  std::string builtin;
  std::string input;
  std::vector<std::string> params;
  std::string w;
  std::string w_kind;
  std::string format = "text";
  int samples = 0;
  std::uint64_t seed = 0;
  int series_order = 0;
  double radius = 0.0;
  double tol = 0.0;
  bool oracle = false;

  // which flags the user actually passed
  bool has(const CLI::App* cmd, const std::string& flag) const {
    return cmd->count(flag) > 0;
  }
};

// ---------------------------------------------------------------------------
// JSON helpers

Json vec_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (int k = 0; k < v.size(); ++k) a.push_back(v[k]);
  return a;
}

Json mat_json(const Eigen::MatrixXd& m) {
  Json a = Json::array();
  for (int r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r).transpose()));
  return a;
}

Json check_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["pass"] = c.pass;
  j["value"] = c.value;
  j["tolerance"] = c.tolerance;
  if (!c.gating) j["gating"] = false;
  return j;
}

// ---------------------------------------------------------------------------
// Instance resolution

std::map<std::string, double> parse_params(const std::string& name,
                                           const std::vector<std::string>& tokens) {
  const std::vector<std::string> order = kropina::catalog_param_names(name);
  std::map<std::string, double> out;
  std::size_t cursor = 0;

  auto to_number = [](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw InputError("cannot parse parameter value '" + s + "'");
    }
    if (used != s.size())
      throw InputError("cannot parse parameter value '" + s + "'");
    return v;
  };

  std::vector<std::string> pieces;
  for (const auto& tok : tokens) {
    std::size_t start = 0;
    while (start <= tok.size()) {
      const std::size_t comma = tok.find(',', start);
      const std::string piece =
          tok.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) pieces.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }

  for (const auto& piece : pieces) {
    const std::size_t eq = piece.find('=');
    if (eq != std::string::npos) {
      const std::string key = piece.substr(0, eq);
      if (!out.emplace(key, to_number(piece.substr(eq + 1))).second)
        throw InputError("parameter '" + key + "' given twice");
    } else {
      if (cursor >= order.size())
        throw InputError("too many positional parameters for '" + name + "' (it takes " +
                         std::to_string(order.size()) + ")");
      const std::string& key = order[cursor++];
      if (!out.emplace(key, to_number(piece)).second)
        throw InputError("parameter '" + key + "' given twice");
    }
  }
  return out;
}

// An instance resolved from --builtin or --input, reduced to the fields the
// commands consume.
struct Loaded {
  LieAlgebra algebra;
  Eigen::MatrixXd metric;  // raw matrix; validity is command business
  std::map<std::string, Eigen::VectorXd> vectors;
  std::optional<kropina::ReductiveSpace> reductive;  // builtin coset entries
  std::optional<Eigen::MatrixXd> subalgebra;         // file coset data
  std::optional<Eigen::MatrixXd> ambient_form;
  std::optional<Eigen::MatrixXd> metric_override;
  std::optional<Eigen::VectorXd> vector;
  std::optional<WKind> w_kind;
  std::optional<ChartConfig> chart;
  std::optional<CatalogEntry> entry;
  Json echo;
};

Loaded load_target(const Options& o) {
  const bool has_builtin = !o.builtin.empty();
  const bool has_input = !o.input.empty();
  if (has_builtin == has_input)
    throw InputError("exactly one of --builtin NAME or --input FILE is required");

  if (has_builtin) {
    CatalogEntry entry = kropina::catalog_get(o.builtin, parse_params(o.builtin, o.params));
    Json echo;
    echo["name"] = entry.name;
    Json pj = Json::object();
    for (const auto& [k, v] : entry.params) pj[k] = v;
    echo["params"] = std::move(pj);
    Loaded L{entry.algebra,
             entry.metric.matrix(),
             entry.vectors,
             entry.reductive,
             {},
             {},
             {},
             {},
             {},
             {},
             std::move(entry),
             std::move(echo)};
    return L;
  }

  if (!o.params.empty()) throw InputError("--param applies only to --builtin instances");
  InstanceData data = kropina::load_instance(o.input);
  Json echo;
  echo["file"] = o.input;
  std::optional<Eigen::MatrixXd> coset_metric;
  if (data.subalgebra && data.metric) coset_metric = data.metric;
  Loaded L{std::move(data.algebra),
           Eigen::MatrixXd(),
           {},
           {},
           std::move(data.subalgebra),
           std::move(data.ambient_form),
           std::move(coset_metric),
           std::move(data.vector),
           data.w_kind,
           data.chart,
           {},
           std::move(echo)};
  L.metric = data.metric ? *data.metric
                         : Eigen::MatrixXd::Identity(L.algebra.dim(), L.algebra.dim());
  return L;
}

ChartConfig resolve_chart(const Loaded& L, const Options& o, const CLI::App* cmd) {
  ChartConfig cfg = L.chart ? *L.chart : ChartConfig{};
  if (cmd->count("--samples")) cfg.samples = o.samples;
  if (cmd->count("--seed")) cfg.seed = o.seed;
  if (cmd->count("--series-order")) cfg.series_order = o.series_order;
  if (cmd->count("--radius")) cfg.radius = o.radius;
  cfg.validate();
  return cfg;
}

Eigen::VectorXd parse_vector_flag(const std::string& s, int dim) {
  std::vector<double> vals;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string piece =
        s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      throw InputError("--w: cannot parse component '" + piece + "'");
    }
    if (used != piece.size()) throw InputError("--w: cannot parse component '" + piece + "'");
    vals.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(vals.size()) != dim)
    throw InputError("--w: expected " + std::to_string(dim) + " components, got " +
                     std::to_string(vals.size()));
  Eigen::VectorXd v(dim);
  for (int k = 0; k < dim; ++k) v[k] = vals[k];
  return v;
}

std::string known_vector_names(const std::map<std::string, Eigen::VectorXd>& vectors) {
  if (vectors.empty()) return "none";
  std::string s;
  for (const auto& [k, v] : vectors) {
    (void)v;
    if (!s.empty()) s += ", ";
    s += k;
  }
  return s;
}

// Resolve the wind direction for verify: --w (distinguished name or comma
// vector), else the instance's "vector" field.
Eigen::VectorXd resolve_w(const Loaded& L, const Options& o, int dim) {
  if (!o.w.empty()) {
    auto it = L.vectors.find(o.w);
    if (it != L.vectors.end()) return it->second;
    const bool looks_named = !o.w.empty() && (std::isalpha(static_cast<unsigned char>(o.w[0])) ||
                                              o.w[0] == '_');
    if (looks_named)
      throw InputError("--w: unknown distinguished vector '" + o.w +
                       "' (this instance has: " + known_vector_names(L.vectors) + ")");
    return parse_vector_flag(o.w, dim);
  }
  if (L.vector) return *L.vector;
  throw InputError("a wind direction is required: pass --w (vector or name; this instance has: " +
                   known_vector_names(L.vectors) + ") or add \"vector\" to the instance file");
}

WKind resolve_kind(const Loaded& L, const Options& o) {
  if (!o.w_kind.empty()) return kropina::parse_w_kind(o.w_kind);
  if (L.w_kind) return *L.w_kind;
  return WKind::Left;
}

// ---------------------------------------------------------------------------
// Report assembly and rendering

std::string fmt_short(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void render_text(std::ostream& os, const Json& rep) {
  for (const auto& item : rep.items()) {
    const std::string& key = item.key();
    const Json& val = item.value();
    if (key == "checks") {
      for (const auto& c : val) {
        std::string name = c.at("name").get<std::string>();
        name.resize(std::max<std::size_t>(name.size(), 34), ' ');
        os << "  check  " << name << (c.at("pass").get<bool>() ? "PASS" : "FAIL")
           << "   value=" << fmt_short(c.at("value").get<double>())
           << "  tol=" << fmt_short(c.at("tolerance").get<double>());
        if (c.contains("gating") && !c.at("gating").get<bool>()) os << "  (informational)";
        os << "\n";
      }
    } else if (val.is_number_float()) {
      os << key << ": " << fmt_short(val.get<double>()) << "\n";
    } else if (val.is_primitive()) {
      os << key << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    } else {
      os << key << ": " << val.dump() << "\n";
    }
  }
}

// Emits the report and maps it to the exit code.
int finish(const Json& rep, const Options& o, bool falsified) {
  if (o.format == "json")
    std::cout << kropina::dump_json(rep);
  else
    render_text(std::cout, rep);
  return falsified ? 2 : 0;
}

Json base_report(const std::string& command, const Loaded& L) {
  Json rep;
  rep["command"] = command;
  rep["instance"] = L.echo;
  rep["config"] = Json::object();
  return rep;
}

void push_checks(Json& rep, const std::vector<CheckResult>& checks, bool* all_pass) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    if (c.gating && !c.pass) *all_pass = false;
    arr.push_back(check_json(c));
  }
  rep["checks"] = std::move(arr);
}

CheckResult upper_bound_check(const std::string& name, double value, double tol) {
  return {name, value <= tol, value, tol, true};
}

// ---------------------------------------------------------------------------
// inspect

int cmd_inspect(const Options& o) {
  Loaded L = load_target(o);
  const LieAlgebra& A = L.algebra;
  Json rep = base_report("inspect", L);
  rep["config"]["format"] = o.format;

  std::vector<CheckResult> checks;
  checks.push_back({"antisymmetric_constants", A.antisymmetric(),
                    A.antisymmetric() ? 0.0 : 1.0, 0.0, true});
  checks.push_back(upper_bound_check("jacobi_identity", A.jacobi_defect(), 1e-12));

  const Eigen::MatrixXd& m = L.metric;
  const double sym_defect = (m - m.transpose()).cwiseAbs().maxCoeff();
  checks.push_back(upper_bound_check("metric_symmetric", sym_defect, 1e-12));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  const double min_eig = es.eigenvalues().minCoeff();
  checks.push_back({"metric_positive_definite", min_eig > 0.0, min_eig, 0.0, true});

  rep["dim"] = A.dim();
  Json names = Json::array();
  for (const auto& s : A.basis_names()) names.push_back(s);
  rep["basis"] = std::move(names);
  rep["center_dim"] = static_cast<int>(A.center().cols());
  rep["killing_form"] = mat_json(A.killing_form());

  // Coset data: surface the split when the base checks allow building it.
  bool base_ok = true;
  for (const auto& c : checks) base_ok = base_ok && c.pass;
  if (L.reductive) {
    rep["h_dim"] = L.reductive->h_dim();
    rep["m_dim"] = L.reductive->m_dim();
  } else if (L.subalgebra && base_ok) {
    if (!L.ambient_form) {
      checks.push_back({"reductive_structure", false, 1.0, 0.0, true});
    } else {
      try {
        auto S = kropina::build_reductive(A, *L.subalgebra, BilinearForm(*L.ambient_form),
                                          L.metric_override);
        rep["h_dim"] = S.h_dim();
        rep["m_dim"] = S.m_dim();
        checks.push_back({"reductive_structure", true, 0.0, 0.0, true});
      } catch (const InputError&) {
        checks.push_back({"reductive_structure", false, 1.0, 0.0, true});
      }
    }
  }

  if (L.entry) rep["definition"] = kropina::instance_to_json(*L.entry);

  bool all_pass = true;
  push_checks(rep, checks, &all_pass);
  rep["verdict"] = all_pass ? "verified" : "falsified";
  return finish(rep, o, !all_pass);
}

// ---------------------------------------------------------------------------
// ricci

int cmd_ricci(const Options& o, const CLI::App* cmd) {
  Loaded L = load_target(o);
  kropina::require_lie(L.algebra);
  InnerProduct g(L.metric);

  const Eigen::MatrixXd ric = kropina::riemann_ricci(L.algebra, g);
  const kropina::EinsteinFit fit = kropina::einstein_fit(ric, g.matrix());
  const double tol = cmd->count("--tol") ? o.tol : 1e-8;

  Json rep = base_report("ricci", L);
  rep["config"]["tol"] = tol;
  rep["config"]["oracle"] = o.oracle;
  rep["config"]["format"] = o.format;

  std::vector<CheckResult> checks;
  checks.push_back(upper_bound_check("einstein_metric", fit.residual, tol));
  if (o.oracle) {
    const ChartConfig cfg = resolve_chart(L, o, cmd);
    rep["config"]["series_order"] = cfg.series_order;
    rep["config"]["radius"] = cfg.radius;
    rep["config"]["seed"] = cfg.seed;
    const double dev = kropina::ricci_route_deviation(L.algebra, g, cfg, 5);
    checks.push_back(upper_bound_check("ricci_route_deviation", dev, 1e-6));
  }

  rep["sigma"] = fit.sigma;
  rep["residual"] = fit.residual;
  rep["ricci"] = mat_json(ric);

  bool all_pass = true;
  push_checks(rep, checks, &all_pass);
  rep["verdict"] = all_pass ? "verified" : "falsified";
  return finish(rep, o, !all_pass);
}

// ---------------------------------------------------------------------------
// killing

int cmd_killing(const Options& o) {
  Loaded L = load_target(o);
  kropina::require_lie(L.algebra);
  InnerProduct g(L.metric);

  const Eigen::MatrixXd K = kropina::killing_space(L.algebra, g);
  Json rep = base_report("killing", L);
  rep["config"]["format"] = o.format;
  rep["killing_dim"] = static_cast<int>(K.cols());
  Json basis = Json::array();
  for (int c = 0; c < K.cols(); ++c) basis.push_back(vec_json(K.col(c)));
  rep["basis"] = std::move(basis);
  rep["center_dim"] = static_cast<int>(L.algebra.center().cols());
  rep["checks"] = Json::array();
  rep["verdict"] = "verified";
  return finish(rep, o, false);
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o, const CLI::App* cmd) {
  Loaded L = load_target(o);
  kropina::require_lie(L.algebra);
  InnerProduct g(L.metric);
  const int dim = L.algebra.dim();

  const Eigen::VectorXd w_dir = resolve_w(L, o, dim);
  const double w_norm = g.norm(w_dir);
  if (!(w_norm > 0.0)) throw InputError("--w: the wind direction must be nonzero");
  const WKind kind = resolve_kind(L, o);

  CertificateOptions copt;
  copt.chart = resolve_chart(L, o, cmd);
  const double tol_numeric = cmd->count("--tol") ? o.tol : 1e-4;

  NavigationData nav(g, w_dir / w_norm);
  const Certificate cert = kropina::einstein_certificate(L.algebra, nav, kind, copt);

  Json rep = base_report("verify", L);
  rep["config"]["w"] = vec_json(nav.W);
  rep["config"]["w_kind"] = kropina::to_string(kind);
  rep["config"]["samples"] = copt.chart.samples;
  rep["config"]["seed"] = copt.chart.seed;
  rep["config"]["series_order"] = copt.chart.series_order;
  rep["config"]["radius"] = copt.chart.radius;
  rep["config"]["tol"] = tol_numeric;
  rep["config"]["format"] = o.format;

  std::vector<CheckResult> checks = cert.checks;

  // Independent numerical confirmation: sample the chart and compare the
  // Finsler curvature trace against sigma F^2.
  const kropina::FinslerChart chart(L.algebra, nav, kind, copt.chart);
  const auto points = chart.draw(copt.chart.samples, copt.chart.seed);
  int rejected = 0;
  double max_rel = 0.0, sum_rel = 0.0;
  int used = 0;
  for (const auto& [x, y] : points) {
    try {
      const kropina::FinslerSample s = chart.sample(x, y);
      const double f2 = s.F * s.F;
      const double rel = std::abs(s.ricci - cert.sigma * f2) / f2;
      max_rel = std::max(max_rel, rel);
      sum_rel += rel;
      ++used;
    } catch (const DomainError&) {
      ++rejected;
    }
  }
  checks.push_back(upper_bound_check("finsler_ricci_residual", max_rel, tol_numeric));
  checks.push_back(upper_bound_check("samples_valid", static_cast<double>(rejected), 0.0));

  rep["sigma"] = cert.sigma;
  rep["classification"] = cert.classification;
  rep["ricci_constant"] = cert.ricci_constant;
  Json stats;
  stats["requested"] = copt.chart.samples;
  stats["used"] = used;
  stats["rejected"] = rejected;
  stats["max_residual"] = max_rel;
  stats["mean_residual"] = used > 0 ? sum_rel / used : 0.0;
  rep["samples"] = std::move(stats);

  bool all_pass = true;
  push_checks(rep, checks, &all_pass);
  rep["verdict"] = all_pass ? "verified" : "falsified";
  return finish(rep, o, !all_pass);
}

// ---------------------------------------------------------------------------
// classify3d

void classify_positive(const std::string& label, const CatalogEntry& entry,
                       double expect_sigma, int expect_kdim,
                       const std::optional<Eigen::VectorXd>& expect_direction,
                       std::vector<CheckResult>* checks, Json* table) {
  InnerProduct g(entry.metric);
  const Eigen::MatrixXd ric = kropina::riemann_ricci(entry.algebra, g);
  const kropina::EinsteinFit fit = kropina::einstein_fit(ric, g.matrix());
  const Eigen::MatrixXd K = kropina::killing_space(entry.algebra, g);

  checks->push_back(upper_bound_check(label + ".einstein", fit.residual, 1e-8));
  checks->push_back(upper_bound_check(label + ".sigma", std::abs(fit.sigma - expect_sigma), 1e-10));
  checks->push_back(upper_bound_check(
      label + ".killing_dim", std::abs(static_cast<double>(K.cols()) - expect_kdim), 0.0));
  if (expect_direction) {
    const double dev = K.cols() == 1 ? (K.col(0) - *expect_direction).cwiseAbs().maxCoeff() : 1.0;
    checks->push_back(upper_bound_check(label + ".direction", dev, 1e-10));
  }

  Json row;
  row["case"] = label;
  Json pj = Json::object();
  for (const auto& [k, v] : entry.params) pj[k] = v;
  row["params"] = std::move(pj);
  row["sigma"] = fit.sigma;
  row["residual"] = fit.residual;
  row["killing_dim"] = static_cast<int>(K.cols());
  if (expect_direction && K.cols() == 1) row["direction"] = vec_json(K.col(0));
  row["verdict"] = "einstein_kropina";
  table->push_back(std::move(row));
}

void classify_negative(const std::string& label, const CatalogEntry& entry,
                       std::optional<int> expect_kdim, std::vector<CheckResult>* checks,
                       Json* table) {
  InnerProduct g(entry.metric);
  const Eigen::MatrixXd ric = kropina::riemann_ricci(entry.algebra, g);
  const kropina::EinsteinFit fit = kropina::einstein_fit(ric, g.matrix());
  const Eigen::MatrixXd K = kropina::killing_space(entry.algebra, g);

  checks->push_back({label + ".rejected", fit.residual > 0.01, fit.residual, 0.01, true});
  if (expect_kdim)
    checks->push_back(upper_bound_check(
        label + ".killing_dim", std::abs(static_cast<double>(K.cols()) - *expect_kdim), 0.0));

  Json row;
  row["case"] = label;
  Json pj = Json::object();
  for (const auto& [k, v] : entry.params) pj[k] = v;
  row["params"] = std::move(pj);
  row["sigma"] = fit.sigma;
  row["residual"] = fit.residual;
  row["killing_dim"] = static_cast<int>(K.cols());
  row["verdict"] = "rejected";
  table->push_back(std::move(row));
}

int cmd_classify3d(const Options& o) {
  Json rep;
  rep["command"] = "classify3d";
  rep["instance"] = Json::object();
  rep["config"] = Json::object();
  rep["config"]["format"] = o.format;

  std::vector<CheckResult> checks;
  Json table = Json::array();

  classify_positive("r3_abelian", kropina::catalog_get("r3_abelian"), 0.0, 3, {}, &checks,
                    &table);
  for (const double nu : {0.5, 1.0, 2.0}) {
    const CatalogEntry e = kropina::catalog_get("e0tilde2", {{"nu", nu}});
    Eigen::VectorXd dir = Eigen::VectorXd::Zero(3);
    dir[2] = 1.0 / std::sqrt(nu);
    char label[32];
    std::snprintf(label, sizeof label, "e0tilde2(nu=%g)", nu);
    classify_positive(label, e, 0.0, 1, dir, &checks, &table);
  }
  for (const double lambda : {0.5, 1.0, 2.0}) {
    const CatalogEntry e = kropina::catalog_get("su2_round", {{"lambda", lambda}});
    char label[32];
    std::snprintf(label, sizeof label, "su2_round(lambda=%g)", lambda);
    classify_positive(label, e, 1.0 / (2.0 * lambda), 3, {}, &checks, &table);
  }
  classify_negative("heisenberg3", kropina::catalog_get("heisenberg3"), {}, &checks, &table);
  classify_negative("su2_diag(1,2,3)",
                    kropina::catalog_get("su2_diag",
                                         {{"lambda1", 1.0}, {"lambda2", 2.0}, {"lambda3", 3.0}}),
                    0, &checks, &table);

  rep["table"] = std::move(table);
  bool all_pass = true;
  push_checks(rep, checks, &all_pass);
  rep["verdict"] = all_pass ? "verified" : "falsified";
  return finish(rep, o, !all_pass);
}

// ---------------------------------------------------------------------------
// homog

int cmd_homog(const Options& o, const CLI::App* cmd) {
  Loaded L = load_target(o);

  std::optional<kropina::ReductiveSpace> S = L.reductive;
  if (!S) {
    if (!L.subalgebra)
      throw InputError("homog needs a coset instance: a built-in with one or an instance "
                       "file with \"subalgebra\" and \"ambient_form\"");
    if (!L.ambient_form)
      throw InputError("coset instance files need \"ambient_form\" alongside \"subalgebra\"");
    kropina::require_lie(L.algebra);
    S = kropina::build_reductive(L.algebra, *L.subalgebra, BilinearForm(*L.ambient_form),
                                 L.metric_override);
  }

  const Eigen::MatrixXd inv = kropina::invariant_vectors(*S);
  const int m0 = static_cast<int>(inv.cols());
  const Eigen::MatrixXd ric = kropina::nomizu_ricci(*S);
  const kropina::EinsteinFit fit = kropina::einstein_fit(ric, S->metric().matrix());

  Json rep = base_report("homog", L);
  rep["config"]["format"] = o.format;
  rep["h_dim"] = S->h_dim();
  rep["m_dim"] = S->m_dim();
  rep["invariant_dim"] = m0;
  rep["sigma"] = fit.sigma;
  rep["residual"] = fit.residual;
  Json ivs = Json::array();
  for (int c = 0; c < inv.cols(); ++c) ivs.push_back(vec_json(inv.col(c)));
  rep["invariant_basis"] = std::move(ivs);

  std::vector<CheckResult> checks;

  // Pick the wind: --w (name, m-coordinates, or ambient coordinates), the
  // instance's vector, else the first invariant direction.
  std::optional<Eigen::VectorXd> W_m;
  const std::string w_desc = o.w;
  if (!o.w.empty()) {
    auto it = L.vectors.find(o.w);
    if (it != L.vectors.end()) {
      W_m = S->to_m_coords(it->second);
    } else {
      const bool looks_named =
          std::isalpha(static_cast<unsigned char>(o.w[0])) || o.w[0] == '_';
      if (looks_named)
        throw InputError("--w: unknown distinguished vector '" + o.w +
                         "' (this instance has: " + known_vector_names(L.vectors) + ")");
      // length decides between m-coordinates and ambient coordinates
      const std::string& s = o.w;
      const int commas = static_cast<int>(std::count(s.begin(), s.end(), ','));
      const int len = commas + 1;
      if (len == S->m_dim())
        W_m = parse_vector_flag(s, S->m_dim());
      else
        W_m = S->to_m_coords(parse_vector_flag(s, S->ambient().dim()));
    }
  } else if (L.vector) {
    W_m = S->to_m_coords(*L.vector);
  } else {
    checks.push_back({"invariant_candidate", m0 > 0, static_cast<double>(m0), 0.0, true});
    if (m0 > 0) W_m = inv.col(0);
  }

  bool all_pass = true;
  if (W_m) {
    const double n = S->metric().norm(*W_m);
    if (!(n > 0.0)) throw InputError("--w: the wind direction must be nonzero");
    kropina::HomogeneousCertificateOptions hopt;
    if (cmd->count("--tol")) hopt.tol_einstein = o.tol;
    const Certificate cert = kropina::homogeneous_kropina_certificate(*S, *W_m / n, hopt);
    for (const auto& c : cert.checks) checks.push_back(c);
    rep["classification"] = cert.classification;
    rep["ricci_constant"] = cert.ricci_constant;
    rep["w_m"] = vec_json(*W_m / n);
  } else {
    rep["classification"] = "no invariant wind candidate";
  }

  push_checks(rep, checks, &all_pass);
  rep["verdict"] = all_pass ? "verified" : "falsified";
  return finish(rep, o, !all_pass);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Einstein Kropina metrics on Lie groups and homogeneous spaces: "
               "construction, certificates, and numerical verification"};
  app.require_subcommand(1);

  Options o;

  auto add_instance_flags = [&](CLI::App* c) {
    c->add_option("--builtin", o.builtin, "built-in instance name");
    c->add_option("--input", o.input, "instance file (JSON)");
    c->add_option("--param", o.params,
                  "instance parameters: comma list, positional or key=value");
  };
  auto add_format_flag = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_chart_flags = [&](CLI::App* c) {
    c->add_option("--samples", o.samples, "number of chart sample points");
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--series-order", o.series_order, "chart series truncation order");
    c->add_option("--radius", o.radius, "chart ball radius");
  };

  CLI::App* c_inspect =
      app.add_subcommand("inspect", "validate an instance and report its invariants");
  add_instance_flags(c_inspect);
  add_format_flag(c_inspect);

  CLI::App* c_ricci =
      app.add_subcommand("ricci", "Ricci tensor and Einstein fit of the metric");
  add_instance_flags(c_ricci);
  add_format_flag(c_ricci);
  add_chart_flags(c_ricci);
  c_ricci->add_option("--tol", o.tol, "Einstein residual tolerance (default 1e-8)");
  c_ricci->add_flag("--oracle", o.oracle,
                    "cross-check the curvature through the chart route");

  CLI::App* c_killing =
      app.add_subcommand("killing", "Killing vectors among the invariant fields");
  add_instance_flags(c_killing);
  add_format_flag(c_killing);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "certify an Einstein Kropina instance and confirm it numerically");
  add_instance_flags(c_verify);
  add_format_flag(c_verify);
  add_chart_flags(c_verify);
  c_verify->add_option("--w", o.w, "wind direction: comma vector or distinguished name");
  c_verify->add_option("--w-kind", o.w_kind, "wind invariance: left, right, or central")
      ->check(CLI::IsMember({"left", "right", "central"}));
  c_verify->add_option("--tol", o.tol, "numerical residual tolerance (default 1e-4)");

  CLI::App* c_classify =
      app.add_subcommand("classify3d", "reproduce the three-dimensional classification");
  add_format_flag(c_classify);

  CLI::App* c_homog = app.add_subcommand(
      "homog", "certify a homogeneous Einstein Kropina instance on a coset space");
  add_instance_flags(c_homog);
  add_format_flag(c_homog);
  c_homog->add_option("--w", o.w, "wind direction: name, m-coordinates, or ambient");
  c_homog->add_option("--tol", o.tol, "Einstein residual tolerance (default 1e-8)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  }

  try {
    if (app.got_subcommand(c_inspect)) return cmd_inspect(o);
    if (app.got_subcommand(c_ricci)) return cmd_ricci(o, c_ricci);
    if (app.got_subcommand(c_killing)) return cmd_killing(o);
    if (app.got_subcommand(c_verify)) return cmd_verify(o, c_verify);
    if (app.got_subcommand(c_classify)) return cmd_classify3d(o);
    if (app.got_subcommand(c_homog)) return cmd_homog(o, c_homog);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return 1;
  }
  return 1;
}
