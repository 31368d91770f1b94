#include "kropina/instance_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "kropina/errors.hpp"

namespace kropina {
namespace {

// ---------------------------------------------------------------------------
// Checked accessors

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("instance: " + where + " " + what);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "must be an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "is missing key '" + key + "'");
  return *it;
}

void reject_unknown(const Json& j, const std::set<std::string>& known,
                    const std::string& where) {
  if (!j.is_object()) fail(where, "must be an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) fail(where, "has unknown key '" + it.key() + "'");
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "must be an integer");
  return j.get<int>();
}

double get_num(const Json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "must be a number");
  return j.get<double>();
}

Eigen::VectorXd get_vec(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(where, "must be an array of " + std::to_string(dim) + " numbers");
  Eigen::VectorXd v(dim);
  for (int k = 0; k < dim; ++k) v[k] = get_num(j[k], where);
  return v;
}

Eigen::MatrixXd get_mat(const Json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(where, "must be a " + std::to_string(dim) + "x" + std::to_string(dim) +
                    " array of arrays");
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r) m.row(r) = get_vec(j[r], dim, where).transpose();
  return m;
}

LieAlgebra parse_algebra(const Json& ja) {
  reject_unknown(ja, {"dim", "basis", "brackets"}, "'algebra'");
  const int dim = get_int(need(ja, "dim", "'algebra'"), "'algebra.dim'");
  if (dim < 1 || dim > 64) fail("'algebra.dim'", "must be between 1 and 64");

  std::vector<std::string> names;
  if (ja.contains("basis")) {
    const Json& jb = ja["basis"];
    if (!jb.is_array() || static_cast<int>(jb.size()) != dim)
      fail("'algebra.basis'", "must list one name per basis vector");
    for (const auto& s : jb) {
      if (!s.is_string()) fail("'algebra.basis'", "entries must be strings");
      names.push_back(s.get<std::string>());
    }
  } else {
    for (int k = 1; k <= dim; ++k) names.push_back("e" + std::to_string(k));
  }

  std::vector<Eigen::MatrixXd> ad(dim, Eigen::MatrixXd::Zero(dim, dim));
  std::set<std::pair<int, int>> seen;
  if (ja.contains("brackets")) {
    const Json& jt = ja["brackets"];
    if (!jt.is_array()) fail("'algebra.brackets'", "must be an array");
    for (const auto& t : jt) {
      reject_unknown(t, {"i", "j", "coeffs"}, "'algebra.brackets' entry");
      const int i = get_int(need(t, "i", "bracket"), "bracket 'i'");
      const int j = get_int(need(t, "j", "bracket"), "bracket 'j'");
      if (!(0 <= i && i < j && j < dim))
        fail("bracket", "needs 0 <= i < j < dim (indices are 0-based)");
      if (!seen.insert({i, j}).second)
        fail("bracket", "(" + std::to_string(i) + "," + std::to_string(j) +
                            ") appears twice");
      const Eigen::VectorXd c = get_vec(need(t, "coeffs", "bracket"), dim, "bracket 'coeffs'");
      ad[i].col(j) = c;
      ad[j].col(i) = -c;
    }
  }
  return LieAlgebra::from_adjoint_list_unchecked(std::move(names), std::move(ad));
}

ChartConfig parse_chart(const Json& jc) {
  reject_unknown(jc, {"series_order", "radius", "samples", "seed", "fd_step"}, "'chart'");
  ChartConfig cfg;
  if (jc.contains("series_order"))
    cfg.series_order = get_int(jc["series_order"], "'chart.series_order'");
  if (jc.contains("radius")) cfg.radius = get_num(jc["radius"], "'chart.radius'");
  if (jc.contains("samples")) cfg.samples = get_int(jc["samples"], "'chart.samples'");
  if (jc.contains("seed")) {
    if (!jc["seed"].is_number_integer()) fail("'chart.seed'", "must be an integer");
    cfg.seed = jc["seed"].get<std::uint64_t>();
  }
  if (jc.contains("fd_step")) cfg.fd_step = get_num(jc["fd_step"], "'chart.fd_step'");
  cfg.validate();
  return cfg;
}

// ---------------------------------------------------------------------------
// Writer

void write_number(std::ostream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

bool scalar_array(const Json& j) {
  for (const auto& el : j)
    if (el.is_object() || el.is_array()) return false;
  return true;
}

void write_value(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  const std::string pad_in(2 * (depth + 1), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), depth + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      if (scalar_array(j)) {
        os << "[";
        bool first = true;
        for (const auto& el : j) {
          if (!first) os << ", ";
          first = false;
          write_value(os, el, depth);
        }
        os << "]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) os << ",\n";
        first = false;
        os << pad_in;
        write_value(os, el, depth + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::string:
      os << j.dump();
      return;
    case Json::value_t::boolean:
      os << (j.get<bool>() ? "true" : "false");
      return;
    case Json::value_t::number_integer:
      os << j.get<std::int64_t>();
      return;
    case Json::value_t::number_unsigned:
      os << j.get<std::uint64_t>();
      return;
    case Json::value_t::number_float:
      write_number(os, j.get<double>());
      return;
    default:
      os << "null";
      return;
  }
}

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

}  // namespace

Eigen::MatrixXd InstanceData::metric_or_identity() const {
  if (metric) return *metric;
  return Eigen::MatrixXd::Identity(algebra.dim(), algebra.dim());
}

InstanceData parse_instance(const Json& j) {
  reject_unknown(j,
                 {"algebra", "metric", "vector", "w_kind", "subalgebra",
                  "ambient_form", "chart"},
                 "top level");
  LieAlgebra A = parse_algebra(need(j, "algebra", "top level"));
  const int dim = A.dim();
  InstanceData data{std::move(A), {}, {}, {}, {}, {}, {}};

  if (j.contains("metric")) data.metric = get_mat(j["metric"], dim, "'metric'");
  if (j.contains("vector")) data.vector = get_vec(j["vector"], dim, "'vector'");
  if (j.contains("w_kind")) {
    const Json& jw = j["w_kind"];
    if (!jw.is_string()) fail("'w_kind'", "must be a string");
    data.w_kind = parse_w_kind(jw.get<std::string>());
  }
  if (j.contains("subalgebra")) {
    const Json& js = j["subalgebra"];
    if (!js.is_array() || js.empty())
      fail("'subalgebra'", "must be a non-empty array of basis vectors");
    Eigen::MatrixXd H(dim, static_cast<int>(js.size()));
    for (int c = 0; c < H.cols(); ++c)
      H.col(c) = get_vec(js[c], dim, "'subalgebra' entry");
    data.subalgebra = std::move(H);
  }
  if (j.contains("ambient_form"))
    data.ambient_form = get_mat(j["ambient_form"], dim, "'ambient_form'");
  if (j.contains("chart")) data.chart = parse_chart(j["chart"]);
  return data;
}

InstanceData load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read instance file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_instance(j);
}

void require_lie(const LieAlgebra& A) {
  if (!A.antisymmetric())
    throw InputError("structure constants are not antisymmetric");
  const double defect = A.jacobi_defect();
  if (!(defect <= 1e-12))
    throw InputError("structure constants violate the Jacobi identity (defect " +
                     std::to_string(defect) + ")");
}

Json instance_to_json(const CatalogEntry& entry) {
  const LieAlgebra& A = entry.algebra;
  const int dim = A.dim();
  Json ja;
  ja["dim"] = dim;
  Json names = Json::array();
  for (const auto& s : A.basis_names()) names.push_back(s);
  ja["basis"] = std::move(names);
  Json brackets = Json::array();
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      const Eigen::VectorXd c = A.ad_basis(i).col(j);
      if (c.cwiseAbs().maxCoeff() == 0.0) continue;
      Json t;
      t["i"] = i;
      t["j"] = j;
      t["coeffs"] = vec_json(c);
      brackets.push_back(std::move(t));
    }
  ja["brackets"] = std::move(brackets);

  Json out;
  out["algebra"] = std::move(ja);
  if (entry.homogeneous()) {
    Json sub = Json::array();
    const Eigen::MatrixXd& H = entry.reductive->h_basis();
    for (int c = 0; c < H.cols(); ++c) sub.push_back(vec_json(H.col(c)));
    out["subalgebra"] = std::move(sub);
    out["ambient_form"] = mat_json(entry.metric.matrix());
  } else {
    out["metric"] = mat_json(entry.metric.matrix());
  }
  for (const char* key : {"W_thm3", "hopf", "W_center"}) {
    auto it = entry.vectors.find(key);
    if (it != entry.vectors.end()) {
      out["vector"] = vec_json(it->second);
      break;
    }
  }
  return out;
}

std::string dump_json(const Json& j) {
  std::ostringstream os;
  write_value(os, j, 0);
  os << "\n";
  return os.str();
}

}  // namespace kropina
