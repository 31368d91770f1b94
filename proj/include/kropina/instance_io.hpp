#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "kropina/catalog.hpp"
#include "kropina/chart.hpp"
#include "kropina/lie_algebra.hpp"

namespace kropina {

using Json = nlohmann::ordered_json;

// A problem instance as read from disk.  The algebra is built without
// validation so that `inspect` can report Jacobi defects on candidate data;
// every other command must call require_lie() first.  The metric is kept as
// a raw matrix for the same reason (positive definiteness is a reportable
// check, not a parse error).
struct InstanceData {
  LieAlgebra algebra;
  std::optional<Eigen::MatrixXd> metric;        // identity when absent
  std::optional<Eigen::VectorXd> vector;        // distinguished direction
  std::optional<WKind> w_kind;
  std::optional<Eigen::MatrixXd> subalgebra;    // columns span h (coset case)
  std::optional<Eigen::MatrixXd> ambient_form;  // invariant form picking m
  std::optional<ChartConfig> chart;

  Eigen::MatrixXd metric_or_identity() const;
};

// Parse an instance from a JSON value / load one from a file.  Structural
// problems (missing keys, wrong shapes, unknown keys, bad enum values,
// out-of-range chart settings, unreadable files, malformed JSON) raise
// InputError.
InstanceData parse_instance(const Json& j);
InstanceData load_instance(const std::string& path);

// Throw InputError unless the structure constants satisfy the Lie axioms.
void require_lie(const LieAlgebra& A);

// Serialize a catalog entry in the instance file format, so every built-in
// doubles as a format example.
Json instance_to_json(const CatalogEntry& entry);

// Deterministic JSON writer: 2-space indent, keys in insertion order, floats
// with 17 significant digits (round-trip exact), trailing newline.
std::string dump_json(const Json& j);

}  // namespace kropina
