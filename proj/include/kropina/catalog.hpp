#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kropina/homogeneous.hpp"
#include "kropina/lie_algebra.hpp"
#include "kropina/riemann.hpp"

namespace kropina {

// Regression expectations bundled with a built-in instance.  Every populated
// field was obtained by an independent route (closed-form curvature of the
// model geometry, classical classification results, or a hand computation
// recorded in the repository notes) and is cross-checked by the test suite.
struct ExpectedResults {
  std::optional<double> sigma;        // Einstein constant of the metric
  std::optional<bool> einstein;       // is the underlying metric Einstein?
  std::optional<int> killing_dim;     // dim of left-invariant Killing fields
  std::optional<int> invariant_dim;   // dim of invariant vectors (homogeneous)
  std::string notes;                  // one-line origin of the values above
};

// A named example geometry.  Group entries carry a Lie algebra with a
// left-invariant metric; coset entries additionally carry the reductive
// decomposition of the ambient algebra.
struct CatalogEntry {
  std::string name;
  std::map<std::string, double> params;
  LieAlgebra algebra;    // the algebra itself, or the ambient algebra
  InnerProduct metric;   // left-invariant metric, or the ambient form
  // Distinguished directions, keyed by the name accepted via --w.  Stored as
  // directions in algebra coordinates (ambient coordinates for coset
  // entries); normalization to unit length happens when a certificate is
  // assembled.
  std::map<std::string, Eigen::VectorXd> vectors;
  std::optional<ReductiveSpace> reductive;  // present for coset entries
  ExpectedResults expected;

  bool homogeneous() const { return reductive.has_value(); }
};

// Names of all built-in instances, in catalog order.
std::vector<std::string> catalog_names();

// Ordered parameter names for one instance (empty if it takes none).
// Throws InputError for an unknown instance name.
std::vector<std::string> catalog_param_names(const std::string& name);

// Default parameter values, aligned with catalog_param_names.
std::map<std::string, double> catalog_default_params(const std::string& name);

// Build a catalog entry.  Unknown names, unknown parameter keys, and
// out-of-range values raise InputError with a message listing what is valid.
CatalogEntry catalog_get(const std::string& name,
                         const std::map<std::string, double>& params = {});

// Orthogonal algebra so(n) in the basis E_ij (i < j, lexicographic), where
// E_ij has +1 in entry (i,j) and -1 in entry (j,i).  Exposed for reuse by
// the coset builders and the tests.
LieAlgebra so_algebra(int n);

// Unitary algebra u(n) in the basis D_1..D_n, A_12, S_12, A_13, ... where
// D_k = i e_k e_k^T, A_jk = e_j e_k^T - e_k e_j^T, S_jk = i(e_j e_k^T +
// e_k e_j^T).  Structure constants are extracted from complex matrix
// commutators and verified by reconstruction.
LieAlgebra u_algebra(int n);

}  // namespace kropina
