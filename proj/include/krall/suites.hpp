#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krall/report.hpp"
#include "krall/scalar.hpp"

namespace krall {

enum class Suite { all, factor, eigen, orthog, adjoint, rr, genfunc, charvals, bispectral, numeric, identities };

Suite parse_suite(const std::string& name);

/// +-1/2, +-3/2, +-5/2, +-7/3, +-9/4, +-11/5, +-13/7, +-3/7
std::vector<Scalar> default_b_samples();

struct SuiteConfig {
  std::vector<Scalar> b_samples = default_b_samples();
  std::vector<int> char_js = {1, 2};
  int n_max = 12;
  /// Add quadrature cross-checks to the orthog suite.
  bool numeric = false;
  /// Relative tolerance of the quadrature checks.
  double tol = 1e-8;
};

enum class Runner { parallel, serial };

/// Runs the selected checks.  The parallel runner spreads independent tasks
/// over OpenMP threads; both runners return rows in the same fixed order.
std::vector<CheckResult> run_suite(Suite suite, const SuiteConfig& config, Runner runner = Runner::parallel);

}  // namespace krall
