#pragma once

#include <string>
#include <vector>

namespace genustree {

struct VerifyOptions {
  /// Enumeration depth for the exact-count, sandwich and chain checks.
  int max_genus = 30;
  /// Truncation order for the series/tree cross checks and identities.
  int series_order = 200;
  int workers = 0;
  int split_depth = 12;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full verification suite and returns one result per check:
///   golden_counts        n_g equals the published values (g <= 35 cap)
///   bound_columns        tree totals equal the published bound columns
///   cross_representation series coefficients equal tree totals
///   sandwich             2F_g <= F_{g+2}-1 <= a_g <= n_g <= c_g <= 1+3*2^(g-3)
///   infinite_chains      m_g values and their three upper bounds
///   lemma_suites         exhaustive structural lemmas at small genus
///   oracle_equivalence   brute-force subset oracle matches the walk (g <= 7)
///   identity_suite       the four series identities
///   asymptotic_ratio     |c_{g+1}/c_g - 2| < 0.01 at g = 1000
std::vector<CheckResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace genustree
