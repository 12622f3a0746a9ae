#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "genustree/semigroup.hpp"

namespace genustree {

/// Thrown when a walk is requested beyond the build-scale genus cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WalkConfig {
  int max_genus = 1;
  int workers = 0;  // 0 = one per hardware thread
  bool collect_multiplicity = false;
  bool collect_infinite = false;
  // Depth at which the tree is cut into independent subtrees handed to
  // workers; counts merge by addition, so totals do not depend on the
  // schedule or the worker count.
  int split_depth = 12;
};

struct WalkResult {
  /// n[g] = number of numerical semigroups of genus g, for g in 1..max_genus
  /// (index 0 is unused and holds 0; the genus-0 count is kGenusZeroCount).
  std::vector<mpz_class> n;
  /// n_by_mult[g][lambda] = count with multiplicity lambda (lambda <= g+1);
  /// empty unless collect_multiplicity.
  std::vector<std::vector<mpz_class>> n_by_mult;
  /// m[g] = number of genus-g semigroups lying on an infinite chain;
  /// empty unless collect_infinite.
  std::vector<mpz_class> m;
};

/// The single genus-0 semigroup; it is never emitted as a tree level but
/// enters the chain bound m_g <= 1 + (g-1) * sum_{i <= (g-1)/2} n_i.
inline constexpr int kGenusZeroCount = 1;

/// True iff S has infinitely many descendants in the tree, by the gcd
/// criterion: gcd of the elements of S strictly below the Frobenius number
/// differs from 1 (the gcd over {0} alone is 0, so ordinary semigroups
/// qualify, consistent with the chain O_1, O_2, ...).
bool is_infinite_chain(const Semigroup& s);

/// Exact DFS enumeration of the semigroup tree from the root <|2,3>.
/// Throws ResourceLimitError when config.max_genus exceeds kGenusCap.
WalkResult enumerate_tree(const WalkConfig& config);

/// m[1..max_genus]; shorthand for enumerate_tree with collect_infinite.
std::vector<mpz_class> infinite_counts(WalkConfig config);

/// n_by_mult[1..max_genus]; shorthand for collect_multiplicity.
std::vector<std::vector<mpz_class>> enumerate_by_multiplicity(WalkConfig config);

}  // namespace genustree
