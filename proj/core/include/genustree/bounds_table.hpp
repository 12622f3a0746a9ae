#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace genustree {

/// One row of the bounds table. Absent fields mirror the blanks in the
/// published table: two_fib only for g >= 2, upper_simple only for g >= 3;
/// n_exact only within the enumeration range; m/d only when the infinite
/// chain data was requested.
struct BoundsRow {
  int g = 0;
  std::optional<mpz_class> two_fib;       // 2 F_g
  mpz_class fib_simple;                   // F_{g+2} - 1
  mpz_class a_lower;                      // a_g
  std::optional<mpz_class> n_exact;       // n_g
  mpz_class c_upper;                      // c_g
  std::optional<mpz_class> upper_simple;  // 1 + 3*2^(g-3)
  std::optional<mpz_class> m_infinite;    // m_g
  std::optional<mpz_class> d_chain;       // d_g
};

struct BoundsTableOptions {
  int max_genus = 10;
  bool with_exact = true;     // enumerate the tree for the n_g column
  bool with_infinite = false; // collect m_g and d_g
  int workers = 0;
  int split_depth = 12;
};

/// Rows for g = 1..max_genus. Bound columns come from the generating-tree
/// DP; n_g (and m_g) from the tree walk; d_g from the chain tree.
std::vector<BoundsRow> build_bounds_table(const BoundsTableOptions& options);

/// CSV with fixed header g,two_fib,fib_simple,a_g,n_g,c_g,upper_simple,m_g,d_g
/// and empty fields for absent values.
void write_csv(std::ostream& os, std::span<const BoundsRow> rows);

/// JSON array of row objects; absent values are null. Numbers are emitted
/// as exact integer literals.
void write_json(std::ostream& os, std::span<const BoundsRow> rows);

/// Markdown table with the published column layout (g, 2F_g, F_{g+2}-1,
/// a_g, n_g, c_g, 1+3*2^(g-3)); blanks where the published table has them.
void write_markdown(std::ostream& os, std::span<const BoundsRow> rows);

}  // namespace genustree
