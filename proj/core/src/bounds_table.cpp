#include "genustree/bounds_table.hpp"

#include "genustree/generating_trees.hpp"
#include "genustree/reference_data.hpp"
#include "genustree/tree_walker.hpp"

namespace genustree {

namespace {

std::string opt_str(const std::optional<mpz_class>& v) {
  return v ? v->get_str() : std::string();
}

std::string opt_json(const std::optional<mpz_class>& v) {
  return v ? v->get_str() : std::string("null");
}

std::string opt_md(const std::optional<mpz_class>& v) {
  return v ? v->get_str() : std::string(" ");
}

}  // namespace

std::vector<BoundsRow> build_bounds_table(const BoundsTableOptions& options) {
  const int G = options.max_genus;
  if (G < 1) throw std::invalid_argument("build_bounds_table: max_genus >= 1");

  const std::vector<mpz_class> a = level_totals(TreeId::kASecond, G);
  const std::vector<mpz_class> c = level_totals(TreeId::kC, G);
  std::vector<mpz_class> d;
  if (options.with_infinite) d = level_totals(TreeId::kI, G);

  WalkResult walk;
  if (options.with_exact || options.with_infinite) {
    WalkConfig cfg;
    cfg.max_genus = G;
    cfg.workers = options.workers;
    cfg.split_depth = options.split_depth;
    cfg.collect_infinite = options.with_infinite;
    walk = enumerate_tree(cfg);
  }

  std::vector<BoundsRow> rows;
  rows.reserve(static_cast<std::size_t>(G));
  for (int g = 1; g <= G; ++g) {
    BoundsRow row;
    row.g = g;
    if (g >= 2) row.two_fib = reference::two_fibonacci(g);
    row.fib_simple = reference::fibonacci_simple(g);
    row.a_lower = a[static_cast<std::size_t>(g)];
    if (options.with_exact) row.n_exact = walk.n[static_cast<std::size_t>(g)];
    row.c_upper = c[static_cast<std::size_t>(g)];
    if (g >= 3) row.upper_simple = reference::upper_simple(g);
    if (options.with_infinite) {
      row.m_infinite = walk.m[static_cast<std::size_t>(g)];
      row.d_chain = d[static_cast<std::size_t>(g)];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, std::span<const BoundsRow> rows) {
  os << "g,two_fib,fib_simple,a_g,n_g,c_g,upper_simple,m_g,d_g\n";
  for (const BoundsRow& r : rows) {
    os << r.g << ',' << opt_str(r.two_fib) << ',' << r.fib_simple.get_str() << ','
       << r.a_lower.get_str() << ',' << opt_str(r.n_exact) << ',' << r.c_upper.get_str()
       << ',' << opt_str(r.upper_simple) << ',' << opt_str(r.m_infinite) << ','
       << opt_str(r.d_chain) << '\n';
  }
}

void write_json(std::ostream& os, std::span<const BoundsRow> rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BoundsRow& r = rows[i];
    os << "  {\"g\": " << r.g << ", \"two_fib\": " << opt_json(r.two_fib)
       << ", \"fib_simple\": " << r.fib_simple.get_str()
       << ", \"a_g\": " << r.a_lower.get_str() << ", \"n_g\": " << opt_json(r.n_exact)
       << ", \"c_g\": " << r.c_upper.get_str()
       << ", \"upper_simple\": " << opt_json(r.upper_simple)
       << ", \"m_g\": " << opt_json(r.m_infinite) << ", \"d_g\": " << opt_json(r.d_chain)
       << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

void write_markdown(std::ostream& os, std::span<const BoundsRow> rows) {
  os << "| g | 2F_g | F_{g+2}-1 | a_g | n_g | c_g | 1+3*2^(g-3) |\n";
  os << "|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const BoundsRow& r : rows) {
    os << "| " << r.g << " | " << opt_md(r.two_fib) << " | " << r.fib_simple.get_str()
       << " | " << r.a_lower.get_str() << " | " << opt_md(r.n_exact) << " | "
       << r.c_upper.get_str() << " | " << opt_md(r.upper_simple) << " |\n";
  }
}

}  // namespace genustree
