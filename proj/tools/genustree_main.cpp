// Command-line front end: exact enumeration of the semigroup tree, the
// generating-tree bound sequences, infinite-chain counts, machine-readable
// bound tables, and the full verification suite.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "genustree/bounds_table.hpp"
#include "genustree/generating_trees.hpp"
#include "genustree/reference_data.hpp"
#include "genustree/series.hpp"
#include "genustree/tree_walker.hpp"
#include "genustree/verify.hpp"

namespace {

using namespace genustree;

struct CommonOptions {
  int max_genus = 10;
  int workers = 0;
  int split_depth = 12;
};

void add_worker_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--workers,-w", opt.workers, "worker threads (0 = all hardware threads)")
      ->envname("GENUSTREE_WORKERS");
  cmd->add_option("--split-depth", opt.split_depth,
                  "genus at which subtrees are handed to workers")
      ->check(CLI::PositiveNumber);
}

int run_enumerate(const CommonOptions& opt, bool by_multiplicity) {
  WalkConfig cfg;
  cfg.max_genus = opt.max_genus;
  cfg.workers = opt.workers;
  cfg.split_depth = opt.split_depth;
  cfg.collect_multiplicity = by_multiplicity;
  const WalkResult result = enumerate_tree(cfg);

  std::cout << "g,n_g\n";
  for (int g = 1; g <= opt.max_genus; ++g)
    std::cout << g << ',' << result.n[static_cast<std::size_t>(g)].get_str() << '\n';
  if (by_multiplicity) {
    std::cout << "\ng,lambda,count\n";
    for (int g = 1; g <= opt.max_genus; ++g) {
      const auto& row = result.n_by_mult[static_cast<std::size_t>(g)];
      for (std::size_t lambda = 0; lambda < row.size(); ++lambda) {
        if (row[lambda] != 0)
          std::cout << g << ',' << lambda << ',' << row[lambda].get_str() << '\n';
      }
    }
  }
  return 0;
}

int run_bounds(const CommonOptions& opt, const std::vector<std::string>& which,
               const std::string& source) {
  struct Entry {
    TreeId tree;
    std::optional<SeriesName> series;
  };
  const std::map<std::string, Entry> catalog = {
      {"two_fib", {TreeId::kA, std::nullopt}},
      {"fib_simple", {TreeId::kAPrime, SeriesName::kLowerSimple}},
      {"a", {TreeId::kASecond, SeriesName::kLowerA}},
      {"c", {TreeId::kC, SeriesName::kUpperC}},
      {"upper_simple", {TreeId::kB, std::nullopt}},
      {"d", {TreeId::kI, SeriesName::kInfiniteD}},
  };

  std::cout << "sequence,g,value,source\n";
  for (const std::string& name : which) {
    const auto it = catalog.find(name);
    if (it == catalog.end()) {
      std::cerr << "unknown bound sequence: " << name << '\n';
      return 2;
    }
    if (source == "tree") {
      const auto totals = level_totals(it->second.tree, opt.max_genus);
      for (int g = 1; g <= opt.max_genus; ++g)
        std::cout << name << ',' << g << ','
                  << totals[static_cast<std::size_t>(g)].get_str() << ",tree\n";
    } else {
      if (!it->second.series) {
        std::cerr << "sequence " << name << " has no closed-form series\n";
        return 2;
      }
      const TruncatedSeries s = named_univariate(*it->second.series, opt.max_genus);
      for (int g = 1; g <= opt.max_genus; ++g)
        std::cout << name << ',' << g << ',' << s.coeff(g).get_num().get_str()
                  << ",series\n";
    }
  }
  return 0;
}

int run_infinite(const CommonOptions& opt) {
  WalkConfig cfg;
  cfg.max_genus = opt.max_genus;
  cfg.workers = opt.workers;
  cfg.split_depth = opt.split_depth;
  cfg.collect_infinite = true;
  const WalkResult result = enumerate_tree(cfg);
  const auto d = level_totals(TreeId::kI, opt.max_genus);

  std::cout << "g,m_g,d_g,fib_bound,count_bound\n";
  for (int g = 1; g <= opt.max_genus; ++g) {
    mpz_class partial = kGenusZeroCount;
    for (int i = 1; i <= (g - 1) / 2; ++i) partial += result.n[static_cast<std::size_t>(i)];
    const mpz_class count_bound = 1 + (g - 1) * partial;
    std::cout << g << ',' << result.m[static_cast<std::size_t>(g)].get_str() << ','
              << d[static_cast<std::size_t>(g)].get_str() << ',';
    if (g >= 4) std::cout << reference::two_fibonacci(g - 1).get_str();
    std::cout << ',' << count_bound.get_str() << '\n';
  }
  return 0;
}

int run_table(const CommonOptions& opt, const std::string& format, bool with_infinite) {
  BoundsTableOptions topt;
  topt.max_genus = opt.max_genus;
  topt.workers = opt.workers;
  topt.split_depth = opt.split_depth;
  topt.with_exact = true;
  topt.with_infinite = with_infinite;
  const std::vector<BoundsRow> rows = build_bounds_table(topt);
  if (format == "csv")
    write_csv(std::cout, rows);
  else if (format == "json")
    write_json(std::cout, rows);
  else
    write_markdown(std::cout, rows);
  return 0;
}

int run_verify(const CommonOptions& opt, int series_order, bool full) {
  VerifyOptions vopt;
  vopt.max_genus = full ? 35 : opt.max_genus;
  vopt.series_order = series_order;
  vopt.workers = opt.workers;
  vopt.split_depth = opt.split_depth;
  const std::vector<CheckResult> results = run_verification(vopt);
  int passed = 0;
  for (const CheckResult& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << '\n';
    if (r.pass) ++passed;
  }
  std::cout << passed << '/' << results.size() << " checks passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup tree: exact counts, bounds, verification"};
  app.require_subcommand(1);

  CommonOptions opt;

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "count semigroups by genus");
  enumerate_cmd->add_option("--max-genus,-g", opt.max_genus, "largest genus to count")
      ->required()
      ->check(CLI::PositiveNumber);
  bool by_multiplicity = false;
  enumerate_cmd->add_flag("--by-multiplicity", by_multiplicity,
                          "also report counts split by multiplicity");
  add_worker_flags(enumerate_cmd, opt);

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "print bound sequences");
  bounds_cmd->add_option("--max-genus,-g", opt.max_genus, "largest genus")
      ->required()
      ->check(CLI::PositiveNumber);
  std::vector<std::string> which = {"two_fib", "fib_simple", "a", "c", "upper_simple", "d"};
  bounds_cmd->add_option("--which", which,
                         "sequences to print (two_fib fib_simple a c upper_simple d)")
      ->delimiter(',');
  std::string source = "tree";
  bounds_cmd->add_option("--source", source, "computation route")
      ->check(CLI::IsMember({"tree", "series"}));

  CLI::App* infinite_cmd = app.add_subcommand("infinite", "infinite-chain counts and bounds");
  infinite_cmd->add_option("--max-genus,-g", opt.max_genus, "largest genus")
      ->required()
      ->check(CLI::PositiveNumber);
  add_worker_flags(infinite_cmd, opt);

  CLI::App* table_cmd = app.add_subcommand("table", "emit the bounds table");
  table_cmd->add_option("--max-genus,-g", opt.max_genus, "largest genus")
      ->required()
      ->check(CLI::PositiveNumber);
  std::string format = "csv";
  table_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json", "markdown"}));
  bool with_infinite = false;
  table_cmd->add_flag("--with-infinite", with_infinite, "include the m_g and d_g columns");
  add_worker_flags(table_cmd, opt);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  opt.max_genus = 30;
  verify_cmd->add_option("--max-genus,-g", opt.max_genus, "enumeration depth (default 30)")
      ->check(CLI::PositiveNumber);
  int series_order = 200;
  verify_cmd->add_option("--series-order", series_order, "series truncation order")
      ->check(CLI::Range(16, 100000));
  bool full = false;
  verify_cmd->add_flag("--full", full, "verify the full published range (genus 35)");
  add_worker_flags(verify_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(enumerate_cmd)) return run_enumerate(opt, by_multiplicity);
    if (app.got_subcommand(bounds_cmd)) return run_bounds(opt, which, source);
    if (app.got_subcommand(infinite_cmd)) return run_infinite(opt);
    if (app.got_subcommand(table_cmd)) return run_table(opt, format, with_infinite);
    if (app.got_subcommand(verify_cmd)) return run_verify(opt, series_order, full);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
