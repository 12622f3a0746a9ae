#include "genustree/tree_walker.hpp"

#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

namespace genustree {

namespace {

struct Tallies {
  std::vector<std::uint64_t> n;
  std::vector<std::uint64_t> m;
  std::vector<std::uint64_t> by_mult;  // g * (max+2) + lambda

  explicit Tallies(const WalkConfig& cfg) : n(static_cast<std::size_t>(cfg.max_genus) + 1, 0) {
    if (cfg.collect_infinite) m.assign(n.size(), 0);
    if (cfg.collect_multiplicity)
      by_mult.assign(n.size() * static_cast<std::size_t>(cfg.max_genus + 2), 0);
  }

  void merge(const Tallies& other) {
    for (std::size_t i = 0; i < n.size(); ++i) n[i] += other.n[i];
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += other.m[i];
    for (std::size_t i = 0; i < by_mult.size(); ++i) by_mult[i] += other.by_mult[i];
  }
};

// A subtree handed to a worker: the node's gap set plus the state that the
// DFS threads through (multiplicity and the running gcd of elements below
// the Frobenius number).
struct Task {
  std::vector<int> gaps;
  int mult;
  int gcd_below;
};

// Depth-first walk over a shared membership buffer. The buffer invariant is
// global: buffer[i] == 0 exactly when i is a gap of the current node, for
// every index, so child pushes are single toggles.
class Dfs {
 public:
  Dfs(const WalkConfig& cfg, Tallies& tallies)
      : cfg_(cfg),
        tallies_(tallies),
        window_(static_cast<std::size_t>(2 * cfg.max_genus + 6), 1) {}

  void run_root() {
    window_.assign(window_.size(), 1);
    window_[1] = 0;
    walk(1, 1, 2, 0);
  }

  void run_task(const Task& task) {
    window_.assign(window_.size(), 1);
    for (int x : task.gaps) window_[static_cast<std::size_t>(x)] = 0;
    const int g = static_cast<int>(task.gaps.size());
    walk(g, task.gaps.back(), task.mult, task.gcd_below);
  }

 private:
  void tally(int g, int mult, int gcd_below) {
    tallies_.n[static_cast<std::size_t>(g)]++;
    if (cfg_.collect_infinite && gcd_below != 1) tallies_.m[static_cast<std::size_t>(g)]++;
    if (cfg_.collect_multiplicity)
      tallies_.by_mult[static_cast<std::size_t>(g) * static_cast<std::size_t>(cfg_.max_genus + 2) +
                       static_cast<std::size_t>(mult)]++;
  }

  bool decomposable(int x, int mult) const {
    const char* w = window_.data();
    for (int a = mult; 2 * a <= x; ++a) {
      if (w[a] && w[x - a]) return true;
    }
    return false;
  }

  void walk(int g, int f, int mult, int gcd_below) {
    tally(g, mult, gcd_below);
    if (g == cfg_.max_genus) return;
    for (int x = f + 1; x <= 2 * g + 1; ++x) {
      if (decomposable(x, mult)) continue;
      const int child_gcd = x == f + 1 ? gcd_below
                            : x == f + 2 ? std::gcd(gcd_below, f + 1)
                                         : 1;
      window_[static_cast<std::size_t>(x)] = 0;
      walk(g + 1, x, x == mult ? g + 2 : mult, child_gcd);
      window_[static_cast<std::size_t>(x)] = 1;
    }
  }

  const WalkConfig& cfg_;
  Tallies& tallies_;
  std::vector<char> window_;
};

// Walks the top of the tree, tallying nodes above the split depth and
// emitting one task per node at the split depth.
class TaskCollector {
 public:
  TaskCollector(const WalkConfig& cfg, int split, Tallies& tallies, std::vector<Task>& tasks)
      : cfg_(cfg), split_(split), tallies_(tallies), tasks_(tasks),
        window_(static_cast<std::size_t>(2 * cfg.max_genus + 6), 1) {}

  void run() {
    window_[1] = 0;
    path_ = {1};
    walk(1, 1, 2, 0);
  }

 private:
  void walk(int g, int f, int mult, int gcd_below) {
    if (g == split_) {
      tasks_.push_back(Task{path_, mult, gcd_below});
      return;
    }
    tallies_.n[static_cast<std::size_t>(g)]++;
    if (cfg_.collect_infinite && gcd_below != 1) tallies_.m[static_cast<std::size_t>(g)]++;
    if (cfg_.collect_multiplicity)
      tallies_.by_mult[static_cast<std::size_t>(g) * static_cast<std::size_t>(cfg_.max_genus + 2) +
                       static_cast<std::size_t>(mult)]++;
    for (int x = f + 1; x <= 2 * g + 1; ++x) {
      bool dec = false;
      for (int a = mult; 2 * a <= x; ++a) {
        if (window_[static_cast<std::size_t>(a)] && window_[static_cast<std::size_t>(x - a)]) {
          dec = true;
          break;
        }
      }
      if (dec) continue;
      const int child_gcd = x == f + 1 ? gcd_below
                            : x == f + 2 ? std::gcd(gcd_below, f + 1)
                                         : 1;
      window_[static_cast<std::size_t>(x)] = 0;
      path_.push_back(x);
      walk(g + 1, x, x == mult ? g + 2 : mult, child_gcd);
      path_.pop_back();
      window_[static_cast<std::size_t>(x)] = 1;
    }
  }

  const WalkConfig& cfg_;
  int split_;
  Tallies& tallies_;
  std::vector<Task>& tasks_;
  std::vector<char> window_;
  std::vector<int> path_;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

bool is_infinite_chain(const Semigroup& s) {
  int d = 0;
  for (int x = 1; x < s.frobenius(); ++x) {
    if (!s.contains(x)) continue;
    d = std::gcd(d, x);
    if (d == 1) return false;
  }
  return d != 1;
}

WalkResult enumerate_tree(const WalkConfig& config) {
  if (config.max_genus < 1) throw std::invalid_argument("enumerate_tree: max_genus >= 1");
  if (config.max_genus > kGenusCap)
    throw ResourceLimitError("enumerate_tree: max_genus exceeds the build-scale cap");
  if (config.workers < 0) throw std::invalid_argument("enumerate_tree: workers >= 0");
  if (config.split_depth < 1) throw std::invalid_argument("enumerate_tree: split_depth >= 1");

  const int workers = resolve_workers(config.workers);
  Tallies total(config);

  if (workers == 1 || config.max_genus <= config.split_depth) {
    Dfs dfs(config, total);
    dfs.run_root();
  } else {
    std::vector<Task> tasks;
    TaskCollector collector(config, config.split_depth, total, tasks);
    collector.run();

    std::vector<Tallies> partial(static_cast<std::size_t>(workers), Tallies(config));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        Dfs dfs(config, partial[static_cast<std::size_t>(w)]);
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) break;
          dfs.run_task(tasks[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partial) total.merge(p);
  }

  WalkResult result;
  result.n.assign(total.n.size(), 0);
  for (std::size_t g = 1; g < total.n.size(); ++g) result.n[g] = mpz_class(total.n[g]);
  if (config.collect_infinite) {
    result.m.assign(total.m.size(), 0);
    for (std::size_t g = 1; g < total.m.size(); ++g) result.m[g] = mpz_class(total.m[g]);
  }
  if (config.collect_multiplicity) {
    const std::size_t row = static_cast<std::size_t>(config.max_genus + 2);
    result.n_by_mult.assign(total.n.size(), {});
    for (std::size_t g = 1; g < total.n.size(); ++g) {
      result.n_by_mult[g].assign(row, 0);
      for (std::size_t lam = 0; lam < row; ++lam)
        result.n_by_mult[g][lam] = mpz_class(total.by_mult[g * row + lam]);
    }
  }
  return result;
}

std::vector<mpz_class> infinite_counts(WalkConfig config) {
  config.collect_infinite = true;
  return enumerate_tree(config).m;
}

std::vector<std::vector<mpz_class>> enumerate_by_multiplicity(WalkConfig config) {
  config.collect_multiplicity = true;
  return enumerate_tree(config).n_by_mult;
}

}  // namespace genustree
