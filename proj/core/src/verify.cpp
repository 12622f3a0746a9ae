#include "genustree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "genustree/generating_trees.hpp"
#include "genustree/reference_data.hpp"
#include "genustree/semigroup.hpp"
#include "genustree/series.hpp"
#include "genustree/tree_walker.hpp"

namespace genustree {

namespace {

struct Failure {
  bool failed = false;
  std::string detail;

  void fail(const std::string& message) {
    if (!failed) detail = message;
    failed = true;
  }
};

std::string at_genus(const std::string& what, int g) {
  std::ostringstream os;
  os << what << " at g = " << g;
  return os.str();
}

// ---- criterion 1: exact counts ----

CheckResult check_golden_counts(const WalkResult& walk, int max_genus) {
  Failure f;
  const int limit = std::min(max_genus, reference::kMaxTabulatedGenus);
  for (int g = 1; g <= limit; ++g) {
    if (walk.n[static_cast<std::size_t>(g)] !=
        mpz_class(reference::kSemigroupCounts[static_cast<std::size_t>(g)]))
      f.fail(at_genus("n_g mismatch", g));
  }
  std::ostringstream ok;
  ok << "n_g matches published values for g <= " << limit;
  return {"golden_counts", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 2: bound columns ----

CheckResult check_bound_columns() {
  Failure f;
  const int G = reference::kMaxTabulatedGenus;
  const auto a_tot = level_totals(TreeId::kA, G);
  const auto ap_tot = level_totals(TreeId::kAPrime, G);
  const auto as_tot = level_totals(TreeId::kASecond, G);
  const auto b_tot = level_totals(TreeId::kB, G);
  const auto c_tot = level_totals(TreeId::kC, G);
  for (int g = 1; g <= G; ++g) {
    const auto gi = static_cast<std::size_t>(g);
    if (g >= 2 && a_tot[gi] != reference::two_fibonacci(g)) f.fail(at_genus("2F_g", g));
    if (ap_tot[gi] != reference::fibonacci_simple(g)) f.fail(at_genus("F_{g+2}-1", g));
    if (as_tot[gi] != mpz_class(reference::kLowerBoundA[gi])) f.fail(at_genus("a_g", g));
    if (c_tot[gi] != mpz_class(reference::kUpperBoundC[gi])) f.fail(at_genus("c_g", g));
    if (g >= 3 && b_tot[gi] != reference::upper_simple(g)) f.fail(at_genus("1+3*2^(g-3)", g));
  }
  return {"bound_columns", !f.failed,
          f.failed ? f.detail : "tree totals equal the published columns for g <= 35"};
}

// ---- criterion 3: series coefficients vs tree totals ----

CheckResult check_cross_representation(int order) {
  Failure f;
  const struct {
    TreeId tree;
    SeriesName series;
    const char* label;
  } pairs[] = {
      {TreeId::kAPrime, SeriesName::kLowerSimple, "A'"},
      {TreeId::kASecond, SeriesName::kLowerA, "A''"},
      {TreeId::kC, SeriesName::kUpperC, "C"},
      {TreeId::kI, SeriesName::kInfiniteD, "I"},
  };
  for (const auto& p : pairs) {
    const auto totals = level_totals(p.tree, order);
    const TruncatedSeries s = named_univariate(p.series, order);
    for (int g = 1; g <= order; ++g) {
      if (Rational(totals[static_cast<std::size_t>(g)]) != s.coeff(g)) {
        std::ostringstream os;
        os << "tree " << p.label << " vs series" << " at g = " << g;
        f.fail(os.str());
        break;
      }
    }
  }

  const int worder = std::min(order, 100);
  const BivariateSeries w = multiplicity_series(worder);
  const auto refined = refined_counts(TreeId::kASecondMult, worder, Marker::kMultiplicity);
  for (int g = 1; g <= worder && !f.failed; ++g) {
    const auto& by_lambda = refined[static_cast<std::size_t>(g)];
    for (int lambda = 0; lambda <= g + 2; ++lambda) {
      mpz_class count = 0;
      if (auto it = by_lambda.find(lambda); it != by_lambda.end()) count = it->second;
      if (w.coeff(g, lambda) != Rational(count)) {
        std::ostringstream os;
        os << "multiplicity refinement vs bivariate series at g = " << g
           << ", lambda = " << lambda;
        f.fail(os.str());
        break;
      }
    }
  }
  std::ostringstream ok;
  ok << "series match tree totals to order " << order << " (refinement to " << worder << ")";
  return {"cross_representation", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 4: sandwich inequalities ----

CheckResult check_sandwich(const WalkResult& walk, int max_genus) {
  Failure f;
  const auto as_tot = level_totals(TreeId::kASecond, max_genus);
  const auto c_tot = level_totals(TreeId::kC, max_genus);
  for (int g = 3; g <= max_genus; ++g) {
    const auto gi = static_cast<std::size_t>(g);
    const mpz_class& n = walk.n[gi];
    if (!(reference::two_fibonacci(g) <= reference::fibonacci_simple(g)))
      f.fail(at_genus("2F_g <= F_{g+2}-1", g));
    if (!(reference::fibonacci_simple(g) <= as_tot[gi]))
      f.fail(at_genus("F_{g+2}-1 <= a_g", g));
    if (!(as_tot[gi] <= n)) f.fail(at_genus("a_g <= n_g", g));
    if (!(n <= c_tot[gi])) f.fail(at_genus("n_g <= c_g", g));
    if (!(c_tot[gi] <= reference::upper_simple(g)))
      f.fail(at_genus("c_g <= 1+3*2^(g-3)", g));
  }
  if (max_genus >= 6) {
    if (!(as_tot[6] < walk.n[6] && walk.n[6] < c_tot[6]))
      f.fail("strict gaps a_6 < n_6 < c_6");
    if (as_tot[6] != 22 || walk.n[6] != 23 || c_tot[6] != 24)
      f.fail("expected a_6 = 22, n_6 = 23, c_6 = 24");
  }
  std::ostringstream ok;
  ok << "sandwich holds for 3 <= g <= " << max_genus;
  return {"sandwich", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 5: infinite chains ----

CheckResult check_infinite_chains(const WalkResult& walk, int max_genus) {
  Failure f;
  const auto d_tot = level_totals(TreeId::kI, max_genus);
  for (int g = 1; g <= std::min(max_genus, 4); ++g) {
    if (walk.m[static_cast<std::size_t>(g)] != g) f.fail(at_genus("m_g = g for g <= 4", g));
  }
  for (int g = 1; g <= max_genus; ++g) {
    const auto gi = static_cast<std::size_t>(g);
    if (g >= 4 && !(walk.m[gi] <= reference::two_fibonacci(g - 1)))
      f.fail(at_genus("m_g <= 2F_{g-1}", g));
    if (!(walk.m[gi] <= d_tot[gi])) f.fail(at_genus("m_g <= d_g", g));
    mpz_class partial = kGenusZeroCount;
    for (int i = 1; i <= (g - 1) / 2; ++i) partial += walk.n[static_cast<std::size_t>(i)];
    if (!(walk.m[gi] <= 1 + (g - 1) * partial))
      f.fail(at_genus("m_g <= 1+(g-1)*sum n_i", g));
  }
  std::ostringstream ok;
  ok << "chain counts and bounds hold for g <= " << max_genus;
  return {"infinite_chains", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 6: structural lemma suites ----

void check_node(const Semigroup& s, Failure& f) {
  const std::vector<GeneratorInfo> cls = s.classify_effective();
  const int e = static_cast<int>(cls.size());
  const int g = s.genus();

  for (const GeneratorInfo& info : cls) {
    if (info.strong && info.very_weak)
      f.fail("strong generator classified very weak in " + s.to_string());
    if (!(s.frobenius() < info.value && info.value <= 2 * g + 1))
      f.fail("effective generator out of range in " + s.to_string());
  }

  int healthy = 0;
  for (int i = 0; i < e; ++i) {
    if (!cls[static_cast<std::size_t>(i)].very_weak) {
      if (i != healthy) f.fail("healthy generators not a prefix in " + s.to_string());
      ++healthy;
    }
  }

  if (s.multiplicity() > 2 * e && is_infinite_chain(s))
    f.fail("lambda_1 > 2e node in an infinite chain: " + s.to_string());

  const bool ordinary = s.is_ordinary();
  for (int i = 0; i < e; ++i) {
    const GeneratorInfo& gen = cls[static_cast<std::size_t>(i)];
    const Semigroup child = s.remove(gen.value);

    // Parent recovery: dropping the child's Frobenius number restores s.
    std::vector<int> parent_gaps = child.gaps();
    parent_gaps.pop_back();
    if (!(Semigroup::from_gaps(parent_gaps) == s))
      f.fail("parent recovery failed under " + s.to_string());

    if (ordinary) continue;
    const std::vector<GeneratorInfo> child_cls = child.classify_effective();

    // Lemma 1(b): the child keeps the later generators and gains
    // mult + value exactly when the removed generator was strong.
    std::vector<int> expected;
    for (int j = i + 1; j < e; ++j) expected.push_back(cls[static_cast<std::size_t>(j)].value);
    if (gen.strong) expected.push_back(s.multiplicity() + gen.value);
    std::sort(expected.begin(), expected.end());
    std::vector<int> actual;
    for (const GeneratorInfo& c : child_cls) actual.push_back(c.value);
    if (expected != actual) f.fail("child generator structure off under " + s.to_string());

    // Lemma 3: strength of the later generators persists in the child.
    for (int j = i + 1; j < e; ++j) {
      if (!cls[static_cast<std::size_t>(j)].strong) continue;
      const int value = cls[static_cast<std::size_t>(j)].value;
      bool found_strong = false;
      for (const GeneratorInfo& c : child_cls)
        if (c.value == value) found_strong = c.strong;
      if (!found_strong) f.fail("strength did not persist under " + s.to_string());
    }

    // Lemma 4: healthy-generator count of the i-th child (1-based i).
    int child_healthy = 0;
    for (const GeneratorInfo& c : child_cls)
      if (!c.very_weak) ++child_healthy;
    const int i1 = i + 1;
    int bound;
    if (i1 <= healthy)
      bound = std::min(healthy - i1 + 2, e - i1 + 1);
    else if (i1 == healthy + 1)
      bound = std::min(1, e - healthy - 1);
    else
      bound = 0;
    if (child_healthy > bound) f.fail("healthy-count bound violated under " + s.to_string());
  }
}

void lemma_walk(const Semigroup& s, int max_genus, Failure& f) {
  if (f.failed) return;
  check_node(s, f);
  if (s.genus() >= max_genus) return;
  for (const Semigroup& child : s.children()) lemma_walk(child, max_genus, f);
}

CheckResult check_lemma_suites() {
  Failure f;
  lemma_walk(Semigroup::ordinary(1), 15, f);

  // Lemma 2 / s(g,k): strong sets of the P family match the piecewise
  // description and the count formula.
  for (int g = 1; g <= 20 && !f.failed; ++g) {
    for (int k = 2; k <= 20; ++k) {
      const Semigroup p = p_semigroup(g, k + 1);
      const std::vector<GeneratorInfo> cls = p.classify_effective();
      std::vector<int> strong;
      std::vector<int> effective;
      for (const GeneratorInfo& c : cls) {
        effective.push_back(c.value);
        if (c.strong) strong.push_back(c.value);
      }
      if (static_cast<int>(strong.size()) != strong_count_formula(g, k))
        f.fail(at_genus("strong count of P(g,k+1), k = " + std::to_string(k), g));
      std::vector<int> expected;
      if (k <= g) {
        for (int x = g + k + 1; x <= g + 2 * k; ++x)
          if (!(k > (g + 1) / 2 && x == 2 * g + 2)) expected.push_back(x);
      } else {
        expected = effective;  // all effective generators are strong
      }
      if (strong != expected)
        f.fail(at_genus("strong set of P(g,k+1), k = " + std::to_string(k), g));
    }
  }
  return {"lemma_suites", !f.failed,
          f.failed ? f.detail
                   : "structural lemmas hold exhaustively to genus 15; P-family strong "
                     "sets match for g,k <= 20"};
}

// ---- criterion 7: subset brute-force oracle ----

std::uint64_t oracle_count(int g) {
  // Every genus-g semigroup has all gaps below 2g, so enumerate the
  // g-subsets of {1..2g-1} and keep those whose complement is closed.
  const int limit = 2 * g - 1;
  std::vector<int> pick(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  std::uint64_t count = 0;
  for (;;) {
    std::vector<char> gap(static_cast<std::size_t>(limit) + 1, 0);
    for (int x : pick) gap[static_cast<std::size_t>(x)] = 1;
    bool closed = true;
    for (int a = 1; a <= limit && closed; ++a) {
      if (gap[static_cast<std::size_t>(a)]) continue;
      for (int b = a; a + b <= limit; ++b) {
        if (!gap[static_cast<std::size_t>(b)] && gap[static_cast<std::size_t>(a + b)]) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
    // next combination
    int i = g - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == limit - (g - 1 - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < g; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return count;
}

CheckResult check_oracle(const WalkResult& walk, int max_genus) {
  Failure f;
  const int limit = std::min(max_genus, 7);
  for (int g = 1; g <= limit; ++g) {
    if (walk.n[static_cast<std::size_t>(g)] != mpz_class(oracle_count(g)))
      f.fail(at_genus("oracle mismatch", g));
  }
  std::ostringstream ok;
  ok << "subset oracle agrees with the walk for g <= " << limit;
  return {"oracle_equivalence", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 8: series identities ----

CheckResult check_identities(int order) {
  const IdentityReport report = identity_suite(std::max(order, 64));
  Failure f;
  for (const IdentityCheck& c : report.checks)
    if (!c.pass) f.fail("identity failed: " + c.name);
  std::ostringstream ok;
  ok << report.checks.size() << " identities hold at order " << std::max(order, 64);
  return {"identity_suite", !f.failed, f.failed ? f.detail : ok.str()};
}

// ---- criterion 9: asymptotic ratio ----

CheckResult check_asymptotic_ratio() {
  const int g = 1000;
  const TruncatedSeries c = named_univariate(SeriesName::kUpperC, g + 1);
  const Rational ratio = c.coeff(g + 1) / c.coeff(g);
  const double delta = std::abs(ratio.get_d() - 2.0);
  std::ostringstream os;
  os << "|c_1001/c_1000 - 2| = " << delta;
  return {"asymptotic_ratio", delta < 0.01, os.str()};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.max_genus < 1) throw std::invalid_argument("run_verification: max_genus >= 1");
  if (options.series_order < 16)
    throw std::invalid_argument("run_verification: series_order >= 16");

  WalkConfig cfg;
  cfg.max_genus = options.max_genus;
  cfg.workers = options.workers;
  cfg.split_depth = options.split_depth;
  cfg.collect_infinite = true;
  const WalkResult walk = enumerate_tree(cfg);

  std::vector<CheckResult> results;
  results.push_back(check_golden_counts(walk, options.max_genus));
  results.push_back(check_bound_columns());
  results.push_back(check_cross_representation(options.series_order));
  results.push_back(check_sandwich(walk, options.max_genus));
  results.push_back(check_infinite_chains(walk, options.max_genus));
  results.push_back(check_lemma_suites());
  results.push_back(check_oracle(walk, options.max_genus));
  results.push_back(check_identities(options.series_order));
  results.push_back(check_asymptotic_ratio());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace genustree
