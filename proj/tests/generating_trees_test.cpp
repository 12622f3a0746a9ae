#include <doctest.h>

#include <map>

#include "genustree/generating_trees.hpp"
#include "genustree/reference_data.hpp"
#include "genustree/tree_walker.hpp"

using namespace genustree;

namespace {

std::vector<mpz_class> to_mpz(std::initializer_list<long> values) {
  std::vector<mpz_class> out{0};
  for (long v : values) out.emplace_back(v);
  return out;
}

// Reference DP driven directly by rule_children, kept independent of the
// dense level engine it cross-checks.
LevelCounts dp_by_rules(TreeId tree, int max_level) {
  LevelCounts out;
  out.levels.resize(static_cast<std::size_t>(max_level) + 1);
  out.totals.assign(static_cast<std::size_t>(max_level) + 1, mpz_class(0));
  LabelCounts current{{tree_root(tree), 1}};
  for (int g = 1; g <= max_level; ++g) {
    out.levels[static_cast<std::size_t>(g)] = current;
    for (const auto& [label, count] : current)
      out.totals[static_cast<std::size_t>(g)] += count;
    if (g == max_level) break;
    LabelCounts next;
    for (const auto& [label, count] : current)
      for (const NodeLabel& child : rule_children(tree, label)) next[child] += count;
    current = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("rule_children matches the displayed small cases") {
  using NL = NodeLabel;
  CHECK(rule_children(TreeId::kC, NL::bar(2)) ==
        std::vector<NL>{NL::pair_dh(0, 1), NL::bar(3)});
  CHECK(rule_children(TreeId::kC, NL::bar(3)) ==
        std::vector<NL>{NL::pair_dh(0, 0), NL::pair_dh(0, 2), NL::bar(4)});
  CHECK(rule_children(TreeId::kC, NL::bar(4)) ==
        std::vector<NL>{NL::pair_dh(0, 0), NL::pair_dh(0, 1), NL::pair_dh(1, 2), NL::bar(5)});
  CHECK(rule_children(TreeId::kC, NL::pair_dh(1, 2)) ==
        std::vector<NL>{NL::pair_dh(0, 0), NL::pair_dh(0, 2), NL::pair_dh(0, 3)});
  CHECK(rule_children(TreeId::kC, NL::pair_dh(0, 2)) ==
        std::vector<NL>{NL::pair_dh(0, 1), NL::pair_dh(0, 2)});
  CHECK(rule_children(TreeId::kC, NL::pair_dh(0, 0)).empty());

  CHECK(rule_children(TreeId::kI, NL::bar(6)) ==
        std::vector<NL>{NL::pair_mult(3, 6), NL::pair_mult(5, 6), NL::bar(7)});
  CHECK(rule_children(TreeId::kI, NL::bar(2)) ==
        std::vector<NL>{NL::pair_mult(1, 2), NL::bar(3)});
  CHECK(rule_children(TreeId::kI, NL::pair_mult(3, 4)) ==
        std::vector<NL>{NL::pair_mult(2, 4), NL::pair_mult(3, 4)});

  CHECK(rule_children(TreeId::kASecond, NL::tilde(2, 3)) ==
        std::vector<NL>{NL::pair(1, 0), NL::tilde(2, 4)});
  CHECK(rule_children(TreeId::kASecond, NL::tilde(3, 2)) ==
        std::vector<NL>{NL::pair(0, 0), NL::pair(2, 0), NL::tilde(3, 3)});
  CHECK(rule_children(TreeId::kASecond, NL::bar(4)) ==
        std::vector<NL>{NL::pair(0, 0), NL::pair(1, 0), NL::tilde(3, 2), NL::bar(5)});

  CHECK(rule_children(TreeId::kA, NL::bar(2)) == std::vector<NL>{NL::plain(1), NL::bar(3)});
  CHECK(rule_children(TreeId::kA, NL::plain(3)) ==
        std::vector<NL>{NL::plain(0), NL::plain(1), NL::plain(2)});
  CHECK(rule_children(TreeId::kB, NL::plain(3)) ==
        std::vector<NL>{NL::plain(1), NL::plain(2), NL::plain(3)});

  CHECK(rule_children(TreeId::kAPrime, NL::bar(3)) ==
        std::vector<NL>{NL::plain(0), NL::tilde_simple(2), NL::bar(4)});
  CHECK(rule_children(TreeId::kAPrime, NL::tilde_simple(2)) ==
        std::vector<NL>{NL::plain(0), NL::tilde_simple(2)});

  CHECK(rule_children(TreeId::kASecondMult, NL::bar(4)) ==
        std::vector<NL>{NL::pair_mult_es(0, 0, 4), NL::pair_mult_es(1, 0, 4),
                        NL::tilde(3, 2), NL::bar(5)});
  CHECK(rule_children(TreeId::kASecondMult, NL::pair_mult_es(2, 1, 5)) ==
        std::vector<NL>{NL::pair_mult_es(0, 0, 5), NL::pair_mult_es(2, 0, 5)});
}

TEST_CASE("labels outside a tree are rejected") {
  CHECK_THROWS_AS(rule_children(TreeId::kA, NodeLabel::pair_dh(0, 0)), UnknownLabelError);
  CHECK_THROWS_AS(rule_children(TreeId::kC, NodeLabel::plain(2)), UnknownLabelError);
  CHECK_THROWS_AS(rule_children(TreeId::kI, NodeLabel::pair_mult(4, 4)), UnknownLabelError);
  CHECK_THROWS_AS(rule_children(TreeId::kASecond, NodeLabel::pair(1, 2)), UnknownLabelError);
  CHECK_THROWS_AS(rule_children(TreeId::kASecond, NodeLabel::tilde(2, 1)), UnknownLabelError);
  CHECK_THROWS_AS(rule_children(TreeId::kB, NodeLabel::bar(1)), UnknownLabelError);
}

TEST_CASE("every label of the strong-marked tree has e children") {
  for (int e = 0; e <= 12; ++e) {
    for (int s = 0; s <= e; ++s)
      CHECK(rule_children(TreeId::kASecond, NodeLabel::pair(e, s)).size() ==
            static_cast<std::size_t>(e));
    if (e >= 1)
      for (int k = 2; k <= 14; ++k)
        CHECK(rule_children(TreeId::kASecond, NodeLabel::tilde(e, k)).size() ==
              static_cast<std::size_t>(e));
    if (e >= 2)
      CHECK(rule_children(TreeId::kASecond, NodeLabel::bar(e)).size() ==
            static_cast<std::size_t>(e));
  }
}

TEST_CASE("level totals on the displayed figures") {
  CHECK(level_totals(TreeId::kC, 5) == to_mpz({1, 2, 4, 7, 13}));
  CHECK(level_totals(TreeId::kASecond, 5) == to_mpz({1, 2, 4, 7, 12}));
  CHECK(level_totals(TreeId::kI, 6) == to_mpz({1, 2, 3, 4, 6, 10}));
  CHECK(level_totals(TreeId::kB, 6) == to_mpz({1, 2, 4, 7, 13, 25}));
  CHECK(level_totals(TreeId::kA, 6) == to_mpz({1, 2, 4, 6, 10, 16}));
  CHECK(level_totals(TreeId::kAPrime, 6) == to_mpz({1, 2, 4, 7, 12, 20}));
}

TEST_CASE("closed-form totals hold to level 300") {
  const int L = 300;
  const auto a = level_totals(TreeId::kA, L);
  const auto b = level_totals(TreeId::kB, L);
  const auto ap = level_totals(TreeId::kAPrime, L);
  const auto i = level_totals(TreeId::kI, L);
  CHECK(a[1] == 1);
  CHECK(b[1] == 1);
  CHECK(b[2] == 2);
  for (int g = 1; g <= L; ++g) {
    if (g >= 2) CHECK(a[static_cast<std::size_t>(g)] == reference::two_fibonacci(g));
    if (g >= 3) CHECK(b[static_cast<std::size_t>(g)] == reference::upper_simple(g));
    CHECK(ap[static_cast<std::size_t>(g)] == reference::fibonacci_simple(g));
    if (g >= 4)
      CHECK(i[static_cast<std::size_t>(g)] == reference::two_fibonacci(g - 1));
  }
}

TEST_CASE("dense engine agrees with the rule-driven reference DP") {
  for (TreeId tree : {TreeId::kA, TreeId::kB, TreeId::kAPrime, TreeId::kASecond,
                      TreeId::kASecondMult, TreeId::kC, TreeId::kI}) {
    const LevelCounts dense = level_counts(tree, 18);
    const LevelCounts byrule = dp_by_rules(tree, 18);
    for (int g = 1; g <= 18; ++g) {
      CHECK(dense.levels[static_cast<std::size_t>(g)] ==
            byrule.levels[static_cast<std::size_t>(g)]);
      CHECK(dense.totals[static_cast<std::size_t>(g)] ==
            byrule.totals[static_cast<std::size_t>(g)]);
    }
  }
}

TEST_CASE("published bound columns at level 35") {
  const auto as = level_totals(TreeId::kASecond, 35);
  const auto c = level_totals(TreeId::kC, 35);
  for (int g = 1; g <= 35; ++g) {
    CHECK(as[static_cast<std::size_t>(g)] ==
          mpz_class(reference::kLowerBoundA[static_cast<std::size_t>(g)]));
    CHECK(c[static_cast<std::size_t>(g)] ==
          mpz_class(reference::kUpperBoundC[static_cast<std::size_t>(g)]));
  }
  CHECK(as[35] == mpz_class("37863301"));
  CHECK(c[35] == mpz_class("3866902804"));
}

TEST_CASE("healthy-tree slice shift: K_d at level g equals K_{d-1} at level g-1") {
  // Streamed with only the previous level retained; a single aggregated
  // failure count keeps the assertion volume sane at level 200.
  LabelCounts prev;
  long mismatches = 0;
  for_each_level(TreeId::kC, 200, [&](int g, const LabelCounts& counts) {
    if (g >= 2) {
      for (const auto& [label, count] : counts) {
        if (label.kind != NodeLabel::Kind::kPairDH || label.a < 2) continue;
        const auto it = prev.find(NodeLabel::pair_dh(label.a - 1, label.b));
        if (it == prev.end() || it->second != count) ++mismatches;
      }
      // conversely the d >= 1 slices of the previous level all reappear
      // shifted by one
      for (const auto& [label, count] : prev) {
        if (label.kind != NodeLabel::Kind::kPairDH || label.a < 1) continue;
        const auto it = counts.find(NodeLabel::pair_dh(label.a + 1, label.b));
        if (it == counts.end() || it->second != count) ++mismatches;
      }
    }
    prev = counts;
  });
  CHECK(mismatches == 0);
}

TEST_CASE("refined counts partition the totals") {
  const int L = 30;
  const auto as_tot = level_totals(TreeId::kASecond, L);
  const auto c_tot = level_totals(TreeId::kC, L);
  const auto i_tot = level_totals(TreeId::kI, L);

  const auto by_mult = refined_counts(TreeId::kASecondMult, L, Marker::kMultiplicity);
  const auto by_strong = refined_counts(TreeId::kASecond, L, Marker::kStrong);
  const auto by_healthy = refined_counts(TreeId::kC, L, Marker::kHealthy);
  const auto by_lambda_i = refined_counts(TreeId::kI, L, Marker::kMultiplicity);

  for (int g = 1; g <= L; ++g) {
    const auto gi = static_cast<std::size_t>(g);
    mpz_class sums[4] = {0, 0, 0, 0};
    for (const auto& [k, v] : by_mult[gi]) sums[0] += v;
    for (const auto& [k, v] : by_strong[gi]) sums[1] += v;
    for (const auto& [k, v] : by_healthy[gi]) sums[2] += v;
    for (const auto& [k, v] : by_lambda_i[gi]) sums[3] += v;
    CHECK(sums[0] == as_tot[gi]);  // the multiplicity-marked tree has the same totals
    CHECK(sums[1] == as_tot[gi]);
    CHECK(sums[2] == c_tot[gi]);
    CHECK(sums[3] == i_tot[gi]);

    // the multiplicity-2 branch is the single chain under the root
    CHECK(by_mult[gi].at(2) == 1);
  }

  // marking multiplicities does not disturb the strong refinement
  CHECK(refined_counts(TreeId::kASecondMult, L, Marker::kStrong) == by_strong);

  // healthy-refined counts at level 5 sum to 13
  mpz_class level5 = 0;
  for (const auto& [h, v] : by_healthy[5]) level5 += v;
  CHECK(level5 == 13);

  CHECK_THROWS_AS(refined_counts(TreeId::kA, 5, Marker::kStrong), MarkerUndefinedError);
  CHECK_THROWS_AS(refined_counts(TreeId::kASecond, 5, Marker::kMultiplicity),
                  MarkerUndefinedError);
  CHECK_THROWS_AS(refined_counts(TreeId::kC, 5, Marker::kMultiplicity), MarkerUndefinedError);

  // marker kNone just reports the totals
  const auto none = refined_counts(TreeId::kC, 10, Marker::kNone);
  for (int g = 1; g <= 10; ++g)
    CHECK(none[static_cast<std::size_t>(g)].at(0) ==
          c_tot[static_cast<std::size_t>(g)]);
}

TEST_CASE("tree totals sandwich the exact counts") {
  const auto as = level_totals(TreeId::kASecond, 12);
  const auto c = level_totals(TreeId::kC, 12);
  for (int g = 1; g <= 12; ++g) {
    const mpz_class n(reference::kSemigroupCounts[static_cast<std::size_t>(g)]);
    CHECK(as[static_cast<std::size_t>(g)] <= n);
    CHECK(n <= c[static_cast<std::size_t>(g)]);
  }
}

TEST_CASE("chain-tree totals dominate the infinite-chain counts") {
  WalkConfig cfg;
  cfg.max_genus = 12;
  cfg.workers = 1;
  const auto m = infinite_counts(cfg);
  const auto d = level_totals(TreeId::kI, 12);
  for (int g = 1; g <= 12; ++g)
    CHECK(m[static_cast<std::size_t>(g)] <= d[static_cast<std::size_t>(g)]);
}

TEST_CASE("root and label rendering") {
  CHECK(tree_root(TreeId::kC) == NodeLabel::bar(2));
  CHECK(NodeLabel::bar(2).to_string() == "Bar(2)");
  CHECK(NodeLabel::tilde(2, 3).to_string() == "Tilde(2,3)");
  CHECK(NodeLabel::pair_dh(1, 2).to_string() == "(1,2)");
  CHECK(NodeLabel::pair_mult_es(1, 0, 4).to_string() == "(1,0;4)");
  CHECK_THROWS_AS(level_counts(TreeId::kA, 0), std::invalid_argument);
}
