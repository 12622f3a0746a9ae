#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace genustree {

/// The label trees whose level counts bound the semigroup counts. Every
/// tree is rooted at Bar(2).
///
///   kA        -> totals 2*F_g            (g >= 2)
///   kB        -> totals 1 + 3*2^(g-3)    (g >= 3)
///   kAPrime   -> totals F_{g+2} - 1      (lower bound, simple)
///   kASecond  -> totals a_g              (lower bound, strong-marked)
///   kASecondMult -> kASecond with every label carrying its multiplicity
///   kC        -> totals c_g              (upper bound, healthy-marked)
///   kI        -> totals d_g              (upper bound on infinite chains)
enum class TreeId : std::uint8_t { kA, kB, kAPrime, kASecond, kASecondMult, kC, kI };

struct NodeLabel {
  enum class Kind : std::uint8_t {
    kBar,         // ordinary chain, Bar(e)
    kTildeSimple, // kAPrime chain, Tilde(e)
    kTilde,       // kASecond / kASecondMult family label, Tilde(e, k)
    kPlain,       // kA / kB / kAPrime single label, (e)
    kPair,        // kASecond pair, (e, s)
    kPairDH,      // kC pair, (d, h)
    kPairMult,    // kI pair, (e, lambda)
    kPairMultES,  // kASecondMult triple, (e, s; lambda)
  };

  Kind kind = Kind::kBar;
  std::int32_t a = 0;
  std::int32_t b = 0;
  std::int32_t c = 0;

  friend auto operator<=>(const NodeLabel&, const NodeLabel&) = default;

  static NodeLabel bar(int e) { return {Kind::kBar, e, 0, 0}; }
  static NodeLabel tilde_simple(int e) { return {Kind::kTildeSimple, e, 0, 0}; }
  static NodeLabel tilde(int e, int k) { return {Kind::kTilde, e, k, 0}; }
  static NodeLabel plain(int e) { return {Kind::kPlain, e, 0, 0}; }
  static NodeLabel pair(int e, int s) { return {Kind::kPair, e, s, 0}; }
  static NodeLabel pair_dh(int d, int h) { return {Kind::kPairDH, d, h, 0}; }
  static NodeLabel pair_mult(int e, int lambda) { return {Kind::kPairMult, e, lambda, 0}; }
  static NodeLabel pair_mult_es(int e, int s, int lambda) {
    return {Kind::kPairMultES, e, s, lambda};
  }

  std::string to_string() const;
};

using LabelCounts = std::map<NodeLabel, mpz_class>;

/// Per-level label counts. levels[g] and totals[g] cover g = 1..max_level;
/// index 0 is empty/zero. Level 1 holds exactly the root with count 1.
struct LevelCounts {
  std::vector<LabelCounts> levels;
  std::vector<mpz_class> totals;
};

enum class Marker : std::uint8_t { kNone, kStrong, kHealthy, kMultiplicity };

class UnknownLabelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MarkerUndefinedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Root label of every tree: Bar(2), standing for the genus-1 semigroup.
NodeLabel tree_root(TreeId tree);

/// The ordered child-label list of `label` under `tree`'s succession rule.
/// Throws UnknownLabelError when the label does not belong to the tree.
std::vector<NodeLabel> rule_children(TreeId tree, const NodeLabel& label);

/// Per-level counts by dynamic programming over label multisets; individual
/// nodes are never materialized. Materializes one map per level, so keep
/// max_level moderate (tests use <= 60); use level_totals or for_each_level
/// for large orders.
LevelCounts level_counts(TreeId tree, int max_level);

/// Level totals only; streams levels internally, cheap up to many hundreds.
std::vector<mpz_class> level_totals(TreeId tree, int max_level);

/// Streams the per-level label counts without retaining past levels.
void for_each_level(TreeId tree, int max_level,
                    const std::function<void(int level, const LabelCounts&)>& visit);

/// Per-level counts aggregated by a marker component:
///   kNone         -> everything under key 0 (the level total)
///   kStrong       -> s of (e,s) labels; s(e,k) for Tilde(e,k); 0 for Bar
///   kHealthy      -> h of (d,h) labels; 2 for Bar (O_g has two healthy
///                    generators for every g >= 1)
///   kMultiplicity -> lambda (kASecondMult: e for Bar(e), e+1 for
///                    Tilde(e,k); kI: the lambda component, Bar(lambda))
/// Throws MarkerUndefinedError when the marker is not defined for the tree.
std::vector<std::map<int, mpz_class>> refined_counts(TreeId tree, int max_level, Marker marker);

}  // namespace genustree
