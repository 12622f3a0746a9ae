#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genustree {

// Build-scale cap on the genus of any semigroup this library materializes.
// Everything below it fits comfortably in native machine integers.
inline constexpr int kGenusCap = 64;

/// Thrown by Semigroup::from_gaps when the complement of the gap set is not
/// closed under addition: a and b are non-gaps whose sum is a gap.
class NotClosedError : public std::invalid_argument {
 public:
  NotClosedError(int a, int b);
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

 private:
  int a_;
  int b_;
};

/// Classification of one effective generator.
///
/// `strong` means mult+value is a minimal generator of the child obtained by
/// removing `value`; `very_weak` means mult+value > 2g+3, which rules that
/// out since minimal generators of the child are at most 2(g+1)+1.
struct GeneratorInfo {
  int value = 0;
  bool effective = false;
  bool strong = false;
  bool very_weak = false;

  bool healthy() const noexcept { return effective && !very_weak; }
};

/// A numerical semigroup in canonical form: the gap set plus a dense
/// membership window for 0..2g+2. Everything above 2g+1 is a member, so the
/// window answers every membership query the generator tests need in O(1).
///
/// Immutable value type; all operations are pure.
class Semigroup {
 public:
  /// The ordinary semigroup O_g = {0, g+1, g+2, ...} with gaps {1..g}.
  /// ordinary(0) is the full set of non-negative integers (frobenius 0 by
  /// convention); it is representable but excluded from tree walks.
  static Semigroup ordinary(int genus);

  /// Builds the semigroup whose gap set is exactly `gaps` (positive
  /// integers, any order, duplicates ignored). Throws NotClosedError when
  /// the complement is not closed under addition.
  static Semigroup from_gaps(std::vector<int> gaps);

  int genus() const noexcept { return genus_; }
  int frobenius() const noexcept { return frobenius_; }
  int multiplicity() const noexcept { return multiplicity_; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }

  bool is_ordinary() const noexcept;

  /// Membership test for any x >= 0.
  bool contains(int x) const noexcept {
    return x > frobenius_ || window_[static_cast<std::size_t>(x)] != 0;
  }

  /// Elements not expressible as a sum of two positive elements, ascending.
  /// All of them lie in [1, 2g+1].
  std::vector<int> minimal_generators() const;

  /// Minimal generators above the Frobenius number, ascending.
  std::vector<int> effective_generators() const;

  /// Number of effective generators, e(S).
  int effective_count() const;

  /// One record per effective generator, ascending by value. The strong
  /// flag is computed by the literal definition (membership window of the
  /// child), including for ordinary semigroups where it is never consumed.
  std::vector<GeneratorInfo> classify_effective() const;

  /// The child S \ {mu}; mu must be an effective generator.
  Semigroup remove(int mu) const;

  /// All children in the semigroup tree, in ascending removed-generator
  /// order (one per effective generator).
  std::vector<Semigroup> children() const;

  /// Bracket rendering <a,b|c,d>: non-effective minimal generators before
  /// the bar, effective ones after it.
  std::string to_string() const;

  friend bool operator==(const Semigroup& lhs, const Semigroup& rhs) {
    return lhs.gaps_ == rhs.gaps_;
  }

 private:
  struct Unchecked {};
  Semigroup(std::vector<int> gaps, Unchecked);

  bool decomposable(int x) const noexcept;

  std::vector<int> gaps_;      // ascending
  std::vector<char> window_;   // membership of 0..2g+2
  int genus_ = 0;
  int frobenius_ = 0;
  int multiplicity_ = 1;
};

/// The number of strong generators of P_{g,k+1}:
/// k for 2 <= k <= ceil(g/2), k-1 for ceil(g/2) < k <= g, g for k > g.
int strong_count_formula(int g, int k);

/// The semigroup P_{g,i} (g >= 1, i >= 3): multiplicity g+1, genus g+i-2,
/// exactly g effective generators. Its gap set consists of the smallest
/// g+i-2 positive integers that are not multiples of g+1, which matches the
/// recursive description (P_{g,3} is the second child of O_g, and removing
/// the smallest effective generator of P_{g,i} yields P_{g,i+1}).
Semigroup p_semigroup(int g, int i);

}  // namespace genustree
