#include "genustree/semigroup.hpp"

#include <algorithm>
#include <sstream>

namespace genustree {

namespace {

std::string not_closed_message(int a, int b) {
  std::ostringstream os;
  os << "gap set complement not closed under addition: " << a << " + " << b
     << " = " << (a + b) << " is a gap";
  return os.str();
}

}  // namespace

NotClosedError::NotClosedError(int a, int b)
    : std::invalid_argument(not_closed_message(a, b)), a_(a), b_(b) {}

Semigroup::Semigroup(std::vector<int> gaps, Unchecked) : gaps_(std::move(gaps)) {
  genus_ = static_cast<int>(gaps_.size());
  frobenius_ = gaps_.empty() ? 0 : gaps_.back();
  window_.assign(static_cast<std::size_t>(2 * genus_ + 3), 1);
  for (int x : gaps_) window_[static_cast<std::size_t>(x)] = 0;
  multiplicity_ = 1;
  while (window_[static_cast<std::size_t>(multiplicity_)] == 0) ++multiplicity_;
}

Semigroup Semigroup::ordinary(int genus) {
  if (genus < 0 || genus > kGenusCap)
    throw std::invalid_argument("ordinary: genus out of range");
  std::vector<int> gaps(static_cast<std::size_t>(genus));
  for (int x = 1; x <= genus; ++x) gaps[static_cast<std::size_t>(x - 1)] = x;
  return Semigroup(std::move(gaps), Unchecked{});
}

Semigroup Semigroup::from_gaps(std::vector<int> gaps) {
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (!gaps.empty() && gaps.front() < 1)
    throw std::invalid_argument("from_gaps: gaps must be positive");
  if (static_cast<int>(gaps.size()) > kGenusCap)
    throw std::invalid_argument("from_gaps: genus exceeds build cap");
  const int f = gaps.empty() ? 0 : gaps.back();
  std::vector<char> in(static_cast<std::size_t>(f + 1), 1);
  for (int x : gaps) in[static_cast<std::size_t>(x)] = 0;
  for (int a = 1; a <= f; ++a) {
    if (!in[static_cast<std::size_t>(a)]) continue;
    for (int b = a; a + b <= f; ++b) {
      if (in[static_cast<std::size_t>(b)] && !in[static_cast<std::size_t>(a + b)])
        throw NotClosedError(a, b);
    }
  }
  return Semigroup(std::move(gaps), Unchecked{});
}

bool Semigroup::is_ordinary() const noexcept { return frobenius_ == genus_; }

bool Semigroup::decomposable(int x) const noexcept {
  for (int a = multiplicity_; 2 * a <= x; ++a) {
    if (contains(a) && contains(x - a)) return true;
  }
  return false;
}

std::vector<int> Semigroup::minimal_generators() const {
  std::vector<int> out;
  for (int x = 1; x <= 2 * genus_ + 1; ++x) {
    if (contains(x) && !decomposable(x)) out.push_back(x);
  }
  return out;
}

std::vector<int> Semigroup::effective_generators() const {
  std::vector<int> out;
  for (int x = frobenius_ + 1; x <= 2 * genus_ + 1; ++x) {
    if (!decomposable(x)) out.push_back(x);
  }
  return out;
}

int Semigroup::effective_count() const {
  return static_cast<int>(effective_generators().size());
}

std::vector<GeneratorInfo> Semigroup::classify_effective() const {
  std::vector<GeneratorInfo> out;
  for (int mu : effective_generators()) {
    GeneratorInfo info;
    info.value = mu;
    info.effective = true;
    info.very_weak = multiplicity_ + mu > 2 * genus_ + 3;
    if (!info.very_weak) {
      const Semigroup child = remove(mu);
      const int candidate = multiplicity_ + mu;
      info.strong = child.contains(candidate) && !child.decomposable(candidate);
    }
    out.push_back(info);
  }
  return out;
}

Semigroup Semigroup::remove(int mu) const {
  if (mu <= frobenius_ || !contains(mu) || decomposable(mu))
    throw std::invalid_argument("remove: not an effective generator");
  if (genus_ + 1 > kGenusCap)
    throw std::invalid_argument("remove: genus exceeds build cap");
  std::vector<int> gaps = gaps_;
  gaps.push_back(mu);
  return Semigroup(std::move(gaps), Unchecked{});
}

std::vector<Semigroup> Semigroup::children() const {
  std::vector<Semigroup> out;
  for (int mu : effective_generators()) out.push_back(remove(mu));
  return out;
}

std::string Semigroup::to_string() const {
  std::ostringstream os;
  os << '<';
  bool first = true;
  const std::vector<int> gens = minimal_generators();
  for (int x : gens) {
    if (x > frobenius_) break;
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '|';
  first = true;
  for (int x : gens) {
    if (x <= frobenius_) continue;
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << '>';
  return os.str();
}

int strong_count_formula(int g, int k) {
  if (g < 1 || k < 2) throw std::invalid_argument("strong_count_formula: g >= 1, k >= 2");
  const int half = (g + 1) / 2;  // ceil(g/2)
  if (k <= half) return k;
  if (k <= g) return k - 1;
  return g;
}

Semigroup p_semigroup(int g, int i) {
  if (g < 1 || i < 3) throw std::invalid_argument("p_semigroup: g >= 1, i >= 3");
  if (g + i - 2 > kGenusCap)
    throw std::invalid_argument("p_semigroup: genus exceeds build cap");
  std::vector<int> gaps;
  gaps.reserve(static_cast<std::size_t>(g + i - 2));
  for (int x = 1; static_cast<int>(gaps.size()) < g + i - 2; ++x) {
    if (x % (g + 1) != 0) gaps.push_back(x);
  }
  return Semigroup::from_gaps(std::move(gaps));
}

}  // namespace genustree
