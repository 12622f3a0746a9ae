#include "genustree/generating_trees.hpp"

#include <memory>
#include <sstream>

#include "genustree/semigroup.hpp"

namespace genustree {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

const mpz_class kOne = 1;

using Kind = NodeLabel::Kind;

[[noreturn]] void reject(const NodeLabel& label) {
  throw UnknownLabelError("label " + label.to_string() + " does not belong to this tree");
}

// One-dimensional difference accumulator for contiguous range additions.
class DiffRow {
 public:
  explicit DiffRow(std::size_t size) : d_(size + 2, mpz_class(0)) {}

  void clear() {
    for (auto& x : d_) x = 0;
  }

  void add(int lo, int hi, const mpz_class& c) {
    if (lo > hi) return;
    d_[static_cast<std::size_t>(lo)] += c;
    d_[static_cast<std::size_t>(hi) + 1] -= c;
  }

  // Prefix-sums into `sink(i, value)` for i in [0, size).
  template <typename Sink>
  void flush(std::size_t size, Sink&& sink) {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < size; ++i) {
      acc += d_[i];
      if (acc != 0) sink(i, acc);
    }
  }

 private:
  std::vector<mpz_class> d_;
};

using Grid = std::vector<std::vector<mpz_class>>;

Grid make_grid(std::size_t rows, std::size_t cols) {
  return Grid(rows, std::vector<mpz_class>(cols, mpz_class(0)));
}

void zero_grid(Grid& g) {
  for (auto& row : g)
    for (auto& x : row) x = 0;
}

// Level-count engine. Holds the state of one level; step() advances it.
class Expander {
 public:
  virtual ~Expander() = default;
  virtual void step() = 0;
  virtual mpz_class total() const = 0;
  virtual void emit(LabelCounts& out) const = 0;
  virtual void add_markers(Marker marker, std::map<int, mpz_class>& out) const = 0;
  int level() const { return level_; }

 protected:
  int level_ = 1;
};

// Trees kA, kB, kAPrime: plain labels (e) plus the bar chain, plus for
// kAPrime one Tilde(e) node per e in [1, g-1] (born from Bar(e+1), then
// self-succeeding with count 1 forever).
class ChainExpander : public Expander {
 public:
  ChainExpander(TreeId tree, int max_level)
      : tree_(tree),
        width_(static_cast<std::size_t>(max_level) + 3),
        plain_(width_, mpz_class(0)),
        diff_(width_) {}

  void step() override {
    const int g = level_;
    diff_.clear();
    for (std::size_t e = 0; e < width_; ++e) {
      const mpz_class& c = plain_[e];
      if (c == 0) continue;
      const int ei = static_cast<int>(e);
      if (tree_ == TreeId::kB)
        diff_.add(1, ei, c);
      else
        diff_.add(0, ei - 1, c);
    }
    if (tree_ == TreeId::kAPrime) {
      for (int e = 1; e <= g - 1; ++e) diff_.add(0, e - 2, kOne);
    }
    const int bar_e = g + 1;
    diff_.add(0, bar_e - 3, kOne);
    if (tree_ != TreeId::kAPrime) diff_.add(bar_e - 1, bar_e - 1, kOne);

    for (auto& x : plain_) x = 0;
    diff_.flush(width_, [&](std::size_t i, const mpz_class& v) { plain_[i] = v; });
    ++level_;
  }

  mpz_class total() const override {
    mpz_class t = 1;  // the bar node
    if (tree_ == TreeId::kAPrime && level_ >= 2) t += level_ - 1;  // tilde chain nodes
    for (const auto& c : plain_) t += c;
    return t;
  }

  void emit(LabelCounts& out) const override {
    out.emplace_hint(out.end(), NodeLabel::bar(level_ + 1), kOne);
    if (tree_ == TreeId::kAPrime) {
      for (int e = 1; e <= level_ - 1; ++e)
        out.emplace_hint(out.end(), NodeLabel::tilde_simple(e), kOne);
    }
    for (std::size_t e = 0; e < width_; ++e) {
      if (plain_[e] != 0)
        out.emplace_hint(out.end(), NodeLabel::plain(static_cast<int>(e)), plain_[e]);
    }
  }

  void add_markers(Marker, std::map<int, mpz_class>&) const override {
    throw MarkerUndefinedError("no marker is defined for this tree");
  }

 private:
  TreeId tree_;
  std::size_t width_;
  std::vector<mpz_class> plain_;
  DiffRow diff_;
};

// Pair grid (e, s) with the kASecond succession rule:
//   (e,s) -> (0,0)(1,0)...(e-s-1,0) (e-s+1,0)(e-s+2,1)...(e,s-1)
// The first block is a range on the s = 0 row, the second a range along the
// diagonal e - s = const + 1. Bar and Tilde nodes are implicit: one bar per
// level and one Tilde(e, g-e+1) per e in [1, g-1], each of count 1.
// In stratum mode the grid tracks a single multiplicity class lambda, whose
// injections happen only at the levels where Bar(lambda) and
// Tilde(lambda-1, *) live.
class PairGrid {
 public:
  PairGrid(int width, int stratum /* 0 = all strata (kASecond) */)
      : width_(static_cast<std::size_t>(width)),
        stratum_(stratum),
        cells_(make_grid(width_ + 1, width_ + 1)),
        next_(make_grid(width_ + 1, width_ + 1)),
        row0_(width_ + 1),
        diag_(make_grid(width_ + 2, width_ + 2)) {}

  void step(int g) {
    row0_.clear();
    zero_grid(diag_);
    for (std::size_t a = 0; a <= width_; ++a) {
      for (std::size_t b = 0; b <= a; ++b) {
        const mpz_class& c = cells_[a][b];
        if (c == 0) continue;
        const int e = static_cast<int>(a);
        const int s = static_cast<int>(b);
        row0_.add(0, e - s - 1, c);
        if (s >= 1) diag_add(e - s + 1, 0, s - 1, c);
      }
    }
    for (int e = 1; e <= g - 1; ++e) {
      if (stratum_ != 0 && e != stratum_ - 1) continue;
      const int s = strong_count_formula(e, g - e + 1);
      row0_.add(0, e - s - 1, kOne);
      if (s >= 2) diag_add(e - s + 1, 0, s - 2, kOne);
    }
    const int bar_e = g + 1;
    if (stratum_ == 0 || bar_e == stratum_) row0_.add(0, bar_e - 3, kOne);

    zero_grid(next_);
    row0_.flush(width_ + 1, [&](std::size_t i, const mpz_class& v) { next_[i][0] += v; });
    for (std::size_t d = 1; d <= width_ + 1; ++d) {
      mpz_class acc = 0;
      for (std::size_t j = 0; d + j <= width_; ++j) {
        acc += diag_[d][j];
        if (acc != 0) next_[d + j][j] += acc;
      }
    }
    cells_.swap(next_);
  }

  mpz_class pair_total() const {
    mpz_class t = 0;
    for (std::size_t a = 0; a <= width_; ++a)
      for (std::size_t b = 0; b <= a; ++b) t += cells_[a][b];
    return t;
  }

  const mpz_class& at(std::size_t a, std::size_t b) const { return cells_[a][b]; }
  std::size_t width() const { return width_; }

  void add_by_s(std::map<int, mpz_class>& out) const {
    for (std::size_t a = 0; a <= width_; ++a)
      for (std::size_t b = 0; b <= a; ++b)
        if (cells_[a][b] != 0) out[static_cast<int>(b)] += cells_[a][b];
  }

 private:
  void diag_add(int d, int jlo, int jhi, const mpz_class& c) {
    if (jlo > jhi) return;
    diag_[static_cast<std::size_t>(d)][static_cast<std::size_t>(jlo)] += c;
    diag_[static_cast<std::size_t>(d)][static_cast<std::size_t>(jhi) + 1] -= c;
  }

  std::size_t width_;
  int stratum_;
  Grid cells_;
  Grid next_;
  DiffRow row0_;
  Grid diag_;
};

class PairESExpander : public Expander {
 public:
  explicit PairESExpander(int max_level) : grid_(max_level + 2, 0) {}

  void step() override {
    grid_.step(level_);
    ++level_;
  }

  mpz_class total() const override {
    mpz_class t = grid_.pair_total() + 1;
    if (level_ >= 2) t += level_ - 1;  // Tilde(e, g-e+1), e in [1, g-1]
    return t;
  }

  void emit(LabelCounts& out) const override {
    out.emplace_hint(out.end(), NodeLabel::bar(level_ + 1), kOne);
    for (int e = 1; e <= level_ - 1; ++e)
      out.emplace_hint(out.end(), NodeLabel::tilde(e, level_ - e + 1), kOne);
    for (std::size_t a = 0; a <= grid_.width(); ++a)
      for (std::size_t b = 0; b <= a; ++b)
        if (grid_.at(a, b) != 0)
          out.emplace_hint(out.end(),
                           NodeLabel::pair(static_cast<int>(a), static_cast<int>(b)),
                           grid_.at(a, b));
  }

  void add_markers(Marker marker, std::map<int, mpz_class>& out) const override {
    if (marker != Marker::kStrong)
      throw MarkerUndefinedError("only the strong marker is defined for this tree");
    out[0] += 1;  // the bar node
    for (int e = 1; e <= level_ - 1; ++e) out[strong_count_formula(e, level_ - e + 1)] += 1;
    grid_.add_by_s(out);
  }

 private:
  PairGrid grid_;
};

// kASecondMult: one PairGrid per multiplicity stratum lambda (pairs in
// stratum lambda satisfy e <= lambda - 2), stepped in lockstep.
class PairESMultExpander : public Expander {
 public:
  explicit PairESMultExpander(int max_level) : max_level_(max_level) {
    const int max_lambda = max_level + 1;
    strata_.reserve(static_cast<std::size_t>(max_lambda) + 1);
    for (int lam = 0; lam <= max_lambda; ++lam)
      strata_.push_back(lam < 3 ? nullptr
                                : std::make_unique<PairGrid>(std::max(lam - 2, 1), lam));
  }

  void step() override {
    for (auto& s : strata_)
      if (s) s->step(level_);
    ++level_;
  }

  mpz_class total() const override {
    mpz_class t = 1;
    if (level_ >= 2) t += level_ - 1;
    for (const auto& s : strata_)
      if (s) t += s->pair_total();
    return t;
  }

  void emit(LabelCounts& out) const override {
    out.emplace_hint(out.end(), NodeLabel::bar(level_ + 1), kOne);
    for (int e = 1; e <= level_ - 1; ++e)
      out.emplace_hint(out.end(), NodeLabel::tilde(e, level_ - e + 1), kOne);
    for (std::size_t lam = 0; lam < strata_.size(); ++lam) {
      if (!strata_[lam]) continue;
      const PairGrid& grid = *strata_[lam];
      for (std::size_t a = 0; a <= grid.width(); ++a)
        for (std::size_t b = 0; b <= a; ++b)
          if (grid.at(a, b) != 0)
            out[NodeLabel::pair_mult_es(static_cast<int>(a), static_cast<int>(b),
                                        static_cast<int>(lam))] += grid.at(a, b);
    }
  }

  void add_markers(Marker marker, std::map<int, mpz_class>& out) const override {
    if (marker == Marker::kMultiplicity) {
      out[level_ + 1] += 1;  // Bar(g+1) stands for O_g, multiplicity g+1
      for (int e = 1; e <= level_ - 1; ++e) out[e + 1] += 1;
      for (std::size_t lam = 0; lam < strata_.size(); ++lam) {
        if (!strata_[lam]) continue;
        const mpz_class t = strata_[lam]->pair_total();
        if (t != 0) out[static_cast<int>(lam)] += t;
      }
      return;
    }
    if (marker == Marker::kStrong) {
      out[0] += 1;
      for (int e = 1; e <= level_ - 1; ++e) out[strong_count_formula(e, level_ - e + 1)] += 1;
      for (const auto& s : strata_)
        if (s) s->add_by_s(out);
      return;
    }
    throw MarkerUndefinedError("marker not defined for this tree");
  }

 private:
  int max_level_;
  std::vector<std::unique_ptr<PairGrid>> strata_;
};

// kC: pair grid (d, h) with the relabeled healthy rule. First blocks are
// ranges on the h = 0 row, the rest are ranges along fixed-d columns.
class PairDHExpander : public Expander {
 public:
  explicit PairDHExpander(int max_level)
      : width_(static_cast<std::size_t>(max_level) + 3),
        cells_(make_grid(width_ + 1, width_ + 2)),
        next_(make_grid(width_ + 1, width_ + 2)),
        row0_(width_ + 1),
        cols_(make_grid(width_ + 1, width_ + 4)) {}

  void step() override {
    row0_.clear();
    zero_grid(cols_);
    for (std::size_t di = 0; di <= width_; ++di) {
      for (std::size_t hi = 0; hi <= width_ + 1; ++hi) {
        const mpz_class& c = cells_[di][hi];
        if (c == 0) continue;
        const int d = static_cast<int>(di);
        const int h = static_cast<int>(hi);
        if (d >= 2) {
          row0_.add(0, d - 2, c);
          col_add(d - 2, 1, 1, c);
          col_add(d - 1, 2, h + 1, c);
        } else if (d == 1) {
          col_add(0, 0, 0, c);
          col_add(0, 2, h + 1, c);
        } else {
          col_add(0, 1, h, c);
        }
      }
    }
    const int bar_e = level_ + 1;
    if (bar_e >= 4) {
      row0_.add(0, bar_e - 4, kOne);
      col_add(bar_e - 4, 1, 1, kOne);
      col_add(bar_e - 3, 2, 2, kOne);
    } else if (bar_e == 3) {
      col_add(0, 0, 0, kOne);
      col_add(0, 2, 2, kOne);
    } else {
      col_add(0, 1, 1, kOne);
    }

    zero_grid(next_);
    row0_.flush(width_ + 1, [&](std::size_t i, const mpz_class& v) { next_[i][0] += v; });
    for (std::size_t d = 0; d <= width_; ++d) {
      mpz_class acc = 0;
      for (std::size_t j = 0; j <= width_ + 1; ++j) {
        acc += cols_[d][j];
        if (acc != 0) next_[d][j] += acc;
      }
    }
    cells_.swap(next_);
    ++level_;
  }

  mpz_class total() const override {
    mpz_class t = 1;
    for (const auto& row : cells_)
      for (const auto& c : row) t += c;
    return t;
  }

  void emit(LabelCounts& out) const override {
    out.emplace_hint(out.end(), NodeLabel::bar(level_ + 1), kOne);
    for (std::size_t d = 0; d <= width_; ++d)
      for (std::size_t h = 0; h <= width_ + 1; ++h)
        if (cells_[d][h] != 0)
          out.emplace_hint(out.end(),
                           NodeLabel::pair_dh(static_cast<int>(d), static_cast<int>(h)),
                           cells_[d][h]);
  }

  void add_markers(Marker marker, std::map<int, mpz_class>& out) const override {
    if (marker != Marker::kHealthy)
      throw MarkerUndefinedError("only the healthy marker is defined for this tree");
    out[2] += 1;  // O_g has exactly two healthy generators
    for (std::size_t d = 0; d <= width_; ++d)
      for (std::size_t h = 0; h <= width_ + 1; ++h)
        if (cells_[d][h] != 0) out[static_cast<int>(h)] += cells_[d][h];
  }

 private:
  void col_add(int d, int jlo, int jhi, const mpz_class& c) {
    if (jlo > jhi) return;
    cols_[static_cast<std::size_t>(d)][static_cast<std::size_t>(jlo)] += c;
    cols_[static_cast<std::size_t>(d)][static_cast<std::size_t>(jhi) + 1] -= c;
  }

  std::size_t width_;
  Grid cells_;   // [d][h]
  Grid next_;
  DiffRow row0_;
  Grid cols_;    // difference entries per fixed d
};

// kI: pair grid (e, lambda); each rule image is one contiguous e-range at
// fixed lambda.
class PairMultExpander : public Expander {
 public:
  explicit PairMultExpander(int max_level)
      : width_(static_cast<std::size_t>(max_level) + 3),
        cells_(make_grid(width_ + 2, width_ + 1)),
        next_(make_grid(width_ + 2, width_ + 1)),
        diffs_(make_grid(width_ + 2, width_ + 3)) {}

  void step() override {
    zero_grid(diffs_);
    for (std::size_t lam = 2; lam <= width_ + 1; ++lam) {
      for (std::size_t e = 0; e <= width_; ++e) {
        const mpz_class& c = cells_[lam][e];
        if (c == 0) continue;
        range_add(static_cast<int>(lam), ceil_half(static_cast<int>(lam)),
                  static_cast<int>(e), c);
      }
    }
    const int lb = level_ + 1;  // Bar(g+1) at level g emits pairs with lambda = g+1
    range_add(lb, ceil_half(lb), lb - 3, kOne);
    range_add(lb, lb - 1, lb - 1, kOne);

    zero_grid(next_);
    for (std::size_t lam = 2; lam <= width_ + 1; ++lam) {
      mpz_class acc = 0;
      for (std::size_t e = 0; e <= width_; ++e) {
        acc += diffs_[lam][e];
        if (acc != 0) next_[lam][e] += acc;
      }
    }
    cells_.swap(next_);
    ++level_;
  }

  mpz_class total() const override {
    mpz_class t = 1;
    for (const auto& row : cells_)
      for (const auto& c : row) t += c;
    return t;
  }

  void emit(LabelCounts& out) const override {
    out.emplace_hint(out.end(), NodeLabel::bar(level_ + 1), kOne);
    for (std::size_t e = 0; e <= width_; ++e)
      for (std::size_t lam = 2; lam <= width_ + 1; ++lam)
        if (cells_[lam][e] != 0)
          out.emplace_hint(out.end(),
                           NodeLabel::pair_mult(static_cast<int>(e), static_cast<int>(lam)),
                           cells_[lam][e]);
  }

  void add_markers(Marker marker, std::map<int, mpz_class>& out) const override {
    if (marker != Marker::kMultiplicity)
      throw MarkerUndefinedError("only the multiplicity marker is defined for this tree");
    out[level_ + 1] += 1;  // Bar(lambda) carries its own multiplicity
    for (std::size_t lam = 2; lam <= width_ + 1; ++lam) {
      mpz_class t = 0;
      for (std::size_t e = 0; e <= width_; ++e) t += cells_[lam][e];
      if (t != 0) out[static_cast<int>(lam)] += t;
    }
  }

 private:
  void range_add(int lam, int lo, int hi, const mpz_class& c) {
    if (lo > hi) return;
    diffs_[static_cast<std::size_t>(lam)][static_cast<std::size_t>(lo)] += c;
    diffs_[static_cast<std::size_t>(lam)][static_cast<std::size_t>(hi) + 1] -= c;
  }

  std::size_t width_;
  Grid cells_;   // [lambda][e]
  Grid next_;
  Grid diffs_;
};

std::unique_ptr<Expander> make_expander(TreeId tree, int max_level) {
  switch (tree) {
    case TreeId::kA:
    case TreeId::kB:
    case TreeId::kAPrime:
      return std::make_unique<ChainExpander>(tree, max_level);
    case TreeId::kASecond:
      return std::make_unique<PairESExpander>(max_level);
    case TreeId::kASecondMult:
      return std::make_unique<PairESMultExpander>(max_level);
    case TreeId::kC:
      return std::make_unique<PairDHExpander>(max_level);
    case TreeId::kI:
      return std::make_unique<PairMultExpander>(max_level);
  }
  throw std::invalid_argument("unknown tree id");
}

void check_max_level(int max_level) {
  if (max_level < 1) throw std::invalid_argument("max_level must be >= 1");
}

}  // namespace

std::string NodeLabel::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kBar: os << "Bar(" << a << ')'; break;
    case Kind::kTildeSimple: os << "Tilde(" << a << ')'; break;
    case Kind::kTilde: os << "Tilde(" << a << ',' << b << ')'; break;
    case Kind::kPlain: os << '(' << a << ')'; break;
    case Kind::kPair:
    case Kind::kPairDH:
    case Kind::kPairMult: os << '(' << a << ',' << b << ')'; break;
    case Kind::kPairMultES: os << '(' << a << ',' << b << ';' << c << ')'; break;
  }
  return os.str();
}

NodeLabel tree_root(TreeId) { return NodeLabel::bar(2); }

std::vector<NodeLabel> rule_children(TreeId tree, const NodeLabel& label) {
  std::vector<NodeLabel> out;
  const int e = label.a;

  if (label.kind == Kind::kBar) {
    if (e < 2) reject(label);
    switch (tree) {
      case TreeId::kA:
      case TreeId::kB:
        for (int i = 0; i <= e - 3; ++i) out.push_back(NodeLabel::plain(i));
        out.push_back(NodeLabel::plain(e - 1));
        break;
      case TreeId::kAPrime:
        for (int i = 0; i <= e - 3; ++i) out.push_back(NodeLabel::plain(i));
        out.push_back(NodeLabel::tilde_simple(e - 1));
        break;
      case TreeId::kASecond:
        for (int i = 0; i <= e - 3; ++i) out.push_back(NodeLabel::pair(i, 0));
        out.push_back(NodeLabel::tilde(e - 1, 2));
        break;
      case TreeId::kASecondMult:
        for (int i = 0; i <= e - 3; ++i) out.push_back(NodeLabel::pair_mult_es(i, 0, e));
        out.push_back(NodeLabel::tilde(e - 1, 2));
        break;
      case TreeId::kC:
        if (e == 2) {
          out.push_back(NodeLabel::pair_dh(0, 1));
        } else if (e == 3) {
          out.push_back(NodeLabel::pair_dh(0, 0));
          out.push_back(NodeLabel::pair_dh(0, 2));
        } else {
          for (int i = 0; i <= e - 4; ++i) out.push_back(NodeLabel::pair_dh(i, 0));
          out.push_back(NodeLabel::pair_dh(e - 4, 1));
          out.push_back(NodeLabel::pair_dh(e - 3, 2));
        }
        break;
      case TreeId::kI:
        for (int i = ceil_half(e); i <= e - 3; ++i) out.push_back(NodeLabel::pair_mult(i, e));
        out.push_back(NodeLabel::pair_mult(e - 1, e));
        break;
    }
    out.push_back(NodeLabel::bar(e + 1));
    return out;
  }

  switch (tree) {
    case TreeId::kA:
      if (label.kind != Kind::kPlain || e < 0) reject(label);
      for (int i = 0; i < e; ++i) out.push_back(NodeLabel::plain(i));
      return out;
    case TreeId::kB:
      if (label.kind != Kind::kPlain || e < 0) reject(label);
      for (int i = 1; i <= e; ++i) out.push_back(NodeLabel::plain(i));
      return out;
    case TreeId::kAPrime:
      if (label.kind == Kind::kTildeSimple) {
        if (e < 1) reject(label);
        for (int i = 0; i <= e - 2; ++i) out.push_back(NodeLabel::plain(i));
        out.push_back(NodeLabel::tilde_simple(e));
        return out;
      }
      if (label.kind != Kind::kPlain || e < 0) reject(label);
      for (int i = 0; i < e; ++i) out.push_back(NodeLabel::plain(i));
      return out;
    case TreeId::kASecond:
    case TreeId::kASecondMult: {
      const bool with_mult = tree == TreeId::kASecondMult;
      auto pair_label = [&](int pe, int ps, int lambda) {
        return with_mult ? NodeLabel::pair_mult_es(pe, ps, lambda) : NodeLabel::pair(pe, ps);
      };
      if (label.kind == Kind::kTilde) {
        const int k = label.b;
        if (e < 1 || k < 2) reject(label);
        const int s = strong_count_formula(e, k);
        const int lambda = e + 1;
        for (int i = 0; i <= e - s - 1; ++i) out.push_back(pair_label(i, 0, lambda));
        for (int j = 0; j <= s - 2; ++j) out.push_back(pair_label(e - s + 1 + j, j, lambda));
        out.push_back(NodeLabel::tilde(e, k + 1));
        return out;
      }
      if (with_mult) {
        if (label.kind != Kind::kPairMultES || e < 0 || label.b < 0 || label.b > e ||
            label.c < 2)
          reject(label);
      } else {
        if (label.kind != Kind::kPair || e < 0 || label.b < 0 || label.b > e) reject(label);
      }
      const int s = label.b;
      const int lambda = label.c;
      for (int i = 0; i <= e - s - 1; ++i) out.push_back(pair_label(i, 0, lambda));
      for (int j = 0; j <= s - 1; ++j) out.push_back(pair_label(e - s + 1 + j, j, lambda));
      return out;
    }
    case TreeId::kC: {
      if (label.kind != Kind::kPairDH || label.a < 0 || label.b < 0) reject(label);
      const int d = label.a;
      const int h = label.b;
      if (d >= 2) {
        for (int i = 0; i <= d - 2; ++i) out.push_back(NodeLabel::pair_dh(i, 0));
        out.push_back(NodeLabel::pair_dh(d - 2, 1));
        for (int j = 2; j <= h + 1; ++j) out.push_back(NodeLabel::pair_dh(d - 1, j));
      } else if (d == 1) {
        out.push_back(NodeLabel::pair_dh(0, 0));
        for (int j = 2; j <= h + 1; ++j) out.push_back(NodeLabel::pair_dh(0, j));
      } else {
        for (int j = 1; j <= h; ++j) out.push_back(NodeLabel::pair_dh(0, j));
      }
      return out;
    }
    case TreeId::kI: {
      if (label.kind != Kind::kPairMult || label.b < 2 || label.a < 0 || label.a >= label.b)
        reject(label);
      const int lambda = label.b;
      for (int i = ceil_half(lambda); i <= label.a; ++i)
        out.push_back(NodeLabel::pair_mult(i, lambda));
      return out;
    }
  }
  reject(label);
}

LevelCounts level_counts(TreeId tree, int max_level) {
  check_max_level(max_level);
  LevelCounts out;
  out.levels.resize(static_cast<std::size_t>(max_level) + 1);
  out.totals.assign(static_cast<std::size_t>(max_level) + 1, mpz_class(0));
  for_each_level(tree, max_level, [&](int level, const LabelCounts& counts) {
    out.levels[static_cast<std::size_t>(level)] = counts;
    mpz_class& t = out.totals[static_cast<std::size_t>(level)];
    for (const auto& [label, c] : counts) t += c;
  });
  return out;
}

std::vector<mpz_class> level_totals(TreeId tree, int max_level) {
  check_max_level(max_level);
  std::vector<mpz_class> totals(static_cast<std::size_t>(max_level) + 1, mpz_class(0));
  auto ex = make_expander(tree, max_level);
  for (int g = 1; g <= max_level; ++g) {
    totals[static_cast<std::size_t>(g)] = ex->total();
    if (g < max_level) ex->step();
  }
  return totals;
}

void for_each_level(TreeId tree, int max_level,
                    const std::function<void(int, const LabelCounts&)>& visit) {
  check_max_level(max_level);
  auto ex = make_expander(tree, max_level);
  LabelCounts counts;
  for (int g = 1; g <= max_level; ++g) {
    counts.clear();
    ex->emit(counts);
    visit(g, counts);
    if (g < max_level) ex->step();
  }
}

std::vector<std::map<int, mpz_class>> refined_counts(TreeId tree, int max_level, Marker marker) {
  check_max_level(max_level);
  std::vector<std::map<int, mpz_class>> out(static_cast<std::size_t>(max_level) + 1);
  auto ex = make_expander(tree, max_level);
  for (int g = 1; g <= max_level; ++g) {
    if (marker == Marker::kNone)
      out[static_cast<std::size_t>(g)][0] = ex->total();
    else
      ex->add_markers(marker, out[static_cast<std::size_t>(g)]);
    if (g < max_level) ex->step();
  }
  return out;
}

}  // namespace genustree
