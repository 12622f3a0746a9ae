#include <doctest.h>

#include <algorithm>

#include "genustree/semigroup.hpp"

using namespace genustree;

namespace {

std::vector<int> values_of(const std::vector<GeneratorInfo>& infos) {
  std::vector<int> out;
  for (const auto& i : infos) out.push_back(i.value);
  return out;
}

void walk(const Semigroup& s, int max_genus, const std::function<void(const Semigroup&)>& fn) {
  fn(s);
  if (s.genus() >= max_genus) return;
  for (const Semigroup& child : s.children()) walk(child, max_genus, fn);
}

}  // namespace

TEST_CASE("ordinary semigroups") {
  const Semigroup root = Semigroup::ordinary(1);
  CHECK(root.gaps() == std::vector<int>{1});
  CHECK(root.to_string() == "<|2,3>");
  CHECK(root.genus() == 1);
  CHECK(root.frobenius() == 1);
  CHECK(root.multiplicity() == 2);

  const Semigroup all = Semigroup::ordinary(0);
  CHECK(all.gaps().empty());
  CHECK(all.genus() == 0);
  CHECK(all.frobenius() == 0);
  CHECK(all.multiplicity() == 1);
  CHECK(all.contains(1));
  CHECK(all.contains(100));
  CHECK(all.minimal_generators() == std::vector<int>{1});

  const Semigroup o4 = Semigroup::ordinary(4);
  CHECK(o4.gaps() == std::vector<int>{1, 2, 3, 4});
  CHECK(o4.effective_generators() == std::vector<int>{5, 6, 7, 8, 9});
  CHECK(o4.effective_count() == 5);

  for (int g = 1; g <= 12; ++g) {
    const Semigroup og = Semigroup::ordinary(g);
    CHECK(og.is_ordinary());
    CHECK(og.effective_count() == g + 1);
    std::vector<int> expected;
    for (int x = g + 1; x <= 2 * g + 1; ++x) expected.push_back(x);
    CHECK(og.minimal_generators() == expected);
  }
}

TEST_CASE("from_gaps on the worked example") {
  const Semigroup s = Semigroup::from_gaps({1, 2, 3, 4, 5, 7, 8, 10, 11});
  CHECK(s.genus() == 9);
  CHECK(s.frobenius() == 11);
  CHECK(s.multiplicity() == 6);
  CHECK(s.minimal_generators() == std::vector<int>{6, 9, 13, 14, 16, 17});
  CHECK(s.to_string() == "<6,9|13,14,16,17>");
  CHECK_FALSE(s.is_ordinary());
}

TEST_CASE("from_gaps validation") {
  CHECK(Semigroup::from_gaps({1}).to_string() == "<|2,3>");

  CHECK_THROWS_AS(Semigroup::from_gaps({2}), NotClosedError);
  try {
    Semigroup::from_gaps({2});
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.a() == 1);
    CHECK(e.b() == 1);
  }

  // 8 = 3 + 5 forces a violation; the reported witness is the smallest pair.
  try {
    Semigroup::from_gaps({1, 2, 4, 8});
    FAIL("expected NotClosedError");
  } catch (const NotClosedError& e) {
    CHECK(e.a() == 3);
    CHECK(e.b() == 5);
  }

  CHECK_THROWS_AS(Semigroup::from_gaps({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Semigroup::from_gaps({-3}), std::invalid_argument);

  // unsorted input with duplicates normalizes
  const Semigroup s = Semigroup::from_gaps({3, 1, 1});
  CHECK(s.gaps() == std::vector<int>{1, 3});
}

TEST_CASE("classification of effective generators") {
  // <6,9|13,14,16,17>: 13 and 14 are strong. 16 has 6+16 = 22 > 2*9+3 = 21,
  // so it is very weak (and in particular weak); 17 likewise.
  const Semigroup s = Semigroup::from_gaps({1, 2, 3, 4, 5, 7, 8, 10, 11});
  const auto cls = s.classify_effective();
  REQUIRE(values_of(cls) == std::vector<int>{13, 14, 16, 17});
  CHECK(cls[0].strong);
  CHECK(cls[0].healthy());
  CHECK(cls[1].strong);
  CHECK(cls[1].healthy());
  CHECK_FALSE(cls[2].strong);
  CHECK(cls[2].very_weak);
  CHECK_FALSE(cls[3].strong);
  CHECK(cls[3].very_weak);

  // <3|5,7>: 5 strong, 7 weak; agrees with strong_count_formula(2,2) = 1.
  const Semigroup p = Semigroup::from_gaps({1, 2, 4});
  const auto pcls = p.classify_effective();
  REQUIRE(values_of(pcls) == std::vector<int>{5, 7});
  CHECK(pcls[0].strong);
  CHECK_FALSE(pcls[1].strong);
  CHECK(strong_count_formula(2, 2) == 1);

  // <4,5,6|> has no effective generators.
  const Semigroup leaf = Semigroup::from_gaps({1, 2, 3, 7});
  CHECK(leaf.to_string() == "<4,5,6|>");
  CHECK(leaf.classify_effective().empty());
  CHECK(leaf.effective_count() == 0);
}

TEST_CASE("children") {
  const Semigroup s = Semigroup::from_gaps({1, 2, 4, 5});
  CHECK(s.to_string() == "<3|7,8>");
  const auto kids = s.children();
  REQUIRE(kids.size() == 2);
  // ascending removed-generator order: 7 first, then 8
  CHECK(kids[0].to_string() == "<3|8,10>");
  CHECK(kids[1].to_string() == "<3,7|11>");
  CHECK(kids[0].genus() == s.genus() + 1);
  CHECK(kids[0].frobenius() == 7);
  CHECK(kids[1].frobenius() == 8);

  const auto o2kids = Semigroup::ordinary(2).children();
  REQUIRE(o2kids.size() == 3);
  CHECK(o2kids[0].to_string() == "<|4,5,6,7>");
  CHECK(o2kids[1].to_string() == "<3|5,7>");
  CHECK(o2kids[2].to_string() == "<3,4|>");
  CHECK(o2kids[0].is_ordinary());

  CHECK(Semigroup::from_gaps({1, 2, 3, 7}).children().empty());

  CHECK_THROWS_AS(s.remove(6), std::invalid_argument);  // 6 = 3+3, not a minimal generator
  CHECK_THROWS_AS(s.remove(9), std::invalid_argument);  // 9 = 3+6, not a minimal generator
}

TEST_CASE("p_semigroup family") {
  CHECK(p_semigroup(1, 3).to_string() == "<2|5>");
  CHECK(p_semigroup(2, 3).to_string() == "<3|5,7>");

  for (int g = 1; g <= 6; ++g) {
    for (int i = 3; i <= 9; ++i) {
      const Semigroup p = p_semigroup(g, i);
      CHECK(p.genus() == g + i - 2);
      CHECK(p.multiplicity() == g + 1);
      CHECK(p.effective_count() == g);
      // removing the smallest effective generator yields the next family member
      const Semigroup next = p.remove(p.effective_generators().front());
      CHECK(next == p_semigroup(g, i + 1));
    }
    // P_{g,3} is the second child of the ordinary semigroup O_g
    const auto kids = Semigroup::ordinary(g).children();
    CHECK(p_semigroup(g, 3) == kids.at(1));
  }

  CHECK_THROWS_AS(p_semigroup(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_semigroup(1, 2), std::invalid_argument);
}

TEST_CASE("strong_count_formula") {
  CHECK(strong_count_formula(9, 4) == 4);   // k <= ceil(9/2) = 5
  CHECK(strong_count_formula(2, 2) == 1);   // middle case
  CHECK(strong_count_formula(1, 5) == 1);   // k > g
  CHECK(strong_count_formula(6, 3) == 3);
  CHECK(strong_count_formula(6, 4) == 3);
  CHECK(strong_count_formula(6, 9) == 6);
  CHECK_THROWS_AS(strong_count_formula(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(strong_count_formula(1, 1), std::invalid_argument);
}

TEST_CASE("walk properties to genus 8") {
  int nodes = 0;
  walk(Semigroup::ordinary(1), 8, [&](const Semigroup& s) {
    ++nodes;
    const auto cls = s.classify_effective();

    // effective => f < mu <= 2g+1; strong => healthy; m <= multiplicity
    for (const auto& info : cls) {
      CHECK(info.effective);
      CHECK(info.value > s.frobenius());
      CHECK(info.value <= 2 * s.genus() + 1);
      if (info.strong) CHECK_FALSE(info.very_weak);
    }
    CHECK(static_cast<int>(s.minimal_generators().size()) <= s.multiplicity());

    // parent recovery: dropping the child's Frobenius number restores s
    for (const Semigroup& child : s.children()) {
      std::vector<int> gaps = child.gaps();
      REQUIRE(gaps.back() == child.frobenius());
      gaps.pop_back();
      CHECK(Semigroup::from_gaps(gaps) == s);
    }
  });
  // 1+2+4+7+12+23+39+67 semigroups of genus 1..8
  CHECK(nodes == 155);
}

TEST_CASE("membership window") {
  const Semigroup s = Semigroup::from_gaps({1, 2, 4});  // {0,3,5,6,...}
  CHECK(s.contains(0));
  CHECK_FALSE(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  for (int x = 5; x <= 40; ++x) CHECK(s.contains(x));
}
