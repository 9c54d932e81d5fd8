#include <doctest.h>

#include <algorithm>
#include <set>

#include "kkschur/error.hpp"
#include "kkschur/partition.hpp"

using namespace kks;

namespace {

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (Partition& p : partitions_of(m)) out.push_back(std::move(p));
  return out;
}

// Cell set of a diagram, for set-difference checks that do not go through
// the library's own difference().
std::set<Cell> cells(const Partition& p) {
  std::set<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p[i]; ++j) out.insert({i, j});
  return out;
}

}  // namespace

TEST_CASE("partition construction and text") {
  CHECK(parse_partition("3,3,1") == Partition{3, 3, 1});
  CHECK(parse_partition("-").empty());
  CHECK(to_string(Partition{}) == "-");
  CHECK(to_string(Partition{4, 2}) == "4,2");
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(parse_partition("3,,1"), InputError);
  CHECK_THROWS_AS(parse_partition("3,0"), InputError);
  CHECK_THROWS_AS(parse_partition(""), InputError);
  CHECK(Partition::normalized({1, 0, 3, 2}) == Partition{3, 2, 1});
  CHECK(Partition{3, 1}.size() == 4);
  CHECK(Partition{3, 1}[3] == 0);
}

TEST_CASE("cells, hooks and residues") {
  CHECK(contains(Partition{2, 1}, {1, 2}));
  CHECK_FALSE(contains(Partition{2, 1}, {2, 2}));
  CHECK_FALSE(contains(Partition{}, {1, 1}));

  CHECK(hook_length(Partition{1}, {1, 1}) == 1);
  CHECK(hook_length(Partition{2, 2}, {1, 1}) == 3);
  CHECK(hook_length(Partition{3, 1}, {1, 1}) == 4);
  CHECK_THROWS_AS(hook_length(Partition{2}, {2, 1}), InputError);

  CHECK(residue({1, 1}, LevelContext(4)) == 0);
  CHECK(residue({2, 1}, LevelContext(2)) == 2);
  CHECK(residue({1, 5}, LevelContext(3)) == 0);
}

TEST_CASE("conjugate and union") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate(Partition{}).empty());
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (int t = 1; t <= k; ++t)
      CHECK(conjugate(k_rectangle(t, ctx)) == Partition(std::vector<int>(static_cast<std::size_t>(t), k + 1 - t)));
  }
  CHECK(union_of(Partition{3, 3}, Partition{3, 3}) == Partition{3, 3, 3, 3});
  CHECK(union_of(Partition{3, 1}, Partition{2}) == Partition{3, 2, 1});
  CHECK(union_of(Partition{2, 1}, Partition{}) == Partition{2, 1});

  const auto shapes = all_up_to(8);
  for (const Partition& p : all_up_to(20)) {
    const Partition c = conjugate(p);
    REQUIRE(conjugate(c) == p);
    CHECK(c.size() == p.size());
  }
  for (const Partition& a : shapes)
    for (const Partition& b : shapes) {
      CHECK(union_of(a, b) == union_of(b, a));
      CHECK(union_of(a, b).size() == a.size() + b.size());
    }
  for (const Partition& a : all_up_to(5))
    for (const Partition& b : all_up_to(5))
      for (const Partition& c : all_up_to(4))
        CHECK(union_of(union_of(a, b), c) == union_of(a, union_of(b, c)));
}

TEST_CASE("corners") {
  using Cells = std::vector<Cell>;
  CHECK(removable_corners(Partition{2, 1}) == Cells{{1, 2}, {2, 1}});
  CHECK(removable_corners(Partition{2, 2}) == Cells{{2, 2}});
  CHECK(removable_corners(Partition{}).empty());
  CHECK(addable_corners(Partition{}) == Cells{{1, 1}});
  CHECK(addable_corners(Partition{2, 1}) == Cells{{1, 3}, {2, 2}, {3, 1}});
  CHECK(addable_corners(Partition{2, 2}) == Cells{{1, 3}, {3, 1}});

  for (const Partition& p : all_up_to(9)) {
    for (Cell c : addable_corners(p)) {
      const Partition q = add_cell(p, c);
      CHECK(q.size() == p.size() + 1);
      CHECK(contains(q, c));
    }
    for (Cell c : removable_corners(p)) {
      const Partition q = remove_cell(p, c);
      CHECK(q.size() + 1 == p.size());
      CHECK_FALSE(contains(q, c));
    }
    // Every cell outside p whose removal would leave a shape is a corner.
    CHECK(addable_corners(p).size() == removable_corners(p).size() + 1);
  }
}

TEST_CASE("blocked cells and corner residue count") {
  CHECK(is_blocked({1, 1}, Partition{2, 2}));
  CHECK_FALSE(is_blocked({2, 1}, Partition{2, 1}));
  CHECK_FALSE(is_blocked({1, 2}, Partition{3, 1}));

  const LevelContext k2(2);
  CHECK(corner_residue_count(Partition{1}, Partition{1}, k2) == 1);
  CHECK(corner_residue_count(Partition{2, 1}, Partition{2, 1}, k2) == 2);
  CHECK(corner_residue_count(Partition{2, 2}, Partition{2, 1}, k2) == 1);

  for (int k = 1; k <= 4; ++k) {
    const LevelContext ctx(k);
    const auto shapes = all_up_to(7);
    for (const Partition& lambda : shapes)
      for (const Partition& mu : shapes) {
        const int r = corner_residue_count(lambda, mu, ctx);
        CHECK(r <= static_cast<int>(removable_corners(mu).size()));
        CHECK(r <= k + 1);
      }
    // Inside a k-rectangle the removable corners have distinct residues.
    for (int t = 1; t <= k; ++t)
      for (const Partition& mu : subpartitions(k_rectangle(t, ctx))) {
        std::set<int> seen;
        for (Cell c : removable_corners(mu)) seen.insert(residue(c, ctx));
        CHECK(seen.size() == removable_corners(mu).size());
      }
  }
}

TEST_CASE("strips use set differences") {
  CHECK(is_horizontal_strip(Partition{4, 2}, Partition{3, 2}));
  CHECK(is_horizontal_strip(Partition{2, 2}, Partition{3}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2, 1}, Partition{2}));
  CHECK(is_vertical_strip(Partition{2, 1}, Partition{1, 1}));
  CHECK_FALSE(is_vertical_strip(Partition{3, 1}, Partition{1}));
  CHECK(is_vertical_strip(Partition{3, 1}, Partition{3, 1}));

  const auto shapes = all_up_to(7);
  for (const Partition& nu : shapes)
    for (const Partition& mu : shapes) {
      const auto a = cells(nu), b = cells(mu);
      std::vector<Cell> diff;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff));
      CHECK(difference(nu, mu) == diff);
      std::set<int> rows, cols;
      for (Cell c : diff) {
        rows.insert(c.row);
        cols.insert(c.col);
      }
      CHECK(is_horizontal_strip(nu, mu) == (cols.size() == diff.size()));
      CHECK(is_vertical_strip(nu, mu) == (rows.size() == diff.size()));
      if (is_subset(mu, nu))
        CHECK(is_horizontal_strip(nu, mu) == is_vertical_strip(conjugate(nu), conjugate(mu)));
    }
}

TEST_CASE("prefixes, slices and rectangles") {
  CHECK(prefix_above(Partition{5, 4, 2, 1}, 3) == Partition{5, 4});
  CHECK(prefix_above(Partition{3, 3}, 3).empty());
  CHECK(prefix_above(Partition{}, 1).empty());

  const Partition p{3, 2, 1};
  Slice s = slice(p, 1);
  CHECK(s.head == Partition{3});
  CHECK(s.tail == std::vector<Cell>{{2, 1}, {2, 2}, {3, 1}});
  s = slice(p, 0);
  CHECK(s.head.empty());
  CHECK(s.tail.size() == 6);
  s = slice(p, 5);
  CHECK(s.head == p);
  CHECK(s.tail.empty());

  const LevelContext k4(4);
  CHECK(k_rectangle(3, k4) == Partition{3, 3});
  CHECK(k_rectangle(4, k4) == Partition{4});
  CHECK(k_rectangle(5, k4).empty());
  CHECK(k_rectangle(0, k4).empty());
  CHECK(k_rectangle_power(3, 2, k4) == Partition{3, 3, 3, 3});
}

TEST_CASE("enumeration") {
  // Partition numbers p(0..10).
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == counts[n]);
  const auto four = partitions_of(4);
  CHECK(four.front() == Partition{4});
  CHECK(four.back() == Partition{1, 1, 1, 1});
  CHECK(std::is_sorted(four.begin(), four.end(), std::greater<>()));
  CHECK(partitions_of(5, 2).size() == 3);
  CHECK(partitions_of(5, -1, 2).size() == 3);
  // Subpartitions of an a x b box number binom(a+b, a).
  CHECK(subpartitions(Partition{3, 3}).size() == 10);
  CHECK(subpartitions(Partition{}).size() == 1);
  CHECK(remove_last_part(Partition{3, 2, 1}) == Partition{3, 2});
}
