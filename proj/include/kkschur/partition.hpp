#pragma once

// Young diagrams in English notation: rows and columns are 1-based, row 1 on
// top.  Everything here is a pure function on immutable values.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kks {

/// Level of the whole computation.  All residues are taken mod k+1 and all
/// bounded partitions have parts at most k.
struct LevelContext {
  int k = 1;

  explicit LevelContext(int level);
  int modulus() const { return k + 1; }
};

struct Cell {
  int row = 1;
  int col = 1;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive integers, stored without trailing
/// zeros.  Construction from an unsorted or zero-padded sequence throws.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// Drops trailing zeros and sorts descending; negative entries throw.
  static Partition normalized(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  /// 1-based row length, 0 past the end.
  int operator[](int row) const {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }
  int first() const { return empty() ? 0 : parts_.front(); }
  int last() const { return empty() ? 0 : parts_.back(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Size ascending, then lexicographically descending.  Used wherever a
/// deterministic ordering of basis elements is needed.
struct SizeThenLexDescending {
  bool operator()(const Partition& a, const Partition& b) const;
};

// Text syntax: "3,3,1"; the empty partition is "-".
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& p);

bool contains(const Partition& lambda, Cell c);
/// Diagram containment mu ⊆ lambda.
bool is_subset(const Partition& mu, const Partition& lambda);
Partition conjugate(const Partition& lambda);
Partition union_of(const Partition& mu, const Partition& nu);
Partition intersection_of(const Partition& mu, const Partition& nu);

int hook_length(const Partition& lambda, Cell c);
int residue(Cell c, const LevelContext& ctx);

std::vector<Cell> removable_corners(const Partition& lambda);
std::vector<Cell> addable_corners(const Partition& lambda);
Partition add_cell(const Partition& lambda, Cell c);
Partition remove_cell(const Partition& lambda, Cell c);

/// The cell directly below c lies in lambda.
bool is_blocked(Cell c, const Partition& lambda);

/// Number of distinct residues among the removable corners of mu that are
/// not blocked by lambda (the statistic r_{lambda mu}).
int corner_residue_count(const Partition& lambda, const Partition& mu,
                         const LevelContext& ctx);

/// Cells of nu not in mu, row-major.  No containment is assumed.
std::vector<Cell> difference(const Partition& nu, const Partition& mu);
int difference_size(const Partition& nu, const Partition& mu);

// Strip tests act on the set difference nu \ mu; containment is not required.
bool is_horizontal_strip(const Partition& nu, const Partition& mu);
bool is_vertical_strip(const Partition& nu, const Partition& mu);

/// Longest prefix of lambda whose parts all exceed t.
Partition prefix_above(const Partition& lambda, int t);

struct Slice {
  Partition head;               // rows 1..u
  std::vector<Cell> tail;       // cells strictly below row u
};
Slice slice(const Partition& lambda, int u);
/// Rows 1..u as a partition.
Partition leading_rows(const Partition& lambda, int u);

/// R_t = (t^{k+1-t}); empty unless 1 <= t <= k.
Partition k_rectangle(int t, const LevelContext& ctx);
/// a-fold union of R_t.
Partition k_rectangle_power(int t, int a, const LevelContext& ctx);

Partition remove_last_part(const Partition& lambda);

/// All partitions of n with parts <= max_part and at most max_length parts,
/// lexicographically descending.  Negative bounds mean unbounded.
std::vector<Partition> partitions_of(int n, int max_part = -1,
                                     int max_length = -1);
/// All partitions mu ⊆ box.
std::vector<Partition> subpartitions(const Partition& box);

}  // namespace kks
