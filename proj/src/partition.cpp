#include "kkschur/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "kkschur/error.hpp"

namespace kks {

LevelContext::LevelContext(int level) : k(level) {
  if (level < 1) throw InputError("level k must be positive, got " + std::to_string(level));
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("partition parts must be weakly decreasing");
  }
}

Partition Partition::normalized(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw InputError("partition parts must be nonnegative");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
  return h;
}

bool SizeThenLexDescending::operator()(const Partition& a, const Partition& b) const {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return b < a;
}

Partition parse_partition(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "-") return {};
  if (text.empty()) throw InputError("empty partition text (use \"-\" for the empty partition)");
  std::vector<int> parts;
  while (true) {
    const auto comma = text.find(',');
    const auto field = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw InputError("cannot parse partition part '" + std::string(field) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int x : p.parts()) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

bool contains(const Partition& lambda, Cell c) {
  return c.row >= 1 && c.col >= 1 && c.col <= lambda[c.row];
}

bool is_subset(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu[i] > lambda[i]) return false;
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition union_of(const Partition& mu, const Partition& nu) {
  std::vector<int> parts = mu.parts();
  parts.insert(parts.end(), nu.parts().begin(), nu.parts().end());
  return Partition::normalized(std::move(parts));
}

Partition intersection_of(const Partition& mu, const Partition& nu) {
  std::vector<int> parts;
  for (int i = 1; i <= std::min(mu.length(), nu.length()); ++i)
    parts.push_back(std::min(mu[i], nu[i]));
  return Partition(std::move(parts));
}

int hook_length(const Partition& lambda, Cell c) {
  if (!contains(lambda, c))
    throw InputError("hook_length: cell (" + std::to_string(c.row) + "," +
                     std::to_string(c.col) + ") outside " + to_string(lambda));
  int leg = 0;
  for (int i = c.row + 1; i <= lambda.length() && lambda[i] >= c.col; ++i) ++leg;
  return (lambda[c.row] - c.col) + leg + 1;
}

int residue(Cell c, const LevelContext& ctx) {
  const int m = ctx.modulus();
  return (((c.col - c.row) % m) + m) % m;
}

std::vector<Cell> removable_corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda[i] > lambda[i + 1]) out.push_back({i, lambda[i]});
  return out;
}

std::vector<Cell> addable_corners(const Partition& lambda) {
  std::vector<Cell> out;
  for (int i = 1; i <= lambda.length() + 1; ++i)
    if (i == 1 || lambda[i - 1] > lambda[i]) out.push_back({i, lambda[i] + 1});
  return out;
}

Partition add_cell(const Partition& lambda, Cell c) {
  std::vector<int> parts = lambda.parts();
  if (c.row == lambda.length() + 1) parts.push_back(0);
  if (c.row < 1 || c.row > static_cast<int>(parts.size()) || parts[c.row - 1] + 1 != c.col)
    throw InputError("add_cell: not an addable corner");
  ++parts[c.row - 1];
  return Partition(std::move(parts));
}

Partition remove_cell(const Partition& lambda, Cell c) {
  if (!contains(lambda, c) || lambda[c.row] != c.col || lambda[c.row + 1] == c.col)
    throw InputError("remove_cell: not a removable corner");
  std::vector<int> parts = lambda.parts();
  --parts[c.row - 1];
  return Partition::normalized(std::move(parts));
}

bool is_blocked(Cell c, const Partition& lambda) {
  return contains(lambda, {c.row + 1, c.col});
}

int corner_residue_count(const Partition& lambda, const Partition& mu,
                         const LevelContext& ctx) {
  std::set<int> residues;
  for (const Cell& c : removable_corners(mu))
    if (!is_blocked(c, lambda)) residues.insert(residue(c, ctx));
  return static_cast<int>(residues.size());
}

std::vector<Cell> difference(const Partition& nu, const Partition& mu) {
  std::vector<Cell> out;
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = mu[i] + 1; j <= nu[i]; ++j) out.push_back({i, j});
  return out;
}

int difference_size(const Partition& nu, const Partition& mu) {
  int n = 0;
  for (int i = 1; i <= nu.length(); ++i) n += std::max(0, nu[i] - mu[i]);
  return n;
}

bool is_horizontal_strip(const Partition& nu, const Partition& mu) {
  std::set<int> cols;
  for (const Cell& c : difference(nu, mu))
    if (!cols.insert(c.col).second) return false;
  return true;
}

bool is_vertical_strip(const Partition& nu, const Partition& mu) {
  for (int i = 1; i <= nu.length(); ++i)
    if (nu[i] - mu[i] > 1) return false;
  return true;
}

Partition prefix_above(const Partition& lambda, int t) {
  std::vector<int> parts;
  for (int p : lambda.parts()) {
    if (p <= t) break;
    parts.push_back(p);
  }
  return Partition(std::move(parts));
}

Partition leading_rows(const Partition& lambda, int u) {
  const int n = std::clamp(u, 0, lambda.length());
  return Partition(std::vector<int>(lambda.parts().begin(), lambda.parts().begin() + n));
}

Slice slice(const Partition& lambda, int u) {
  Slice s{leading_rows(lambda, u), {}};
  for (int i = std::max(u, 0) + 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) s.tail.push_back({i, j});
  return s;
}

Partition k_rectangle(int t, const LevelContext& ctx) {
  if (t < 1 || t > ctx.k) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(ctx.k + 1 - t), t));
}

Partition k_rectangle_power(int t, int a, const LevelContext& ctx) {
  Partition out;
  const Partition r = k_rectangle(t, ctx);
  for (int i = 0; i < a; ++i) out = union_of(out, r);
  return out;
}

Partition remove_last_part(const Partition& lambda) {
  if (lambda.empty()) return {};
  return leading_rows(lambda, lambda.length() - 1);
}

namespace {

void partitions_rec(int remaining, int max_part, int rows_left, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, rows_left - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, max_part < 0 ? n : max_part, max_length < 0 ? n : max_length, prefix, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& box) {
  std::vector<Partition> out;
  std::vector<int> cur(static_cast<std::size_t>(box.length()), 0);
  // Row i ranges over [0, min(box_i, row i-1)].
  auto rec = [&](auto&& self, int row) -> void {
    if (row > box.length()) {
      out.push_back(Partition::normalized(cur));
      return;
    }
    const int cap = row == 1 ? box[1] : std::min(box[row], cur[row - 2]);
    for (int v = cap; v >= 0; --v) {
      cur[row - 1] = v;
      self(self, row + 1);
    }
    cur[row - 1] = 0;
  };
  rec(rec, 1);
  return out;
}

}  // namespace kks
