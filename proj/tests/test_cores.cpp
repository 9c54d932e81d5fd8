#include <doctest.h>

#include <map>
#include <set>
#include <thread>

#include "kkschur/cores.hpp"
#include "kkschur/error.hpp"

using namespace kks;

namespace {

std::vector<Partition> all_up_to(int n, int max_part = -1) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (Partition& p : partitions_of(m, max_part)) out.push_back(std::move(p));
  return out;
}

// Hooks recomputed from the cell set, independent of hook_length().
bool oracle_is_core(const Partition& p, int k) {
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p[i]; ++j) {
      int leg = 0;
      while (p[i + leg + 1] >= j) ++leg;
      if (p[i] - j + leg + 1 == k + 1) return false;
    }
  return true;
}

// Search oracle: scan every partition up to max_size, keep the cores, and
// index them by their bounded image.
std::map<Partition, Partition> core_search(int k, int max_size) {
  std::map<Partition, Partition> out;
  const LevelContext ctx(k);
  for (const Partition& kappa : all_up_to(max_size)) {
    if (!oracle_is_core(kappa, k)) continue;
    const auto [it, inserted] = out.emplace(bdd(kappa, ctx), kappa);
    REQUIRE(inserted);
  }
  return out;
}

// Weak strips by residues: core(mu)/core(lambda) is a horizontal strip whose
// cells carry exactly |mu| - |lambda| distinct residues.
bool oracle_weak_strip(const Partition& mu, const Partition& lambda, const LevelContext& ctx) {
  const Partition& big = core_of(mu, ctx);
  const Partition& small = core_of(lambda, ctx);
  if (!is_subset(small, big) || !is_horizontal_strip(big, small)) return false;
  std::set<int> residues;
  for (Cell c : difference(big, small)) residues.insert(residue(c, ctx));
  return static_cast<int>(residues.size()) == mu.size() - lambda.size();
}

}  // namespace

TEST_CASE("core and bounded predicates") {
  const LevelContext k2(2);
  CHECK(is_core(Partition{2}, k2));
  CHECK_FALSE(is_core(Partition{2, 2, 2}, k2));
  CHECK_FALSE(is_core(Partition{3}, k2));
  CHECK(is_bounded(Partition{2, 1}, k2));
  CHECK_FALSE(is_bounded(Partition{3}, k2));
  CHECK_THROWS_AS(CorePartition(Partition{3}, k2), InputError);
  CHECK_THROWS_AS(BoundedPartition(Partition{3}, k2), InputError);
  CHECK_THROWS_AS(bdd(Partition{3}, k2), InputError);
  CHECK_THROWS_AS(core_of(Partition{3}, k2), InputError);
  CHECK_THROWS_AS(LevelContext(0), InputError);
}

TEST_CASE("core_of agrees with the search oracle") {
  for (int k = 1; k <= 4; ++k) {
    const LevelContext ctx(k);
    const auto table = core_search(k, 21);
    for (const Partition& lambda : all_up_to(6, k)) {
      const auto it = table.find(lambda);
      REQUIRE(it != table.end());
      CHECK(core_of(lambda, ctx) == it->second);
    }
  }
  // (2,2,2) is not itself a 3-core; the search finds (6,4,2).
  CHECK(core_of(Partition{2, 2, 2}, LevelContext(2)) == Partition{6, 4, 2});
}

TEST_CASE("bijection round trips") {
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (const Partition& lambda : all_up_to(10, k)) {
      const Partition& kappa = core_of(lambda, ctx);
      REQUIRE(is_core(kappa, ctx));
      CHECK(bdd(kappa, ctx) == lambda);
      CHECK(kappa.length() == lambda.length());
    }
    for (const Partition& kappa : all_up_to(14))
      if (is_core(kappa, ctx)) CHECK(core_of(bdd(kappa, ctx), ctx) == kappa);
  }
}

TEST_CASE("cores of sub-rectangles and of wide shapes") {
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (int t = 1; t <= k; ++t)
      for (const Partition& mu : subpartitions(k_rectangle(t, ctx))) {
        CHECK(core_of(mu, ctx) == mu);
        CHECK(bdd(mu, ctx) == mu);
        CHECK(k_conjugate(mu, ctx) == conjugate(mu));
      }
    // nu = (nu_1) ∪ mu with mu ⊆ R_{k+1-bl}: rows below the first keep
    // their length, and for nu_1 > k+1-bl the first row also absorbs
    // nu_{bl+1-u}, u = nu_1 - (k+1-bl).
    for (int bl = 1; bl <= k; ++bl) {
      const int width = k + 1 - bl;
      for (const Partition& mu : subpartitions(k_rectangle(width, ctx)))
        for (int first = std::max(1, mu.first()); first <= k; ++first) {
          std::vector<int> parts{first};
          parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
          const Partition nu(parts);
          const Partition& c = core_of(nu, ctx);
          for (int i = 2; i <= nu.length(); ++i) CHECK(c[i] == nu[i]);
          if (first > width) CHECK(c[1] == nu[1] + nu[bl + 1 - (first - width)]);
        }
    }
  }
}

TEST_CASE("k-conjugate") {
  const LevelContext k4(4);
  CHECK(k_conjugate(Partition{}, k4).empty());
  for (int r = 1; r <= 4; ++r)
    CHECK(k_conjugate(Partition{r}, k4) == Partition(std::vector<int>(static_cast<std::size_t>(r), 1)));
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (const Partition& lambda : all_up_to(10, k)) {
      const Partition& c = k_conjugate(lambda, ctx);
      CHECK(c.size() == lambda.size());
      CHECK(k_conjugate(c, ctx) == lambda);
    }
  }
}

TEST_CASE("strongly typed wrappers") {
  const LevelContext k3(3);
  const BoundedPartition lambda(Partition{3, 1}, k3);
  const CorePartition kappa = core_of(lambda);
  CHECK(kappa.shape() == core_of(Partition{3, 1}, k3));
  CHECK(bdd(kappa) == lambda);
  CHECK(k_conjugate(k_conjugate(lambda)) == lambda);
  CHECK(is_weak_strip(lambda, lambda));
  const auto strips = weak_strips_over(BoundedPartition(Partition{}, k3), 2);
  REQUIRE(strips.size() == 1);
  CHECK(strips[0].shape() == Partition{2});
  CHECK_THROWS_AS(is_weak_strip(lambda, BoundedPartition(Partition{1}, LevelContext(4))), InputError);
}

TEST_CASE("weak strips: examples") {
  const LevelContext k4(4);
  CHECK(is_weak_strip(Partition{3, 1}, Partition{3, 1}, k4));
  for (int s = 0; s <= 4; ++s) CHECK(is_weak_strip(s ? Partition{s} : Partition{}, Partition{}, k4));
  CHECK(weak_strips_over(Partition{3}, 2, k4) == std::vector<Partition>{{4, 1}, {3, 2}});
  CHECK(weak_strips_over(Partition{2, 1}, 0, k4) == std::vector<Partition>{{2, 1}});
  // (a) grown by b cells: the chain (a, b), (a+1, b-1), ... capped at k.
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (int a = 1; a <= k; ++a)
      for (int b = 0; b <= a; ++b) {
        std::vector<Partition> chain;
        for (int first = std::min(k, a + b); first >= a; --first)
          chain.push_back(Partition::normalized({first, a + b - first}));
        CHECK(weak_strips_over(Partition{a}, b, ctx) == chain);
      }
  }
  // Products feeding R_3 ∪ (3) at k = 4: (3,3) and (4,2) over (3) ... rows.
  CHECK(is_weak_strip(Partition{3, 3, 3, 3}, Partition{3, 3, 3}, k4));
  CHECK(is_weak_strip(Partition{4, 3, 3, 2}, Partition{3, 3, 3}, k4));
  // A horizontal strip whose k-conjugates are not nested is rejected.
  CHECK_FALSE(is_weak_strip(Partition{2, 1}, Partition{1, 1}, LevelContext(2)));
}

TEST_CASE("weak strips: residue oracle and brute force") {
  for (int k = 1; k <= 4; ++k) {
    const LevelContext ctx(k);
    const auto shapes = all_up_to(8, k);
    for (const Partition& lambda : shapes) {
      for (int s = 0; s <= k; ++s) {
        std::vector<Partition> brute;
        for (const Partition& mu : partitions_of(lambda.size() + s, k))
          if (is_subset(lambda, mu) && is_weak_strip(mu, lambda, ctx)) brute.push_back(mu);
        const auto listed = weak_strips_over(lambda, s, ctx);
        CHECK(listed == brute);
        for (const Partition& mu : partitions_of(lambda.size() + s, k))
          CHECK(is_weak_strip(mu, lambda, ctx) == oracle_weak_strip(mu, lambda, ctx));
      }
    }
  }
}

TEST_CASE("memo tables are safe under concurrent use") {
  const LevelContext ctx(5);
  const auto shapes = all_up_to(9, 5);
  std::vector<std::vector<Partition>> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < results.size(); ++w)
      pool.emplace_back([&, w] {
        for (const Partition& p : shapes) results[w].push_back(k_conjugate(p, ctx));
      });
  }
  for (const auto& r : results) CHECK(r == results.front());
}
