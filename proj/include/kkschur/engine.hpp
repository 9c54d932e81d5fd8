#pragma once

// The Pieri rule for K-k-Schur functions and the expansion of each basis
// element g_lambda as a polynomial in h_1..h_k.
//
//   h_r g_lambda = sum_{s=0}^{r} (-1)^{r-s}
//                  sum_{mu : core(mu)/core(lambda) weak s-strip}
//                  binom(r_{core(mu) core(lambda)}, r-s) g_mu
//
// g_lambda is recovered from h_r g_nu, nu = lambda minus its last part r:
// every other term of the product is either smaller or lexicographically
// larger of the same size, so expansions are built by size ascending and
// lexicographically descending within a size.

#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "kkschur/hring.hpp"
#include "kkschur/partition.hpp"

namespace kks {

KksVector pieri_product(const Partition& lambda, int r, const LevelContext& ctx);
/// The same right-hand side without the bound r <= k.  For r > k it is a
/// formal expression (h_r is not in the ring), used to test coefficient
/// formulas outside the range where the product is defined.
KksVector pieri_expansion(const Partition& lambda, int r, const LevelContext& ctx);
/// Linear extension of pieri_product to a vector.
KksVector pieri_product(const KksVector& v, int r, const LevelContext& ctx);

struct ExpansionOptions {
  /// Skip the triangular fast path and solve every size as a linear system.
  bool force_linear_solve = false;
};

/// Grow-only memo of g_lambda in the h-ring.  Lookups may run concurrently;
/// growth is serialized.
class ExpansionTable {
 public:
  explicit ExpansionTable(LevelContext ctx, ExpansionOptions options = {});
  ExpansionTable(const ExpansionTable&) = delete;
  ExpansionTable& operator=(const ExpansionTable&) = delete;

  const LevelContext& context() const { return ctx_; }

  /// g_lambda as an h-polynomial.  lambda must be k-bounded.
  const HPolynomial& kks_in_h(const Partition& lambda);
  /// Computes every k-bounded partition of size <= n.
  void ensure_size(int n);

  /// Seeds an entry (e.g. from a cache).  Rejects entries whose leading
  /// term is not h_lambda with coefficient 1.
  void insert_checked(const Partition& lambda, HPolynomial value);

  std::vector<std::pair<Partition, HPolynomial>> snapshot() const;
  std::size_t entry_count() const;
  /// Number of sizes that needed the linear-system route.
  int solved_sizes() const { return solved_sizes_.load(); }

 private:
  const HPolynomial* find(const Partition& lambda) const;
  void compute_size(int n);
  bool try_fast(const Partition& lambda, HPolynomial& out) const;
  void solve_size(int n);
  void store(const Partition& lambda, HPolynomial value);

  LevelContext ctx_;
  ExpansionOptions options_;
  mutable std::shared_mutex entries_mutex_;
  std::map<Partition, HPolynomial, SizeThenLexDescending> entries_;
  std::mutex grow_mutex_;
  std::atomic<int> complete_size_{-1};
  std::atomic<int> solved_sizes_{0};
};

/// Throws SolveFailure unless the leading term of value is h_lambda with
/// coefficient 1.
void check_unitriangular(const Partition& lambda, const HPolynomial& value);

HPolynomial kks_in_h(const Partition& lambda, ExpansionTable& table);
HPolynomial kks_vector_in_h(const KksVector& v, ExpansionTable& table);
/// The unique vector v with kks_vector_in_h(v) == f.
KksVector to_kks_basis(const HPolynomial& f, ExpansionTable& table);
KksVector kks_product(const KksVector& u, const KksVector& v, ExpansionTable& table);

}  // namespace kks
