#pragma once

// (k+1)-cores, k-bounded partitions and the bijection between them.
//
// bdd(kappa)_i counts the cells of row i of kappa whose hook is at most k;
// core_of is its inverse, built row by row from the bottom.  Weak strips are
// tested on the bounded side: nu/eta is a weak strip iff it is a horizontal
// strip and the k-conjugates differ by a vertical strip.

#include <vector>

#include "kkschur/partition.hpp"

namespace kks {

bool is_core(const Partition& kappa, const LevelContext& ctx);
bool is_bounded(const Partition& lambda, const LevelContext& ctx);

/// A k-bounded partition.  Construction validates the bound.
class BoundedPartition {
 public:
  BoundedPartition(Partition shape, LevelContext ctx);
  const Partition& shape() const { return shape_; }
  const LevelContext& context() const { return ctx_; }
  friend bool operator==(const BoundedPartition& a, const BoundedPartition& b) {
    return a.ctx_.k == b.ctx_.k && a.shape_ == b.shape_;
  }

 private:
  Partition shape_;
  LevelContext ctx_;
};

/// A (k+1)-core.  Construction validates that no hook equals k+1.
class CorePartition {
 public:
  CorePartition(Partition shape, LevelContext ctx);
  const Partition& shape() const { return shape_; }
  const LevelContext& context() const { return ctx_; }
  friend bool operator==(const CorePartition& a, const CorePartition& b) {
    return a.ctx_.k == b.ctx_.k && a.shape_ == b.shape_;
  }

 private:
  Partition shape_;
  LevelContext ctx_;
};

BoundedPartition bdd(const CorePartition& kappa);
CorePartition core_of(const BoundedPartition& lambda);
BoundedPartition k_conjugate(const BoundedPartition& lambda);
bool is_weak_strip(const BoundedPartition& nu, const BoundedPartition& eta);
/// Bounded mu ⊇ lambda with |mu| = |lambda| + s forming a weak strip over
/// lambda, lexicographically descending.
std::vector<BoundedPartition> weak_strips_over(const BoundedPartition& lambda, int s);

// Unwrapped forms used by the engine.  Inputs are validated; the memoized
// ones share a process-wide table per level that is safe for concurrent use.
Partition bdd(const Partition& kappa, const LevelContext& ctx);
const Partition& core_of(const Partition& lambda, const LevelContext& ctx);
const Partition& k_conjugate(const Partition& lambda, const LevelContext& ctx);
bool is_weak_strip(const Partition& nu, const Partition& eta, const LevelContext& ctx);
std::vector<Partition> weak_strips_over(const Partition& lambda, int s,
                                        const LevelContext& ctx);

/// Horizontal-strip extensions of lambda by s cells with first part <= k
/// (the candidate set filtered by weak_strips_over).
std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int s, int max_part);

}  // namespace kks
