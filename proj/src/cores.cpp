#include "kkschur/cores.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "kkschur/error.hpp"

namespace kks {

namespace {

// Grow-only memo.  Node-based storage keeps returned references valid while
// other threads insert.
class PartitionMemo {
 public:
  template <class Compute>
  const Partition& get(const Partition& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Partition value = compute(key);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Partition, Partition, PartitionHash> table_;
};

struct LevelMemo {
  PartitionMemo core;
  PartitionMemo kconj;
};

LevelMemo& memo_for(int k) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<LevelMemo>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[k];
  if (!slot) slot = std::make_unique<LevelMemo>();
  return *slot;
}

void require_bounded(const Partition& lambda, const LevelContext& ctx) {
  if (!is_bounded(lambda, ctx))
    throw InputError(to_string(lambda) + " is not " + std::to_string(ctx.k) + "-bounded");
}

Partition compute_core(const Partition& lambda, int k) {
  const int l = lambda.length();
  std::vector<int> rows(static_cast<std::size_t>(l), 0);
  // Each row is pushed right just far enough that its lambda_i rightmost
  // cells have hook <= k given the rows already placed below it.
  for (int i = l; i >= 1; --i) {
    const int part = lambda[i];
    int shift = 0;
    while (true) {
      int leg = 0;
      for (int below = i + 1; below <= l; ++below)
        if (rows[static_cast<std::size_t>(below - 1)] >= shift + 1) ++leg;
      if (part + leg <= k) break;
      ++shift;
    }
    rows[static_cast<std::size_t>(i - 1)] = part + shift;
  }
  return Partition(std::move(rows));
}

}  // namespace

bool is_bounded(const Partition& lambda, const LevelContext& ctx) {
  return lambda.first() <= ctx.k;
}

bool is_core(const Partition& kappa, const LevelContext& ctx) {
  const Partition conj = conjugate(kappa);
  for (int i = 1; i <= kappa.length(); ++i)
    for (int j = 1; j <= kappa[i]; ++j)
      if ((kappa[i] - j) + (conj[j] - i) + 1 == ctx.k + 1) return false;
  return true;
}

BoundedPartition::BoundedPartition(Partition shape, LevelContext ctx)
    : shape_(std::move(shape)), ctx_(ctx) {
  require_bounded(shape_, ctx_);
}

CorePartition::CorePartition(Partition shape, LevelContext ctx)
    : shape_(std::move(shape)), ctx_(ctx) {
  if (!is_core(shape_, ctx_))
    throw InputError(to_string(shape_) + " is not a " + std::to_string(ctx_.k + 1) + "-core");
}

Partition bdd(const Partition& kappa, const LevelContext& ctx) {
  if (!is_core(kappa, ctx))
    throw InputError(to_string(kappa) + " is not a " + std::to_string(ctx.k + 1) + "-core");
  const Partition conj = conjugate(kappa);
  std::vector<int> rows;
  for (int i = 1; i <= kappa.length(); ++i) {
    int count = 0;
    for (int j = 1; j <= kappa[i]; ++j)
      if ((kappa[i] - j) + (conj[j] - i) + 1 <= ctx.k) ++count;
    rows.push_back(count);
  }
  return Partition(std::move(rows));
}

const Partition& core_of(const Partition& lambda, const LevelContext& ctx) {
  require_bounded(lambda, ctx);
  return memo_for(ctx.k).core.get(lambda, [&](const Partition& p) { return compute_core(p, ctx.k); });
}

const Partition& k_conjugate(const Partition& lambda, const LevelContext& ctx) {
  require_bounded(lambda, ctx);
  return memo_for(ctx.k).kconj.get(lambda, [&](const Partition& p) {
    return bdd(conjugate(core_of(p, ctx)), ctx);
  });
}

bool is_weak_strip(const Partition& nu, const Partition& eta, const LevelContext& ctx) {
  if (!is_subset(eta, nu) || !is_horizontal_strip(nu, eta)) return false;
  const Partition& nu_conj = k_conjugate(nu, ctx);
  const Partition& eta_conj = k_conjugate(eta, ctx);
  return is_subset(eta_conj, nu_conj) && is_vertical_strip(nu_conj, eta_conj);
}

std::vector<Partition> horizontal_strip_extensions(const Partition& lambda, int s, int max_part) {
  std::vector<Partition> out;
  if (s < 0) return out;
  const int rows = lambda.length() + 1;
  std::vector<int> cur(static_cast<std::size_t>(rows), 0);
  // Row i may grow up to lambda_{i-1} (row 1 up to max_part).
  auto rec = [&](auto&& self, int row, int left) -> void {
    if (row > rows) {
      if (left == 0) out.push_back(Partition::normalized(cur));
      return;
    }
    const int cap = row == 1 ? max_part : lambda[row - 1];
    const int hi = std::min(cap, lambda[row] + left);
    for (int v = hi; v >= lambda[row]; --v) {
      cur[static_cast<std::size_t>(row - 1)] = v;
      self(self, row + 1, left - (v - lambda[row]));
    }
  };
  if (lambda.first() <= max_part) rec(rec, 1, s);
  return out;
}

std::vector<Partition> weak_strips_over(const Partition& lambda, int s,
                                        const LevelContext& ctx) {
  require_bounded(lambda, ctx);
  std::vector<Partition> out;
  const Partition& base_conj = k_conjugate(lambda, ctx);
  for (Partition& mu : horizontal_strip_extensions(lambda, s, ctx.k)) {
    const Partition& mu_conj = k_conjugate(mu, ctx);
    if (is_subset(base_conj, mu_conj) && is_vertical_strip(mu_conj, base_conj))
      out.push_back(std::move(mu));
  }
  return out;
}

BoundedPartition bdd(const CorePartition& kappa) {
  return BoundedPartition(bdd(kappa.shape(), kappa.context()), kappa.context());
}

CorePartition core_of(const BoundedPartition& lambda) {
  return CorePartition(core_of(lambda.shape(), lambda.context()), lambda.context());
}

BoundedPartition k_conjugate(const BoundedPartition& lambda) {
  return BoundedPartition(k_conjugate(lambda.shape(), lambda.context()), lambda.context());
}

bool is_weak_strip(const BoundedPartition& nu, const BoundedPartition& eta) {
  if (nu.context().k != eta.context().k) throw InputError("is_weak_strip: mismatched levels");
  return is_weak_strip(nu.shape(), eta.shape(), nu.context());
}

std::vector<BoundedPartition> weak_strips_over(const BoundedPartition& lambda, int s) {
  std::vector<BoundedPartition> out;
  for (Partition& mu : weak_strips_over(lambda.shape(), s, lambda.context()))
    out.emplace_back(std::move(mu), lambda.context());
  return out;
}

}  // namespace kks
