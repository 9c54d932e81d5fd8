#include "kkschur/engine.hpp"

#include "kkschur/binomial.hpp"
#include "kkschur/cores.hpp"
#include "kkschur/error.hpp"

namespace kks {

KksVector pieri_product(const Partition& lambda, int r, const LevelContext& ctx) {
  if (r > ctx.k)
    throw InputError("pieri_product: r = " + std::to_string(r) + " outside [0, k]");
  return pieri_expansion(lambda, r, ctx);
}

KksVector pieri_expansion(const Partition& lambda, int r, const LevelContext& ctx) {
  if (r < 0) throw InputError("pieri_expansion: negative r = " + std::to_string(r));
  if (!is_bounded(lambda, ctx)) throw InputError(to_string(lambda) + " is not k-bounded");
  KksVector out;
  const Partition& base_core = core_of(lambda, ctx);
  for (int s = 0; s <= r; ++s) {
    for (const Partition& mu : weak_strips_over(lambda, s, ctx)) {
      const int distinct = corner_residue_count(core_of(mu, ctx), base_core, ctx);
      BigInt c = binom(distinct, r - s);
      if (c == 0) continue;
      if ((r - s) % 2 != 0) c = -c;
      out.add_term(mu, c);
    }
  }
  return out;
}

KksVector pieri_product(const KksVector& v, int r, const LevelContext& ctx) {
  KksVector out;
  for (const auto& [lambda, c] : v.terms()) {
    KksVector term = pieri_product(lambda, r, ctx);
    term *= c;
    out += term;
  }
  return out;
}

void check_unitriangular(const Partition& lambda, const HPolynomial& value) {
  if (value.is_zero()) throw SolveFailure("expansion of " + to_string(lambda) + " vanished");
  const auto& [m, c] = value.leading();
  if (!(m == HMonomial::from_partition(lambda)) || c != 1)
    throw SolveFailure("expansion of " + to_string(lambda) + " has leading term " + c.get_str() +
                       " * " + to_text(m));
}

ExpansionTable::ExpansionTable(LevelContext ctx, ExpansionOptions options)
    : ctx_(ctx), options_(options) {}

const HPolynomial* ExpansionTable::find(const Partition& lambda) const {
  std::shared_lock lock(entries_mutex_);
  const auto it = entries_.find(lambda);
  return it == entries_.end() ? nullptr : &it->second;
}

void ExpansionTable::store(const Partition& lambda, HPolynomial value) {
  std::unique_lock lock(entries_mutex_);
  entries_.try_emplace(lambda, std::move(value));
}

const HPolynomial& ExpansionTable::kks_in_h(const Partition& lambda) {
  if (!is_bounded(lambda, ctx_))
    throw InputError(to_string(lambda) + " is not " + std::to_string(ctx_.k) + "-bounded");
  if (const HPolynomial* hit = find(lambda)) return *hit;
  ensure_size(lambda.size());
  if (const HPolynomial* hit = find(lambda)) return *hit;
  throw SolveFailure("no expansion recorded for " + to_string(lambda));
}

void ExpansionTable::ensure_size(int n) {
  if (complete_size_.load() >= n) return;
  std::lock_guard lock(grow_mutex_);
  for (int size = complete_size_.load() + 1; size <= n; ++size) {
    compute_size(size);
    complete_size_.store(size);
  }
}

void ExpansionTable::insert_checked(const Partition& lambda, HPolynomial value) {
  if (!is_bounded(lambda, ctx_))
    throw InputError(to_string(lambda) + " is not " + std::to_string(ctx_.k) + "-bounded");
  if (value.max_index() > ctx_.k) throw InputError("entry uses generators beyond h_k");
  check_unitriangular(lambda, value);
  store(lambda, std::move(value));
}

std::vector<std::pair<Partition, HPolynomial>> ExpansionTable::snapshot() const {
  std::shared_lock lock(entries_mutex_);
  return {entries_.begin(), entries_.end()};
}

std::size_t ExpansionTable::entry_count() const {
  std::shared_lock lock(entries_mutex_);
  return entries_.size();
}

void ExpansionTable::compute_size(int n) {
  if (n == 0) {
    if (!find(Partition{})) store(Partition{}, HPolynomial(1));
    return;
  }
  if (options_.force_linear_solve) {
    solve_size(n);
    return;
  }
  for (const Partition& lambda : partitions_of(n, ctx_.k)) {
    if (find(lambda)) continue;
    HPolynomial value;
    if (!try_fast(lambda, value)) {
      solve_size(n);
      return;
    }
    check_unitriangular(lambda, value);
    store(lambda, std::move(value));
  }
}

bool ExpansionTable::try_fast(const Partition& lambda, HPolynomial& out) const {
  const int r = lambda.last();
  const Partition rest = remove_last_part(lambda);
  const KksVector product = pieri_product(rest, r, ctx_);
  if (product.coefficient(lambda) != 1) return false;
  const HPolynomial* base = find(rest);
  if (!base) return false;
  out = HPolynomial();
  out.add_scaled(*base, BigInt(1), HMonomial::generator(r));
  for (const auto& [mu, c] : product.terms()) {
    if (mu == lambda) continue;
    const HPolynomial* known = find(mu);
    if (!known) return false;
    out.add_scaled(*known, -c);
  }
  return true;
}

void ExpansionTable::solve_size(int n) {
  const std::vector<Partition> unknowns = partitions_of(n, ctx_.k);
  const std::size_t count = unknowns.size();
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(unknowns[i], i);

  // Row i: h_r g_nu for lambda_i = nu + (r), with lower sizes moved right.
  std::vector<std::vector<mpq_class>> matrix(count, std::vector<mpq_class>(count, 0));
  std::vector<HPolynomial> rhs(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Partition& lambda = unknowns[i];
    const int r = lambda.last();
    const Partition rest = remove_last_part(lambda);
    const HPolynomial* base = find(rest);
    if (!base) throw SolveFailure("missing lower expansion " + to_string(rest));
    rhs[i].add_scaled(*base, BigInt(1), HMonomial::generator(r));
    const KksVector product = pieri_product(rest, r, ctx_);
    for (const auto& [mu, c] : product.terms()) {
      if (mu.size() == n) {
        matrix[i][index.at(mu)] += mpq_class(c);
      } else {
        const HPolynomial* known = find(mu);
        if (!known) throw SolveFailure("missing lower expansion " + to_string(mu));
        rhs[i].add_scaled(*known, -c);
      }
    }
  }

  // Gauss-Jordan inverse over the rationals.
  std::vector<std::vector<mpq_class>> inverse(count, std::vector<mpq_class>(count, 0));
  for (std::size_t i = 0; i < count; ++i) inverse[i][i] = 1;
  for (std::size_t col = 0; col < count; ++col) {
    std::size_t pivot = col;
    while (pivot < count && matrix[pivot][col] == 0) ++pivot;
    if (pivot == count) throw SolveFailure("singular Pieri system at size " + std::to_string(n));
    std::swap(matrix[pivot], matrix[col]);
    std::swap(inverse[pivot], inverse[col]);
    const mpq_class scale = 1 / matrix[col][col];
    for (std::size_t j = 0; j < count; ++j) {
      matrix[col][j] *= scale;
      inverse[col][j] *= scale;
    }
    for (std::size_t row = 0; row < count; ++row) {
      if (row == col || matrix[row][col] == 0) continue;
      const mpq_class factor = matrix[row][col];
      for (std::size_t j = 0; j < count; ++j) {
        matrix[row][j] -= factor * matrix[col][j];
        inverse[row][j] -= factor * inverse[col][j];
      }
    }
  }

  for (std::size_t u = 0; u < count; ++u) {
    std::map<HMonomial, mpq_class, LeadingFirst> acc;
    for (std::size_t i = 0; i < count; ++i) {
      if (inverse[u][i] == 0) continue;
      for (const auto& [m, c] : rhs[i].terms()) acc[m] += inverse[u][i] * mpq_class(c);
    }
    HPolynomial value;
    for (auto& [m, q] : acc) {
      q.canonicalize();
      if (q.get_den() != 1)
        throw SolveFailure("non-integral coefficient " + q.get_str() + " in expansion of " +
                           to_string(unknowns[u]));
      value.add_term(m, q.get_num());
    }
    check_unitriangular(unknowns[u], value);
    if (const HPolynomial* existing = find(unknowns[u])) {
      if (!(*existing == value))
        throw SolveFailure("linear solve disagrees with recorded expansion of " + to_string(unknowns[u]));
      continue;
    }
    store(unknowns[u], std::move(value));
  }
  solved_sizes_.fetch_add(1);
}

HPolynomial kks_in_h(const Partition& lambda, ExpansionTable& table) {
  return table.kks_in_h(lambda);
}

HPolynomial kks_vector_in_h(const KksVector& v, ExpansionTable& table) {
  HPolynomial out;
  for (const auto& [lambda, c] : v.terms()) out.add_scaled(table.kks_in_h(lambda), c);
  return out;
}

KksVector to_kks_basis(const HPolynomial& f, ExpansionTable& table) {
  const int k = table.context().k;
  if (f.max_index() > k) throw InputError("polynomial uses generators beyond h_" + std::to_string(k));
  KksVector out;
  HPolynomial rest = f;
  while (!rest.is_zero()) {
    const auto [m, c] = rest.leading();
    const Partition mu = m.to_partition();
    out.add_term(mu, c);
    rest.add_scaled(table.kks_in_h(mu), -c);
  }
  return out;
}

KksVector kks_product(const KksVector& u, const KksVector& v, ExpansionTable& table) {
  return to_kks_basis(kks_vector_in_h(u, table) * kks_vector_in_h(v, table), table);
}

}  // namespace kks
