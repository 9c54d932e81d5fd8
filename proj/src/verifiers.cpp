#include "kkschur/verifiers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <thread>

#include "kkschur/binomial.hpp"
#include "kkschur/cores.hpp"
#include "kkschur/error.hpp"

namespace kks {

namespace {

using nlohmann::json;

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

constexpr int kEvaluationRounds = 3;
constexpr std::size_t kWitnessLimit = 20;

void require_budget(int size, const VerifyOptions& options, const std::string& what) {
  if (size > options.max_size)
    throw BudgetExceeded(what + " needs size " + std::to_string(size) + " > budget " +
                         std::to_string(options.max_size));
}

std::vector<std::vector<BigInt>> random_points(const VerifyOptions& options, int k) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<std::vector<BigInt>> points(kEvaluationRounds);
  for (auto& point : points)
    for (int i = 0; i < k; ++i) point.emplace_back(dist(rng));
  return points;
}

// Evaluates lhs and each factor list at the same points; the first mismatch
// is returned as a witness.
json evaluation_mismatch(const HPolynomial& lhs, const std::vector<std::vector<const HPolynomial*>>& sides,
                         const VerifyOptions& options, int k) {
  for (const auto& point : random_points(options, k)) {
    const BigInt left = random_evaluate(lhs, point);
    for (const auto& factors : sides) {
      BigInt right = 1;
      for (const HPolynomial* f : factors) right *= random_evaluate(*f, point);
      if (left != right) {
        json p = json::array();
        for (const BigInt& x : point) p.push_back(x.get_str());
        return {{"point", p}, {"lhs", left.get_str()}, {"rhs", right.get_str()}};
      }
    }
  }
  return nullptr;
}

json vector_json(const KksVector& v) {
  json out = json::object();
  for (const auto& [p, c] : v.terms()) out[to_string(p)] = c.get_str();
  return out;
}

json rects_json(const std::vector<RectSpec>& rects) {
  json out = json::array();
  for (const RectSpec& r : rects) out.push_back({r.t, r.a});
  return out;
}

HPolynomial sum_in_h(const std::vector<Partition>& shapes, ExpansionTable& table) {
  HPolynomial out;
  for (const Partition& p : shapes) out += table.kks_in_h(p);
  return out;
}

void require_level_index(int t, const LevelContext& ctx) {
  if (t < 1 || t > ctx.k)
    throw InputError("t = " + std::to_string(t) + " outside [1, " + std::to_string(ctx.k) + "]");
}

// mu_j = nu_{j+1} for bl+1-u <= j <= l(mu°).
bool row_condition(const StepAInstance& inst, const Partition& mu_c, const Partition& nu, int u) {
  const int bl = inst.mu.length();
  for (int j = bl + 1 - u; j <= mu_c.length(); ++j)
    if (inst.mu[j] != nu[j + 1]) return false;
  return true;
}

struct StepATerms {
  bool indicator = false;
  StepABranch branch = StepABranch::narrow;
  long base = 0;  // |nu \ mu| in the narrow case, A in the wide case
  int r = 0;
};

StepATerms step_a_terms(const StepAInstance& inst, const Partition& nu, const LevelContext& ctx) {
  StepATerms out;
  const int bl = inst.mu.length();
  const int width = ctx.k + 1 - bl;
  const Partition mu_c = prefix_above(inst.mu, inst.t);
  out.r = corner_residue_count(nu, mu_c, ctx);
  if (nu.first() <= width) {
    out.branch = StepABranch::narrow;
    out.base = difference_size(nu, inst.mu);
  } else {
    const int u = nu.first() - width;
    out.branch = mu_c.length() >= bl + 1 - u ? StepABranch::wide_bound : StepABranch::wide_free;
    if (out.branch == StepABranch::wide_bound && !row_condition(inst, mu_c, nu, u)) return out;
    out.base = nu[bl - u + 1] + difference_size(leading_rows(nu, bl - u), inst.mu);
  }
  out.indicator = is_subset(mu_c, nu) && is_horizontal_strip(nu, inst.mu);
  return out;
}

void validate(const StepAInstance& inst, const LevelContext& ctx) {
  const int bl = inst.mu.length();
  if (!is_bounded(inst.mu, ctx)) throw InputError(to_string(inst.mu) + " is not k-bounded");
  if (bl > 0 && (bl > ctx.k || !is_subset(inst.mu, k_rectangle(ctx.k + 1 - bl, ctx))))
    throw InputError(to_string(inst.mu) + " does not fit in R_{k+1-l(mu)}");
  if (inst.e < 0 || inst.a < 0) throw InputError("step-a needs e >= 0 and a >= 0");
  if (inst.t < 0) throw InputError("step-a needs t >= 0");
}

struct SamekOutcome {
  bool equal = false;
  bool quotient_ok = false;
  json witness;
};

SamekOutcome samek_compare(const NlaInstance& inst, ExpansionTable& table, const VerifyOptions& options) {
  const LevelContext& ctx = table.context();
  const Partition rect = k_rectangle(inst.t, ctx);
  const Partition big = union_of(rect, inst.lambda);
  require_budget(big.size(), options, "R_t ∪ lambda");
  const std::vector<Partition> interval = core_interval(inst.lambda, inst.t, ctx);

  SamekOutcome out;
  const HPolynomial& lhs = table.kks_in_h(big);
  const HPolynomial& g_rect = table.kks_in_h(rect);
  const HPolynomial sum = sum_in_h(interval, table);
  const HPolynomial rhs = g_rect * sum;
  out.equal = lhs == rhs;
  if (!out.equal) {
    out.witness = {{"residual", to_text(lhs - rhs)}};
    return out;
  }
  if (json bad = evaluation_mismatch(lhs, {{&g_rect, &sum}}, options, ctx.k); !bad.is_null()) {
    out.equal = false;
    out.witness = {{"evaluation", bad}};
    return out;
  }
  KksVector expected;
  for (const Partition& nu : interval) expected.add_term(nu, 1);
  try {
    const KksVector quotient = to_kks_basis(exact_divide(lhs, g_rect), table);
    out.quotient_ok = quotient == expected;
    if (!out.quotient_ok) out.witness = {{"quotient", vector_json(quotient)}};
  } catch (const NotDivisible& e) {
    out.witness = {{"remainder", to_text(e.remainder())}};
  }
  return out;
}

json nla_params(const NlaInstance& inst, const LevelContext& ctx) {
  return {{"k", ctx.k}, {"t", inst.t}, {"lambda", to_string(inst.lambda)}};
}

}  // namespace

nlohmann::json to_json(const VerificationReport& report) {
  return {{"identity", report.identity},
          {"params", report.params},
          {"pass", report.pass},
          {"witness", report.witness},
          {"millis", report.millis}};
}

std::vector<VerificationReport> verify_all(const std::vector<std::function<VerificationReport()>>& jobs,
                                           int threads) {
  std::vector<VerificationReport> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        out[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = threads > 0 ? static_cast<unsigned>(threads) : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

VerificationReport binom_fold_check(long q, long a, long b) {
  Stopwatch clock;
  BigInt lhs = 0;
  for (long x = 0; x <= std::min(a, b); ++x) lhs += sign_power(x) * binom(q - delta(x == b), a - x);
  const BigInt rhs = a >= 0 && b >= 0 ? binom(q - 1, a) : BigInt(0);
  VerificationReport report{"binom-fold", {{"q", q}, {"a", a}, {"b", b}}, lhs == rhs, nullptr, 0};
  if (!report.pass) report.witness = {{"lhs", lhs.get_str()}, {"rhs", rhs.get_str()}};
  report.millis = clock.millis();
  return report;
}

const char* to_string(StepABranch branch) {
  switch (branch) {
    case StepABranch::narrow: return "narrow";
    case StepABranch::wide_free: return "wide_free";
    case StepABranch::wide_bound: return "wide_bound";
  }
  return "?";
}

StepABranch step_a_branch(const StepAInstance& inst, const Partition& nu, const LevelContext& ctx) {
  return step_a_terms(inst, nu, ctx).branch;
}

BigInt step_a_coefficient(const StepAInstance& inst, const Partition& nu, const LevelContext& ctx) {
  const StepATerms terms = step_a_terms(inst, nu, ctx);
  if (!terms.indicator) return 0;
  BigInt out = 0;
  for (long x = 0; x <= terms.r && terms.base + x <= inst.a; ++x)
    out += sign_power(x) * binom(inst.d + inst.a - (terms.base + x), inst.e) * binom(terms.r, x);
  return out;
}

std::optional<BigInt> step_a_coefficient_closed(const StepAInstance& inst, const Partition& nu,
                                                const LevelContext& ctx) {
  if (inst.d != inst.e || inst.d < 0) return std::nullopt;
  const StepATerms terms = step_a_terms(inst, nu, ctx);
  if (!terms.indicator || inst.a < terms.base) return BigInt(0);
  return binom(inst.d + inst.a - terms.base - terms.r, inst.a - terms.base);
}

int q_statistic(const Partition& kappa, const Partition& gamma, const LevelContext& ctx) {
  return difference_size(kappa, gamma) + corner_residue_count(conjugate(kappa), conjugate(gamma), ctx);
}

std::optional<StepAInstance> step_a_parameters(const Partition& lambda, const Partition& mu, int t,
                                               const LevelContext& ctx) {
  const Partition bar = remove_last_part(lambda);
  if (!is_subset(bar, mu)) throw InputError(to_string(mu) + " does not contain " + to_string(bar));
  const long a = lambda.last() - difference_size(mu, bar);
  if (a < 0) return std::nullopt;
  const long d = q_statistic(mu, bar, ctx) + delta(conjugate(bar)[t] == conjugate(mu)[t + 1]) - 1;
  return StepAInstance{mu, d, d, a, t};
}

std::vector<StepAInstance> step_a_instances(const LevelContext& ctx, const std::vector<long>& de_values,
                                            const std::vector<long>& a_values) {
  std::vector<StepAInstance> out;
  for (int bl = 1; bl <= ctx.k; ++bl)
    for (const Partition& mu : subpartitions(k_rectangle(ctx.k + 1 - bl, ctx))) {
      if (mu.length() != bl) continue;
      for (int t = 1; t <= ctx.k; ++t)
        for (long de : de_values)
          for (long a : a_values) out.push_back({mu, de, de, a, t});
    }
  return out;
}

VerificationReport step_a_verify(const StepAInstance& inst, ExpansionTable& table, const VerifyOptions& options) {
  Stopwatch clock;
  const LevelContext& ctx = table.context();
  validate(inst, ctx);
  require_budget(inst.mu.size() + static_cast<int>(inst.a), options, "step-a");
  const int bl = inst.mu.length();
  const Partition mu_c = prefix_above(inst.mu, inst.t);
  std::vector<Partition> etas;
  for (Partition& eta : subpartitions(inst.mu))
    if (is_subset(mu_c, eta)) etas.push_back(std::move(eta));

  VerificationReport report;
  report.identity = "step-a";
  report.params = {{"k", ctx.k}, {"t", inst.t}, {"mu", to_string(inst.mu)},
                   {"d", inst.d}, {"e", inst.e}, {"a", inst.a}};

  // Pieri rule applied term by term.  For a > k this is the only route:
  // h_a is then outside the ring and the identity is a formal one.
  KksVector lhs;
  for (const Partition& eta : etas)
    for (long i = 0; i <= inst.a; ++i) {
      const BigInt c = binom(inst.d + i, inst.e);
      if (c == 0) continue;
      KksVector term = pieri_expansion(eta, static_cast<int>(inst.a - i), ctx);
      term *= c;
      lhs += term;
    }

  const bool in_ring = inst.a <= ctx.k;
  report.params["route"] = in_ring ? "ring" : "formal";
  HPolynomial lhs_poly;
  if (in_ring) {
    HPolynomial weights;
    for (long i = 0; i <= inst.a; ++i)
      weights.add_scaled(HPolynomial::h(static_cast<int>(inst.a - i), ctx), binom(inst.d + i, inst.e));
    lhs_poly = sum_in_h(etas, table) * weights;
    const KksVector converted = to_kks_basis(lhs_poly, table);
    if (!(converted == lhs)) {
      report.witness = {{"ring", vector_json(converted)}, {"pieri", vector_json(lhs)}};
      report.millis = clock.millis();
      return report;
    }
  }

  std::vector<Partition> candidates = subpartitions(Partition(std::vector<int>(static_cast<std::size_t>(bl + 1), ctx.k)));
  for (const auto& [nu, c] : lhs.terms())
    if (std::find(candidates.begin(), candidates.end(), nu) == candidates.end()) candidates.push_back(nu);

  KksVector formula;
  json mismatches = json::array();
  json branches = {{"narrow", 0}, {"wide_free", 0}, {"wide_bound", 0}, {"wide_bound_rejected", 0}};
  for (const Partition& nu : candidates) {
    const StepATerms terms = step_a_terms(inst, nu, ctx);
    const bool strip = is_subset(mu_c, nu) && is_horizontal_strip(nu, inst.mu);
    if (strip) {
      branches[to_string(terms.branch)] = branches[to_string(terms.branch)].get<int>() + 1;
      if (terms.branch == StepABranch::wide_bound && !terms.indicator)
        branches["wide_bound_rejected"] = branches["wide_bound_rejected"].get<int>() + 1;
    }
    const BigInt expected = step_a_coefficient(inst, nu, ctx);
    const std::optional<BigInt> closed = step_a_coefficient_closed(inst, nu, ctx);
    const BigInt got = lhs.coefficient(nu);
    formula.add_term(nu, expected);
    if (got != expected || (closed && *closed != expected)) {
      if (mismatches.size() < kWitnessLimit)
        mismatches.push_back({{"nu", to_string(nu)},
                              {"branch", to_string(terms.branch)},
                              {"lhs", got.get_str()},
                              {"sum_form", expected.get_str()},
                              {"closed_form", closed ? json(closed->get_str()) : json(nullptr)}});
    }
  }
  report.params["branches"] = branches;
  report.pass = mismatches.empty();
  if (!report.pass) {
    report.witness = {{"mismatches", mismatches}};
  } else if (in_ring) {
    const HPolynomial rhs = kks_vector_in_h(formula, table);
    if (json bad = evaluation_mismatch(lhs_poly, {{&rhs}}, options, ctx.k); !bad.is_null()) {
      report.pass = false;
      report.witness = {{"evaluation", bad}};
    }
  }
  report.millis = clock.millis();
  return report;
}

bool satisfies_nla(const Partition& lambda, const LevelContext& ctx) {
  if (lambda.empty() || !is_bounded(lambda, ctx)) return false;
  const Partition bar = remove_last_part(lambda);
  const int bl = bar.length();
  if (bl == 0) return true;
  return bl <= ctx.k && bar.first() <= ctx.k + 1 - bl;
}

bool satisfies_rectangle_hypothesis(const NlaInstance& inst, const LevelContext& ctx) {
  if (!satisfies_nla(inst.lambda, ctx)) return false;
  const Partition bar = remove_last_part(inst.lambda);
  const bool upper = bar.empty() || bar.last() >= inst.t;
  return upper && inst.t >= inst.lambda.last();
}

std::vector<Partition> core_interval(const Partition& lambda, int t, const LevelContext& ctx) {
  const Partition& lower = core_of(prefix_above(lambda, t), ctx);
  const Partition& upper = core_of(lambda, ctx);
  std::vector<Partition> out;
  // Containment of cores forces |nu| <= |lambda| on the bounded side.
  for (int n = 0; n <= lambda.size(); ++n)
    for (Partition& nu : partitions_of(n, ctx.k)) {
      const Partition& c = core_of(nu, ctx);
      if (is_subset(lower, c) && is_subset(c, upper)) out.push_back(std::move(nu));
    }
  return out;
}

std::vector<NlaInstance> nla_instances(int t, int size_budget, const LevelContext& ctx, bool require_hypothesis) {
  require_level_index(t, ctx);
  const int rect_size = t * (ctx.k + 1 - t);
  std::vector<NlaInstance> out;
  for (int bl = 0; bl <= ctx.k; ++bl) {
    std::vector<Partition> bars;
    if (bl == 0) {
      bars.emplace_back();
    } else {
      for (Partition& bar : subpartitions(k_rectangle(ctx.k + 1 - bl, ctx)))
        if (bar.length() == bl) bars.push_back(std::move(bar));
    }
    for (const Partition& bar : bars) {
      if (require_hypothesis && bl > 0 && bar.last() < t) continue;
      const int v_max = std::min({t, ctx.k, bl == 0 ? ctx.k : bar.last()});
      for (int v = 1; v <= v_max; ++v) {
        if (rect_size + bar.size() + v > size_budget) continue;
        std::vector<int> parts = bar.parts();
        parts.push_back(v);
        out.push_back({Partition(std::move(parts)), t});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const NlaInstance& x, const NlaInstance& y) {
    return SizeThenLexDescending{}(x.lambda, y.lambda);
  });
  return out;
}

VerificationReport theorem_samek_verify(const NlaInstance& inst, ExpansionTable& table,
                                        const VerifyOptions& options, bool extended) {
  Stopwatch clock;
  const LevelContext& ctx = table.context();
  require_level_index(inst.t, ctx);
  if (!satisfies_nla(inst.lambda, ctx))
    throw InputError(to_string(inst.lambda) + " does not satisfy the rectangle-fit condition");
  if (inst.lambda.last() > inst.t)
    throw InputError(to_string(inst.lambda) + " has last part above t = " + std::to_string(inst.t));
  if (!extended && !satisfies_rectangle_hypothesis(inst, ctx))
    throw InputError(to_string(inst.lambda) + " violates lambda-bar_bl >= t >= v for t = " +
                     std::to_string(inst.t));
  const SamekOutcome outcome = samek_compare(inst, table, options);
  VerificationReport report{"samek", nla_params(inst, ctx), outcome.equal && outcome.quotient_ok,
                            outcome.witness, 0};
  report.millis = clock.millis();
  return report;
}

VerificationReport theorem_rta_verify(int t, int a, ExpansionTable& table, const VerifyOptions& options) {
  Stopwatch clock;
  const LevelContext& ctx = table.context();
  require_level_index(t, ctx);
  if (a < 1) throw InputError("rta needs a >= 1");
  const Partition rect = k_rectangle(t, ctx);
  const Partition power = k_rectangle_power(t, a, ctx);
  require_budget(power.size(), options, "R_t^a");

  const HPolynomial& lhs = table.kks_in_h(power);
  const HPolynomial& g_rect = table.kks_in_h(rect);
  const HPolynomial factor = pow(sum_in_h(subpartitions(rect), table), a - 1);
  const HPolynomial rhs = g_rect * factor;
  VerificationReport report{"rta", {{"k", ctx.k}, {"t", t}, {"a", a}}, lhs == rhs, nullptr, 0};
  if (!report.pass) {
    report.witness = {{"residual", to_text(lhs - rhs)}};
  } else if (json bad = evaluation_mismatch(lhs, {{&g_rect, &factor}}, options, ctx.k); !bad.is_null()) {
    report.pass = false;
    report.witness = {{"evaluation", bad}};
  }
  report.millis = clock.millis();
  return report;
}

namespace {

Partition union_of_powers(const std::vector<RectSpec>& rects, const LevelContext& ctx) {
  Partition out;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    require_level_index(rects[i].t, ctx);
    if (rects[i].a < 1) throw InputError("rectangle multiplicities must be >= 1");
    if (i > 0 && rects[i].t <= rects[i - 1].t)
      throw InputError("rectangle indices must be strictly increasing");
    out = union_of(out, k_rectangle_power(rects[i].t, rects[i].a, ctx));
  }
  return out;
}

}  // namespace

VerificationReport splitting_verify(const std::vector<RectSpec>& rects, ExpansionTable& table,
                                    const VerifyOptions& options) {
  Stopwatch clock;
  const LevelContext& ctx = table.context();
  if (rects.empty()) throw InputError("split needs at least one rectangle");
  const Partition big = union_of_powers(rects, ctx);
  require_budget(big.size(), options, "union of rectangles");

  const HPolynomial& lhs = table.kks_in_h(big);
  std::vector<HPolynomial> factored;
  std::vector<const HPolynomial*> powers, pieces;
  HPolynomial by_powers(1), by_factors(1);
  factored.reserve(rects.size());
  for (const RectSpec& r : rects) {
    const HPolynomial& g_power = table.kks_in_h(k_rectangle_power(r.t, r.a, ctx));
    const Partition rect = k_rectangle(r.t, ctx);
    factored.push_back(table.kks_in_h(rect) * pow(sum_in_h(subpartitions(rect), table), r.a - 1));
    by_powers = by_powers * g_power;
    by_factors = by_factors * factored.back();
    powers.push_back(&g_power);
  }
  for (const HPolynomial& f : factored) pieces.push_back(&f);

  VerificationReport report{"split", {{"k", ctx.k}, {"rects", rects_json(rects)}}, false, nullptr, 0};
  report.params["lambda"] = to_string(big);
  if (!(lhs == by_powers)) {
    report.witness = {{"form", "powers"}, {"residual", to_text(lhs - by_powers)}};
  } else if (!(lhs == by_factors)) {
    report.witness = {{"form", "factors"}, {"residual", to_text(lhs - by_factors)}};
  } else if (json bad = evaluation_mismatch(lhs, {powers, pieces}, options, ctx.k); !bad.is_null()) {
    report.witness = {{"evaluation", bad}};
  } else {
    report.pass = true;
  }
  report.millis = clock.millis();
  return report;
}

VerificationReport divisibility_verify(const std::vector<RectSpec>& rects, const Partition& lambda,
                                       ExpansionTable& table, const VerifyOptions& options) {
  Stopwatch clock;
  const LevelContext& ctx = table.context();
  if (!is_bounded(lambda, ctx)) throw InputError(to_string(lambda) + " is not k-bounded");
  const Partition p = union_of_powers(rects, ctx);
  const Partition big = union_of(p, lambda);
  require_budget(big.size(), options, "P ∪ lambda");

  VerificationReport report{"divisibility",
                            {{"k", ctx.k}, {"rects", rects_json(rects)}, {"lambda", to_string(lambda)}},
                            false, nullptr, 0};
  const HPolynomial& lhs = table.kks_in_h(big);
  const HPolynomial& g_p = table.kks_in_h(p);
  try {
    const HPolynomial quotient = exact_divide(lhs, g_p);
    const KksVector v = to_kks_basis(quotient, table);
    report.params["quotient"] = vector_json(v);
    bool ok = v.coefficient(lambda) == 1;
    for (const auto& [nu, c] : v.terms())
      if (!(nu == lambda) && nu.size() >= lambda.size()) ok = false;
    if (!ok) {
      report.witness = {{"quotient", vector_json(v)}};
    } else if (json bad = evaluation_mismatch(lhs, {{&g_p, &quotient}}, options, ctx.k); !bad.is_null()) {
      report.witness = {{"evaluation", bad}};
    } else {
      report.pass = true;
    }
  } catch (const NotDivisible& e) {
    report.witness = {{"remainder", to_text(e.remainder())}};
  }
  report.millis = clock.millis();
  return report;
}

std::vector<VerificationReport> extended_regime_scan(int t, int size_budget, ExpansionTable& table,
                                                     const VerifyOptions& options) {
  const LevelContext& ctx = table.context();
  const std::vector<NlaInstance> instances = nla_instances(t, size_budget, ctx, false);
  VerifyOptions inner = options;
  inner.max_size = std::max(options.max_size, size_budget);
  table.ensure_size(size_budget);
  std::vector<std::function<VerificationReport()>> jobs;
  for (const NlaInstance& inst : instances)
    jobs.push_back([&table, &ctx, inst, inner] {
      Stopwatch clock;
      const SamekOutcome outcome = samek_compare(inst, table, inner);
      const int bl = inst.lambda.length() - 1;
      VerificationReport report{"regime-scan", nla_params(inst, ctx), outcome.equal, outcome.witness, 0};
      report.params["bucket"] = bl <= ctx.k + 1 - inst.t ? "short" : "long";
      report.params["hypothesis"] = satisfies_rectangle_hypothesis(inst, ctx);
      report.millis = clock.millis();
      return report;
    });
  return verify_all(jobs, options.threads);
}

nlohmann::json regime_summary(const std::vector<VerificationReport>& reports) {
  json out = json::object();
  for (const char* bucket : {"short", "long"})
    out[bucket] = {{"instances", 0}, {"confirmed", 0}, {"counterexamples", 0}, {"first_counterexample", nullptr}};
  for (const VerificationReport& r : reports) {
    json& b = out[r.params.at("bucket").get<std::string>()];
    b["instances"] = b["instances"].get<int>() + 1;
    const char* field = r.pass ? "confirmed" : "counterexamples";
    b[field] = b[field].get<int>() + 1;
    if (!r.pass && b["first_counterexample"].is_null()) b["first_counterexample"] = r.params;
  }
  return out;
}

}  // namespace kks
