#pragma once

// Exhaustive checks of the factorization identities for K-k-Schur functions
// and of the coefficient formulas used to prove them.  Every check builds
// both sides exactly, compares them, and confirms the comparison again by
// evaluating at pseudo-random integer points.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kkschur/engine.hpp"
#include "kkschur/hring.hpp"
#include "kkschur/partition.hpp"

namespace kks {

struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  /// Offending data; null on success.
  nlohmann::json witness;
  double millis = 0;
};

nlohmann::json to_json(const VerificationReport& report);

struct VerifyOptions {
  /// Largest partition size whose expansion a single check may request.
  int max_size = 16;
  /// Seed for the random-evaluation cross-check.
  std::uint64_t seed = 0x6b6b73;
  /// Worker threads for sweeps; 0 picks the hardware concurrency.
  int threads = 0;
};

/// Runs independent jobs, possibly in parallel, and returns the reports in
/// job order.
std::vector<VerificationReport> verify_all(const std::vector<std::function<VerificationReport()>>& jobs,
                                           int threads);

// Alternating binomial sum with the top lowered at x = b.
VerificationReport binom_fold_check(long q, long a, long b);

// ---------------------------------------------------------------------------
// Coefficient formulas for  sum_{mu° ⊆ eta ⊆ mu} g_eta * sum_i binom(d+i, e) h_{a-i}
// with mu ⊆ R_{k+1-bl}, l(mu) = bl and mu° the rows of mu longer than t.

struct StepAInstance {
  Partition mu;
  long d = 0;
  long e = 0;
  long a = 0;
  int t = 1;
};

enum class StepABranch { narrow, wide_free, wide_bound };
const char* to_string(StepABranch branch);

/// Which formula applies to nu: nu_1 <= k+1-bl, or the wide case with the
/// row condition vacuous or binding.
StepABranch step_a_branch(const StepAInstance& inst, const Partition& nu, const LevelContext& ctx);
/// Alternating-sum form; valid for any d and e >= 0.
BigInt step_a_coefficient(const StepAInstance& inst, const Partition& nu, const LevelContext& ctx);
/// Closed form, defined only when d = e >= 0.
std::optional<BigInt> step_a_coefficient_closed(const StepAInstance& inst, const Partition& nu,
                                                const LevelContext& ctx);

/// q_{kappa gamma} = |kappa / gamma| + r_{kappa' gamma'}.
int q_statistic(const Partition& kappa, const Partition& gamma, const LevelContext& ctx);
/// The instance arising from lambda and an intermediate mu in the induction
/// for R_t ∪ lambda; empty when the h-degree a is negative.
std::optional<StepAInstance> step_a_parameters(const Partition& lambda, const Partition& mu, int t,
                                               const LevelContext& ctx);

/// Every instance with mu ⊆ R_{k+1-bl}, l(mu) = bl >= 1, t in 1..k, d = e in
/// de_values and a in a_values.
std::vector<StepAInstance> step_a_instances(const LevelContext& ctx, const std::vector<long>& de_values,
                                            const std::vector<long>& a_values);

VerificationReport step_a_verify(const StepAInstance& inst, ExpansionTable& table,
                                 const VerifyOptions& options = {});

// ---------------------------------------------------------------------------
// g_{R_t ∪ lambda} = g_{R_t} * sum_{core(lambda^(t)) ⊆ core(nu) ⊆ core(lambda)} g_nu

struct NlaInstance {
  Partition lambda;
  int t = 1;
};

/// lambda nonempty, k-bounded, and lambda minus its last part inside
/// R_{k+1-bl}, bl its length.
bool satisfies_nla(const Partition& lambda, const LevelContext& ctx);
/// lambda-bar_bl >= t >= v (the first inequality is vacuous when bl = 0).
bool satisfies_rectangle_hypothesis(const NlaInstance& inst, const LevelContext& ctx);
/// Every nu with core(lambda^(t)) ⊆ core(nu) ⊆ core(lambda).
std::vector<Partition> core_interval(const Partition& lambda, int t, const LevelContext& ctx);

/// Instances with 1 <= t <= k, t >= v and |R_t ∪ lambda| <= size_budget,
/// ordered by size then lexicographically descending.  With
/// require_hypothesis, lambda-bar_bl >= t is also imposed.
std::vector<NlaInstance> nla_instances(int t, int size_budget, const LevelContext& ctx,
                                       bool require_hypothesis);

/// With extended, lambda-bar_bl >= t is not required (t >= v still is) and
/// a failure is an observation rather than a bug.
VerificationReport theorem_samek_verify(const NlaInstance& inst, ExpansionTable& table,
                                        const VerifyOptions& options = {}, bool extended = false);

/// g_{R_t^a} = g_{R_t} (sum_{lambda ⊆ R_t} g_lambda)^{a-1}.
VerificationReport theorem_rta_verify(int t, int a, ExpansionTable& table,
                                      const VerifyOptions& options = {});

struct RectSpec {
  int t = 1;
  int a = 1;
};

/// g of a union of rectangle powers against the product of the g_{R_t^a},
/// and against the product of the factored forms.
VerificationReport splitting_verify(const std::vector<RectSpec>& rects, ExpansionTable& table,
                                    const VerifyOptions& options = {});

/// g_{P ∪ lambda} / g_P has coefficient 1 on lambda and otherwise only
/// smaller partitions, P a union of rectangle powers.
VerificationReport divisibility_verify(const std::vector<RectSpec>& rects, const Partition& lambda,
                                       ExpansionTable& table, const VerifyOptions& options = {});

/// Tests the product formula on instances without lambda-bar_bl >= t,
/// bucketed by l(lambda-bar) <= k+1-t.  Reports are observations; nothing
/// is asserted.
std::vector<VerificationReport> extended_regime_scan(int t, int size_budget, ExpansionTable& table,
                                                     const VerifyOptions& options = {});

/// Per-bucket counts of confirmations and counterexamples.
nlohmann::json regime_summary(const std::vector<VerificationReport>& reports);

}  // namespace kks
