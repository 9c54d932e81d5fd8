// Acceptance run: one PASS/FAIL line per criterion.
//
// Every criterion is an exact identity, so the only tolerances are the
// comparison mode (exact integer equality) and the wall-clock limits below.
// Criterion 8 is known not to hold as stated; its line prints FAIL, and the
// exit status only turns nonzero if its observed outcome drifts from the
// recorded one (or if any other criterion fails).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kkschur/cores.hpp"
#include "kkschur/engine.hpp"
#include "kkschur/verifiers.hpp"

using namespace kks;
using nlohmann::json;

namespace {

constexpr const char* kComparison = "exact integer equality";

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
};

constexpr Criterion kCriteria[] = {
    {1, "R_3 ∪ R_3 at k=4 factors with 0/1 quotient over R_3", 10},
    {2, "factorization through R_t, k <= 4, |R_t ∪ lambda| <= 14", 300},
    {3, "rectangle powers and splitting", 600},
    {4, "step A coefficients against the Pieri oracle, k in {2,3}", 600},
    {5, "binomial folding, q in [-6,6], a,b in [-2,6]", 1},
    {6, "bdd/core round trips", 60},
    {7, "Pieri operators commute, k <= 4, |lambda| <= 6", 300},
    {8, "extended regime k=3 t=2: all l(lambda-bar) <= k+1-t confirmed", 300},
};

// Recorded outcome of criterion 8 (see the README).
constexpr int kKnownShortInstances = 11;
constexpr int kKnownShortCounterexamples = 1;
constexpr const char* kKnownCounterexample = "1,1,1";

struct Outcome {
  bool pass = false;
  std::string detail;
  bool expected_failure = false;
  bool matches_record = true;
};

VerifyOptions options(int max_size) {
  VerifyOptions o;
  o.max_size = max_size;
  return o;
}

std::string first_failure(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return "; first failure " + to_json(r).dump();
  return "";
}

int count_failures(const std::vector<VerificationReport>& reports) {
  int n = 0;
  for (const auto& r : reports) n += !r.pass;
  return n;
}

Outcome criterion1() {
  ExpansionTable table{LevelContext(4)};
  const Partition r3{3, 3};
  const VerificationReport r = theorem_samek_verify({r3, 3}, table, options(12));
  const HPolynomial quotient = exact_divide(kks_in_h(Partition{3, 3, 3, 3}, table), kks_in_h(r3, table));
  KksVector expect;
  for (const Partition& mu : subpartitions(r3)) expect.add_term(mu, BigInt(1));
  const KksVector got = to_kks_basis(quotient, table);
  Outcome o;
  o.pass = r.pass && got == expect;
  o.detail = std::to_string(expect.terms().size()) + " basis terms, all coefficient 1";
  if (!o.pass) o.detail = "quotient " + to_text(got);
  return o;
}

Outcome criterion2() {
  int instances = 0, failures = 0;
  std::string detail;
  for (int k = 1; k <= 4; ++k) {
    ExpansionTable table{LevelContext(k)};
    std::vector<std::function<VerificationReport()>> jobs;
    for (int t = 1; t <= k; ++t)
      for (const NlaInstance& inst : nla_instances(t, 14, table.context(), true))
        jobs.push_back([&table, inst] { return theorem_samek_verify(inst, table, options(14)); });
    const auto reports = verify_all(jobs, 0);
    instances += static_cast<int>(reports.size());
    failures += count_failures(reports);
    if (detail.empty()) detail = first_failure(reports);
  }
  return {failures == 0 && instances > 0,
          std::to_string(instances) + " instances, " + std::to_string(failures) + " failures" + detail};
}

Outcome criterion3() {
  struct Rta {
    int k, t, a;
  };
  const Rta rta[] = {{2, 1, 2}, {2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 2, 2}, {3, 3, 2}, {4, 3, 2}};
  std::vector<VerificationReport> reports;
  for (const Rta& c : rta) {
    ExpansionTable table{LevelContext(c.k)};
    reports.push_back(theorem_rta_verify(c.t, c.a, table, options(64)));
  }
  ExpansionTable k2{LevelContext(2)}, k3{LevelContext(3)};
  reports.push_back(splitting_verify({{1, 1}, {2, 1}}, k2, options(64)));
  reports.push_back(splitting_verify({{1, 1}, {2, 1}}, k3, options(64)));
  reports.push_back(splitting_verify({{1, 2}, {3, 1}}, k3, options(64)));
  const int failures = count_failures(reports);
  return {failures == 0, "7 rectangle powers, 3 splittings, " + std::to_string(failures) + " failures" +
                             first_failure(reports)};
}

Outcome criterion4() {
  int instances = 0, failures = 0, formal = 0;
  json coverage = {{"narrow", 0}, {"wide_free", 0}, {"wide_bound", 0}, {"wide_bound_rejected", 0}};
  std::string detail;
  for (int k = 2; k <= 3; ++k) {
    ExpansionTable table{LevelContext(k)};
    std::vector<std::function<VerificationReport()>> jobs;
    for (const StepAInstance& inst : step_a_instances(table.context(), {0, 1, 2}, {0, 1, 2, 3}))
      jobs.push_back([&table, inst] { return step_a_verify(inst, table, options(32)); });
    const auto reports = verify_all(jobs, 0);
    instances += static_cast<int>(reports.size());
    failures += count_failures(reports);
    if (detail.empty()) detail = first_failure(reports);
    for (const auto& r : reports) {
      formal += r.params.at("route") == "formal";
      for (const auto& [key, n] : r.params.at("branches").items())
        coverage[key] = coverage[key].get<int>() + n.get<int>();
    }
  }
  const bool covered = coverage["narrow"].get<int>() > 0 && coverage["wide_free"].get<int>() > 0 &&
                       coverage["wide_bound"].get<int>() > 0 && coverage["wide_bound_rejected"].get<int>() > 0;
  return {failures == 0 && covered,
          std::to_string(instances) + " instances (" + std::to_string(formal) + " formal, a > k), " +
              std::to_string(failures) + " failures, branches " + coverage.dump() + detail};
}

Outcome criterion5() {
  int instances = 0, failures = 0;
  for (long q = -6; q <= 6; ++q)
    for (long a = -2; a <= 6; ++a)
      for (long b = -2; b <= 6; ++b) {
        ++instances;
        failures += !binom_fold_check(q, a, b).pass;
      }
  return {failures == 0, std::to_string(instances) + " triples, " + std::to_string(failures) + " failures"};
}

Outcome criterion6() {
  long bounded = 0, cores = 0, bad = 0;
  for (int k = 1; k <= 5; ++k) {
    const LevelContext ctx(k);
    for (int n = 0; n <= 10; ++n)
      for (const Partition& lambda : partitions_of(n, k)) {
        ++bounded;
        bad += bdd(core_of(lambda, ctx), ctx) != lambda;
      }
    for (int n = 0; n <= 14; ++n)
      for (const Partition& kappa : partitions_of(n))
        if (is_core(kappa, ctx)) {
          ++cores;
          bad += core_of(bdd(kappa, ctx), ctx) != kappa;
        }
  }
  return {bad == 0, std::to_string(bounded) + " bounded partitions, " + std::to_string(cores) + " cores, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome criterion7() {
  long pairs = 0, bad = 0;
  for (int k = 1; k <= 4; ++k) {
    const LevelContext ctx(k);
    for (int n = 0; n <= 6; ++n)
      for (const Partition& lambda : partitions_of(n, k)) {
        const KksVector start{{lambda, 1}};
        for (int r = 0; r <= k; ++r)
          for (int s = r + 1; s <= k; ++s) {
            ++pairs;
            bad += pieri_product(pieri_product(start, r, ctx), s, ctx) !=
                   pieri_product(pieri_product(start, s, ctx), r, ctx);
          }
      }
  }
  return {bad == 0, std::to_string(pairs) + " (lambda, r, s) cases, " + std::to_string(bad) + " mismatches"};
}

Outcome criterion8() {
  ExpansionTable table{LevelContext(3)};
  const auto reports = extended_regime_scan(2, 12, table, options(12));
  const json summary = regime_summary(reports);
  const json& shortb = summary["short"];
  const json& longb = summary["long"];
  Outcome o;
  o.pass = shortb["counterexamples"].get<int>() == 0;
  o.detail = "l(lambda-bar) <= 2: " + shortb["confirmed"].dump() + "/" + shortb["instances"].dump() +
             " confirmed; l(lambda-bar) > 2: " + longb["confirmed"].dump() + "/" + longb["instances"].dump() +
             " confirmed";
  if (!o.pass) o.detail += "; counterexample lambda=" + shortb["first_counterexample"]["lambda"].get<std::string>();
  o.expected_failure = true;
  o.matches_record = shortb["instances"] == kKnownShortInstances &&
                     shortb["counterexamples"] == kKnownShortCounterexamples &&
                     shortb["first_counterexample"]["lambda"] == kKnownCounterexample;
  if (o.matches_record) o.detail += " (known; recorded in the README)";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> runs[] = {criterion1, criterion2, criterion3, criterion4,
                                           criterion5, criterion6, criterion7, criterion8};
  std::printf("comparison: %s\n", kComparison);
  int unexpected = 0;
  for (std::size_t i = 0; i < std::size(kCriteria); ++i) {
    const Criterion& c = kCriteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = runs[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.matches_record = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    std::printf("%s %d %s: %s [%.2f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(),
                seconds, c.limit_seconds);
    if (o.expected_failure) {
      if (pass || !o.matches_record || !in_time) ++unexpected;
    } else if (!pass) {
      ++unexpected;
    }
  }
  std::printf("%d unexpected result(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
