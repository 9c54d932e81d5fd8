#include "kkschur/kkschur.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "kkschur/cache.hpp"
#include "kkschur/cores.hpp"
#include "kkschur/engine.hpp"
#include "kkschur/error.hpp"
#include "kkschur/verifiers.hpp"

#ifndef KKSCHUR_VERSION
#define KKSCHUR_VERSION "0.0.0"
#endif

struct kks_context {
  explicit kks_context(int k) : level(k), table(level) {}
  kks::LevelContext level;
  kks::ExpansionTable table;
  std::string last_error;
};

namespace {

using nlohmann::json;
using kks::Partition;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body and maps exceptions onto status codes, recording the message.
template <class Body>
kks_status guarded(kks_context* ctx, Body&& body) {
  if (!ctx) return KKS_INPUT_ERROR;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const kks::Error& e) {
    ctx->last_error = e.what();
    return static_cast<kks_status>(e.status());
  } catch (const json::exception& e) {
    ctx->last_error = std::string("bad parameters: ") + e.what();
    return KKS_INPUT_ERROR;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return KKS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return KKS_INTERNAL_ERROR;
  }
}

void require_out(char** out) {
  if (!out) throw kks::InputError("output pointer is null");
}

Partition partition_arg(const char* text) {
  if (!text) throw kks::InputError("partition text is null");
  return kks::parse_partition(text);
}

struct Range {
  long lo = 0;
  long hi = 0;
};

// Accepts 3, [lo, hi] or "lo..hi".
Range range_param(const json& params, const char* name, Range fallback) {
  if (!params.contains(name)) return fallback;
  const json& v = params.at(name);
  if (v.is_number_integer()) return {v.get<long>(), v.get<long>()};
  if (v.is_array() && v.size() == 2) return {v[0].get<long>(), v[1].get<long>()};
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const auto dots = s.find("..", 1);
    try {
      if (dots == std::string::npos) return {std::stol(s), std::stol(s)};
      std::size_t used = 0;
      const long lo = std::stol(s.substr(0, dots), &used);
      if (used != dots) throw kks::InputError("");
      const std::string rest = s.substr(dots + 2);
      const long hi = std::stol(rest, &used);
      if (used != rest.size()) throw kks::InputError("");
      return {lo, hi};
    } catch (const std::exception&) {
      throw kks::InputError(std::string("bad range for ") + name + ": " + s);
    }
  }
  throw kks::InputError(std::string("bad range for ") + name);
}

std::vector<long> range_values(Range r) {
  std::vector<long> out;
  for (long x = r.lo; x <= r.hi; ++x) out.push_back(x);
  return out;
}

int int_param(const json& params, const char* name) {
  if (!params.contains(name)) throw kks::InputError(std::string("missing parameter ") + name);
  return params.at(name).get<int>();
}

Partition partition_param(const json& params, const char* name) {
  if (!params.contains(name)) throw kks::InputError(std::string("missing parameter ") + name);
  return kks::parse_partition(params.at(name).get<std::string>());
}

std::vector<kks::RectSpec> rects_param(const json& params) {
  std::vector<kks::RectSpec> out;
  if (!params.contains("rects")) return out;
  for (const json& r : params.at("rects")) {
    if (!r.is_array() || r.size() != 2) throw kks::InputError("rects entries are [t, a] pairs");
    out.push_back({r[0].get<int>(), r[1].get<int>()});
  }
  return out;
}

json envelope(const kks_context& ctx, const std::string& identity) {
  return {{"tool", "kkschur"}, {"version", KKSCHUR_VERSION}, {"k", ctx.level.k}, {"identity", identity}};
}

json run_verify(kks_context& ctx, const std::string& identity, const json& params, std::uint64_t seed,
                bool& all_pass) {
  kks::VerifyOptions options;
  options.seed = seed;
  if (params.contains("max_size")) options.max_size = params.at("max_size").get<int>();
  if (params.contains("threads")) options.threads = params.at("threads").get<int>();
  if (options.max_size < 0) throw kks::InputError("max_size must be nonnegative");
  kks::ExpansionTable& table = ctx.table;

  json out = envelope(ctx, identity);
  out["params"] = params;
  std::vector<std::function<kks::VerificationReport()>> jobs;

  if (identity == "binom-fold") {
    for (long q : range_values(range_param(params, "q", {-6, 6})))
      for (long a : range_values(range_param(params, "a", {-2, 6})))
        for (long b : range_values(range_param(params, "b", {-2, 6})))
          jobs.push_back([=] { return kks::binom_fold_check(q, a, b); });
  } else if (identity == "step-a") {
    std::vector<kks::StepAInstance> instances;
    if (params.contains("lambda")) {
      const auto inst = kks::step_a_parameters(partition_param(params, "lambda"), partition_param(params, "mu"),
                                               int_param(params, "t"), ctx.level);
      if (!inst) throw kks::InputError("the h-degree v - |mu/lambda-bar| is negative");
      instances.push_back(*inst);
    } else if (params.contains("mu")) {
      kks::StepAInstance inst{partition_param(params, "mu"), 0, 0, 0, 1};
      if (params.contains("d")) inst.d = params.at("d").get<long>();
      inst.e = params.contains("e") ? params.at("e").get<long>() : inst.d;
      if (params.contains("a")) inst.a = params.at("a").get<long>();
      if (params.contains("t")) inst.t = params.at("t").get<int>();
      instances.push_back(inst);
    } else {
      instances = kks::step_a_instances(ctx.level, range_values(range_param(params, "de", {0, 2})),
                                        range_values(range_param(params, "a", {0, 3})));
      if (params.contains("t")) {
        const int t = params.at("t").get<int>();
        std::erase_if(instances, [t](const kks::StepAInstance& i) { return i.t != t; });
      }
    }
    for (const auto& inst : instances)
      jobs.push_back([&table, inst, options] { return kks::step_a_verify(inst, table, options); });
  } else if (identity == "samek") {
    std::vector<kks::NlaInstance> instances;
    if (params.contains("lambda")) {
      instances.push_back({partition_param(params, "lambda"), int_param(params, "t")});
    } else {
      const int lo = params.contains("t") ? params.at("t").get<int>() : 1;
      const int hi = params.contains("t") ? lo : ctx.level.k;
      for (int t = lo; t <= hi; ++t)
        for (auto& inst : kks::nla_instances(t, options.max_size, ctx.level, !params.value("extended", false)))
          instances.push_back(inst);
    }
    const bool extended = params.value("extended", false);
    for (const auto& inst : instances)
      jobs.push_back([&table, inst, options, extended] {
        return kks::theorem_samek_verify(inst, table, options, extended);
      });
  } else if (identity == "rta") {
    const int t = int_param(params, "t"), a = int_param(params, "a");
    jobs.push_back([&table, t, a, options] { return kks::theorem_rta_verify(t, a, table, options); });
  } else if (identity == "split") {
    const auto rects = rects_param(params);
    jobs.push_back([&table, rects, options] { return kks::splitting_verify(rects, table, options); });
  } else if (identity == "divisibility") {
    const auto rects = rects_param(params);
    const Partition lambda = partition_param(params, "lambda");
    jobs.push_back([&table, rects, lambda, options] { return kks::divisibility_verify(rects, lambda, table, options); });
  } else if (identity == "regime-scan") {
    const auto reports = kks::extended_regime_scan(int_param(params, "t"), options.max_size, table, options);
    json list = json::array();
    for (const auto& r : reports) list.push_back(kks::to_json(r));
    out["instances"] = reports.size();
    out["summary"] = kks::regime_summary(reports);
    out["reports"] = std::move(list);
    out["pass"] = true;
    all_pass = true;
    return out;
  } else {
    throw kks::InputError("unknown identity '" + identity + "'");
  }

  const auto reports = kks::verify_all(jobs, options.threads);
  json list = json::array();
  std::size_t failures = 0;
  json coverage = json::object();
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    if (r.params.contains("branches"))
      for (const auto& [key, n] : r.params.at("branches").items())
        coverage[key] = coverage.value(key, 0) + n.get<int>();
    list.push_back(kks::to_json(r));
  }
  all_pass = failures == 0;
  out["pass"] = all_pass;
  out["instances"] = reports.size();
  out["failures"] = failures;
  if (!coverage.empty()) out["coverage"] = coverage;
  out["reports"] = std::move(list);
  return out;
}

json expansion_json(const kks::HPolynomial& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json exps = json::object();
    for (int i = 1; i <= m.max_index(); ++i)
      if (m.exponent(i) > 0) exps[std::to_string(i)] = m.exponent(i);
    terms.push_back({{"coefficient", c.get_str()}, {"h", exps}});
  }
  return terms;
}

}  // namespace

extern "C" {

const char* kks_version(void) { return KKSCHUR_VERSION; }

kks_status kks_context_create(int k, kks_context** out) {
  if (!out) return KKS_INPUT_ERROR;
  *out = nullptr;
  if (k < 1) return KKS_INPUT_ERROR;
  try {
    *out = new kks_context(k);
    return KKS_OK;
  } catch (...) {
    return KKS_INTERNAL_ERROR;
  }
}

void kks_context_destroy(kks_context* ctx) { delete ctx; }

int kks_context_level(const kks_context* ctx) { return ctx ? ctx->level.k : 0; }

const char* kks_last_error(const kks_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void kks_string_free(char* s) { std::free(s); }

kks_status kks_core(kks_context* ctx, const char* partition, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = dup_string(kks::to_string(kks::core_of(partition_arg(partition), ctx->level)));
    return KKS_OK;
  });
}

kks_status kks_bdd(kks_context* ctx, const char* core, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = dup_string(kks::to_string(kks::bdd(partition_arg(core), ctx->level)));
    return KKS_OK;
  });
}

kks_status kks_kconj(kks_context* ctx, const char* partition, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = dup_string(kks::to_string(kks::k_conjugate(partition_arg(partition), ctx->level)));
    return KKS_OK;
  });
}

kks_status kks_expand(kks_context* ctx, const char* partition, kks_format format, char** out) {
  return guarded(ctx, [&] {
    require_out(out);
    const Partition lambda = partition_arg(partition);
    const kks::HPolynomial& p = ctx->table.kks_in_h(lambda);
    if (format == KKS_FORMAT_JSON) {
      json j = envelope(*ctx, "expand");
      j.erase("identity");
      j["partition"] = kks::to_string(lambda);
      j["terms"] = expansion_json(p);
      *out = dup_string(j.dump());
    } else {
      *out = dup_string(kks::to_text(p));
    }
    return KKS_OK;
  });
}

kks_status kks_cache_load(kks_context* ctx, const char* path, char** warnings_json) {
  return guarded(ctx, [&] {
    if (!path) throw kks::InputError("cache path is null");
    const kks::CacheLoadResult result = kks::load_cache_file(path, ctx->table);
    if (warnings_json) *warnings_json = dup_string(json(result.warnings).dump());
    return KKS_OK;
  });
}

kks_status kks_cache_save(kks_context* ctx, const char* path) {
  return guarded(ctx, [&] {
    if (!path) throw kks::InputError("cache path is null");
    kks::save_cache_file(path, ctx->table);
    return KKS_OK;
  });
}

kks_status kks_verify(kks_context* ctx, const char* identity, const char* params_json,
                      unsigned long long seed, char** report_json) {
  return guarded(ctx, [&] {
    require_out(report_json);
    if (!identity) throw kks::InputError("identity is null");
    json params = params_json && *params_json ? json::parse(params_json) : json::object();
    if (!params.is_object()) throw kks::InputError("params must be a JSON object");
    bool pass = false;
    const json report = run_verify(*ctx, identity, params, seed, pass);
    *report_json = dup_string(report.dump());
    return pass ? KKS_OK : KKS_IDENTITY_FAILED;
  });
}

}  // extern "C"
