// Command-line front end.  Everything goes through the C interface.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kkschur/kkschur.h"

namespace {

using nlohmann::json;

constexpr unsigned long long kDefaultSeed = 0x6b6b73;

struct Config {
  int k = 0;
  std::string format = "text";
  std::string cache;
  unsigned long long seed = kDefaultSeed;
  int max_size = 16;
  int threads = 0;
  std::string partition;
  std::string identity;
  std::optional<int> t;
  std::string a, q, b, d, e, de;
  std::string lambda, mu;
  std::vector<std::string> rects;
  bool extended = false;
};

struct ContextDeleter {
  void operator()(kks_context* c) const { kks_context_destroy(c); }
};
using ContextPtr = std::unique_ptr<kks_context, ContextDeleter>;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { kks_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int fail(kks_status status, const std::string& message) {
  std::cerr << "kkschur: " << message << '\n';
  return static_cast<int>(status);
}

int fail(kks_context* ctx, kks_status status) { return fail(status, kks_last_error(ctx)); }

// Parses "-3" style integers for options that are ranges for some checks
// and plain integers for others; ranges are handed over verbatim.
json range_or_int(const std::string& text) {
  if (text.find("..") != std::string::npos) return text;
  std::size_t used = 0;
  const long v = std::stol(text, &used);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

json verify_params(const Config& cfg) {
  json p = {{"max_size", cfg.max_size}, {"threads", cfg.threads}};
  if (cfg.t) p["t"] = *cfg.t;
  if (cfg.extended) p["extended"] = true;
  const std::pair<const char*, const std::string*> numeric[] = {
      {"a", &cfg.a}, {"q", &cfg.q}, {"b", &cfg.b}, {"d", &cfg.d}, {"e", &cfg.e}, {"de", &cfg.de}};
  for (const auto& [name, value] : numeric) {
    if (value->empty()) continue;
    try {
      p[name] = range_or_int(*value);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string("--") + name, "expected an integer or a range lo..hi");
    }
  }
  if (!cfg.lambda.empty()) p["lambda"] = cfg.lambda;
  if (!cfg.mu.empty()) p["mu"] = cfg.mu;
  if (!cfg.rects.empty()) {
    json rects = json::array();
    for (const std::string& r : cfg.rects) {
      const auto colon = r.find(':');
      try {
        if (colon == std::string::npos) throw std::invalid_argument(r);
        rects.push_back({std::stoi(r.substr(0, colon)), std::stoi(r.substr(colon + 1))});
      } catch (const std::exception&) {
        throw CLI::ValidationError("--rect", "expected T:A, got " + r);
      }
    }
    p["rects"] = rects;
  }
  return p;
}

std::string params_summary(const json& params) {
  std::string out;
  for (const auto& [key, value] : params.items()) {
    if (key == "branches" || key == "quotient") continue;
    if (!out.empty()) out += ' ';
    out += key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

void print_verify_text(const json& report) {
  for (const json& r : report.at("reports")) {
    std::printf("%s %s %s (%.2f ms)\n", r.at("pass").get<bool>() ? "PASS" : "FAIL",
                r.at("identity").get<std::string>().c_str(), params_summary(r.at("params")).c_str(),
                r.at("millis").get<double>());
    if (!r.at("witness").is_null()) std::printf("  witness: %s\n", r.at("witness").dump().c_str());
  }
  if (report.contains("summary")) {
    for (const auto& [bucket, s] : report.at("summary").items())
      std::printf("bucket %s: %d instances, %d confirmed, %d counterexamples\n", bucket.c_str(),
                  s.at("instances").get<int>(), s.at("confirmed").get<int>(),
                  s.at("counterexamples").get<int>());
    return;
  }
  if (report.contains("coverage")) std::printf("coverage: %s\n", report.at("coverage").dump().c_str());
  std::printf("%s: %zu instances, %zu failures\n", report.at("identity").get<std::string>().c_str(),
              report.at("instances").get<std::size_t>(), report.at("failures").get<std::size_t>());
}

json envelope(const Config& cfg, const std::string& command) {
  return {{"tool", "kkschur"}, {"version", kks_version()}, {"k", cfg.k}, {"command", command}};
}

int run(const std::string& command, const Config& cfg) {
  kks_context* raw = nullptr;
  if (kks_context_create(cfg.k, &raw) != KKS_OK)
    return fail(KKS_INPUT_ERROR, "k must be a positive integer");
  ContextPtr ctx(raw);
  const bool json_out = cfg.format == "json";

  using Bijection = kks_status (*)(kks_context*, const char*, char**);
  Bijection bijection = command == "core" ? kks_core : command == "bdd" ? kks_bdd : command == "kconj" ? kks_kconj : nullptr;
  if (bijection) {
    OwnedString out;
    if (kks_status s = bijection(ctx.get(), cfg.partition.c_str(), &out.p); s != KKS_OK) return fail(ctx.get(), s);
    if (json_out) {
      json j = envelope(cfg, command);
      j["input"] = cfg.partition;
      j["output"] = out.str();
      std::cout << j.dump() << '\n';
    } else {
      std::cout << out.str() << '\n';
    }
    return 0;
  }

  if (!cfg.cache.empty()) {
    OwnedString warnings;
    if (kks_status s = kks_cache_load(ctx.get(), cfg.cache.c_str(), &warnings.p); s != KKS_OK)
      return fail(ctx.get(), s);
    for (const json& w : json::parse(warnings.str())) std::cerr << "kkschur: cache: " << w.get<std::string>() << '\n';
  }

  int code = 0;
  if (command == "expand") {
    OwnedString out;
    if (kks_status s = kks_expand(ctx.get(), cfg.partition.c_str(), json_out ? KKS_FORMAT_JSON : KKS_FORMAT_TEXT, &out.p);
        s != KKS_OK)
      return fail(ctx.get(), s);
    std::cout << out.str() << '\n';
  } else {
    OwnedString out;
    const std::string params = verify_params(cfg).dump();
    const kks_status s = kks_verify(ctx.get(), cfg.identity.c_str(), params.c_str(), cfg.seed, &out.p);
    if (s != KKS_OK && s != KKS_IDENTITY_FAILED) return fail(ctx.get(), s);
    const json report = json::parse(out.str());
    if (json_out) {
      std::cout << report.dump() << '\n';
    } else {
      print_verify_text(report);
    }
    code = static_cast<int>(s);
  }

  if (!cfg.cache.empty())
    if (kks_status s = kks_cache_save(ctx.get(), cfg.cache.c_str()); s != KKS_OK) return fail(ctx.get(), s);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"K-k-Schur functions: cores, expansions and identity checks"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kks_version()));
  app.add_option("-k,--level", cfg.k, "Level k (positive)")->required()->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache", cfg.cache, "Expansion cache file (default: $KKSCHUR_CACHE)");
  app.add_option("--seed", cfg.seed, "Seed for random-evaluation cross-checks");

  const char* shape_help = "Partition such as 3,3,1; '-' is the empty partition";
  for (const char* name : {"core", "bdd", "kconj", "expand"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("partition", cfg.partition, shape_help)->required();
  }
  app.get_subcommand("core")->description("(k+1)-core of a k-bounded partition");
  app.get_subcommand("bdd")->description("k-bounded partition of a (k+1)-core");
  app.get_subcommand("kconj")->description("k-conjugate of a k-bounded partition");
  app.get_subcommand("expand")->description("g_lambda in h_1..h_k");

  auto* verify = app.add_subcommand("verify", "Check an identity exhaustively within a budget");
  verify->add_option("identity", cfg.identity)
      ->required()
      ->check(CLI::IsMember({"binom-fold", "step-a", "samek", "rta", "split", "divisibility", "regime-scan"}));
  verify->add_option("--max-size,--budget", cfg.max_size, "Largest partition size a check may expand")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  verify->add_option("-t", cfg.t, "Rectangle index");
  verify->add_option("-a,--a", cfg.a, "Exponent or h-degree; a range lo..hi for sweeps");
  verify->add_option("--q", cfg.q, "binom-fold: q or range");
  verify->add_option("--b", cfg.b, "binom-fold: b or range");
  verify->add_option("--d", cfg.d, "step-a: d");
  verify->add_option("--e", cfg.e, "step-a: e (defaults to d)");
  verify->add_option("--de", cfg.de, "step-a sweep: range of d = e");
  verify->add_option("--lambda", cfg.lambda, "Partition lambda");
  verify->add_option("--mu", cfg.mu, "step-a: partition mu");
  verify->add_option("--rect", cfg.rects, "Rectangle power T:A (repeatable)");
  verify->add_flag("--extended", cfg.extended, "samek: drop lambda-bar_bl >= t");

  try {
    app.parse(argc, argv);
    if (cfg.cache.empty())
      if (const char* env = std::getenv("KKSCHUR_CACHE"); env && *env) cfg.cache = env;
    for (CLI::App* sub : app.get_subcommands()) return run(sub->get_name(), cfg);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(KKS_INPUT_ERROR);
  } catch (const std::exception& e) {
    return fail(KKS_INTERNAL_ERROR, e.what());
  }
  return 0;
}
