// permfrob: command-line front end for the verification library.
//
//   permfrob verify <check> [--shape S] [--m M] [--n N] [--t T] [--p LIST] [--e E]
//   permfrob scan conjecture45 --p LIST [--method M] [--checkpoint FILE]
//   permfrob generators --shape S --t T --p P
//   permfrob bench <id> [--p LIST]
//
// Exit codes: 0 pass, 2 fail, 3 inconclusive, 1 usage error or refusal.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "permfrob/errors.hpp"
#include "permfrob/linmember.hpp"
#include "permfrob/parallel.hpp"
#include "permfrob/poly_io.hpp"
#include "permfrob/witnesses.hpp"

#ifndef PERMFROB_VERSION
#define PERMFROB_VERSION "unknown"
#endif

using namespace permfrob;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;

const std::vector<std::string> kChecks = {"lemma31", "lemma32", "lemma34", "thm35", "thm36", "witness-generic",
                                          "witness-symmetric", "monomials28", "monomials29", "fpure"};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string subcommand;
  std::string target;  // check, scan or benchmark id
  std::optional<std::string> shape;
  std::optional<std::size_t> m, n, t;
  std::vector<std::uint32_t> primes;
  unsigned e = 1;
  std::string method = "truncated";
  unsigned threads = 0;
  std::string format = "text";
  std::optional<std::string> out;
  std::optional<std::string> checkpoint;

  Json echo() const {
    Json j;
    j["subcommand"] = subcommand;
    j["target"] = target;
    j["shape"] = shape ? Json(*shape) : Json(nullptr);
    j["m"] = m ? Json(*m) : Json(nullptr);
    j["n"] = n ? Json(*n) : Json(nullptr);
    j["t"] = t ? Json(*t) : Json(nullptr);
    j["p"] = primes;
    j["e"] = e;
    j["method"] = method;
    j["threads"] = threads;
    j["format"] = format;
    j["checkpoint"] = checkpoint ? Json(*checkpoint) : Json(nullptr);
    return j;
  }
};

std::vector<std::uint32_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v > 0x7fffffffUL) throw UsageError("--p: '" + item + "' is not a number");
    PrimeModulus check(static_cast<std::uint32_t>(v));  // throws unless an odd prime
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw UsageError("--p: empty list");
  return out;
}

// ---------------------------------------------------------------------------
// Job construction

using Job = std::function<LemmaReport()>;

std::vector<std::uint32_t> require_primes(const RunConfig& cfg) {
  if (cfg.primes.empty()) throw UsageError(cfg.target + " needs --p");
  return cfg.primes;
}

std::size_t require_n(const RunConfig& cfg, std::optional<ShapeKind> kind = std::nullopt) {
  if (cfg.n) return *cfg.n;
  if (cfg.shape) {
    const MatrixShape s = MatrixShape::parse(*cfg.shape);
    if (kind && s.kind != *kind) throw UsageError(cfg.target + ": unexpected shape " + *cfg.shape);
    if (s.rows != s.cols) throw UsageError(cfg.target + " needs a square shape");
    return s.rows;
  }
  throw UsageError(cfg.target + " needs --n or --shape");
}

MatrixShape require_generic(const RunConfig& cfg) {
  if (cfg.shape) {
    const MatrixShape s = MatrixShape::parse(*cfg.shape);
    if (s.kind != ShapeKind::Generic) throw UsageError(cfg.target + " needs a generic shape");
    return s;
  }
  if (cfg.m && cfg.n) return MatrixShape::generic(*cfg.m, *cfg.n);
  throw UsageError(cfg.target + " needs --shape generic:MxN or --m and --n");
}

std::vector<Job> verify_jobs(const RunConfig& cfg) {
  std::vector<Job> jobs;
  const std::string& c = cfg.target;
  // Integer identities default to the proxy prime.
  const auto proxy_primes = [&] {
    return cfg.primes.empty() ? std::vector<std::uint32_t>{kIntegerProxyPrime} : cfg.primes;
  };
  if (c == "lemma31" || c == "lemma32" || c == "thm36") {
    const std::size_t n = require_n(cfg);
    for (std::uint32_t p : proxy_primes()) {
      if (c == "lemma31") jobs.push_back([=] { return verify_lemma_3_1(n, p); });
      if (c == "lemma32") jobs.push_back([=] { return verify_lemma_3_2(n, p); });
      if (c == "thm36") jobs.push_back([=] { return verify_theorem_3_6(n, p); });
    }
  } else if (c == "lemma34" || c == "thm35") {
    const std::size_t n = require_n(cfg, ShapeKind::Hankel);
    for (std::uint32_t p : require_primes(cfg)) {
      if (c == "lemma34") jobs.push_back([=] { return verify_lemma_3_4(n, p); });
      else jobs.push_back([=] { return verify_theorem_3_5(n, p); });
    }
  } else if (c == "witness-generic") {
    const MatrixShape shape = require_generic(cfg);
    for (std::uint32_t p : require_primes(cfg)) jobs.push_back([=] { return verify_witness_membership(shape, p); });
  } else if (c == "witness-symmetric") {
    const MatrixShape shape = MatrixShape::symmetric(require_n(cfg, ShapeKind::Symmetric));
    for (std::uint32_t p : require_primes(cfg)) jobs.push_back([=] { return verify_witness_membership(shape, p); });
  } else if (c == "monomials28" || c == "monomials29") {
    const MatrixShape shape = require_generic(cfg);
    for (std::uint32_t p : require_primes(cfg)) {
      if (c == "monomials28") jobs.push_back([=] { return verify_monomials_2_8(shape, p); });
      else jobs.push_back([=] { return verify_monomials_2_9(shape, p); });
    }
  } else if (c == "fpure") {
    if (!cfg.shape) throw UsageError("fpure needs --shape");
    const MatrixShape shape = MatrixShape::parse(*cfg.shape);
    const std::size_t t = cfg.t.value_or(std::min(shape.rows, shape.cols));
    const unsigned e = cfg.e;
    for (std::uint32_t p : require_primes(cfg)) jobs.push_back([=] { return verify_fpure(shape, t, p, e); });
  } else {
    throw UsageError("unknown check '" + c + "'");
  }
  return jobs;
}

std::filesystem::path checkpoint_for(const RunConfig& cfg, std::uint32_t p) {
  if (cfg.primes.size() == 1) return *cfg.checkpoint;
  return *cfg.checkpoint + ".p" + std::to_string(p);
}

std::vector<LemmaReport> run_scan(const RunConfig& cfg) {
  if (cfg.target != "conjecture45") throw UsageError("unknown scan '" + cfg.target + "'");
  if (cfg.shape && MatrixShape::parse(*cfg.shape) != MatrixShape::generic(3, 4))
    throw UsageError("conjecture45 runs on generic:3x4 only");
  if (cfg.t && *cfg.t != 3) throw UsageError("conjecture45 runs with t = 3 only");
  const FedderMethod method = parse_method(cfg.method);
  std::vector<LemmaReport> reports;
  // The scans parallelize internally, so primes run one after another.
  for (std::uint32_t p : require_primes(cfg)) {
    FullSupportOptions opts;
    opts.threads = cfg.threads;
    if (cfg.checkpoint) opts.checkpoint = checkpoint_for(cfg, p);
    if (cfg.format == "text") {
      opts.progress = [p, last = -1](std::uint64_t done, std::uint64_t total) mutable {
        const int pct = static_cast<int>(100 * done / std::max<std::uint64_t>(total, 1));
        if (pct / 10 == last / 10) return;
        last = pct;
        std::cerr << "p=" << p << ": " << pct << "%\n";
      };
    }
    const std::uint32_t one[] = {p};
    reports.push_back(scan_conjecture_4_5(one, method, opts));
  }
  return reports;
}

// ---------------------------------------------------------------------------
// Output

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

std::string render_summary(const RunConfig& cfg, const std::vector<LemmaReport>& reports, Verdict aggregate, double ms) {
  if (cfg.format == "json") {
    Json j;
    j["tool"] = "permfrob";
    j["version"] = PERMFROB_VERSION;
    j["schema"] = kReportSchema;
    j["config"] = cfg.echo();
    j["reports"] = Json::array();
    for (const auto& r : reports) j["reports"].push_back(r.to_json());
    j["verdict"] = to_string(aggregate);
    j["ms"] = ms;
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& r : reports) out << r.summary() << "\n  " << r.evidence.dump() << "\n";
  out << "aggregate: " << to_string(aggregate) << " (" << reports.size() << " report" << (reports.size() == 1 ? "" : "s")
      << ")\n";
  return out.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (!cfg.out) {
    std::cout << text;
    return;
  }
  std::ofstream file(*cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + *cfg.out + " for writing");
  file << text;
}

int run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.subcommand == "bench") {
    std::ostringstream csv;
    cli::run_bench(cfg.target, cfg.primes, csv);
    emit(cfg, csv.str());
    return kExitPass;
  }
  if (cfg.subcommand == "generators") {
    if (!cfg.shape) throw UsageError("generators needs --shape");
    const MatrixShape shape = MatrixShape::parse(*cfg.shape);
    const std::uint32_t p = cfg.primes.empty() ? 3 : cfg.primes.front();
    const MatrixContext ctx = make_context(shape, p);
    const IdealPresentation ideal = permanental_generators(ctx, cfg.t.value_or(std::min(shape.rows, shape.cols)));
    std::string text;
    for (const auto& g : ideal.generators) text += render_poly(g) + "\n";
    emit(cfg, text);
    return kExitPass;
  }

  std::vector<LemmaReport> reports;
  if (cfg.subcommand == "verify") {
    const std::vector<Job> jobs = verify_jobs(cfg);
    reports = parallel_map<LemmaReport>(jobs.size(), cfg.threads, [&](std::size_t i) { return jobs[i](); });
  } else {
    reports = run_scan(cfg);
  }
  Verdict aggregate = Verdict::Pass;
  for (const auto& r : reports) aggregate = combine(aggregate, r.verdict);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(cfg, render_summary(cfg, reports, aggregate, ms));
  return exit_code(aggregate);
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& primes) {
  sub->add_option("--shape", cfg.shape, "generic:MxN, symmetric:N or hankel:N");
  sub->add_option("--m", cfg.m, "rows")->check(CLI::PositiveNumber);
  sub->add_option("--n", cfg.n, "columns, or the size of a square shape")->check(CLI::PositiveNumber);
  sub->add_option("--t", cfg.t, "minor size")->check(CLI::PositiveNumber);
  sub->add_option("--p", primes, "odd prime or comma-separated list");
  sub->add_option("--e", cfg.e, "Frobenius exponent")->check(CLI::Range(1, 3));
  sub->add_option("--method", cfg.method, "truncated, pointcount or fiber")
      ->check(CLI::IsMember({"truncated", "pointcount", "fiber"}));
  sub->add_option("--threads", cfg.threads, "worker threads (0: all hardware threads)");
  sub->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", cfg.out, "write output to FILE");
  sub->add_option("--checkpoint", cfg.checkpoint, "checkpoint file for long scans");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mechanical checks for F-singularities of permanental ideals"};
  app.set_version_flag("--version", std::string(PERMFROB_VERSION));
  app.require_subcommand(1);

  RunConfig cfg;
  std::string primes;

  auto* verify = app.add_subcommand("verify", "run one verification check");
  verify->add_option("check", cfg.target, "check name")->required()->check(CLI::IsMember(kChecks));
  add_common(verify, cfg, primes);

  auto* scan = app.add_subcommand("scan", "run a characteristic scan");
  scan->add_option("scan", cfg.target, "scan name")->required()->check(CLI::IsMember({"conjecture45"}));
  add_common(scan, cfg, primes);

  auto* gens = app.add_subcommand("generators", "print permanental ideal generators, one per line");
  add_common(gens, cfg, primes);

  auto* bench = app.add_subcommand("bench", "timing harness, CSV output");
  bench->add_option("id", cfg.target, "benchmark id")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(cli::kBenchIds), std::end(cli::kBenchIds))));
  bench->add_option("--p", primes, "odd prime or comma-separated list");
  bench->add_option("--out", cfg.out, "write CSV to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (!primes.empty()) cfg.primes = parse_prime_list(primes);
    return run(cfg);
  } catch (const RefusedError& e) {
    std::cerr << "refused: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
