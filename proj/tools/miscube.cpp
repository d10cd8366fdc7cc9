// Command-line front end: exact MIS counts, verification suites, peeling
// traces, and count benchmarks, all with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exhausted. Payloads depend only on (subcommand, flags, seed); timings live
// in fields that vary run to run (count/bench only, never verify).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/matching.hpp"
#include "miscube/mis.hpp"
#include "miscube/peeling.hpp"
#include "miscube/rational.hpp"
#include "miscube/verify.hpp"

using json = nlohmann::ordered_json;
using namespace miscube;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file: " + out_path);
  f << payload;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    const BigInt num(s.substr(0, slash));
    const BigInt den = slash == std::string::npos ? BigInt(1) : BigInt(s.substr(slash + 1));
    if (den == 0) throw UsageError("rational with zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::exception&) {
    throw UsageError("cannot parse rational: " + s);
  }
}

std::string ratio_string(const BigInt& count, int n) {
  const Cube c(n);
  const double denom = 2.0 * n * std::exp2(double(c.N()) / 4.0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", count.convert_to<double>() / denom);
  return buf;
}

VertexSet parse_i_spec(const Cube& c, const std::string& spec) {
  const VertexSet full = VertexSet::full(c);
  VertexSet I(c);
  if (spec == "even") {
    I = VertexSet::even_class(c);
  } else if (spec == "odd") {
    I = VertexSet::odd_class(c);
  } else if (spec.rfind("hex:", 0) == 0) {
    I = VertexSet::from_hex(c, spec.substr(4));
  } else if (spec.rfind("canonical:", 0) == 0) {
    // canonical:dir:eps:choice-bits, bit k picking the high end of edge k.
    int dir = 0, eps = 0;
    std::uint64_t bits = 0;
    std::string rest = spec.substr(10);
    try {
      std::size_t p1 = rest.find(':'), p2 = rest.find(':', p1 + 1);
      if (p1 == std::string::npos || p2 == std::string::npos) throw std::invalid_argument("");
      dir = std::stoi(rest.substr(0, p1));
      eps = std::stoi(rest.substr(p1 + 1, p2 - p1 - 1));
      bits = std::stoull(rest.substr(p2 + 1), nullptr, 0);
    } catch (const std::exception&) {
      throw UsageError("cannot parse I-spec: " + spec);
    }
    if (dir < 1 || dir > c.n() || (eps != 0 && eps != 1))
      throw UsageError("canonical I-spec out of range: " + spec);
    const Matching m = canonical_edges(c, CanonicalMatching{dir, eps});
    if (m.size() < 64 && bits >= (std::uint64_t{1} << m.size()))
      throw UsageError("canonical choice bits exceed 2^" + std::to_string(m.size()));
    VertexSet seed(c);
    for (std::size_t k = 0; k < m.size(); ++k)
      seed.insert((bits >> k) & 1 ? m.edges[k].hi() : m.edges[k].lo);
    ExtendResult r = extend_to_mis(c, full, seed);
    if (!r.unique) throw UsageError("canonical seed has no unique completion");
    I = r.mis;
  } else {
    throw UsageError("unknown I-spec: " + spec);
  }
  if (!is_mis(c, full, I))
    throw UsageError("I-spec is not a maximal independent set of the cube");
  return I;
}

VertexSet parse_w_spec(const Cube& c, const std::string& spec) {
  if (spec == "all") return VertexSet::full(c);
  if (spec == "empty") return VertexSet(c);
  if (spec.rfind("hex:", 0) == 0) return VertexSet::from_hex(c, spec.substr(4));
  throw UsageError("unknown W-spec: " + spec);
}

int cmd_count(int n, int workers, long long budget_ms, const std::string& format,
              const std::string& out_path) {
  Executor ex(workers);
  const MisReport r = count_cube_mis(Cube(n), ex, budget_ms);
  const std::string ratio = ratio_string(r.count, n);
  std::string payload;
  if (format == "json") {
    json j;
    j["n"] = r.n;
    j["count"] = r.count.str();
    j["ratio"] = ratio;
    j["partial"] = r.partial;
    j["elapsed_ms"] = r.elapsed_ms;
    j["workers"] = r.workers;
    payload = j.dump(2) + "\n";
  } else {
    payload = "n,count,ratio,partial,elapsed_ms,workers\n" + std::to_string(r.n) + "," +
              r.count.str() + "," + ratio + "," + (r.partial ? "1" : "0") + "," +
              std::to_string(r.elapsed_ms) + "," + std::to_string(r.workers) + "\n";
  }
  emit(payload, out_path);
  return r.partial ? 3 : 0;
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts,
               const std::string& out_path) {
  std::vector<SuiteReport> reports;
  try {
    reports = run_suites(suite, opts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  json suites = json::array();
  for (const SuiteReport& rep : reports) {
    all = all && rep.all_pass();
    json claims = json::array();
    for (const ClaimResult& c : rep.claims)
      claims.push_back(json{{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}});
    suites.push_back(json{
        {"suite", rep.suite}, {"all_pass", rep.all_pass()}, {"claims", std::move(claims)}});
  }
  json j;
  j["suite"] = suite;
  j["seed"] = opts.seed;
  j["overrides"] = json{
      {"small_threshold",
       opts.small_threshold ? json(*opts.small_threshold) : json(nullptr)},
      {"eps", opts.eps ? json(rational_string(*opts.eps)) : json(nullptr)},
      {"c3", opts.c3 ? json(rational_string(*opts.c3)) : json(nullptr)},
  };
  j["suites"] = std::move(suites);
  j["all_pass"] = all;
  emit(j.dump(2) + "\n", out_path);
  return all ? 0 : 1;
}

int cmd_peel(int n, const std::string& i_spec, const std::string& rule_spec,
             const std::string& w_spec, const std::string& out_path) {
  const Cube c(n);
  const VertexSet I = parse_i_spec(c, i_spec);
  const VertexSet W = parse_w_spec(c, w_spec);
  StopRule rule;
  try {
    rule = StopRule::parse(rule_spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const PeelResult r = peel(c, W, I, rule);
  const ReplayOutcome o = replay(c, r.trace);
  const bool replay_ok = o.X == r.X && o.removed_in_I == r.removed_in_I &&
                         o.fired_atom == r.fired_atom;
  const bool survivor_ok = is_mis(c, r.X, I & r.X);
  const bool from_full = W == VertexSet::full(c);

  json j;
  j["n"] = n;
  j["i"] = I.to_hex();
  j["w0"] = r.trace.w0.to_hex();
  j["rule"] = r.trace.rule.str();
  j["xi"] = json::array();
  for (auto b : r.trace.xi) j["xi"].push_back(int(b));
  j["xs"] = r.trace.xs;
  j["final_x"] = r.X.to_hex();
  j["removed_in_i"] = r.removed_in_I.to_hex();
  json checks;
  checks["replay_identity"] = replay_ok;
  checks["survivor_mis"] = survivor_ok;
  bool alpha_ok = true;
  if (from_full) {
    const AlphaReport a = alpha_trajectory(c, r);
    j["alphas"] = json::array();
    for (const Rational& x : a.alphas) j["alphas"].push_back(rational_string(x));
    checks["max_deg_bound"] = a.max_deg_bound;
    checks["support_contraction"] = a.support_contraction;
    checks["support_stop_applicable"] = a.support_stop_applicable;
    checks["support_stop_bound"] = a.support_stop_bound;
    alpha_ok = a.max_deg_bound && a.support_contraction && a.support_stop_bound;
  } else {
    // The survivor-MIS and alpha facts are theorems for runs from the full
    // cube only; from a partial start they are observations, not gates.
    j["alphas"] = nullptr;
    checks["max_deg_bound"] = nullptr;
    checks["support_contraction"] = nullptr;
    checks["support_stop_applicable"] = nullptr;
    checks["support_stop_bound"] = nullptr;
  }
  j["checks"] = std::move(checks);
  emit(j.dump(2) + "\n", out_path);

  if (!replay_ok) return 1;
  if (from_full && !(survivor_ok && alpha_ok)) return 1;
  return 0;
}

int cmd_bench(int n, const std::string& workers_list, int reps, const std::string& out_path) {
  std::vector<int> counts_of_workers;
  std::string item;
  for (std::size_t i = 0, j = 0; i <= workers_list.size(); ++i) {
    if (i == workers_list.size() || workers_list[i] == ',') {
      item = workers_list.substr(j, i - j);
      j = i + 1;
      try {
        counts_of_workers.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw UsageError("cannot parse --workers list: " + workers_list);
      }
    }
  }
  std::string payload = "n,workers,reps,median_ms,min_ms,count\n";
  std::optional<BigInt> reference;
  for (int w : counts_of_workers) {
    if (reps <= 0) continue;
    std::vector<double> times;
    BigInt count;
    for (int rep = 0; rep < reps; ++rep) {
      Executor ex(w);
      const MisReport r = count_cube_mis(Cube(n), ex);
      times.push_back(r.elapsed_ms);
      count = r.count;
      if (!reference) reference = r.count;
      if (r.count != *reference) {
        std::cerr << "count mismatch at workers=" << w << ": " << r.count.str()
                  << " != " << reference->str() << "\n";
        return 1;
      }
    }
    std::sort(times.begin(), times.end());
    const double median =
        (times[(times.size() - 1) / 2] + times[times.size() / 2]) / 2.0;
    char row[160];
    std::snprintf(row, sizeof row, "%d,%d,%d,%.3f,%.3f,%s\n", n, w, reps, median,
                  times.front(), count.str().c_str());
    payload += row;
  }
  emit(payload, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and structural verification in the Hamming cube"};
  app.require_subcommand(1);

  int n = 3;
  int workers = 1;
  long long budget_ms = -1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out_path;
  std::string suite = "all";
  std::string i_spec, w_spec = "all", rule_spec;
  std::string workers_list = "1";
  int reps = 5;
  std::optional<std::uint64_t> small_threshold;
  std::string eps_str, c3_str, inject_fault;

  auto* count = app.add_subcommand("count", "Exact MIS count of Q_n with trend ratio");
  count->add_option("--n", n, "cube dimension")->required();
  count->add_option("--workers", workers, "worker threads")->envname("MISCUBE_WORKERS");
  count->add_option("--budget-ms", budget_ms, "wall budget; partial result past it");
  count->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--out", out_path, "write payload to file");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite,
                     "core|peeling|labeling|projection|isoperimetry|containers|all");
  verify->add_option("--seed", seed, "base seed for the randomized claims");
  verify->add_option("--workers", workers)->envname("MISCUBE_WORKERS");
  verify->add_option("--small-threshold", small_threshold,
                     "containers: neighborhood size cut for small components");
  verify->add_option("--eps", eps_str, "containers: tight/slack split, p/q");
  verify->add_option("--c3", c3_str, "containers: size bound constant, p/q");
  verify->add_option("--inject-fault", inject_fault)
      ->envname("MISCUBE_INJECT_FAULT")
      ->group("");
  verify->add_option("--out", out_path, "write payload to file");

  auto* peel_cmd = app.add_subcommand("peel", "Peel a start set against an MIS");
  peel_cmd->add_option("--n", n, "cube dimension")->required();
  peel_cmd->add_option("--I", i_spec, "even|odd|hex:HH|canonical:dir:eps:bits")->required();
  peel_cmd->add_option("--rule", rule_spec, "empty|support:r|maxdeg:d|size:s, comma-joined")
      ->required();
  peel_cmd->add_option("--W", w_spec, "all|empty|hex:HH");
  peel_cmd->add_option("--out", out_path, "write payload to file");

  auto* bench = app.add_subcommand("bench", "Repeated count timings, CSV");
  bench->add_option("--n", n, "cube dimension")->required();
  bench->add_option("--workers", workers_list, "comma-separated worker counts")
      ->envname("MISCUBE_WORKERS");
  bench->add_option("--reps", reps, "repetitions per worker count");
  bench->add_option("--out", out_path, "write payload to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return cmd_count(n, workers, budget_ms, format, out_path);
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.workers = workers;
      opts.small_threshold = small_threshold;
      if (!eps_str.empty()) opts.eps = parse_rational(eps_str);
      if (!c3_str.empty()) opts.c3 = parse_rational(c3_str);
      opts.inject_fault = inject_fault;
      return cmd_verify(suite, opts, out_path);
    }
    if (peel_cmd->parsed()) return cmd_peel(n, i_spec, rule_spec, w_spec, out_path);
    if (bench->parsed()) return cmd_bench(n, workers_list, reps, out_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
