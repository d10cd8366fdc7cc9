// Acceptance gate: thirteen exact criteria over the library plus the CLI,
// one PASS/FAIL line each, exit code = number of failures. argv[1] is the
// path to the miscube binary (criterion 13 drives it as a subprocess).

#include <unistd.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "miscube/cube.hpp"
#include "miscube/executor.hpp"
#include "miscube/mis.hpp"
#include "miscube/verify.hpp"

using namespace miscube;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Criterion {
  int k;
  bool pass;
  std::string note;
};

// Joint verdict over named suite claims: all must exist and pass.
Criterion from_claims(int k, const std::map<std::string, ClaimResult>& claims,
                      const std::vector<std::string>& ids, std::string extra = "") {
  bool pass = true;
  std::string note;
  for (const std::string& id : ids) {
    auto it = claims.find(id);
    if (it == claims.end()) {
      pass = false;
      note += (note.empty() ? "" : "; ") + id + " missing";
    } else if (!it->second.pass) {
      pass = false;
      note += (note.empty() ? "" : "; ") + id + ": " + it->second.detail;
    }
  }
  if (pass) {
    for (const std::string& id : ids) {
      const std::string& d = claims.at(id).detail;
      if (d.empty()) continue;
      note += (note.empty() ? "" : "; ") + d;
    }
  }
  if (!extra.empty()) note += (note.empty() ? "" : "; ") + extra;
  return {k, pass, note};
}

struct BenchRow {
  int workers = 0;
  double median_ms = 0;
  std::string count;
};

std::vector<BenchRow> parse_bench_csv(const std::string& csv) {
  std::vector<BenchRow> rows;
  std::istringstream ss(csv);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    BenchRow row;
    std::istringstream ls(line);
    std::string field;
    std::getline(ls, field, ',');  // n
    std::getline(ls, field, ',');
    row.workers = std::stoi(field);
    std::getline(ls, field, ',');  // reps
    std::getline(ls, field, ',');
    row.median_ms = std::stod(field);
    std::getline(ls, field, ',');  // min_ms
    std::getline(ls, row.count, ',');
    rows.push_back(row);
  }
  return rows;
}

Criterion criterion_counts(const std::map<std::string, ClaimResult>& claims) {
  Criterion base = from_claims(1, claims,
                               {"core.count-subset-oracle", "core.count-frozen",
                                "core.count-worker-stable"});
  Executor one(1);
  std::string ratios;
  double t4 = 0, t5 = 0;
  for (int n = 1; n <= 5; ++n) {
    const MisReport r = count_cube_mis(Cube(n), one);
    if (n == 4) t4 = r.elapsed_ms;
    if (n == 5) t5 = r.elapsed_ms;
    const double denom = 2.0 * n * std::exp2(double(Cube(n).N()) / 4.0);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", r.count.convert_to<double>() / denom);
    ratios += (n > 1 ? "," : "") + std::string(buf);
  }
  const bool timing = t4 < 10000.0 && t5 < 60000.0;
  char timing_note[128];
  std::snprintf(timing_note, sizeof timing_note, "q4=%.1fms q5=%.1fms ratios=%s", t4, t5,
                ratios.c_str());
  return {1, base.pass && timing, base.note + "; " + timing_note};
}

Criterion criterion_cli(const std::string& cli) {
  if (cli.empty()) return {13, false, "no CLI path on the command line"};
  const std::string dir =
      (std::filesystem::temp_directory_path() /
       ("miscube_acceptance_" + std::to_string(getpid())))
          .string();
  std::filesystem::create_directories(dir);
  const std::string q = "'" + cli + "'";

  auto run = [&](const std::string& args, const std::string& out) {
    const std::string cmd = q + " " + args + " --out " + dir + "/" + out;
    return std::system(cmd.c_str()) == 0;
  };

  bool ok = run("verify --suite all --seed 11 --workers 1", "a.json") &&
            run("verify --suite all --seed 11 --workers 1", "b.json") &&
            run("verify --suite all --seed 11 --workers 4", "c.json");
  if (!ok) return {13, false, "verify subprocess failed"};
  const std::string a = read_file(dir + "/a.json");
  if (a.empty() || a != read_file(dir + "/b.json") || a != read_file(dir + "/c.json"))
    return {13, false, "verify payloads differ across runs or worker counts"};

  if (!run("bench --n 4 --workers 1,4 --reps 21", "bench.csv"))
    return {13, false, "bench subprocess failed"};
  const std::vector<BenchRow> rows = parse_bench_csv(read_file(dir + "/bench.csv"));
  if (rows.size() != 2 || rows[0].workers != 1 || rows[1].workers != 4)
    return {13, false, "bench CSV malformed"};
  if (rows[0].count != rows[1].count || rows[0].count != "42")
    return {13, false, "bench counts disagree: " + rows[0].count + " vs " + rows[1].count};
  const double speedup = rows[1].median_ms > 0 ? rows[0].median_ms / rows[1].median_ms : 0;
  char note[160];
  std::snprintf(note, sizeof note,
                "payloads byte-identical; count q4 speedup %.2fx at 4 workers (medians "
                "%.3fms -> %.3fms)",
                speedup, rows[0].median_ms, rows[1].median_ms);
  return {13, speedup >= 2.0, note};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  VerifyOptions opts;  // seed 0, workers 1; the defaults the reports froze
  std::map<std::string, ClaimResult> claims;
  for (const SuiteReport& rep : run_suites("all", opts))
    for (const ClaimResult& c : rep.claims) claims.emplace(c.id, c);

  std::vector<Criterion> results;
  results.push_back(criterion_counts(claims));
  results.push_back(from_claims(2, claims, {"core.canonical-families"}));
  results.push_back(from_claims(3, claims, {"core.family-overlap"}));
  results.push_back(from_claims(4, claims, {"core.largest-im"}));
  results.push_back(from_claims(5, claims, {"core.matching-count-bound"}));
  results.push_back(from_claims(
      6, claims, {"isoperimetry.functional-exhaustive", "isoperimetry.functional-random"}));
  results.push_back(from_claims(7, claims,
                                {"peeling.replay-identity", "peeling.survivor-mis",
                                 "peeling.alpha-monotonicity", "peeling.support-stop-bound",
                                 "peeling.two-stage"}));
  results.push_back(from_claims(8, claims,
                                {"labeling.round-trip-identity",
                                 "labeling.legal-count-matches-mis",
                                 "labeling.outside-family-structure",
                                 "labeling.occupancy-facts"}));
  results.push_back(from_claims(9, claims,
                                {"projection.q4-large-structure",
                                 "projection.canonical-structure", "projection.q3-structure",
                                 "projection.q4-structure"}));
  results.push_back(from_claims(10, claims, {"isoperimetry.expansion-positive"}));
  results.push_back(from_claims(11, claims, {"core.assignment-oracle"}));
  results.push_back(from_claims(12, claims, {"core.compositions", "core.klinked-bound"}));
  results.push_back(criterion_cli(cli));

  int failures = 0;
  for (const Criterion& r : results) {
    failures += r.pass ? 0 : 1;
    std::printf("%s %2d  %s\n", r.pass ? "PASS" : "FAIL", r.k, r.note.c_str());
  }
  std::printf("%d/13 criteria passed\n", 13 - failures);
  return failures;
}
