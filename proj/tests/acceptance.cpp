// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every comparison is exact; time budgets are the only numeric limits.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kset/arrangement.hpp"
#include "kset/chains.hpp"
#include "kset/cli.hpp"
#include "kset/k_graph.hpp"
#include "kset/generate.hpp"
#include "kset/geom.hpp"
#include "kset/io.hpp"
#include "kset/verifier.hpp"
#include "test_support.hpp"

namespace {

using namespace kset;
using Clock = std::chrono::steady_clock;

constexpr double kGoldenBudgetSeconds = 1.0;
constexpr double kPropertyBudgetSeconds = 120.0;
constexpr std::size_t kPropertyInstances = 200;
constexpr int kPropertyMinN = 4;
constexpr int kPropertyMaxN = 25;
constexpr std::uint64_t kPropertySeed = 20260101;
constexpr int kDualityTrials = 10000;
constexpr int kSearchN = 10;
constexpr int kSearchK = 5;
constexpr std::size_t kSearchTrials = 1000;
constexpr std::uint64_t kSearchSeed = 7;
constexpr std::size_t kSearchTarget = 20;
constexpr std::size_t kHandBuiltTotal = 24;

// Tallies over every instance and k checked anywhere in the suite.
struct Ledger {
  std::size_t checked = 0;
  std::size_t below_checked = 0;
  std::size_t bound_failures = 0;
  std::size_t below_level_failures = 0;
  std::size_t lemma_applicable = 0;
  std::size_t lemma_failures = 0;
  std::size_t easy_cases = 0;

  void add(const Report& r) {
    ++checked;
    if (!r.bound_ok) ++bound_failures;
    ++below_checked;
    if (!r.verdict(verdict::kBelowLevel).holds) ++below_level_failures;
    if (r.easy_case) ++easy_cases;
    if (r.crossing_lemma_applicable) {
      ++lemma_applicable;
      if (!r.verdict(verdict::kCrossingLemma).holds) ++lemma_failures;
    }
  }
};

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::printf("%s %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

std::vector<int> chain_lines(const Chain& c) {
  std::vector<int> out;
  for (const auto& piece : c.pieces) out.push_back(piece.line);
  return out;
}

void golden_q4(Ledger& ledger) {
  using namespace kset::testing;
  const auto start = Clock::now();
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };

  const Instance inst = q4();
  const Verifier verifier(inst);
  const Arrangement& arr = verifier.arrangement();

  expect(arr.class_sizes() == std::vector<std::size_t>{2, 3, 1}, "class sizes");

  const KGraph g = build_G(inst, arr, 2);
  std::set<std::pair<int, int>> edges;
  for (const auto& e : g.edges) edges.emplace(e.p, e.q);
  expect(edges == std::set<std::pair<int, int>>{{A, D}, {B, D}, {C, D}}, "G edges");
  expect(crossing_number(g).x == 0, "X");

  const ChainSet cs = decompose_chains(arr, 2);
  expect(cs.chains.size() == 2, "chain count");
  if (cs.chains.size() == 2) {
    expect(chain_lines(cs.chain(1)) == std::vector<int>{B, D, A}, "chain 1");
    expect(chain_lines(cs.chain(2)) == std::vector<int>{C, D}, "chain 2");
  }

  const Report r = verifier.verify(2);
  ledger.add(r);
  expect(r.t == 3, "t");
  expect(r.x == 0, "report X");
  expect(r.chain_crossings == 2, "chain crossings");
  expect(r.tangents == 0, "tangents");
  expect(r.below_level == 5 && r.nk == 8, "below level");
  expect(r.ksets_above == 4 && r.ksets_below == 4, "k-set counts");
  expect(r.all_hold() && r.errors.empty(), "verdicts");
  for (int k : {1, 3}) {
    const Report other = verifier.verify(k);
    ledger.add(other);
    expect(other.all_hold(), "verdicts k=" + std::to_string(k));
  }

  const double elapsed = seconds_since(start);
  expect(elapsed < kGoldenBudgetSeconds, "time budget");
  std::string detail = "V=(2,3,1) t=3 X=0 chains {B>D>A, C>D} crossings=2 tangents=0 below=5<=8 ksets=4/4 in " +
                       fmt_seconds(elapsed);
  for (const auto& b : bad) detail += " [mismatch: " + b + "]";
  report("1 golden_q4", bad.empty(), detail);
}

void property_suite(Ledger& ledger) {
  const auto start = Clock::now();
  std::size_t reports = 0;
  std::size_t failing = 0;
  std::string first_failure;
  const auto instances =
      testing::random_instances(kPropertyInstances, kPropertyMinN, kPropertyMaxN, kPropertySeed);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Verifier verifier(instances[i]);
    for (const Report& r : verifier.verify_all()) {
      ++reports;
      ledger.add(r);
      if (r.all_hold()) continue;
      ++failing;
      if (first_failure.empty()) {
        first_failure = " first failure: instance " + std::to_string(i) + " k=" + std::to_string(r.k);
        for (const auto& v : r.verdicts)
          if (!v.holds) first_failure += " " + v.name;
        for (const auto& e : r.errors) first_failure += " (" + e + ")";
      }
    }
  }

  Rng rng(kPropertySeed + 1);
  int duality_failures = 0;
  for (int trial = 0; trial < kDualityTrials; ++trial) {
    const Point p = testing::random_point(rng);
    const Point v = testing::random_point(rng);
    Point on = testing::random_point(rng, 6, 2);
    on.y = p.x * on.x - p.y;  // on the dual line of p
    const bool involution = point_form(dualize_point(p)) == p && point_form(dualize_line(v)) == v;
    const bool incidence = side_of(dualize_point(p), on) == 0 && side_of(dualize_line(on), p) == 0 &&
                           (side_of(dualize_line(v), p) == 0) == (side_of(dualize_point(p), v) == 0);
    const bool orientation = side_of(dualize_line(v), p) == side_of(dualize_point(p), v);
    if (!(involution && incidence && orientation)) ++duality_failures;
  }

  const double elapsed = seconds_since(start);
  const bool pass = failing == 0 && duality_failures == 0 && elapsed < kPropertyBudgetSeconds;
  report("2 property_suite", pass,
         std::to_string(kPropertyInstances) + " instances, " + std::to_string(reports) + " (instance,k) reports, " +
             std::to_string(failing) + " failing; duality " + std::to_string(kDualityTrials) + " trials, " +
             std::to_string(duality_failures) + " failing; " + fmt_seconds(elapsed) + first_failure);
}

void search_and_bounds(Ledger& ledger) {
  SweepConfig config;
  config.n = kSearchN;
  config.k = kSearchK;
  config.trials = kSearchTrials;
  config.seed = kSearchSeed;
  const auto start = Clock::now();
  const SweepSummary s = sweep(config);
  const double elapsed = seconds_since(start);

  std::size_t t6_easy = 0;
  std::size_t bound_failures = 0;
  std::size_t lemma_applicable = 0;
  std::size_t easy_cases = 0;
  for (const auto& r : s.results) {
    ++ledger.checked;
    if (!r.bound_ok) ++bound_failures;
    if (r.easy_case) ++easy_cases;
    if (r.easy_case && r.t == 6) ++t6_easy;
    if (r.crossing_lemma_applicable) ++lemma_applicable;
  }
  ledger.bound_failures += bound_failures;
  ledger.easy_cases += easy_cases;
  ledger.lemma_applicable += lemma_applicable;
  ledger.lemma_failures += lemma_applicable - s.crossing_lemma_held;

  report("3a kset_search", s.max_total_kset >= kSearchTarget && s.failures.empty(),
         "n=10 k=5 " + std::to_string(s.results.size()) + " trials (seed 7): max total 5-sets " +
             std::to_string(s.max_total_kset) + " (target >= " + std::to_string(kSearchTarget) +
             ", hand-built reference " + std::to_string(kHandBuiltTotal) + "), max t " + std::to_string(s.max_t) +
             ", " + std::to_string(s.failures.size()) + " verdict failures, " + std::to_string(s.skipped.size()) +
             " skipped, " + fmt_seconds(elapsed));
  report("3b upper_bound", ledger.bound_failures == 0,
         "t^3 <= 64 n^3 k on " + std::to_string(ledger.checked) + " (instance,k) pairs, " +
             std::to_string(ledger.bound_failures) + " violations");
  report("3c easy_case", ledger.easy_cases > 0 && t6_easy > 0,
         std::to_string(ledger.easy_cases) + " easy-case (t <= 4n) reports overall; " + std::to_string(t6_easy) +
             " with t=6 at n=10 k=5");
}

void below_level(const Ledger& ledger) {
  report("4 below_level_le_nk", ledger.below_level_failures == 0,
         "sum_{j<k}|V_j| <= nk on " + std::to_string(ledger.below_checked) + " reports, " +
             std::to_string(ledger.below_level_failures) + " violations");
}

void crossing_lemma(const Ledger& ledger) {
  const std::string detail =
      ledger.lemma_applicable == 0
          ? "vacuous: t > 4n never reached in " + std::to_string(ledger.checked) + " (instance,k) pairs"
          : "applicable " + std::to_string(ledger.lemma_applicable) + " times in " + std::to_string(ledger.checked) +
                " pairs, " + std::to_string(ledger.lemma_failures) + " violations";
  report("5 crossing_lemma", ledger.lemma_failures == 0, detail);
}

std::string run(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = run_cli(args, out, err);
  return out.str();
}

void determinism() {
  const auto file = std::filesystem::temp_directory_path() / "kset_acceptance_q4.pts";
  std::ofstream(file) << write_instance(testing::q4());
  const std::string path = file.string();
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--n", "10", "--k", "5", "--trials", "100", "--seed", "7"},
      {"sweep", "--n", "12", "--all-k", "--trials", "10", "--seed", "3", "--shape", "parabola"},
      {"gen", "--n", "15", "--seed", "11", "--shape", "grid-jitter"},
      {"verify", path, "--all-k", "--json"},
      {"verify", path, "--k", "2", "--json"},
      {"plot", path, "--k", "2", "--view", "dual"},
      {"plot", path, "--k", "2", "--view", "primal"},
  };
  std::size_t identical = 0;
  std::string bad;
  for (const auto& cmd : commands) {
    int c1 = -1, c2 = -1;
    const std::string a = run(cmd, c1);
    const std::string b = run(cmd, c2);
    if (c1 == 0 && c2 == 0 && !a.empty() && a == b) {
      ++identical;
    } else {
      bad += " [" + cmd[0] + " exit " + std::to_string(c1) + "/" + std::to_string(c2) + "]";
    }
  }
  std::filesystem::remove(file);
  report("6 determinism", identical == commands.size(),
         std::to_string(identical) + "/" + std::to_string(commands.size()) +
             " seeded commands byte-identical across two runs" + bad);
}

}  // namespace

int main() {
  Ledger ledger;
  const std::vector<std::function<void()>> steps = {
      [&] { golden_q4(ledger); },
      [&] { property_suite(ledger); },
      [&] { search_and_bounds(ledger); },
      [&] { below_level(ledger); },
      [&] { crossing_lemma(ledger); },
      [] { determinism(); },
  };
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report("exception", false, e.what());
    }
  }
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
