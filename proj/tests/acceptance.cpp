// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "copclean/cleaning_solver.hpp"
#include "copclean/enumerate.hpp"
#include "copclean/families.hpp"
#include "copclean/formats.hpp"
#include "copclean/knowledge.hpp"
#include "copclean/metrics.hpp"
#include "copclean/pursuit.hpp"
#include "copclean/stochastic.hpp"
#include "copclean/sweep.hpp"
#include "copclean/verify.hpp"

using namespace copclean;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<std::string> connected_upto(int max_n) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_n; ++n) for_each_connected(n, [&](const Graph& g) { out.push_back(emit_graph6(g)); });
  return out;
}

std::size_t failures(const std::vector<SweepRecord>& records) {
  std::size_t f = 0;
  for (const auto& r : records) f += r.failed || r.status != RecordStatus::Ok;
  return f;
}

std::string joined(const std::vector<SweepRecord>& records) {
  std::string out;
  for (const auto& r : records) out += r.to_json(false).dump() + "\n";
  return out;
}

Outcome ac1() {
  Outcome o;
  const Graph c5 = cycle(5);
  o.expect(seeing_number(c5, 1) == 2, "seeing_number(C5,1) != 2");
  o.expect(inference_number(c5, 1, 1) == 1, "inference_number(C5,1,1) != 1");
  o.expect(max_clean(c5, 1, 1) == 4, "max_clean(C5,1,1) != 4");
  return o;
}

Outcome ac2() {
  Outcome o;
  const Graph h = heawood();
  const auto m = metrics(h);
  o.expect(m.order == 14 && m.min_degree == 3 && m.max_degree == 3 && m.girth == 6, "Heawood metrics");
  o.expect(max_clean(h, 2, 1) == 10, "max_clean(Heawood,2,1) != 10");
  o.expect(seeing_number(h, 1) == 3, "seeing_number(Heawood,1) != 3");
  return o;
}

Outcome ac3() {
  Outcome o;
  SweepOptions exact;
  exact.checks = {"see"};
  exact.context.k = 2;
  exact.context.l = 1;
  exact.context.greedy = false;
  const auto t0 = std::chrono::steady_clock::now();
  const auto small = sweep(connected_upto(7), exact);
  const double small_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(failures(small) == 0, std::to_string(failures(small)) + " counterexamples at n <= 7 (exact search)");
  o.expect(small_s < 60.0, "n <= 7 took " + std::to_string(small_s) + " s");

  SweepOptions fast = exact;
  fast.context.greedy = true;
  std::vector<std::string> eight;
  for_each_connected(8, [&](const Graph& g) { eight.push_back(emit_graph6(g)); });
  const auto big = sweep(eight, fast);
  o.expect(big.size() == 11117, "expected 11117 graphs on 8 vertices");
  o.expect(failures(big) == 0, std::to_string(failures(big)) + " counterexamples at n = 8");
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(small.size() + big.size()) + " graphs";
  return o;
}

Outcome ac4() {
  Outcome o;
  SuiteOptions so;
  so.max_n = 7;
  so.l = 1;
  for (const char* suite : {"ded-lipschitz", "see-infer-gap", "single-cop-bound", "chain"}) {
    const auto r = run_suite(suite, so);
    o.expect(r.ok() && r.skipped == 0, std::string(suite) + ": " + std::to_string(r.failed) + " violations, " + std::to_string(r.skipped) + " skipped");
  }
  o.expect(seeing_number(cycle(5), 1) - inference_number(cycle(5), 1, 1) == 1, "C5 does not realise gap 1");
  return o;
}

Outcome ac5() {
  Outcome o;
  SuiteOptions so;
  so.k = 2;
  so.m = 12;
  so.sampled_m = 16;
  so.samples = 1'000'000;
  so.seed = 2025;
  const auto r = run_suite("construction", so);
  o.expect(r.ok(), "construction suite: " + r.to_json(false)["counterexamples"].dump());
  o.expect(r.total == 6, "expected 6 construction assertions, got " + std::to_string(r.total));
  return o;
}

Outcome ac6() {
  Outcome o;
  const Graph c4 = cycle(4);
  o.expect(cop_number(c4) == 2, "cop_number(C4) != 2");
  o.expect(!capture_number_limited(c4, 1, 1), "one 1-visibility cop captures on C4");
  o.expect(capture_number_limited(c4, 2, 1), "two 1-visibility cops fail on C4");
  o.expect(reach_number(c4, 1) == 1, "reach_1(C4) != 1");
  const auto c5 = pursuit_solve(cycle(5), 2, 0);
  o.expect(c5.capture_time == 1, "classical capture time on C5 != 1");
  std::mt19937_64 rng(12);
  for (int i = 0; i < 50; ++i) {
    const Graph t = random_tree(2 + static_cast<int>(rng() % 11), rng);
    if (cop_number(t) != 1) o.expect(false, "tree " + emit_graph6(t) + " not cop-win");
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  MonteCarloOptions mo;
  mo.trials = 100'000;
  mo.seed = 20240;
  struct Case {
    const char* name;
    Graph g;
    int k;
  };
  for (const auto& c : {Case{"C5", cycle(5), 2}, Case{"K5", complete(5), 1}}) {
    const auto exact = expected_time(c.g, c.k, 1);
    const auto mc = monte_carlo(c.g, c.k, mo);
    const double z = std::abs(mc.mean - *exact.value) / mc.standard_error;
    o.expect(exact.value && z <= 3.0, std::string(c.name) + " Monte Carlo off by " + std::to_string(z) + " SE");
    std::printf("    %s k=%d: exact %.6f, Monte Carlo %.6f +- %.6f (%.2f SE)\n", c.name, c.k, *exact.value, mc.mean, mc.standard_error, z);
  }
  std::size_t mismatches = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const int cop = cop_number(g);
      for (int k = 1; k <= 2; ++k) mismatches += expected_time(g, k, 1).value.has_value() != (k >= cop);
    }
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " evcapt mismatches");

  // documented, not gated
  std::string matching;
  for (const auto& r : expected_time_conventions(cycle(5), 2, 1)) {
    std::printf("    C5 k=2 %s/%s: %.6f\n", to_string(r.convention), to_string(r.placement_rule), r.value ? *r.value : -1.0);
    if (r.value && std::abs(*r.value - 2.0) < 1e-9) matching += std::string(matching.empty() ? "" : ",") + to_string(r.convention) + "/" + to_string(r.placement_rule);
  }
  std::printf("    conventions giving 2: %s\n", matching.empty() ? "none" : matching.c_str());
  return o;
}

Outcome ac8() {
  Outcome o;
  SuiteOptions so;
  for (const auto& name : registered_suites()) {
    SuiteOptions a = so;
    SuiteOptions b = so;
    b.jobs = 4;
    const auto first = run_suite(name, a).to_json(false).dump();
    const auto second = run_suite(name, b).to_json(false).dump();
    o.expect(first == second, "suite " + name + " differs between runs");
  }
  SweepOptions sw;
  sw.checks = {"see", "maxclean", "infer", "chain", "girth-bound"};
  sw.context.k = 2;
  sw.context.witness = true;
  const auto lines = connected_upto(7);
  const auto one = sweep(lines, sw);
  sw.jobs = 4;
  const auto four = sweep(lines, sw);
  o.expect(joined(one) == joined(four), "sweep output depends on the worker count");

  // replay every witness
  std::size_t replayed = 0;
  for (int k = 1; k <= 2; ++k) {
    for (const auto& line : lines) {
      const Graph g = parse_graph6(line);
      const auto r = solve_cleaning(g, k, 1);
      if (!r.witness) continue;
      ++replayed;
      if (run_script(g, *r.witness).min_gas != r.achieved_gas_min) o.expect(false, "witness replay mismatch on " + line);
    }
  }
  o.note += (o.note.empty() ? "" : "; ") + std::to_string(replayed) + " witnesses replayed";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* what;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "C5 seeing/inference/max-clean", 1, ac1},
      {"AC2", "Heawood metrics, max-clean and seeing number", 300, ac2},
      {"AC3", "two 1-visibility cleaners clean every connected graph on n <= 8", 1800, ac3},
      {"AC4", "property suites on connected n <= 7", 1200, ac4},
      {"AC5", "construction suite (m=12 exhaustive, m=16 sampled)", 600, ac5},
      {"AC6", "pursuit values", 60, ac6},
      {"AC7", "stochastic consistency", 600, ac7},
      {"AC8", "determinism and witness replay", 1800, ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) out.expect(false, "over time budget");
    failed += !out.ok;
    std::printf("%s %s: %s (%.2f s / %.0f s)%s%s\n", out.ok ? "PASS" : "FAIL", c.id, c.what, secs, c.budget_s,
                out.note.empty() ? "" : " - ", out.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
