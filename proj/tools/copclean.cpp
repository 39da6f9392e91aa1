// Command-line front end for the copclean library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "copclean/cleaning_solver.hpp"
#include "copclean/construction.hpp"
#include "copclean/enumerate.hpp"
#include "copclean/error.hpp"
#include "copclean/families.hpp"
#include "copclean/formats.hpp"
#include "copclean/json_io.hpp"
#include "copclean/knowledge.hpp"
#include "copclean/metrics.hpp"
#include "copclean/pursuit.hpp"
#include "copclean/stochastic.hpp"
#include "copclean/sweep.hpp"
#include "copclean/verify.hpp"

using namespace copclean;

namespace {

constexpr int kExitSuiteFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTooLarge = 3;

struct GraphSource {
  std::string in;
  std::string edges;
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("--in", in, "graph6 file (first graph is used)");
    cmd->add_option("--edges", edges, "edge-list file");
    cmd->add_option("--family", family, "named family, e.g. cycle:5, heawood");
  }

  Graph load() const {
    const int given = !in.empty() + !edges.empty() + !family.empty();
    if (given != 1) throw CLI::ValidationError("graph", "give exactly one of --in, --edges, --family");
    if (!family.empty()) return make_family(family);
    std::ifstream file(in.empty() ? edges : in);
    if (!file) throw CLI::ValidationError("graph", "cannot open " + (in.empty() ? edges : in));
    if (!edges.empty()) return parse_edge_list(file, edges);
    for (std::string line; std::getline(file, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return parse_graph6(line).with_name(in);
    }
    throw Error(ErrorCode::Truncated, "no graph in " + in);
  }
};

bool compact = false;

void print(const Json& j) { std::cout << (compact ? j.dump() : j.dump(2)) << "\n"; }

MoveLaw parse_law(const std::string& s) { return s == "uniform-config" ? MoveLaw::UniformConfig : MoveLaw::PerCop; }
Observation parse_observation(const std::string& s) { return s == "round" ? Observation::PerRound : Observation::PerHalfMove; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cleaning, limited-visibility pursuit and related solvers"};
  app.require_subcommand(1);
  app.add_flag("--json", compact, "compact single-line JSON output");

  int l = 1;
  int k = 1;
  int r = 1;
  int rho = 0;
  int jobs = 1;
  std::uint64_t seed = 1;
  bool witness = false;
  bool big = false;
  bool timing = false;
  GraphSource source;

  auto* metrics_cmd = app.add_subcommand("metrics", "basic invariants of a graph");
  source.attach(metrics_cmd);
  metrics_cmd->add_option("--l", l, "radius for Delta_l");

  auto* gen = app.add_subcommand("gen", "emit graph6 for connected graphs or a family");
  int gen_n = 0;
  bool gen_upto = false;
  gen->add_option("--n", gen_n, "order of the connected graphs to enumerate");
  gen->add_flag("--upto", gen_upto, "all orders 1..n");
  gen->add_option("--family", source.family, "emit one named family instead");
  gen->add_flag("--big", big, "allow n >= 9");

  auto* construct = app.add_subcommand("construct", "build and check the hub construction");
  int cm = 12;
  int ck = 2;
  std::uint64_t samples = 0;
  bool emit = false;
  construct->add_option("--k", ck, "half the number of classes");
  construct->add_option("--m", cm, "group exponent");
  construct->add_option("--samples", samples, "sampled blocking check instead of exhaustive");
  construct->add_option("--seed", seed, "sampling seed");
  construct->add_flag("--emit", emit, "print graph6 of the construction only");
  construct->add_flag("--witness", witness, "include the scripted strategy");

  auto* sim = app.add_subcommand("clean-sim", "replay a cleaning script and print its trace as JSON lines");
  source.attach(sim);
  std::string script_file;
  sim->add_option("--script", script_file, "JSON script {\"l\",\"place\",\"turns\"}")->required();

  auto* solve = app.add_subcommand("solve", "exact solvers");
  source.attach(solve);
  std::string problem;
  std::string observation = "half";
  solve->add_option("problem", problem, "see|infer|maxclean|cop|reach|capture-limited")
      ->required()
      ->check(CLI::IsMember({"see", "infer", "maxclean", "cop", "reach", "capture-limited"}));
  auto* k_opt = solve->add_option("--k", k, "number of cops");
  solve->add_option("--l", l, "visibility radius");
  solve->add_option("--r", r, "gas tolerance for infer");
  solve->add_option("--rho", rho, "capture radius for capture-limited");
  solve->add_option("--observation", observation, "half|round")->check(CLI::IsMember({"half", "round"}));
  solve->add_flag("--witness", witness, "include a witness script");

  auto* et = app.add_subcommand("expected-time", "expected capture time with random cops");
  source.attach(et);
  std::string convention = "all";
  std::string placement = "optimal";
  std::string law = "per-cop";
  et->add_option("--k", k, "number of cops");
  et->add_option("--l", l, "visibility radius (belief-optimal only)");
  et->add_option("--rho", rho, "capture radius");
  et->add_option("--convention", convention, "random|belief|all")->check(CLI::IsMember({"random", "belief", "all"}));
  et->add_option("--placement", placement, "optimal|uniform")->check(CLI::IsMember({"optimal", "uniform"}));
  et->add_option("--law", law, "per-cop|uniform-config")->check(CLI::IsMember({"per-cop", "uniform-config"}));
  et->add_option("--observation", observation, "half|round")->check(CLI::IsMember({"half", "round"}));

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate with random cops");
  source.attach(mc);
  std::uint64_t trials = 100000;
  std::uint64_t horizon = 10000;
  mc->add_option("--k", k, "number of cops");
  mc->add_option("--rho", rho, "capture radius");
  mc->add_option("--trials", trials, "number of trials");
  mc->add_option("--horizon", horizon, "cop moves per trial");
  mc->add_option("--seed", seed, "base seed");
  mc->add_option("--jobs", jobs, "worker threads");
  mc->add_option("--placement", placement, "optimal|uniform")->check(CLI::IsMember({"optimal", "uniform"}));
  mc->add_option("--law", law, "per-cop|uniform-config")->check(CLI::IsMember({"per-cop", "uniform-config"}));

  auto* sw = app.add_subcommand("sweep", "run checks over a graph6 stream");
  std::string sweep_in;
  std::string sweep_out;
  bool resume = false;
  std::string checks_csv = "see";
  auto* sweep_k = sw->add_option("--k", k, "cop count for the see check");
  sw->add_option("--in", sweep_in, "graph6 input (default stdin)");
  sw->add_option("--out", sweep_out, "write records to this file");
  sw->add_flag("--resume", resume, "continue an interrupted --out file");
  sw->add_option("--checks", checks_csv, "comma-separated check names");
  sw->add_option("--l", l, "visibility radius");
  sw->add_option("--r", r, "gas tolerance for infer");
  sw->add_option("--jobs", jobs, "worker threads");
  sw->add_flag("--big", big, "allow n >= 9");
  sw->add_flag("--timing", timing, "include elapsed milliseconds");
  sw->add_flag("--witness", witness, "include witness scripts");
  bool no_greedy = false;
  sw->add_flag("--no-greedy", no_greedy, "skip the heuristic pre-pass");

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteOptions so;
  vf->add_option("suite", suite, "suite name or 'list'")->required();
  vf->add_option("--max-n", so.max_n, "largest order (0 = suite default)");
  vf->add_option("--k", so.k, "cop count");
  vf->add_option("--m", so.m, "construction exponent");
  vf->add_option("--sampled-m", so.sampled_m, "construction exponent for the sampled check");
  vf->add_option("--samples", so.samples, "sampled blocking pairs");
  vf->add_option("--l", so.l, "visibility radius");
  vf->add_option("--seed", so.seed, "sampling seed");
  vf->add_option("--jobs", so.jobs, "worker threads");
  vf->add_flag("--timing", so.timing, "include wall time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*metrics_cmd) {
      const Graph g = source.load();
      Json j = to_json(metrics(g, l));
      j["graph6"] = emit_graph6(g);
      print(j);
    } else if (*gen) {
      if (!source.family.empty()) {
        std::cout << emit_graph6(make_family(source.family)) << "\n";
        return 0;
      }
      if (gen_n < 1) throw CLI::ValidationError("--n", "give --n >= 1 or --family");
      if (gen_n >= 9 && !big) throw CLI::ValidationError("--n", "n >= 9 requires --big");
      for (int n = gen_upto ? 1 : gen_n; n <= gen_n; ++n)
        for_each_connected(n, [](const Graph& g) { std::cout << emit_graph6(g) << "\n"; });
    } else if (*construct) {
      const ConstructionSpec spec{ck, cm, default_partition(ck, cm)};
      const auto cg = build_construction(spec);
      if (emit) {
        std::cout << emit_graph6(cg.graph) << "\n";
        return 0;
      }
      const auto blocking = samples > 0 ? check_blocking_sampled(cg, samples, seed) : check_blocking(cg);
      const auto script = scripted_seeing_strategy(cg);
      const auto trace = run_script(cg.graph, script);
      const auto gm = metrics(cg.graph);
      Json j{{"k", ck},
             {"m", cm},
             {"n", cg.graph.order()},
             {"edges", cg.graph.size()},
             {"outside_degree", cg.graph.degree(cg.outside(0, 0))},
             {"middle_degree", cg.graph.degree(cg.middle(0))},
             {"max_degree", gm.max_degree},
             {"spaced", partition_is_spaced(spec)},
             {"blocking", to_json(blocking)},
             {"middle_dominating", check_middle_dominating(cg)},
             {"scripted_cleaned_at", trace.fully_cleaned_at ? Json(*trace.fully_cleaned_at) : Json(nullptr)}};
      if (witness) j["script"] = to_json(script);
      print(j);
    } else if (*sim) {
      const Graph g = source.load();
      std::ifstream file(script_file);
      if (!file) throw CLI::ValidationError("--script", "cannot open " + script_file);
      Json doc;
      try {
        doc = Json::parse(file);
      } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::BadParam, std::string("script is not valid JSON: ") + e.what());
      }
      std::cout << trace_to_jsonl(run_script(g, script_from_json(doc)));
    } else if (*solve) {
      const Graph g = source.load();
      Json j{{"graph6", emit_graph6(g)}, {"l", l}};
      if (problem == "see" || problem == "infer") {
        const int target = problem == "see" ? 0 : r;
        const std::string key = problem == "see" ? "see" : "infer";
        SolveOptions opts;
        opts.target_gas = target;
        for (int kk = 1; kk <= g.order(); ++kk) {
          const auto res = solve_cleaning(g, kk, l, opts);
          if (res.achieved_gas_min <= target) {
            j[key] = kk;
            if (problem == "infer") j["r"] = r;
            if (witness && res.witness) j["witness"] = to_json(*res.witness);
            break;
          }
          if (res.capped) {
            j["error"] = "TOO_LARGE: state budget exhausted";
            j[key + "_lower_bound"] = kk;
            print(j);
            return kExitTooLarge;
          }
        }
      } else if (problem == "maxclean") {
        if (!*k_opt) throw CLI::ValidationError("--k", "maxclean needs --k");
        const auto res = solve_cleaning(g, k, l);
        j["k"] = k;
        j.update(to_json(res, witness));
        if (res.capped) {
          j["error"] = "TOO_LARGE: state budget exhausted; maxclean is a lower bound";
          print(j);
          return kExitTooLarge;
        }
      } else if (problem == "cop" || problem == "reach") {
        const int radius = problem == "cop" ? 0 : l;
        if (*k_opt) {
          j["k"] = k;
          j.update(to_json(pursuit_solve(g, k, radius)));
        } else {
          j[problem] = reach_number(g, radius);
        }
      } else {
        LimitedOptions lo;
        lo.capture_radius = rho;
        lo.observation = parse_observation(observation);
        j["rho"] = rho;
        j["observation"] = observation;
        if (*k_opt) {
          j["k"] = k;
          j.update(to_json(solve_capture_limited(g, k, l, lo)));
        } else {
          j["capt_number"] = limited_capture_number(g, l, lo);
        }
      }
      print(j);
    } else if (*et) {
      const Graph g = source.load();
      ExpectedTimeOptions eo;
      eo.capture_radius = rho;
      eo.law = parse_law(law);
      eo.observation = parse_observation(observation);
      eo.placement = placement == "uniform" ? PlacementRule::Uniform : PlacementRule::Optimal;
      Json j{{"graph6", emit_graph6(g)}, {"k", k}, {"l", l}, {"rho", rho}, {"law", law}, {"tolerance", eo.tolerance}};
      if (convention == "all") {
        Json rows = Json::array();
        for (const auto& res : expected_time_conventions(g, k, l, eo)) rows.push_back(to_json(res));
        j["conventions"] = rows;
      } else {
        eo.convention = convention == "belief" ? TimeConvention::BeliefOptimal : TimeConvention::RandomMoves;
        j.update(to_json(expected_time(g, k, l, eo)));
      }
      print(j);
    } else if (*mc) {
      const Graph g = source.load();
      MonteCarloOptions mo;
      mo.capture_radius = rho;
      mo.law = parse_law(law);
      mo.placement = placement == "uniform" ? PlacementRule::Uniform : PlacementRule::Optimal;
      mo.trials = trials;
      mo.horizon = horizon;
      mo.seed = seed;
      mo.jobs = jobs;
      Json j{{"graph6", emit_graph6(g)}, {"k", k}, {"rho", rho}, {"convention", "RANDOM_MOVES"}, {"placement_rule", placement}};
      j.update(to_json(monte_carlo(g, k, mo)));
      print(j);
    } else if (*sw) {
      SweepOptions opts;
      std::stringstream csv(checks_csv);
      for (std::string name; std::getline(csv, name, ',');)
        if (!name.empty()) opts.checks.push_back(name);
      opts.context.l = l;
      opts.context.r = r;
      opts.context.witness = witness;
      opts.context.greedy = !no_greedy;
      if (*sweep_k) opts.context.k = k;
      opts.jobs = jobs;
      opts.big = big;
      opts.timing = timing;

      std::vector<std::string> lines;
      if (sweep_in.empty() || sweep_in == "-") {
        lines = read_lines(std::cin);
      } else {
        std::ifstream file(sweep_in);
        if (!file) throw CLI::ValidationError("--in", "cannot open " + sweep_in);
        lines = read_lines(file);
      }

      // records already present in --out; a trailing summary is dropped
      std::vector<Json> previous;
      std::size_t done_lines = 0;
      if (resume && !sweep_out.empty()) {
        std::ifstream old(sweep_out);
        for (std::string line; std::getline(old, line);) {
          if (line.empty()) continue;
          Json rec;
          try {
            rec = Json::parse(line);
          } catch (const Json::parse_error&) {
            break;  // torn final write
          }
          if (rec.contains("summary")) break;
          done_lines = rec.value("line", done_lines);
          previous.push_back(std::move(rec));
        }
      }
      const std::vector<std::string> todo(lines.begin() + static_cast<std::ptrdiff_t>(std::min(done_lines, lines.size())), lines.end());

      std::ofstream out_file;
      if (!sweep_out.empty()) {
        out_file.open(sweep_out, std::ios::trunc);
        if (!out_file) throw CLI::ValidationError("--out", "cannot write " + sweep_out);
        for (const auto& rec : previous) out_file << rec.dump() << "\n";
      }
      std::ostream& out = sweep_out.empty() ? std::cout : out_file;

      // process in chunks so an interrupted run leaves usable records behind
      constexpr std::size_t kChunk = 512;
      std::vector<Json> all = previous;
      for (std::size_t start = 0; start < todo.size(); start += kChunk) {
        const std::vector<std::string> chunk(todo.begin() + static_cast<std::ptrdiff_t>(start),
                                            todo.begin() + static_cast<std::ptrdiff_t>(std::min(todo.size(), start + kChunk)));
        for (const auto& rec : sweep(chunk, opts, done_lines + start + 1)) {
          all.push_back(rec.to_json(timing));
          out << all.back().dump() << "\n";
        }
        out.flush();
      }
      out << sweep_summary(all).dump() << "\n";
    } else if (*vf) {
      if (suite == "list") {
        for (const auto& name : registered_suites()) std::cout << name << "\n";
        return 0;
      }
      const auto report = run_suite(suite, so);
      print(report.to_json(so.timing));
      return report.ok() ? 0 : kExitSuiteFail;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    print(Json{{"error", e.what()}});
    return e.code() == ErrorCode::TooLarge ? kExitTooLarge : kExitUsage;
  }
  return 0;
}
