#include "copclean/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <istream>
#include <map>

#include "copclean/cleaning_solver.hpp"
#include "copclean/error.hpp"
#include "copclean/formats.hpp"
#include "copclean/knowledge.hpp"
#include "copclean/metrics.hpp"
#include "copclean/pursuit.hpp"

namespace copclean {

namespace {

void fail(CheckOutcome& out, const std::string& why) {
  if (!out.failed) out.failure = why;
  else out.failure += "; " + why;
  out.failed = true;
}

/// Replays a witness and confirms the claimed minimum.
bool replay_ok(const Graph& g, const SolveResult& r) {
  if (!r.witness) return true;
  return run_script(g, *r.witness).min_gas == r.achieved_gas_min;
}

CheckOutcome check_see(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  if (ctx.k) {
    SolveOptions opts;
    opts.state_budget = ctx.state_budget;
    opts.greedy_prepass = ctx.greedy;
    const auto r = solve_cleaning(g, *ctx.k, ctx.l, opts);
    if (r.capped) throw Error(ErrorCode::TooLarge, "cleaning search capped");
    out.values["cleanable"] = r.fully_cleanable;
    out.values["k"] = *ctx.k;
    out.values["solved_by_greedy"] = r.solved_by_greedy;
    if (!r.fully_cleanable) {
      fail(out, std::to_string(*ctx.k) + " cleaners cannot clean");
      out.values["maxclean"] = r.value;
    }
    if (!replay_ok(g, r)) fail(out, "witness replay mismatch");
    if ((ctx.witness || out.failed) && r.witness) out.values["witness"] = to_json(*r.witness);
  } else {
    out.values["see"] = seeing_number(g, ctx.l, ctx.state_budget);
  }
  return out;
}

CheckOutcome check_maxclean(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  SolveOptions opts;
  opts.state_budget = ctx.state_budget;
  const int k = ctx.k.value_or(1);
  const auto r = solve_cleaning(g, k, ctx.l, opts);
  if (r.capped) throw Error(ErrorCode::TooLarge, "cleaning search capped");
  out.values["maxclean"] = r.value;
  out.values["k"] = k;
  if (!replay_ok(g, r)) fail(out, "witness replay mismatch");
  if (ctx.witness && r.witness) out.values["witness"] = to_json(*r.witness);
  return out;
}

CheckOutcome check_chain(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  const int reach = reach_number(g, ctx.l, ctx.state_budget);
  const int cop = cop_number(g, ctx.state_budget);
  const int see = seeing_number(g, ctx.l, ctx.state_budget);
  out.values["reach"] = reach;
  out.values["cop"] = cop;
  out.values["see"] = see;
  if (reach > cop) fail(out, "reach > cop");
  if (see > cop) fail(out, "see > cop");
  if (reach > see) fail(out, "reach > see");
  try {
    LimitedOptions lo;
    lo.state_budget = ctx.state_budget;
    const int capt = limited_capture_number(g, ctx.l, lo);
    out.values["capt"] = capt;
    if (cop > capt) fail(out, "cop > capt");
    if (see > capt) fail(out, "see > capt");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooLarge) throw;
    out.values["capt"] = "TOO_LARGE";
  }
  return out;
}

CheckOutcome check_lipschitz(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  const int top = std::min(3, g.order());
  std::vector<int> ded;
  for (int r = 0; r <= top; ++r) ded.push_back(inference_number(g, r, ctx.l, ctx.state_budget));
  out.values["ded"] = ded;
  for (int r = 0; r <= top; ++r) {
    for (int s = r + 1; s <= top; ++s) {
      if (ded[s] > ded[r]) fail(out, "ded not monotone at r=" + std::to_string(r) + ",s=" + std::to_string(s));
      if (ded[r] - ded[s] > s - r) fail(out, "ded gap exceeds s-r at r=" + std::to_string(r) + ",s=" + std::to_string(s));
    }
  }
  return out;
}

CheckOutcome check_gap(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  const int see = seeing_number(g, ctx.l, ctx.state_budget);
  const int ded1 = inference_number(g, 1, ctx.l, ctx.state_budget);
  out.values["see"] = see;
  out.values["ded1"] = ded1;
  if (see - ded1 < 0 || see - ded1 > 1) fail(out, "see - ded1 outside {0,1}");
  return out;
}

CheckOutcome check_girth(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  const auto gm = metrics(g, ctx.l);
  const bool applies = !gm.girth || *gm.girth >= 2 * ctx.l + 4;
  out.values["applies"] = applies;
  out.values["min_degree"] = gm.min_degree;
  if (!applies) return out;
  const int see = seeing_number(g, ctx.l, ctx.state_budget);
  out.values["see"] = see;
  if (see < gm.min_degree) fail(out, "see below minimum degree");
  return out;
}

CheckOutcome check_single_cop(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  SolveOptions opts;
  opts.state_budget = ctx.state_budget;
  const auto r = solve_cleaning(g, 1, ctx.l, opts);
  if (r.capped) throw Error(ErrorCode::TooLarge, "cleaning search capped");
  const int bound = std::min(g.order(), max_l_degree(g, ctx.l) + 2);
  out.values["maxclean"] = r.value;
  out.values["bound"] = bound;
  if (r.value < bound) fail(out, "single cleaner below min(n, Delta_l + 2)");
  return out;
}

CheckOutcome check_clarke(const Graph& g, const CheckContext& ctx) {
  CheckOutcome out;
  LimitedOptions lo;
  lo.state_budget = ctx.state_budget;
  const int see = seeing_number(g, ctx.l, ctx.state_budget);
  const int capt = limited_capture_number(g, ctx.l, lo);
  const int cop = cop_number(g, ctx.state_budget);
  out.values["see"] = see;
  out.values["capt"] = capt;
  out.values["cop"] = cop;
  out.values["dichotomy"] = see == capt || (cop <= capt && capt <= cop + 1);
  return out;
}

using CheckFn = CheckOutcome (*)(const Graph&, const CheckContext&);

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table{
      {"see", check_see},
      {"infer",
       [](const Graph& g, const CheckContext& ctx) {
         CheckOutcome out;
         out.values["infer"] = inference_number(g, ctx.r, ctx.l, ctx.state_budget);
         out.values["r"] = ctx.r;
         return out;
       }},
      {"maxclean", check_maxclean},
      {"cop",
       [](const Graph& g, const CheckContext& ctx) {
         CheckOutcome out;
         out.values["cop"] = cop_number(g, ctx.state_budget);
         return out;
       }},
      {"reach",
       [](const Graph& g, const CheckContext& ctx) {
         CheckOutcome out;
         out.values["reach"] = reach_number(g, ctx.l, ctx.state_budget);
         return out;
       }},
      {"chain", check_chain},
      {"ded-lipschitz", check_lipschitz},
      {"see-infer-gap", check_gap},
      {"girth-bound", check_girth},
      {"single-cop-bound", check_single_cop},
      {"clarke-probe", check_clarke},
  };
  return table;
}

const char* status_name(RecordStatus s) {
  switch (s) {
    case RecordStatus::Ok: return "OK";
    case RecordStatus::Skipped: return "SKIPPED";
    case RecordStatus::Error: return "ERROR";
  }
  return "ERROR";
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : check_table()) v.push_back(name);
    return v;
  }();
  return names;
}

CheckOutcome run_check(const std::string& name, const Graph& g, const CheckContext& ctx) {
  const auto& table = check_table();
  const auto it = table.find(name);
  if (it == table.end()) throw Error(ErrorCode::BadParam, "unknown check '" + name + "'");
  return it->second(g, ctx);
}

Json SweepRecord::to_json(bool timing) const {
  Json j{{"line", line}, {"graph6", graph6}};
  if (status != RecordStatus::Error) {
    j["n"] = n;
    j["m"] = m;
  }
  j["status"] = status_name(status);
  if (!detail.empty()) j["detail"] = detail;
  if (status != RecordStatus::Error) {
    j["checks"] = checks;
    j["failed"] = failed;
  }
  if (timing) j["elapsed_ms"] = elapsed_ms;
  return j;
}

SweepRecord evaluate_line(std::size_t line_number, const std::string& line, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  rec.line = line_number;
  rec.graph6 = line;
  try {
    const Graph g = parse_graph6(line);
    rec.n = g.order();
    rec.m = g.size();
    if (g.order() >= 9 && !options.big) {
      rec.status = RecordStatus::Skipped;
      rec.detail = "n >= 9 requires --big";
    } else {
      for (const auto& name : options.checks) {
        try {
          auto outcome = run_check(name, g, options.context);
          if (outcome.failed) {
            rec.failed = true;
            outcome.values["failure"] = outcome.failure;
          }
          rec.checks[name] = outcome.values;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TooLarge) throw;
          rec.checks[name] = {{"skipped", e.what()}};
          rec.status = RecordStatus::Skipped;
          rec.detail = "TOO_LARGE in " + name;
        }
      }
    }
  } catch (const std::exception& e) {
    rec.status = RecordStatus::Error;
    rec.detail = "line " + std::to_string(line_number) + ": " + e.what();
    rec.checks = Json::object();
    rec.failed = false;
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<SweepRecord> sweep(const std::vector<std::string>& lines, const SweepOptions& options, std::size_t first_line) {
  for (const auto& name : options.checks) {
    if (!check_table().contains(name)) throw Error(ErrorCode::BadParam, "unknown check '" + name + "'");
  }
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].empty()) index.push_back(i);
  std::vector<SweepRecord> records(index.size());
  parallel_for(index.size(), options.jobs, [&](std::size_t i) {
    records[i] = evaluate_line(first_line + index[i], lines[index[i]], options);
  });
  return records;
}

Json sweep_summary(const std::vector<Json>& records) {
  std::size_t ok = 0, skipped = 0, errors = 0, failed = 0;
  Json counterexamples = Json::array();
  for (const auto& r : records) {
    const auto status = r.value("status", "ERROR");
    if (status == "OK") ++ok;
    else if (status == "SKIPPED") ++skipped;
    else ++errors;
    if (r.value("failed", false)) {
      ++failed;
      counterexamples.push_back(r["graph6"]);
    }
  }
  return {{"summary",
           {{"total", records.size()},
            {"ok", ok},
            {"skipped", skipped},
            {"errors", errors},
            {"failed", failed},
            {"counterexamples", counterexamples}}}};
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

}  // namespace copclean
