#include "copclean/json_io.hpp"

#include "copclean/error.hpp"

namespace copclean {

namespace {

Json optional_int(const std::optional<int>& v, const char* sentinel) { return v ? Json(*v) : Json(sentinel); }

template <class T>
std::vector<T> vector_of(const Json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array()) throw Error(ErrorCode::BadParam, std::string("script needs array field '") + field + "'");
  return j[field].get<std::vector<T>>();
}

}  // namespace

Json to_json(const GraphMetrics& m) {
  return {{"n", m.order},
          {"m", m.edges},
          {"min_degree", m.min_degree},
          {"max_degree", m.max_degree},
          {"regular", m.min_degree == m.max_degree ? Json(m.min_degree) : Json(nullptr)},
          {"l", m.radius_l},
          {"max_l_degree", m.max_l_degree},
          {"girth", optional_int(m.girth, "ACYCLIC")},
          {"diameter", optional_int(m.diameter, "DISCONNECTED")},
          {"connected", m.connected}};
}

Json to_json(const StrategyScript& s) { return {{"l", s.l}, {"place", s.placements}, {"turns", s.turns}}; }

StrategyScript script_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadParam, "script must be a JSON object");
  StrategyScript s;
  s.l = j.value("l", 1);
  s.placements = vector_of<Vertex>(j, "place");
  s.turns = vector_of<std::vector<Vertex>>(j, "turns");
  return s;
}

Json to_json(const CleaningState& s) {
  return {{"t", s.t},
          {"phase", s.phase == Phase::AfterClean ? "AFTER_CLEAN" : "AFTER_SPREAD"},
          {"cops", s.cops},
          {"gas", s.gas.members()},
          {"gas_count", s.gas.size()}};
}

Json to_json(const SolveResult& r, bool witness) {
  Json j{{"maxclean", r.value},
         {"achieved_gas_min", r.achieved_gas_min},
         {"fully_cleanable", r.fully_cleanable},
         {"states_explored", r.states_explored},
         {"capped", r.capped},
         {"solved_by_greedy", r.solved_by_greedy}};
  if (witness && r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

Json to_json(const PursuitResult& r) {
  return {{"cops_win", r.cops_win},
          {"capture_time", r.capture_time ? Json(*r.capture_time) : Json("NEVER")},
          {"placement", r.placement},
          {"states_explored", r.states_explored}};
}

Json to_json(const LimitedResult& r) {
  return {{"capt", r.cops_win},
          {"capture_time", r.capture_time ? Json(*r.capture_time) : Json("NEVER")},
          {"placement", r.placement},
          {"states_explored", r.states_explored}};
}

Json to_json(const ExpectedTimeResult& r) {
  return {{"convention", to_string(r.convention)},
          {"placement_rule", to_string(r.placement_rule)},
          {"value", r.value ? Json(*r.value) : Json("INFINITE")},
          {"placement", r.placement},
          {"converged", r.converged},
          {"residual", r.residual},
          {"sweeps", r.sweeps}};
}

Json to_json(const MonteCarloResult& r) {
  return {{"trials", r.trials},
          {"captured", r.captured},
          {"mean", r.mean},
          {"standard_error", r.standard_error},
          {"ci95", {r.mean - 1.96 * r.standard_error, r.mean + 1.96 * r.standard_error}},
          {"capture_frequency", r.capture_frequency},
          {"seed", r.seed},
          {"horizon", r.horizon}};
}

Json to_json(const BlockingReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"robber", v.robber}, {"cop", v.cop}, {"blocked", v.blocked_exponents}});
  Json j{{"passed", r.passed},
         {"exhaustive", r.exhaustive},
         {"checked_pairs", r.checked_pairs},
         {"violation_count", r.violation_count},
         {"violations", violations}};
  if (!r.exhaustive) j["seed"] = r.seed;
  return j;
}

std::string trace_to_jsonl(const Trace& t) {
  std::string out;
  for (const auto& s : t.states) out += to_json(s).dump() + "\n";
  Json summary{{"min_gas", t.min_gas}, {"fully_cleaned_at", t.fully_cleaned_at ? Json(*t.fully_cleaned_at) : Json(nullptr)}};
  out += summary.dump() + "\n";
  return out;
}

}  // namespace copclean
