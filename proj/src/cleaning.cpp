#include "copclean/cleaning.hpp"

#include <algorithm>
#include <string>

#include "copclean/error.hpp"

namespace copclean {

std::vector<Vertex> CleaningState::sorted_cops() const {
  auto out = cops;
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sight(const Graph& g, std::span<const Vertex> cops, int l) {
  VertexSet seen(g.order());
  for (Vertex c : cops) seen |= closed_l_neighborhood(g, c, l);
  return seen;
}

CleaningState init_state(const Graph& g, std::span<const Vertex> placements, int l) {
  if (placements.empty()) throw Error(ErrorCode::BadK, "at least one cleaner is required");
  if (l < 0) throw Error(ErrorCode::BadParam, "negative visibility");
  for (Vertex v : placements) g.check_vertex(v);
  CleaningState s;
  s.cops.assign(placements.begin(), placements.end());
  s.l = l;
  s.gas = VertexSet::full(g.order()) - sight(g, placements, l);
  return s;
}

StepResult step(const Graph& g, const CleaningState& s, std::span<const Vertex> targets) {
  if (targets.size() != s.cops.size())
    throw Error(ErrorCode::IllegalMove, "expected " + std::to_string(s.cops.size()) + " targets, got " + std::to_string(targets.size()));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    g.check_vertex(targets[i]);
    if (targets[i] != s.cops[i] && !g.adjacent(s.cops[i], targets[i]))
      throw Error(ErrorCode::IllegalMove, "cleaner " + std::to_string(i) + " cannot move " + std::to_string(s.cops[i]) + " -> " + std::to_string(targets[i]));
  }
  StepResult out;
  out.cleaned.cops.assign(targets.begin(), targets.end());
  out.cleaned.l = s.l;
  out.cleaned.t = s.t + 1;
  out.cleaned.phase = Phase::AfterClean;
  const VertexSet seen = sight(g, targets, s.l);
  out.cleaned.gas = s.gas - seen;

  out.spread = out.cleaned;
  out.spread.phase = Phase::AfterSpread;
  out.cleaned.gas.for_each([&](Vertex u) {
    for (Vertex w : g.neighbors(u))
      if (!seen.contains(w)) out.spread.gas.insert(w);
  });
  return out;
}

Trace run_script(const Graph& g, const StrategyScript& script) {
  Trace trace;
  trace.states.push_back(init_state(g, script.placements, script.l));
  trace.min_gas = trace.states.back().gas.size();
  if (trace.min_gas == 0) trace.fully_cleaned_at = 0;
  for (std::size_t turn = 0; turn < script.turns.size(); ++turn) {
    StepResult next;
    try {
      next = step(g, trace.states.back(), script.turns[turn]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::IllegalMove || e.code() == ErrorCode::VertexOutOfRange)
        throw Error(ErrorCode::IllegalMove, "turn " + std::to_string(turn + 1) + ": " + e.what());
      throw;
    }
    const int gas = next.cleaned.gas.size();
    if (gas < trace.min_gas) trace.min_gas = gas;
    if (gas == 0 && !trace.fully_cleaned_at) trace.fully_cleaned_at = next.cleaned.t;
    trace.states.push_back(std::move(next.cleaned));
    trace.states.push_back(std::move(next.spread));
  }
  return trace;
}

}  // namespace copclean
