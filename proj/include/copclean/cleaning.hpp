#pragma once

#include <optional>
#include <vector>

#include "copclean/graph.hpp"

namespace copclean {

enum class Phase { AfterClean, AfterSpread };

/// One snapshot of the cleaning process. Cops are kept in placement order so
/// that every script turn lines up with a fixed cleaner.
struct CleaningState {
  std::vector<Vertex> cops;
  VertexSet gas;
  int t = 0;
  Phase phase = Phase::AfterClean;
  int l = 1;

  std::vector<Vertex> sorted_cops() const;
  bool operator==(const CleaningState&) const = default;
};

struct StrategyScript {
  int l = 1;
  std::vector<Vertex> placements;
  std::vector<std::vector<Vertex>> turns;
  bool operator==(const StrategyScript&) const = default;
};

struct Trace {
  /// Initial snapshot, then AfterClean/AfterSpread pairs per turn.
  std::vector<CleaningState> states;
  int min_gas = 0;
  std::optional<int> fully_cleaned_at;
};

/// Union of the closed l-neighbourhoods of the given vertices.
VertexSet sight(const Graph& g, std::span<const Vertex> cops, int l);

CleaningState init_state(const Graph& g, std::span<const Vertex> placements, int l);

struct StepResult {
  CleaningState cleaned;
  CleaningState spread;
};

/// Moves every cleaner (targets[i] must lie in N[cops[i]]), clears the new
/// sight, then runs one simultaneous spreading round into unseen vertices.
StepResult step(const Graph& g, const CleaningState& s, std::span<const Vertex> targets);

Trace run_script(const Graph& g, const StrategyScript& script);

}  // namespace copclean
