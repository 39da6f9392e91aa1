#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copclean/config_space.hpp"
#include "copclean/graph.hpp"

namespace copclean {

enum class Observation {
  /// cops observe after their own move and again after the robber's
  PerHalfMove,
  /// cops observe only after the robber's move
  PerRound,
};

struct LimitedOptions {
  /// Radius at which the robber counts as caught; 0 is capture.
  int capture_radius = 0;
  Observation observation = Observation::PerHalfMove;
  std::uint64_t state_budget = default_state_budget();
};

/// Limited-visibility pursuit against an omniscient robber, solved as a
/// least fixpoint over knowledge states (cop multiset, set of robber
/// positions consistent with every observation).
class KnowledgeGame {
 public:
  static constexpr std::uint32_t kNever = ~std::uint32_t{0};

  KnowledgeGame(const Graph& g, int k, int l, const LimitedOptions& options = {});

  const ConfigSpace& space() const noexcept { return space_; }
  std::size_t state_count() const noexcept { return states_; }
  /// Worst-case number of cop moves until capture from placement c, or kNever.
  std::uint32_t placement_time(ConfigId c) const { return placement_time_[c]; }

 private:
  ConfigSpace space_;
  std::size_t states_ = 0;
  std::vector<std::uint32_t> placement_time_;
};

struct LimitedResult {
  bool cops_win = false;
  std::optional<int> capture_time;
  std::vector<Vertex> placement;
  std::uint64_t states_explored = 0;
};

LimitedResult solve_capture_limited(const Graph& g, int k, int l, const LimitedOptions& options = {});
/// Can k cops with visibility l guarantee capture?
bool capture_number_limited(const Graph& g, int k, int l, const LimitedOptions& options = {});
/// Least such k.
int limited_capture_number(const Graph& g, int l, const LimitedOptions& options = {});

}  // namespace copclean
