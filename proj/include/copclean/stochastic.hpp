#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copclean/config_space.hpp"
#include "copclean/graph.hpp"
#include "copclean/knowledge.hpp"

namespace copclean {

enum class TimeConvention {
  /// cops move uniformly at random; the robber is an optimal adversary
  RandomMoves,
  /// cops play the worst-case optimal knowledge-set strategy
  BeliefOptimal,
};

enum class PlacementRule {
  /// cops pick the placement minimising the value
  Optimal,
  /// placement drawn uniformly, each cop independently over V
  Uniform,
};

const char* to_string(TimeConvention c);
const char* to_string(PlacementRule p);

struct ExpectedTimeOptions {
  int capture_radius = 0;
  TimeConvention convention = TimeConvention::RandomMoves;
  PlacementRule placement = PlacementRule::Optimal;
  MoveLaw law = MoveLaw::PerCop;
  Observation observation = Observation::PerHalfMove;
  double tolerance = 1e-9;
  std::uint64_t max_sweeps = 1'000'000;
  std::uint64_t state_budget = default_state_budget();
};

struct ExpectedTimeResult {
  /// nullopt means the robber escapes with positive probability (INFINITE)
  std::optional<double> value;
  TimeConvention convention = TimeConvention::RandomMoves;
  PlacementRule placement_rule = PlacementRule::Optimal;
  std::vector<Vertex> placement;
  bool converged = true;
  double residual = 0.0;
  std::uint64_t sweeps = 0;
};

/// Random-cop pursuit with a robber maximising expected capture time.
/// Values are in cop moves from a cops-to-move state.
class RandomPursuit {
 public:
  static constexpr double kInfinite = -1.0;

  RandomPursuit(const Graph& g, int k, int rho, const ExpectedTimeOptions& options = {});

  const ConfigSpace& space() const noexcept { return space_; }
  const MoveDistribution& moves() const noexcept { return dist_; }
  Mask capture_zone(ConfigId c) const { return zone_[c]; }
  /// Expected time from (c, r), kInfinite if the robber can escape forever
  /// with positive probability; 0 when r is already inside the zone.
  double value(ConfigId c, Vertex r) const;
  bool escapes(ConfigId c, Vertex r) const { return (infinite_[c] >> r) & 1; }
  /// States from which the robber wins the full-information game.
  bool robber_wins(ConfigId c, Vertex r) const { return (robber_win_[c] >> r) & 1; }
  /// Robber's best position against c (cops to move next).
  Vertex best_start(ConfigId c) const;
  /// Robber's best reply at r after the cops moved to c.
  Vertex best_reply(ConfigId c, Vertex r) const;
  /// Worst case over robber starts; kInfinite when escaping is possible.
  double placement_value(ConfigId c) const;

  bool converged() const noexcept { return converged_; }
  double residual() const noexcept { return residual_; }
  std::uint64_t sweeps() const noexcept { return sweeps_; }

 private:
  bool better(ConfigId c, Vertex a, Vertex b) const;

  int n_;
  Mask all_;
  std::vector<Mask> closed_;
  ConfigSpace space_;
  MoveDistribution dist_;
  std::vector<Mask> zone_;
  std::vector<Mask> robber_win_;
  std::vector<Mask> infinite_;
  std::vector<double> value_;
  bool converged_ = true;
  double residual_ = 0.0;
  std::uint64_t sweeps_ = 0;
};

/// l only matters for the belief-optimal convention.
ExpectedTimeResult expected_time(const Graph& g, int k, int l, const ExpectedTimeOptions& options = {});

/// The four combinations of convention and placement rule.
std::vector<ExpectedTimeResult> expected_time_conventions(const Graph& g, int k, int l, ExpectedTimeOptions options = {});

struct MonteCarloOptions {
  int capture_radius = 0;
  PlacementRule placement = PlacementRule::Optimal;
  MoveLaw law = MoveLaw::PerCop;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::uint64_t horizon = 10'000;
  int jobs = 1;
  std::uint64_t state_budget = default_state_budget();
};

struct MonteCarloResult {
  std::uint64_t trials = 0;
  std::uint64_t captured = 0;
  /// over captured trials; 0 when nothing was captured
  double mean = 0.0;
  double standard_error = 0.0;
  double capture_frequency = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 0;
};

/// Random cops against the robber that is greedy on the exact value table.
MonteCarloResult monte_carlo(const Graph& g, int k, const MonteCarloOptions& options = {});

}  // namespace copclean
