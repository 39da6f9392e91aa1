#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copclean/config_space.hpp"
#include "copclean/graph.hpp"

namespace copclean {

/// Full-information cops and robber with capture radius rho, solved by
/// backward induction over (cop multiset, robber) positions. Capture is
/// tested after each cop move; the robber never moves into the radius.
class PursuitGame {
 public:
  static constexpr std::uint16_t kNever = 0xFFFF;

  PursuitGame(const Graph& g, int k, int rho, std::uint64_t state_budget = default_state_budget());

  const ConfigSpace& space() const noexcept { return space_; }
  const MoveTable& moves() const noexcept { return moves_; }
  int radius() const noexcept { return rho_; }
  /// Closed rho-neighbourhood of the cops.
  Mask capture_zone(ConfigId c) const { return zone_[c]; }
  /// Optimal number of cop moves to capture from the cop-to-move state, or kNever.
  std::uint16_t capture_time(ConfigId c, Vertex robber) const {
    return time_[static_cast<std::size_t>(c) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(robber)];
  }
  /// Robber placements available against placement c (outside the zone).
  Mask robber_starts(ConfigId c) const { return all_ & ~zone_[c]; }
  /// Worst-case capture time over robber placements; kNever if the robber escapes.
  std::uint16_t placement_time(ConfigId c) const;

 private:
  int n_;
  int rho_;
  Mask all_;
  ConfigSpace space_;
  MoveTable moves_;
  std::vector<Mask> zone_;
  std::vector<std::uint16_t> time_;
};

struct PursuitResult {
  bool cops_win = false;
  std::optional<int> capture_time;
  std::vector<Vertex> placement;
  std::uint64_t states_explored = 0;
};

PursuitResult pursuit_solve(const Graph& g, int k, int rho, std::uint64_t state_budget = default_state_budget());
int cop_number(const Graph& g, std::uint64_t state_budget = default_state_budget());
/// Least number of full-visibility cops that can force distance <= l.
int reach_number(const Graph& g, int l, std::uint64_t state_budget = default_state_budget());

}  // namespace copclean
