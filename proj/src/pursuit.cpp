#include "copclean/pursuit.hpp"

#include <algorithm>
#include <string>

#include "copclean/error.hpp"

namespace copclean {

namespace {

ConfigSpace checked_space(const Graph& g, int k, int rho, std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cop is required");
  if (rho < 0) throw Error(ErrorCode::BadParam, "negative capture radius");
  if (g.order() < 1 || g.order() > kBitRowLimit) throw Error(ErrorCode::TooLarge, "pursuit solver supports 1 <= n <= 64");
  if (ConfigSpace::count_for(g.order(), k) * static_cast<std::uint64_t>(g.order()) > budget)
    throw Error(ErrorCode::TooLarge, "pursuit state space exceeds the state budget");
  return ConfigSpace(g.order(), k);
}

}  // namespace

PursuitGame::PursuitGame(const Graph& g, int k, int rho, std::uint64_t state_budget)
    : n_(g.order()),
      rho_(rho),
      all_(g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1),
      space_(checked_space(g, k, rho, state_budget)),
      moves_(build_move_table(g, space_)) {
  const auto balls = ball_masks(g, rho);
  const auto rows = g.rows();
  std::vector<Mask> closed(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) closed[v] = rows[v] | (Mask{1} << v);

  const auto configs = space_.count();
  zone_.resize(configs);
  for (ConfigId c = 0; c < configs; ++c) zone_[c] = space_.cover(c, balls);
  time_.assign(configs * static_cast<std::size_t>(n_), kNever);

  // won[c] = robber vertices from which cops to move at c capture within t moves
  std::vector<Mask> won(configs, 0);
  std::vector<Mask> robber_lost(configs, 0);
  for (std::uint16_t t = 1; t < kNever; ++t) {
    // robber to move at c' loses if every option is already won for the cops
    for (ConfigId c = 0; c < configs; ++c) {
      Mask lost = 0;
      for (Vertex r = 0; r < n_; ++r)
        if ((closed[r] & ~won[c]) == 0) lost |= Mask{1} << r;
      robber_lost[c] = lost;
    }
    bool changed = false;
    std::vector<Mask> next = won;
    for (ConfigId c = 0; c < configs; ++c) {
      Mask reach = 0;
      for (ConfigId to : moves_.successors(c)) reach |= zone_[to] | robber_lost[to];
      const Mask fresh = reach & ~won[c];
      if (!fresh) continue;
      changed = true;
      next[c] |= fresh;
      for (Mask bits = fresh; bits; bits &= bits - 1)
        time_[static_cast<std::size_t>(c) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(__builtin_ctzll(bits))] = t;
    }
    won = std::move(next);
    if (!changed) break;
  }
}

std::uint16_t PursuitGame::placement_time(ConfigId c) const {
  std::uint16_t worst = 0;
  for (Mask bits = robber_starts(c); bits; bits &= bits - 1) worst = std::max(worst, capture_time(c, __builtin_ctzll(bits)));
  return worst;
}

PursuitResult pursuit_solve(const Graph& g, int k, int rho, std::uint64_t state_budget) {
  const PursuitGame game(g, k, rho, state_budget);
  PursuitResult result;
  result.states_explored = game.space().count() * static_cast<std::uint64_t>(g.order()) * 2;
  std::uint16_t best = PursuitGame::kNever;
  ConfigId best_config = 0;
  for (ConfigId c = 0; c < game.space().count(); ++c) {
    const auto t = game.placement_time(c);
    if (t < best) {
      best = t;
      best_config = c;
    }
  }
  if (best != PursuitGame::kNever) {
    result.cops_win = true;
    result.capture_time = best;
    auto pos = game.space().positions(best_config);
    result.placement.assign(pos.begin(), pos.end());
  }
  return result;
}

int cop_number(const Graph& g, std::uint64_t state_budget) { return reach_number(g, 0, state_budget); }

int reach_number(const Graph& g, int l, std::uint64_t state_budget) {
  for (int k = 1; k <= g.order(); ++k)
    if (pursuit_solve(g, k, l, state_budget).cops_win) return k;
  throw Error(ErrorCode::BadParam, "graph has no winning cop count");
}

}  // namespace copclean
