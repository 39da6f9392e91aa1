#include "copclean/greedy.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "copclean/config_space.hpp"
#include "copclean/error.hpp"

namespace copclean {

namespace {

Mask spread_of(std::span<const Mask> rows, Mask gas) {
  Mask out = 0;
  for (Mask bits = gas; bits; bits &= bits - 1) out |= rows[__builtin_ctzll(bits)];
  return out;
}

std::vector<Vertex> greedy_cover(std::span<const Mask> balls, Mask all, int k) {
  std::vector<Vertex> chosen;
  Mask covered = 0;
  while (static_cast<int>(chosen.size()) < k && covered != all) {
    Vertex best = 0;
    int gain = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(balls.size()); ++v) {
      const int g = std::popcount(balls[v] & ~covered);
      if (g > gain) {
        gain = g;
        best = v;
      }
    }
    chosen.push_back(best);
    covered |= balls[best];
  }
  while (static_cast<int>(chosen.size()) < k) chosen.push_back(chosen.back());
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool replays_clean(const Graph& g, const StrategyScript& script) {
  return run_script(g, script).fully_cleaned_at.has_value();
}

}  // namespace

std::optional<StrategyScript> greedy_clean(const Graph& g, int k, int l) {
  const int n = g.order();
  if (n < 1 || n > kBitRowLimit || k < 1) return std::nullopt;
  if (ConfigSpace::count_for(n, k) > 200'000) return std::nullopt;
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const auto balls = ball_masks(g, l);
  const auto rows = g.rows();

  const ConfigSpace space(n, k);
  const auto cover = greedy_cover(balls, all, k);
  if (space.cover(space.rank(cover), balls) == all) {
    StrategyScript script{l, cover, {}};
    if (replays_clean(g, script)) return script;
  }

  const MoveTable moves = build_move_table(g, space);
  std::vector<Mask> sight(space.count());
  for (ConfigId c = 0; c < space.count(); ++c) sight[c] = space.cover(c, balls);

  // starting placements: the greedy cover, then the configurations seeing most
  std::vector<ConfigId> starts{space.rank(cover)};
  std::vector<ConfigId> by_sight(space.count());
  for (ConfigId c = 0; c < space.count(); ++c) by_sight[c] = c;
  std::stable_sort(by_sight.begin(), by_sight.end(), [&](ConfigId a, ConfigId b) { return std::popcount(sight[a]) > std::popcount(sight[b]); });
  for (std::size_t i = 0; i < by_sight.size() && starts.size() < 6; ++i)
    if (by_sight[i] != starts.front()) starts.push_back(by_sight[i]);

  const int max_turns = 4 * n;
  for (ConfigId start : starts) {
    std::unordered_set<std::uint64_t> seen;
    ConfigId at = start;
    Mask gas = all & ~sight[start];
    std::vector<ConfigId> path{start};
    for (int turn = 0; turn < max_turns; ++turn) {
      seen.insert((static_cast<std::uint64_t>(at) << n) | gas);
      ConfigId pick = at;
      Mask pick_gas = 0;
      int pick_score = -1;
      bool found = false;
      for (ConfigId next : moves.successors(at)) {
        const Mask cleaned = gas & ~sight[next];
        const Mask spread = cleaned | (spread_of(rows, cleaned) & ~sight[next]);
        if (cleaned == 0) {
          path.push_back(next);
          StrategyScript script{l, {}, {}};
          auto first = space.positions(path.front());
          script.placements.assign(first.begin(), first.end());
          std::vector<Vertex> current = script.placements;
          for (std::size_t i = 1; i < path.size(); ++i) {
            current = align_move(g, current, space.positions(path[i]));
            script.turns.push_back(current);
          }
          if (replays_clean(g, script)) return script;
          return std::nullopt;
        }
        if (seen.count((static_cast<std::uint64_t>(next) << n) | spread)) continue;
        const int score = std::popcount(spread) * (n + 1) + std::popcount(cleaned);
        if (!found || score < pick_score) {
          found = true;
          pick = next;
          pick_gas = spread;
          pick_score = score;
        }
      }
      if (!found) break;
      at = pick;
      gas = pick_gas;
      path.push_back(pick);
    }
  }
  return std::nullopt;
}

}  // namespace copclean
