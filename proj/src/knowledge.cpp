#include "copclean/knowledge.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "copclean/error.hpp"

namespace copclean {

namespace {

ConfigSpace checked_space(const Graph& g, int k, int l, const LimitedOptions& options) {
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cop is required");
  if (l < 0 || options.capture_radius < 0) throw Error(ErrorCode::BadParam, "negative radius");
  if (g.order() < 1 || g.order() > 32) throw Error(ErrorCode::TooLarge, "knowledge-set solver supports 1 <= n <= 32");
  return ConfigSpace(g.order(), k);
}

Mask spread_of(std::span<const Mask> rows, Mask set) {
  Mask out = set;
  for (Mask bits = set; bits; bits &= bits - 1) out |= rows[__builtin_ctzll(bits)];
  return out;
}

/// Visible positions become singleton branches; the rest stays one branch.
void split(Mask set, Mask visible, std::vector<Mask>& out) {
  for (Mask bits = set & visible; bits; bits &= bits - 1) out.push_back(bits & (~bits + 1));
  if (set & ~visible) out.push_back(set & ~visible);
}

}  // namespace

KnowledgeGame::KnowledgeGame(const Graph& g, int k, int l, const LimitedOptions& options)
    : space_(checked_space(g, k, l, options)) {
  const int n = g.order();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const auto rows = g.rows();
  const MoveTable moves = build_move_table(g, space_);
  const auto sight_balls = ball_masks(g, l);
  const auto capture_balls = ball_masks(g, options.capture_radius);
  const auto configs = space_.count();
  std::vector<Mask> visible(configs);
  std::vector<Mask> zone(configs);
  for (ConfigId c = 0; c < configs; ++c) {
    visible[c] = space_.cover(c, sight_balls);
    zone[c] = space_.cover(c, capture_balls);
  }

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<ConfigId> state_config;
  std::vector<Mask> state_set;
  auto intern = [&](ConfigId c, Mask s) {
    const std::uint64_t key = (static_cast<std::uint64_t>(c) << n) | s;
    auto [it, fresh] = index.try_emplace(key, static_cast<std::uint32_t>(state_config.size()));
    if (fresh) {
      if (state_config.size() >= options.state_budget) throw Error(ErrorCode::TooLarge, "knowledge-state budget exhausted");
      state_config.push_back(c);
      state_set.push_back(s);
    }
    return it->second;
  };

  // initial placements and their observation branches
  std::vector<std::vector<std::uint32_t>> initial(configs);
  std::vector<Mask> branches;
  for (ConfigId c = 0; c < configs; ++c) {
    branches.clear();
    split(all & ~zone[c], visible[c], branches);
    for (Mask b : branches) initial[c].push_back(intern(c, b));
  }

  // forward exploration; each state owns a run of moves, each move a run of branches
  std::vector<std::size_t> state_moves{0};
  std::vector<std::size_t> move_branches{0};
  std::vector<std::uint32_t> move_owner;
  std::vector<std::uint32_t> branch_state;
  std::vector<Mask> pre;
  for (std::size_t s = 0; s < state_config.size(); ++s) {
    const ConfigId from = state_config[s];
    const Mask set = state_set[s];
    for (ConfigId to : moves.successors(from)) {
      const Mask survivors = set & ~zone[to];
      pre.clear();
      if (options.observation == Observation::PerHalfMove) split(survivors, visible[to], pre);
      else if (survivors) pre.push_back(survivors);
      branches.clear();
      for (Mask part : pre) split(spread_of(rows, part) & ~zone[to], visible[to], branches);
      std::sort(branches.begin(), branches.end());
      branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
      for (Mask b : branches) branch_state.push_back(intern(to, b));
      move_owner.push_back(static_cast<std::uint32_t>(s));
      move_branches.push_back(branch_state.size());
      if (branch_state.size() > 8 * options.state_budget) throw Error(ErrorCode::TooLarge, "knowledge-game edge budget exhausted");
    }
    state_moves.push_back(move_owner.size());
  }
  states_ = state_config.size();

  // retrograde pass in non-decreasing value order: a move resolves when its
  // last branch resolves, its owner one cop move later
  const auto move_count = move_owner.size();
  std::vector<std::uint32_t> pending(move_count);
  std::vector<std::size_t> uses(states_ + 1, 0);
  for (std::size_t m = 0; m < move_count; ++m) {
    pending[m] = static_cast<std::uint32_t>(move_branches[m + 1] - move_branches[m]);
    for (std::size_t b = move_branches[m]; b < move_branches[m + 1]; ++b) ++uses[branch_state[b] + 1];
  }
  for (std::size_t s = 0; s < states_; ++s) uses[s + 1] += uses[s];
  std::vector<std::uint32_t> used_by(branch_state.size());
  {
    auto fill = uses;
    for (std::size_t m = 0; m < move_count; ++m)
      for (std::size_t b = move_branches[m]; b < move_branches[m + 1]; ++b) used_by[fill[branch_state[b]]++] = static_cast<std::uint32_t>(m);
  }

  std::vector<std::uint32_t> value(states_, kNever);
  std::deque<std::uint32_t> queue;
  for (std::size_t m = 0; m < move_count; ++m) {
    if (pending[m] == 0 && value[move_owner[m]] == kNever) {
      value[move_owner[m]] = 1;
      queue.push_back(move_owner[m]);
    }
  }
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (std::size_t u = uses[s]; u < uses[s + 1]; ++u) {
      const auto m = used_by[u];
      if (--pending[m] != 0) continue;
      const auto owner = move_owner[m];
      if (value[owner] == kNever) {
        value[owner] = value[s] + 1;
        queue.push_back(owner);
      }
    }
  }

  placement_time_.assign(configs, 0);
  for (ConfigId c = 0; c < configs; ++c) {
    for (auto s : initial[c]) {
      if (value[s] == kNever) {
        placement_time_[c] = kNever;
        break;
      }
      placement_time_[c] = std::max(placement_time_[c], value[s]);
    }
  }
}

LimitedResult solve_capture_limited(const Graph& g, int k, int l, const LimitedOptions& options) {
  const KnowledgeGame game(g, k, l, options);
  LimitedResult result;
  result.states_explored = game.state_count();
  std::uint32_t best = KnowledgeGame::kNever;
  ConfigId best_config = 0;
  for (ConfigId c = 0; c < game.space().count(); ++c) {
    if (game.placement_time(c) < best) {
      best = game.placement_time(c);
      best_config = c;
    }
  }
  if (best != KnowledgeGame::kNever) {
    result.cops_win = true;
    result.capture_time = static_cast<int>(best);
    auto pos = game.space().positions(best_config);
    result.placement.assign(pos.begin(), pos.end());
  }
  return result;
}

bool capture_number_limited(const Graph& g, int k, int l, const LimitedOptions& options) {
  return solve_capture_limited(g, k, l, options).cops_win;
}

int limited_capture_number(const Graph& g, int l, const LimitedOptions& options) {
  for (int k = 1; k <= g.order(); ++k)
    if (capture_number_limited(g, k, l, options)) return k;
  throw Error(ErrorCode::BadParam, "graph has no winning cop count");
}

}  // namespace copclean
