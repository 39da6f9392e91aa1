#include "copclean/cleaning_solver.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

#include "copclean/error.hpp"
#include "copclean/greedy.hpp"

namespace copclean {

namespace {

constexpr std::uint64_t kDenseVisitedBits = std::uint64_t{1} << 31;
constexpr std::uint32_t kNoParent = ~std::uint32_t{0};

class Visited {
 public:
  Visited(std::uint64_t configs, int n) : n_(n) {
    const std::uint64_t bits = configs << n;
    if (bits <= kDenseVisitedBits) dense_.assign((bits + 63) / 64, 0);
  }

  /// true if the state was not yet present
  bool insert(ConfigId c, Mask gas) {
    const std::uint64_t key = (static_cast<std::uint64_t>(c) << n_) | gas;
    if (!dense_.empty()) {
      auto& word = dense_[key / 64];
      const std::uint64_t bit = std::uint64_t{1} << (key % 64);
      if (word & bit) return false;
      word |= bit;
      return true;
    }
    return sparse_.insert(key).second;
  }

 private:
  int n_;
  std::vector<std::uint64_t> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

Mask spread_of(std::span<const Mask> rows, Mask gas) {
  Mask out = 0;
  for (Mask bits = gas; bits; bits &= bits - 1) out |= rows[__builtin_ctzll(bits)];
  return out;
}

StrategyScript build_script(const Graph& g, const ConfigSpace& space, int l, const std::vector<ConfigId>& path) {
  StrategyScript script;
  script.l = l;
  auto first = space.positions(path.front());
  script.placements.assign(first.begin(), first.end());
  std::vector<Vertex> current = script.placements;
  for (std::size_t i = 1; i < path.size(); ++i) {
    current = align_move(g, current, space.positions(path[i]));
    script.turns.push_back(current);
  }
  return script;
}

}  // namespace

SolveResult solve_cleaning(const Graph& g, int k, int l, const SolveOptions& options) {
  const int n = g.order();
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cleaner is required");
  if (l < 0) throw Error(ErrorCode::BadParam, "negative visibility");
  if (n < 1) throw Error(ErrorCode::BadParam, "empty graph");
  if (n > kCleaningMaxOrder) throw Error(ErrorCode::TooLarge, "exhaustive cleaning search supports n <= 26");

  SolveResult result;
  if (options.greedy_prepass) {
    if (auto script = greedy_clean(g, k, l)) {
      result.value = n;
      result.achieved_gas_min = 0;
      result.fully_cleanable = true;
      result.witness = std::move(script);
      result.solved_by_greedy = true;
      return result;
    }
  }

  const ConfigSpace space(n, k);
  const MoveTable moves = build_move_table(g, space);
  const auto balls = ball_masks(g, l);
  std::vector<Mask> sight(space.count());
  for (ConfigId c = 0; c < space.count(); ++c) sight[c] = space.cover(c, balls);
  const auto rows = g.rows();
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  Visited visited(space.count(), n);
  std::vector<ConfigId> node_config;
  std::vector<Mask> node_gas;
  std::vector<std::uint32_t> node_parent;

  int best = n + 1;
  std::uint32_t best_parent = kNoParent;
  ConfigId best_config = 0;
  bool done = false;

  auto push = [&](ConfigId c, Mask gas, std::uint32_t parent) {
    if (!visited.insert(c, gas)) return;
    node_config.push_back(c);
    node_gas.push_back(gas);
    node_parent.push_back(parent);
  };

  for (ConfigId c = 0; c < space.count() && !done; ++c) {
    const Mask gas = all & ~sight[c];
    const int count = std::popcount(gas);
    if (count < best) {
      best = count;
      best_parent = kNoParent;
      best_config = c;
      done = best <= options.target_gas;
    }
    push(c, gas, kNoParent);
  }

  for (std::size_t head = 0; head < node_config.size() && !done; ++head) {
    if (node_config.size() > options.state_budget) {
      result.capped = true;
      break;
    }
    const Mask gas = node_gas[head];
    for (ConfigId next : moves.successors(node_config[head])) {
      const Mask cleaned = gas & ~sight[next];
      const int count = std::popcount(cleaned);
      if (count < best) {
        best = count;
        best_parent = static_cast<std::uint32_t>(head);
        best_config = next;
        if (best <= options.target_gas) {
          done = true;
          break;
        }
      }
      const Mask spread = cleaned | (spread_of(rows, cleaned) & ~sight[next]);
      push(next, spread, static_cast<std::uint32_t>(head));
    }
  }

  std::vector<ConfigId> path{best_config};
  for (auto at = best_parent; at != kNoParent; at = node_parent[at]) path.push_back(node_config[at]);
  std::reverse(path.begin(), path.end());

  result.achieved_gas_min = best;
  result.value = n - best;
  result.fully_cleanable = best == 0;
  result.states_explored = node_config.size();
  result.witness = build_script(g, space, l, path);
  return result;
}

int seeing_number(const Graph& g, int l, std::uint64_t state_budget) {
  return inference_number(g, 0, l, state_budget);
}

int inference_number(const Graph& g, int r, int l, std::uint64_t state_budget) {
  if (r < 0) throw Error(ErrorCode::BadParam, "r must be non-negative");
  SolveOptions options;
  options.target_gas = r;
  options.state_budget = state_budget;
  for (int k = 1; k <= g.order(); ++k) {
    const auto result = solve_cleaning(g, k, l, options);
    if (result.achieved_gas_min <= r) return k;
    if (result.capped)
      throw Error(ErrorCode::TooLarge, "state budget exhausted at k = " + std::to_string(k) + "; value exceeds " + std::to_string(k - 1));
  }
  throw Error(ErrorCode::BadParam, "no cleaner count reaches the target");
}

int max_clean(const Graph& g, int k, int l, std::uint64_t state_budget) {
  SolveOptions options;
  options.state_budget = state_budget;
  const auto result = solve_cleaning(g, k, l, options);
  if (result.capped)
    throw Error(ErrorCode::TooLarge, "state budget exhausted; max-clean is at least " + std::to_string(result.value));
  return result.value;
}

}  // namespace copclean
