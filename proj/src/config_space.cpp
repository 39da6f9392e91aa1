#include "copclean/config_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "copclean/error.hpp"

namespace copclean {

namespace {

constexpr std::uint64_t kMaxConfigs = std::uint64_t{1} << 26;

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (std::uint64_t{1} << 62)) return r;
  }
  return r;
}

template <class F>
void for_each_multiset(int n, int k, F&& f) {
  std::vector<Vertex> cur(static_cast<std::size_t>(k), 0);
  if (k == 0) {
    f(cur);
    return;
  }
  while (true) {
    f(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) return;
    const Vertex next = cur[i] + 1;
    for (int j = i; j < k; ++j) cur[j] = next;
  }
}

}  // namespace

std::uint64_t ConfigSpace::count_for(int n, int k) {
  return choose(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k));
}

ConfigSpace::ConfigSpace(int n, int k) : n_(n), k_(k) {
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cop is required");
  if (n < 1) throw Error(ErrorCode::BadParam, "empty graph");
  const auto total = count_for(n, k);
  if (total > kMaxConfigs) throw Error(ErrorCode::TooLarge, std::to_string(total) + " cop configurations");
  count_ = static_cast<std::size_t>(total);
  const int top = n + k;
  binom_.assign(static_cast<std::size_t>(top + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(k + 2), 0));
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= k + 1; ++b) binom_[a][b] = choose(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  table_.resize(count_ * static_cast<std::size_t>(k));
  for_each_multiset(n, k, [&](const std::vector<Vertex>& cur) {
    const auto id = rank(cur);
    std::copy(cur.begin(), cur.end(), table_.begin() + static_cast<std::ptrdiff_t>(id) * k);
  });
}

ConfigId ConfigSpace::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
  return static_cast<ConfigId>(r);
}

Mask ConfigSpace::cover(ConfigId id, std::span<const Mask> per_vertex) const {
  Mask m = 0;
  for (Vertex v : positions(id)) m |= per_vertex[v];
  return m;
}

Mask ConfigSpace::occupied(ConfigId id) const {
  Mask m = 0;
  for (Vertex v : positions(id)) m |= Mask{1} << v;
  return m;
}

namespace {

std::vector<std::vector<Vertex>> closed_neighbourhoods(const Graph& g) {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].push_back(v);
    for (Vertex w : g.neighbors(v)) out[v].push_back(w);
  }
  return out;
}

template <class F>
void for_each_joint_move(const std::vector<std::vector<Vertex>>& closed, std::span<const Vertex> from, F&& f) {
  const auto k = from.size();
  std::vector<std::size_t> digit(k, 0);
  std::vector<Vertex> move(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) move[i] = closed[from[i]][digit[i]];
    f(move);
    std::size_t i = 0;
    while (i < k && ++digit[i] == closed[from[i]].size()) digit[i++] = 0;
    if (i == k) return;
  }
}

}  // namespace

MoveTable build_move_table(const Graph& g, const ConfigSpace& space) {
  const auto closed = closed_neighbourhoods(g);
  MoveTable table;
  table.offsets.reserve(space.count() + 1);
  table.offsets.push_back(0);
  std::vector<ConfigId> local;
  std::vector<Vertex> sorted;
  for (ConfigId id = 0; id < space.count(); ++id) {
    local.clear();
    for_each_joint_move(closed, space.positions(id), [&](const std::vector<Vertex>& move) {
      sorted = move;
      std::sort(sorted.begin(), sorted.end());
      local.push_back(space.rank(sorted));
    });
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    table.targets.insert(table.targets.end(), local.begin(), local.end());
    table.offsets.push_back(table.targets.size());
  }
  return table;
}

MoveDistribution build_move_distribution(const Graph& g, const ConfigSpace& space, MoveLaw law) {
  const auto closed = closed_neighbourhoods(g);
  MoveDistribution dist;
  dist.offsets.push_back(0);
  std::vector<Vertex> sorted;
  for (ConfigId id = 0; id < space.count(); ++id) {
    std::map<ConfigId, double> mass;
    double weight = 1.0;
    for (Vertex c : space.positions(id)) weight /= static_cast<double>(closed[c].size());
    for_each_joint_move(closed, space.positions(id), [&](const std::vector<Vertex>& move) {
      sorted = move;
      std::sort(sorted.begin(), sorted.end());
      mass[space.rank(sorted)] += weight;
    });
    for (auto [target, w] : mass) {
      dist.targets.push_back(target);
      dist.weights.push_back(law == MoveLaw::PerCop ? w : 1.0 / static_cast<double>(mass.size()));
    }
    dist.offsets.push_back(dist.targets.size());
  }
  return dist;
}

std::vector<Vertex> align_move(const Graph& g, std::span<const Vertex> current, std::span<const Vertex> targets) {
  if (current.size() != targets.size()) throw Error(ErrorCode::IllegalMove, "cop count mismatch");
  std::vector<Vertex> perm(targets.begin(), targets.end());
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = perm[i] == current[i] || g.adjacent(current[i], perm[i]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(ErrorCode::IllegalMove, "no legal assignment of cops to targets");
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("COPCLEAN_STATE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParam, "COPCLEAN_STATE_BUDGET must be a positive integer");
    }
  }
  return 40'000'000;
}

}  // namespace copclean
