#include "copclean/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "copclean/error.hpp"
#include "copclean/pursuit.hpp"

namespace copclean {

const char* to_string(TimeConvention c) { return c == TimeConvention::RandomMoves ? "RANDOM_MOVES" : "BELIEF_OPTIMAL"; }
const char* to_string(PlacementRule p) { return p == PlacementRule::Optimal ? "OPTIMAL" : "UNIFORM"; }

namespace {

std::size_t at(ConfigId c, Vertex r, int n) { return static_cast<std::size_t>(c) * static_cast<std::size_t>(n) + static_cast<std::size_t>(r); }

/// Probability of each configuration when every cop is placed uniformly.
std::vector<double> uniform_placement_weights(const ConfigSpace& space) {
  std::vector<double> w(space.count());
  const double n = space.order();
  for (ConfigId c = 0; c < space.count(); ++c) {
    auto pos = space.positions(c);
    // multinomial k! / prod(mult!) / n^k
    double p = 1.0;
    int run = 1;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      p *= static_cast<double>(i + 1) / n;
      if (i > 0 && pos[i] == pos[i - 1]) p /= ++run;
      else run = 1;
    }
    w[c] = p;
  }
  return w;
}

ConfigSpace checked_space(const Graph& g, int k, int rho, std::uint64_t budget) {
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cop is required");
  if (rho < 0) throw Error(ErrorCode::BadParam, "negative capture radius");
  if (g.order() < 1 || g.order() > kBitRowLimit) throw Error(ErrorCode::TooLarge, "expected-time solver supports 1 <= n <= 64");
  if (ConfigSpace::count_for(g.order(), k) * static_cast<std::uint64_t>(g.order()) > budget)
    throw Error(ErrorCode::TooLarge, "random pursuit state space exceeds the state budget");
  return ConfigSpace(g.order(), k);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomPursuit::RandomPursuit(const Graph& g, int k, int rho, const ExpectedTimeOptions& options)
    : n_(g.order()),
      all_(g.order() >= 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1),
      space_(checked_space(g, k, rho, options.state_budget)) {
  const PursuitGame classical(g, k, rho, options.state_budget);
  dist_ = build_move_distribution(g, space_, options.law);
  const auto configs = space_.count();
  const auto rows = g.rows();
  closed_.resize(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) closed_[v] = rows[v] | (Mask{1} << v);

  zone_.resize(configs);
  robber_win_.assign(configs, 0);
  for (ConfigId c = 0; c < configs; ++c) {
    zone_[c] = classical.capture_zone(c);
    for (Vertex r = 0; r < n_; ++r)
      if (!((zone_[c] >> r) & 1) && classical.capture_time(c, r) == PursuitGame::kNever) robber_win_[c] |= Mask{1} << r;
  }

  // the robber can reach a losing-for-cops state with positive probability
  infinite_ = robber_win_;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Mask> pre(configs, 0);
    for (ConfigId c = 0; c < configs; ++c) {
      if (!infinite_[c]) continue;
      Mask m = 0;
      for (Vertex r = 0; r < n_; ++r)
        if (closed_[r] & infinite_[c]) m |= Mask{1} << r;
      pre[c] = m & ~zone_[c];
    }
    for (ConfigId c = 0; c < configs; ++c) {
      Mask m = 0;
      for (std::size_t j = dist_.offsets[c]; j < dist_.offsets[c + 1]; ++j) m |= pre[dist_.targets[j]];
      m &= ~zone_[c] & ~infinite_[c];
      if (m) {
        infinite_[c] |= m;
        changed = true;
      }
    }
  }

  // Gauss-Seidel from below on the finite states
  value_.assign(configs * static_cast<std::size_t>(n_), 0.0);
  for (ConfigId c = 0; c < configs; ++c)
    for (Vertex r = 0; r < n_; ++r)
      if ((infinite_[c] >> r) & 1) value_[at(c, r, n_)] = kInfinite;
  converged_ = false;
  double previous = 0.0;
  for (sweeps_ = 0; sweeps_ < options.max_sweeps;) {
    ++sweeps_;
    double delta = 0.0;
    for (ConfigId c = 0; c < configs; ++c) {
      for (Mask free = all_ & ~zone_[c] & ~infinite_[c]; free; free &= free - 1) {
        const Vertex r = __builtin_ctzll(free);
        double v = 1.0;
        for (std::size_t j = dist_.offsets[c]; j < dist_.offsets[c + 1]; ++j) {
          const ConfigId to = dist_.targets[j];
          if ((zone_[to] >> r) & 1) continue;
          double best = 0.0;
          for (Mask opt = closed_[r] & ~zone_[to]; opt; opt &= opt - 1) best = std::max(best, value_[at(to, __builtin_ctzll(opt), n_)]);
          v += dist_.weights[j] * best;
        }
        double& slot = value_[at(c, r, n_)];
        delta = std::max(delta, std::abs(v - slot));
        slot = v;
      }
    }
    // geometric tail bound delta * rate / (1 - rate) on the remaining error
    const double rate = previous > 0.0 ? std::min(delta / previous, 1.0 - 1e-12) : 0.0;
    previous = delta;
    residual_ = delta * rate / (1.0 - rate);
    if (delta < options.tolerance && residual_ < options.tolerance) {
      converged_ = true;
      break;
    }
  }
}

double RandomPursuit::value(ConfigId c, Vertex r) const {
  if ((zone_[c] >> r) & 1) return 0.0;
  return value_[at(c, r, n_)];
}

bool RandomPursuit::better(ConfigId c, Vertex a, Vertex b) const {
  // prefer certain escape, then possible escape, then the larger expectation
  const int ta = robber_wins(c, a) ? 2 : escapes(c, a) ? 1 : 0;
  const int tb = robber_wins(c, b) ? 2 : escapes(c, b) ? 1 : 0;
  if (ta != tb) return ta > tb;
  return value(c, a) > value(c, b);
}

Vertex RandomPursuit::best_start(ConfigId c) const {
  Vertex best = -1;
  for (Mask free = all_ & ~zone_[c]; free; free &= free - 1) {
    const Vertex r = __builtin_ctzll(free);
    if (best < 0 || better(c, r, best)) best = r;
  }
  return best;
}

Vertex RandomPursuit::best_reply(ConfigId c, Vertex r) const {
  Vertex best = -1;
  for (Mask opt = closed_[r] & ~zone_[c]; opt; opt &= opt - 1) {
    const Vertex v = __builtin_ctzll(opt);
    if (best < 0 || better(c, v, best)) best = v;
  }
  return best;
}

double RandomPursuit::placement_value(ConfigId c) const {
  if (infinite_[c]) return kInfinite;
  double worst = 0.0;
  for (Mask free = all_ & ~zone_[c]; free; free &= free - 1) worst = std::max(worst, value(c, __builtin_ctzll(free)));
  return worst;
}

ExpectedTimeResult expected_time(const Graph& g, int k, int l, const ExpectedTimeOptions& options) {
  if (k < 1) throw Error(ErrorCode::BadK, "at least one cop is required");
  if (l < 0 || options.capture_radius < 0) throw Error(ErrorCode::BadParam, "negative radius");
  ExpectedTimeResult result;
  result.convention = options.convention;
  result.placement_rule = options.placement;

  std::vector<double> per_config;
  const ConfigSpace* space = nullptr;
  std::optional<RandomPursuit> random;
  std::optional<KnowledgeGame> belief;
  if (options.convention == TimeConvention::RandomMoves) {
    random.emplace(g, k, options.capture_radius, options);
    space = &random->space();
    result.converged = random->converged();
    result.residual = random->residual();
    result.sweeps = random->sweeps();
    for (ConfigId c = 0; c < space->count(); ++c) per_config.push_back(random->placement_value(c));
  } else {
    belief.emplace(g, k, l, LimitedOptions{options.capture_radius, options.observation, options.state_budget});
    space = &belief->space();
    for (ConfigId c = 0; c < space->count(); ++c) {
      const auto t = belief->placement_time(c);
      per_config.push_back(t == KnowledgeGame::kNever ? RandomPursuit::kInfinite : static_cast<double>(t));
    }
  }

  if (options.placement == PlacementRule::Optimal) {
    std::optional<ConfigId> best;
    for (ConfigId c = 0; c < space->count(); ++c) {
      if (per_config[c] == RandomPursuit::kInfinite) continue;
      if (!best || per_config[c] < per_config[*best]) best = c;
    }
    if (best) {
      result.value = per_config[*best];
      auto pos = space->positions(*best);
      result.placement.assign(pos.begin(), pos.end());
    }
  } else {
    const auto weights = uniform_placement_weights(*space);
    double total = 0.0;
    bool finite = true;
    for (ConfigId c = 0; c < space->count() && finite; ++c) {
      if (per_config[c] == RandomPursuit::kInfinite) finite = false;
      else total += weights[c] * per_config[c];
    }
    if (finite) result.value = total;
  }
  if (!result.converged)
    throw Error(ErrorCode::NoConvergence, "value iteration stopped with residual " + std::to_string(result.residual));
  return result;
}

std::vector<ExpectedTimeResult> expected_time_conventions(const Graph& g, int k, int l, ExpectedTimeOptions options) {
  std::vector<ExpectedTimeResult> out;
  for (auto convention : {TimeConvention::RandomMoves, TimeConvention::BeliefOptimal}) {
    for (auto placement : {PlacementRule::Optimal, PlacementRule::Uniform}) {
      options.convention = convention;
      options.placement = placement;
      out.push_back(expected_time(g, k, l, options));
    }
  }
  return out;
}

MonteCarloResult monte_carlo(const Graph& g, int k, const MonteCarloOptions& options) {
  if (options.trials < 1) throw Error(ErrorCode::BadParam, "trials must be at least 1");
  if (options.jobs < 1) throw Error(ErrorCode::BadParam, "jobs must be at least 1");
  ExpectedTimeOptions exact;
  exact.capture_radius = options.capture_radius;
  exact.law = options.law;
  exact.state_budget = options.state_budget;
  const RandomPursuit game(g, k, options.capture_radius, exact);
  const auto& space = game.space();
  const auto& dist = game.moves();

  std::vector<std::vector<double>> cumulative(space.count());
  for (ConfigId c = 0; c < space.count(); ++c) {
    double acc = 0.0;
    for (std::size_t j = dist.offsets[c]; j < dist.offsets[c + 1]; ++j) cumulative[c].push_back(acc += dist.weights[j]);
  }
  ConfigId best_config = 0;
  {
    double best = std::numeric_limits<double>::infinity();
    for (ConfigId c = 0; c < space.count(); ++c) {
      const double v = game.placement_value(c);
      if (v != RandomPursuit::kInfinite && v < best) {
        best = v;
        best_config = c;
      }
    }
  }

  // -1 = escaped within the horizon
  std::vector<std::int64_t> times(options.trials, -1);
  auto run_trial = [&](std::uint64_t trial) {
    std::mt19937_64 rng(splitmix64(options.seed ^ splitmix64(trial)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    ConfigId c = best_config;
    if (options.placement == PlacementRule::Uniform) {
      std::uniform_int_distribution<Vertex> pick(0, g.order() - 1);
      std::vector<Vertex> pos(static_cast<std::size_t>(space.cops()));
      for (auto& p : pos) p = pick(rng);
      std::sort(pos.begin(), pos.end());
      c = space.rank(pos);
    }
    Vertex r = game.best_start(c);
    if (r < 0) {
      times[trial] = 0;
      return;
    }
    for (std::uint64_t t = 1; t <= options.horizon; ++t) {
      const auto& cum = cumulative[c];
      const double u = unit(rng) * cum.back();
      const auto j = std::min<std::size_t>(static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin()), cum.size() - 1);
      c = dist.targets[dist.offsets[c] + j];
      if ((game.capture_zone(c) >> r) & 1) {
        times[trial] = static_cast<std::int64_t>(t);
        return;
      }
      r = game.best_reply(c, r);
    }
  };
  auto worker = [&](std::atomic<std::uint64_t>& next) {
    for (std::uint64_t i; (i = next.fetch_add(1)) < options.trials;) run_trial(i);
  };
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  for (int j = 1; j < options.jobs; ++j) pool.emplace_back(worker, std::ref(next));
  worker(next);
  for (auto& t : pool) t.join();

  MonteCarloResult result;
  result.trials = options.trials;
  result.seed = options.seed;
  result.horizon = options.horizon;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < options.trials; ++i) {
    if (times[i] < 0) continue;
    ++result.captured;
    sum += static_cast<double>(times[i]);
    sum_sq += static_cast<double>(times[i]) * static_cast<double>(times[i]);
  }
  result.capture_frequency = static_cast<double>(result.captured) / static_cast<double>(options.trials);
  if (result.captured > 0) {
    const double cnt = static_cast<double>(result.captured);
    result.mean = sum / cnt;
    if (result.captured > 1) {
      const double var = (sum_sq - cnt * result.mean * result.mean) / (cnt - 1.0);
      result.standard_error = std::sqrt(std::max(0.0, var) / cnt);
    }
  }
  return result;
}

}  // namespace copclean
