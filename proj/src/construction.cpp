#include "copclean/construction.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "copclean/error.hpp"

namespace copclean {

std::vector<int> default_partition(int k, int m) {
  if (k < 1 || m < 1 || m % (2 * k) != 0) throw Error(ErrorCode::BadParam, "default partition needs 2k | m");
  std::vector<int> partition(static_cast<std::size_t>(m));
  for (int q = 0; q < m; ++q) partition[q] = q % (2 * k);
  return partition;
}

bool partition_is_regular(const ConstructionSpec& spec) {
  const int classes = 2 * spec.k;
  if (spec.m <= 0 || spec.m % classes != 0 || static_cast<int>(spec.partition.size()) != spec.m) return false;
  std::vector<int> sizes(static_cast<std::size_t>(classes), 0);
  for (int c : spec.partition) {
    if (c < 0 || c >= classes) return false;
    ++sizes[c];
  }
  return std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == spec.m / classes; });
}

bool partition_is_spaced(const ConstructionSpec& spec) {
  const auto& p = spec.partition;
  for (std::size_t q = 0; q + 1 < p.size(); ++q) {
    if (p[q] == p[q + 1]) return false;
    if (q + 2 < p.size() && p[q] == p[q + 2]) return false;
  }
  return true;
}

std::vector<Vertex> ConstructionGraph::middle_vertices() const {
  std::vector<Vertex> out;
  for (int i = 0; i < classes(); ++i) out.push_back(middle(i));
  return out;
}

std::vector<int> ConstructionGraph::directions(int i) const {
  std::vector<int> out;
  for (int q = 0; q < spec.m; ++q)
    if (spec.partition[q] == i) out.push_back(q);
  return out;
}

std::optional<EdgeType> edge_type(const ConstructionGraph& cg, Vertex u, Vertex v) {
  if (cg.is_middle(u) || cg.is_middle(v) || !cg.graph.adjacent(u, v)) return std::nullopt;
  const auto mask = cg.group_size() - 1;
  const auto [a, i] = cg.coordinates(u);
  const auto [b, j] = cg.coordinates(v);
  for (int q : cg.directions(i))
    if (((a + (std::int64_t{1} << q)) & mask) == b) return EdgeType{q, u};
  for (int q : cg.directions(j))
    if (((b + (std::int64_t{1} << q)) & mask) == a) return EdgeType{q, v};
  return std::nullopt;
}

ConstructionGraph build_construction(const ConstructionSpec& spec, SpacingPolicy policy) {
  if (spec.k < 2) throw Error(ErrorCode::BadParam, "k must be at least 2 (k = 1 is served by C4)");
  if (spec.m < 1 || spec.m > 30) throw Error(ErrorCode::BadParam, "modulus exponent out of range");
  if (!partition_is_regular(spec)) throw Error(ErrorCode::BadParam, "partition must split 0..m-1 into 2k classes of size m/(2k)");
  if (policy == SpacingPolicy::Enforce && !partition_is_spaced(spec))
    throw Error(ErrorCode::BadParam, "partition places two of q, q+1, q+2 in one class");
  const int classes = 2 * spec.k;
  const std::int64_t group = std::int64_t{1} << spec.m;
  const std::int64_t order = classes * group + classes;
  if (order > kConstructionMaxVertices) throw Error(ErrorCode::TooLarge, std::to_string(order) + " vertices exceeds the build budget");

  ConstructionGraph cg;
  cg.spec = spec;
  const auto mask = group - 1;
  std::vector<Edge> edges;
  const std::int64_t per_vertex = static_cast<std::int64_t>(spec.m / classes) * (classes - 1);
  edges.reserve(static_cast<std::size_t>(classes * group * (per_vertex + 1) + classes * classes));
  for (int i = 0; i < classes; ++i) {
    std::vector<int> dirs;
    for (int q = 0; q < spec.m; ++q)
      if (spec.partition[q] == i) dirs.push_back(q);
    for (std::int64_t a = 0; a < group; ++a) {
      const auto from = static_cast<Vertex>(i * group + a);
      for (int q : dirs) {
        const auto b = (a + (std::int64_t{1} << q)) & mask;
        for (int target = 0; target < classes; ++target)
          if (target != i) edges.emplace_back(from, static_cast<Vertex>(target * group + b));
      }
      edges.emplace_back(from, static_cast<Vertex>(classes * group + i));
    }
  }
  for (int i = 0; i < classes; ++i)
    for (int j = i + 1; j < classes; ++j)
      edges.emplace_back(static_cast<Vertex>(classes * group + i), static_cast<Vertex>(classes * group + j));
  cg.graph = Graph(static_cast<int>(order), edges, "construction:" + std::to_string(spec.k) + "," + std::to_string(spec.m));
  return cg;
}

std::vector<int> blocked_directions(const ConstructionGraph& cg, Vertex robber, Vertex cop) {
  const auto mask = cg.group_size() - 1;
  const auto [a, i] = cg.coordinates(robber);
  std::vector<int> blocked;
  for (int q : cg.directions(i)) {
    const auto b = (a + (std::int64_t{1} << q)) & mask;
    for (int target = 0; target < cg.classes(); ++target) {
      if (target == i) continue;
      const Vertex end = cg.outside(b, target);
      if (end == cop || cg.graph.adjacent(end, cop)) {
        blocked.push_back(q);
        break;
      }
    }
  }
  return blocked;
}

namespace {

void finish(BlockingReport& report) {
  std::sort(report.violations.begin(), report.violations.end());
  if (report.violations.size() > kMaxReportedViolations) report.violations.resize(kMaxReportedViolations);
  report.passed = report.violation_count == 0;
}

}  // namespace

BlockingReport check_blocking(const ConstructionGraph& cg) {
  // A cop blocks direction q exactly when it lies in the closed neighbourhood
  // of some endpoint of that direction, so per robber it suffices to walk
  // those neighbourhoods instead of every cop.
  BlockingReport report;
  const std::int64_t outside = cg.classes() * cg.group_size();
  report.checked_pairs = static_cast<std::uint64_t>(outside) * static_cast<std::uint64_t>(outside - 1);
  const auto mask = cg.group_size() - 1;
  std::vector<int> last_dir(static_cast<std::size_t>(outside), -1);
  std::vector<int> hits(static_cast<std::size_t>(outside), 0);
  std::vector<Vertex> touched;
  for (Vertex robber = 0; robber < outside; ++robber) {
    const auto [a, i] = cg.coordinates(robber);
    touched.clear();
    for (int q : cg.directions(i)) {
      const auto b = (a + (std::int64_t{1} << q)) & mask;
      auto credit = [&](Vertex cop) {
        if (cop == robber || cg.is_middle(cop) || last_dir[cop] == q) return;
        if (hits[cop] == 0) touched.push_back(cop);
        last_dir[cop] = q;
        ++hits[cop];
      };
      for (int target = 0; target < cg.classes(); ++target) {
        if (target == i) continue;
        const Vertex end = cg.outside(b, target);
        credit(end);
        for (Vertex w : cg.graph.neighbors(end)) credit(w);
      }
    }
    for (Vertex cop : touched) {
      if (hits[cop] >= 2) {
        ++report.violation_count;
        if (report.violations.size() < 4 * kMaxReportedViolations)
          report.violations.push_back({robber, cop, blocked_directions(cg, robber, cop)});
      }
      hits[cop] = 0;
      last_dir[cop] = -1;
    }
  }
  finish(report);
  return report;
}

BlockingReport check_blocking_sampled(const ConstructionGraph& cg, std::uint64_t samples, std::uint64_t seed) {
  BlockingReport report;
  report.exhaustive = false;
  report.seed = seed;
  const std::int64_t outside = cg.classes() * cg.group_size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> pick(0, outside - 1);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto robber = static_cast<Vertex>(pick(rng));
    auto cop = static_cast<Vertex>(pick(rng));
    while (cop == robber) cop = static_cast<Vertex>(pick(rng));
    ++report.checked_pairs;
    auto blocked = blocked_directions(cg, robber, cop);
    if (blocked.size() >= 2) {
      ++report.violation_count;
      if (report.violations.size() < 4 * kMaxReportedViolations) report.violations.push_back({robber, cop, std::move(blocked)});
    }
  }
  finish(report);
  return report;
}

bool check_middle_dominating(const ConstructionGraph& cg) {
  const auto mids = cg.middle_vertices();
  return sight(cg.graph, mids, 1).size() == cg.graph.order();
}

StrategyScript scripted_seeing_strategy(const ConstructionGraph& cg, std::optional<int> cops) {
  const int count = cops.value_or(cg.spec.k);
  if (count < 1 || count > cg.spec.k) throw Error(ErrorCode::BadParam, "scripted strategy uses 1..k cops");
  StrategyScript script;
  script.l = 1;
  std::vector<Vertex> turn;
  for (int i = 0; i < count; ++i) {
    script.placements.push_back(cg.middle(i));
    turn.push_back(cg.middle(cg.spec.k + i));
  }
  script.turns.push_back(std::move(turn));
  return script;
}

}  // namespace copclean
