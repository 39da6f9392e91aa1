#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "copclean/cleaning.hpp"
#include "copclean/graph.hpp"

namespace copclean {

/// Parameters of the capture-gap graph: 2k outside classes C_0..C_{2k-1},
/// each a copy of Z_{2^m}, and a partition of the exponents 0..m-1 into 2k
/// direction classes of equal size.
struct ConstructionSpec {
  int k = 2;
  int m = 16;
  /// partition[q] = class owning direction 2^q.
  std::vector<int> partition;
};

/// class(q) = q mod 2k.
std::vector<int> default_partition(int k, int m);

/// Each class has m/(2k) exponents.
bool partition_is_regular(const ConstructionSpec& spec);
/// No class holds two of q, q+1, q+2 (plain integers, no wrap).
bool partition_is_spaced(const ConstructionSpec& spec);

enum class SpacingPolicy { Enforce, Allow };

inline constexpr std::int64_t kConstructionMaxVertices = std::int64_t{1} << 23;

class ConstructionGraph {
 public:
  Graph graph;
  ConstructionSpec spec;

  std::int64_t group_size() const { return std::int64_t{1} << spec.m; }
  int classes() const { return 2 * spec.k; }
  Vertex outside(std::int64_t a, int i) const { return static_cast<Vertex>(i * group_size() + a); }
  Vertex middle(int i) const { return static_cast<Vertex>(classes() * group_size() + i); }
  bool is_middle(Vertex v) const { return v >= classes() * group_size(); }
  /// (a, i) of an outside vertex.
  std::pair<std::int64_t, int> coordinates(Vertex v) const {
    return {v % group_size(), static_cast<int>(v / group_size())};
  }
  std::vector<Vertex> middle_vertices() const;
  /// Exponents owned by class i.
  std::vector<int> directions(int i) const;
};

struct EdgeType {
  int exponent;
  /// Lower endpoint: the vertex for which this is a forward edge.
  Vertex forward_from;
};

/// Direction and orientation of an outside-outside edge; nullopt otherwise.
std::optional<EdgeType> edge_type(const ConstructionGraph& cg, Vertex u, Vertex v);

ConstructionGraph build_construction(const ConstructionSpec& spec, SpacingPolicy policy = SpacingPolicy::Enforce);

struct BlockingViolation {
  Vertex robber;
  Vertex cop;
  std::vector<int> blocked_exponents;
  auto operator<=>(const BlockingViolation&) const = default;
};

struct BlockingReport {
  std::uint64_t checked_pairs = 0;
  std::uint64_t violation_count = 0;
  /// Sorted by (robber, cop); truncated to kMaxReportedViolations entries.
  std::vector<BlockingViolation> violations;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  bool passed = true;
};

inline constexpr std::size_t kMaxReportedViolations = 64;

/// For every ordered pair (robber a_i, cop b_j) of distinct outside vertices,
/// counts the directions 2^q of class i for which some endpoint (a+2^q)_{i'}
/// lies in N[b_j]; a count of two or more is a violation.
BlockingReport check_blocking(const ConstructionGraph& cg);
/// Same test on `samples` uniformly drawn ordered pairs.
BlockingReport check_blocking_sampled(const ConstructionGraph& cg, std::uint64_t samples, std::uint64_t seed);

/// Exact count of directions of the robber's class blocked by the cop.
std::vector<int> blocked_directions(const ConstructionGraph& cg, Vertex robber, Vertex cop);

bool check_middle_dominating(const ConstructionGraph& cg);

/// Cops on v_0..v_{cops-1}, then cop i steps to v_{k+i} on turn 1.
StrategyScript scripted_seeing_strategy(const ConstructionGraph& cg, std::optional<int> cops = std::nullopt);

}  // namespace copclean
