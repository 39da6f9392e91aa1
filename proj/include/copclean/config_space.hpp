#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "copclean/graph.hpp"

namespace copclean {

using ConfigId = std::uint32_t;

/// All multisets of k cop positions on n vertices, ranked in colex order of
/// the associated k-combination of n+k-1 (c_i + i).
class ConfigSpace {
 public:
  ConfigSpace(int n, int k);

  int order() const noexcept { return n_; }
  int cops() const noexcept { return k_; }
  std::size_t count() const noexcept { return count_; }

  /// Rank of a non-decreasing position tuple.
  ConfigId rank(std::span<const Vertex> sorted) const;
  std::span<const Vertex> positions(ConfigId id) const {
    return {table_.data() + static_cast<std::size_t>(id) * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  /// OR of the given per-vertex masks over the cop positions.
  Mask cover(ConfigId id, std::span<const Mask> per_vertex) const;
  Mask occupied(ConfigId id) const;

  static std::uint64_t count_for(int n, int k);

 private:
  int n_;
  int k_;
  std::size_t count_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<Vertex> table_;
};

/// Successor configurations reachable in one joint move (every cop stays or
/// steps to a neighbour), deduplicated, as CSR arrays.
struct MoveTable {
  std::vector<std::size_t> offsets;
  std::vector<ConfigId> targets;

  std::span<const ConfigId> successors(ConfigId id) const {
    return {targets.data() + offsets[id], offsets[id + 1] - offsets[id]};
  }
};

MoveTable build_move_table(const Graph& g, const ConfigSpace& space);

/// Probability-weighted successors under random cop movement.
struct MoveDistribution {
  std::vector<std::size_t> offsets;
  std::vector<ConfigId> targets;
  std::vector<double> weights;
};

enum class MoveLaw {
  /// each cop independently uniform over its closed neighbourhood
  PerCop,
  /// uniform over the distinct resulting configurations
  UniformConfig,
};

MoveDistribution build_move_distribution(const Graph& g, const ConfigSpace& space, MoveLaw law);

/// Reorders `targets` so that targets[i] lies in N[current[i]]; the result is
/// a legal joint move for cops in the given order. Throws IllegalMove if no
/// assignment exists.
std::vector<Vertex> align_move(const Graph& g, std::span<const Vertex> current, std::span<const Vertex> targets);

/// Upper bound on solver states, overridable with COPCLEAN_STATE_BUDGET.
std::uint64_t default_state_budget();

}  // namespace copclean
