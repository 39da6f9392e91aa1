#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "copclean/graph.hpp"

namespace copclean {

inline constexpr int kEnumerateMaxOrder = 9;
inline constexpr int kCanonicalMaxOrder = 11;

struct CanonicalForm {
  /// Upper-triangle adjacency bits in graph6 column order under the canonical
  /// labelling, most significant bit first. Equal keys <=> isomorphic graphs.
  std::uint64_t key = 0;
  /// labelling[i] = original vertex placed at canonical position i.
  std::vector<Vertex> labelling;
};

/// Canonical labelling by individualisation-refinement with equitable
/// partitions; twins in the branching cell are explored once.
CanonicalForm canonical_form(const Graph& g);
Graph relabel(const Graph& g, std::span<const Vertex> labelling);

/// One representative per isomorphism class of connected graphs on n
/// vertices, in canonical labelling, ordered by canonical key.
std::vector<Graph> enumerate_connected(int n);
void for_each_connected(int n, const std::function<void(const Graph&)>& visit);

}  // namespace copclean
