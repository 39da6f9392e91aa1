#pragma once

#include <optional>

#include "copclean/graph.hpp"

namespace copclean {

struct GraphMetrics {
  int order = 0;
  std::size_t edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  /// Largest open radius-l neighbourhood, for the requested radius.
  int max_l_degree = 0;
  int radius_l = 1;
  /// nullopt stands for ACYCLIC.
  std::optional<int> girth;
  /// nullopt stands for DISCONNECTED.
  std::optional<int> diameter;
  bool connected = false;
};

GraphMetrics metrics(const Graph& g, int l = 1);

bool is_connected(const Graph& g);
std::optional<int> girth(const Graph& g);
std::optional<int> diameter(const Graph& g);
bool is_bipartite(const Graph& g);
/// Delta_l(G): max over v of |N_l[v]| - 1.
int max_l_degree(const Graph& g, int l);

}  // namespace copclean
