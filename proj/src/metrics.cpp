#include "copclean/metrics.hpp"

#include <algorithm>
#include <deque>

#include "copclean/error.hpp"

namespace copclean {

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

std::optional<int> girth(const Graph& g) {
  // Breadth-first search from every root; the first non-tree edge closes the
  // shortest cycle through that root. Searches stop once they cannot beat the
  // best cycle seen so far.
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<Vertex> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      if (2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int max_l_degree(const Graph& g, int l) {
  if (l < 0) throw Error(ErrorCode::BadParam, "negative radius");
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, closed_l_neighborhood(g, v, l).size() - 1);
  return best;
}

GraphMetrics metrics(const Graph& g, int l) {
  GraphMetrics m;
  m.order = g.order();
  m.edges = g.size();
  m.radius_l = l;
  if (g.order() > 0) {
    m.min_degree = g.degree(0);
    m.max_degree = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v) {
      m.min_degree = std::min(m.min_degree, g.degree(v));
      m.max_degree = std::max(m.max_degree, g.degree(v));
    }
  }
  m.max_l_degree = max_l_degree(g, l);
  m.girth = girth(g);
  m.diameter = diameter(g);
  m.connected = m.diameter.has_value();
  return m;
}

}  // namespace copclean
