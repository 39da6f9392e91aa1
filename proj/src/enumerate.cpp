#include "copclean/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "copclean/error.hpp"

namespace copclean {

namespace {

struct Refiner {
  int n;
  std::span<const Mask> rows;

  // cells are contiguous runs in `order`; `start` marks the first slot of each cell
  static std::vector<std::vector<Vertex>> split_cell(const std::vector<Vertex>& cell, Vertex chosen) {
    std::vector<Vertex> rest;
    for (Vertex v : cell)
      if (v != chosen) rest.push_back(v);
    return {{chosen}, rest};
  }

  std::vector<std::vector<Vertex>> refine(std::vector<std::vector<Vertex>> cells) const {
    while (true) {
      std::vector<Mask> cell_masks;
      cell_masks.reserve(cells.size());
      for (const auto& c : cells) {
        Mask m = 0;
        for (Vertex v : c) m |= Mask{1} << v;
        cell_masks.push_back(m);
      }
      std::vector<std::vector<Vertex>> next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) {
          std::vector<int> sig(cells.size());
          for (std::size_t c = 0; c < cells.size(); ++c) sig[c] = __builtin_popcountll(rows[v] & cell_masks[c]);
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<Vertex> part{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(part));
            part.clear();
          }
          part.push_back(keyed[i].second);
        }
        next.push_back(std::move(part));
      }
      if (next.size() == cells.size()) return next;
      cells = std::move(next);
    }
  }

  std::uint64_t key_of(const std::vector<Vertex>& labelling) const {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key = (key << 1) | ((rows[labelling[i]] >> labelling[j]) & 1U);
    return key;
  }

  void search(const std::vector<std::vector<Vertex>>& cells, CanonicalForm& best, bool& have) const {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> labelling;
      labelling.reserve(static_cast<std::size_t>(n));
      for (const auto& c : cells) labelling.push_back(c[0]);
      const auto key = key_of(labelling);
      if (!have || key < best.key) {
        best.key = key;
        best.labelling = std::move(labelling);
        have = true;
      }
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> explored;
    for (Vertex v : *target) {
      // swapping twins is an automorphism fixing the current partition, so
      // their subtrees yield identical leaf keys
      const bool twin = std::any_of(explored.begin(), explored.end(), [&](Vertex w) {
        const Mask others = ~((Mask{1} << v) | (Mask{1} << w));
        return (rows[v] & others) == (rows[w] & others);
      });
      if (twin) continue;
      explored.push_back(v);
      std::vector<std::vector<Vertex>> child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(index));
      for (auto& part : split_cell(*target, v)) child.push_back(std::move(part));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(index) + 1, cells.end());
      search(refine(std::move(child)), best, have);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalMaxOrder) throw Error(ErrorCode::UnsupportedSize, "canonical form supports n <= 11");
  CanonicalForm best;
  if (n == 0) return best;
  Refiner refiner{n, g.rows()};
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  bool have = false;
  refiner.search(refiner.refine({all}), best, have);
  return best;
}

Graph relabel(const Graph& g, std::span<const Vertex> labelling) {
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < labelling.size(); ++i) position[labelling[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph(g.order(), edges, g.name());
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > kEnumerateMaxOrder) throw Error(ErrorCode::UnsupportedSize, "enumeration supports 1 <= n <= 9");
  std::vector<Graph> current{Graph(1, {})};
  for (int order = 2; order <= n; ++order) {
    // every connected graph has a non-cut vertex, so each class on `order`
    // vertices extends some class on order-1 vertices
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> found;
    const Vertex fresh = order - 1;
    for (const auto& parent : current) {
      const auto base = parent.edges();
      for (Mask subset = 1; subset < (Mask{1} << (order - 1)); ++subset) {
        auto edges = base;
        for (Mask bits = subset; bits; bits &= bits - 1) edges.emplace_back(__builtin_ctzll(bits), fresh);
        Graph candidate(order, edges);
        auto form = canonical_form(candidate);
        if (seen.insert(form.key).second) found.emplace_back(form.key, relabel(candidate, form.labelling));
      }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    current.clear();
    for (auto& entry : found) current.push_back(std::move(entry.second));
  }
  return current;
}

void for_each_connected(int n, const std::function<void(const Graph&)>& visit) {
  for (const auto& g : enumerate_connected(n)) visit(g);
}

}  // namespace copclean
