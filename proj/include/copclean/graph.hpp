#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace copclean {

using Vertex = int;
using Mask = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr int kBitRowLimit = 64;

/// A set of vertex ids drawn from 0..universe-1, stored as packed words.
/// For universes of at most 64 vertices the single word is exposed as a Mask,
/// which is what the solvers operate on directly.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, Mask mask);
  static VertexSet from_members(int universe, std::span<const Vertex> members);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept;
  void insert(Vertex v);
  void erase(Vertex v) noexcept;
  int size() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  std::vector<Vertex> members() const;
  Mask mask() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is held as sorted neighbour lists; graphs with at most 64
/// vertices additionally carry one bit row per vertex, which the exhaustive
/// solvers use as their hot path.
class Graph {
 public:
  Graph() = default;
  /// Self-loops are rejected; repeated edges are merged.
  Graph(int n, std::span<const Edge> edges, std::string name = {});

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return targets_.size() / 2; }
  const std::string& name() const noexcept { return name_; }
  Graph with_name(std::string name) const;

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  bool has_bit_rows() const noexcept { return n_ <= kBitRowLimit; }
  /// Open neighbourhood of v as a bit row; requires has_bit_rows().
  Mask row(Vertex v) const;
  std::span<const Mask> rows() const;

  /// All edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  Graph without_edge(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;

  /// Structural equality with identical labelling; names are ignored.
  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<Mask> rows_;
  std::string name_;
};

/// Breadth-first distances from v; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// {u : dist(u, v) <= radius}, v included.
VertexSet closed_l_neighborhood(const Graph& g, Vertex v, int radius);

/// Closed radius-l neighbourhoods of every vertex as masks; requires n <= 64.
std::vector<Mask> ball_masks(const Graph& g, int radius);

/// All-pairs distance matrix, row-major n*n, -1 for unreachable.
std::vector<int> distance_matrix(const Graph& g);

}  // namespace copclean
