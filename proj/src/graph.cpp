#include "copclean/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "copclean/error.hpp"

namespace copclean {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0) s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

VertexSet VertexSet::from_mask(int universe, Mask mask) {
  if (universe > 64) throw Error(ErrorCode::UnsupportedSize, "mask form needs universe <= 64");
  VertexSet s(universe);
  if (!s.words_.empty()) {
    const Mask keep = universe == 64 ? ~Mask{0} : (Mask{1} << universe) - 1;
    s.words_[0] = mask & keep;
  }
  return s;
}

VertexSet VertexSet::from_members(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  if (v < 0 || v >= universe_) return false;
  return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) noexcept {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const auto theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  const auto common = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < common; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Mask VertexSet::mask() const {
  if (universe_ > 64) throw Error(ErrorCode::UnsupportedSize, "mask form needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) {
    universe_ = other.universe_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const auto common = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < common; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

Graph::Graph(int n, std::span<const Edge> edges, std::string name) : n_(n), name_(std::move(name)) {
  if (n < 0) throw Error(ErrorCode::BadParam, "negative vertex count");
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::BadParam, "self-loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : arcs) ++offsets_[static_cast<std::size_t>(u) + 1];
  for (int v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) targets_.push_back(v);

  if (has_bit_rows()) {
    rows_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : arcs) rows_[u] |= Mask{1} << v;
  }
}

Graph Graph::with_name(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (has_bit_rows()) return (rows_[u] >> v) & 1U;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Mask Graph::row(Vertex v) const {
  if (!has_bit_rows()) throw Error(ErrorCode::UnsupportedSize, "bit rows need n <= 64");
  check_vertex(v);
  return rows_[v];
}

std::span<const Mask> Graph::rows() const {
  if (!has_bit_rows()) throw Error(ErrorCode::UnsupportedSize, "bit rows need n <= 64");
  return rows_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto all = edges();
  const Edge drop{std::min(u, v), std::max(u, v)};
  std::erase(all, drop);
  return Graph(n_, all, name_);
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && offsets_ == other.offsets_ && targets_ == other.targets_;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet closed_l_neighborhood(const Graph& g, Vertex v, int radius) {
  g.check_vertex(v);
  if (radius < 0) throw Error(ErrorCode::BadParam, "negative radius");
  VertexSet ball(g.order());
  ball.insert(v);
  std::vector<Vertex> frontier{v};
  for (int layer = 0; layer < radius && !frontier.empty(); ++layer) {
    std::vector<Vertex> next;
    for (Vertex u : frontier)
      for (Vertex w : g.neighbors(u))
        if (!ball.contains(w)) {
          ball.insert(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  return ball;
}

std::vector<Mask> ball_masks(const Graph& g, int radius) {
  const int n = g.order();
  if (n > kBitRowLimit) throw Error(ErrorCode::UnsupportedSize, "ball masks need n <= 64");
  if (radius < 0) throw Error(ErrorCode::BadParam, "negative radius");
  std::vector<Mask> balls(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    Mask ball = Mask{1} << v;
    for (int layer = 0; layer < radius; ++layer) {
      Mask grown = ball;
      for (Mask bits = ball; bits; bits &= bits - 1) grown |= g.row(__builtin_ctzll(bits));
      if (grown == ball) break;
      ball = grown;
    }
    balls[v] = ball;
  }
  return balls;
}

std::vector<int> distance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> out(n * n);
  for (std::size_t v = 0; v < n; ++v) {
    auto d = bfs_distances(g, static_cast<Vertex>(v));
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(v * n));
  }
  return out;
}

}  // namespace copclean
