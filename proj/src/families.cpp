#include "copclean/families.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "copclean/construction.hpp"
#include "copclean/error.hpp"

namespace copclean {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParam, what);
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size())
      throw Error(ErrorCode::BadParam, "bad integer '" + std::string(piece) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges, "cycle:" + std::to_string(n));
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "path:" + std::to_string(n));
}

Graph complete(int n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph star(int leaves) {
  require(leaves >= 0, "star needs leaves >= 0");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges, "star:" + std::to_string(leaves));
}

Graph spider(int legs, int leg_len) {
  require(legs >= 0 && leg_len >= 1, "spider needs legs >= 0 and leg_len >= 1");
  std::vector<Edge> edges;
  int next = 1;
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 0;
    for (int step = 0; step < leg_len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges, "spider:" + std::to_string(legs) + "," + std::to_string(leg_len));
}

Graph heawood() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 5) % 14);
  return Graph(14, edges, "heawood");
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges, "petersen");
}

Graph random_tree(int n, std::mt19937_64& rng) {
  require(n >= 1, "tree needs n >= 1");
  if (n <= 2) return path(n).with_name("tree:" + std::to_string(n));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = pick(rng);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) u = v;
      else edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, "tree:" + std::to_string(n));
}

Graph attach_path(const Graph& g, Vertex v, int d) {
  g.check_vertex(v);
  require(d >= 2, "attach_path needs d >= 2");
  auto edges = g.edges();
  Vertex prev = v;
  for (int i = 0; i < d - 1; ++i) {
    const Vertex fresh = g.order() + i;
    edges.emplace_back(prev, fresh);
    prev = fresh;
  }
  return Graph(g.order() + d - 1, edges, g.name().empty() ? std::string{} : g.name() + "+path");
}

Graph make_family(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::vector<int>{} : parse_ints(spec.substr(colon + 1));
  auto arity = [&](std::size_t count) {
    require(args.size() == count, "family '" + std::string(name) + "' takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "cycle") {
    arity(1);
    return cycle(args[0]);
  }
  if (name == "path") {
    arity(1);
    return path(args[0]);
  }
  if (name == "complete") {
    arity(1);
    return complete(args[0]);
  }
  if (name == "star") {
    arity(1);
    return star(args[0]);
  }
  if (name == "spider") {
    arity(2);
    return spider(args[0], args[1]);
  }
  if (name == "heawood") {
    arity(0);
    return heawood();
  }
  if (name == "petersen") {
    arity(0);
    return petersen();
  }
  if (name == "tree") {
    arity(2);
    std::mt19937_64 rng(static_cast<std::uint64_t>(args[1]));
    return random_tree(args[0], rng);
  }
  if (name == "construction") {
    arity(2);
    return build_construction(ConstructionSpec{args[0], args[1], default_partition(args[0], args[1])}).graph;
  }
  throw Error(ErrorCode::BadParam, "unknown family '" + std::string(name) + "'");
}

}  // namespace copclean
