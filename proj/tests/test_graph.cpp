#include <doctest.h>

#include <random>
#include <sstream>

#include "copclean/error.hpp"
#include "copclean/families.hpp"
#include "copclean/formats.hpp"
#include "copclean/metrics.hpp"
#include "test_support.hpp"

using namespace copclean;

namespace {

// Straightforward re-encoding: build the bit string, then pack six at a time.
std::string reference_graph6(const Graph& g) {
  std::string bits;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? '1' : '0');
  while (bits.size() % 6) bits.push_back('0');
  std::string out(1, static_cast<char>(63 + g.order()));
  for (std::size_t p = 0; p < bits.size(); p += 6) out.push_back(static_cast<char>(63 + std::stoi(bits.substr(p, 6), nullptr, 2)));
  return out;
}

// Girth as 1 + min over edges uv of dist(u, v) in G - uv.
std::optional<int> reference_girth(const Graph& g) {
  std::optional<int> best;
  for (auto [u, v] : g.edges()) {
    const auto d = bfs_distances(g.without_edge(u, v), u)[v];
    if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

ErrorCode code_of(std::string_view s) {
  try {
    parse_graph6(s);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::BadParam;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("graph construction merges duplicates and rejects loops") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
    const Graph g(3, edges);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), Error);
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out_of_range), Error);
  }

  TEST_CASE("vertex sets beyond one machine word") {
    VertexSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
    VertexSet t = VertexSet::full(130);
    t -= s;
    CHECK(t.size() == 127);
    CHECK_FALSE(t.intersects(s));
  }

  TEST_CASE("graph6 known encodings") {
    CHECK(emit_graph6(complete(4)) == "C~");
    CHECK(emit_graph6(petersen()) == "IheA@GUAo");
    CHECK(emit_graph6(Graph(0, {})) == "?");
    const Graph p = parse_graph6(">>graph6<<IheA@GUAo");
    CHECK(p == petersen());
  }

  TEST_CASE("graph6 matches the reference encoder and round-trips") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const Graph g = test::random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.35);
      const auto enc = emit_graph6(g);
      CHECK(enc == reference_graph6(g));
      CHECK(parse_graph6(enc) == g);
    }
  }

  TEST_CASE("graph6 long size prefixes") {
    const Graph g = cycle(100);
    const auto enc = emit_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == g);
    // 258048 = 63 * 4096 needs the eight-byte prefix; the body is absent
    // so decoding the size is all that happens before TRUNCATED
    try {
      parse_graph6("~~???~??");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Truncated);
      CHECK(std::string(e.what()).find("edge bytes") != std::string::npos);
    }
  }

  TEST_CASE("graph6 errors") {
    CHECK(code_of("D?\?!") == ErrorCode::InvalidChar);
    CHECK(code_of("D?") == ErrorCode::Truncated);
    CHECK(code_of("") == ErrorCode::Truncated);
    CHECK(code_of("Bww") == ErrorCode::TrailingData);
    CHECK(code_of("~~??@??@") == ErrorCode::UnsupportedSize);
  }

  TEST_CASE("edge lists") {
    std::istringstream in("# n=5\n0 1\n1 2 # trailing comment\n\n2 3\n");
    const Graph g = parse_edge_list(in, "x");
    CHECK(g.order() == 5);
    CHECK(g.size() == 3);
    CHECK(g.degree(4) == 0);
    std::istringstream again(emit_edge_list(g));
    CHECK(parse_edge_list(again) == g);
    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(parse_edge_list(bad), Error);
  }

  TEST_CASE("metrics of named graphs") {
    const auto h = metrics(heawood());
    CHECK(h.order == 14);
    CHECK(h.edges == 21);
    CHECK(h.min_degree == 3);
    CHECK(h.max_degree == 3);
    CHECK(h.girth == 6);
    CHECK(h.diameter == 3);
    const auto p = metrics(petersen());
    CHECK(p.girth == 5);
    CHECK(p.diameter == 2);
    CHECK(metrics(path(6)).girth == std::nullopt);
    CHECK(metrics(cycle(7)).girth == 7);
    CHECK(metrics(cycle(7), 2).max_l_degree == 4);
    const std::vector<Edge> two{{0, 1}, {2, 3}};
    const auto d = metrics(Graph(4, two));
    CHECK_FALSE(d.connected);
    CHECK(d.diameter == std::nullopt);
    CHECK(is_bipartite(heawood()));
    CHECK_FALSE(is_bipartite(petersen()));
  }

  TEST_CASE("girth agrees with the per-edge oracle") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
      const Graph g = test::random_graph(rng, 2 + static_cast<int>(rng() % 14), 0.2 + 0.05 * static_cast<double>(trial % 6));
      CHECK(girth(g) == reference_girth(g));
    }
  }

  TEST_CASE("closed neighbourhoods by radius") {
    const Graph c = cycle(8);
    const auto ball = closed_l_neighborhood(c, 0, 2);
    CHECK(ball.members() == std::vector<Vertex>{0, 1, 2, 6, 7});
    CHECK(closed_l_neighborhood(c, 3, 0).members() == std::vector<Vertex>{3});
  }
}
