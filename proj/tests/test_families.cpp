#include <doctest.h>

#include <random>

#include "copclean/cleaning.hpp"
#include "copclean/construction.hpp"
#include "copclean/error.hpp"
#include "copclean/families.hpp"
#include "copclean/metrics.hpp"

using namespace copclean;

namespace {

// Pairwise recount using only adjacency queries on the built graph.
std::uint64_t brute_violations(const ConstructionGraph& cg) {
  const auto outside = static_cast<Vertex>(cg.classes() * cg.group_size());
  std::uint64_t count = 0;
  for (Vertex robber = 0; robber < outside; ++robber) {
    const auto [a, i] = cg.coordinates(robber);
    for (Vertex cop = 0; cop < outside; ++cop) {
      if (cop == robber) continue;
      int blocked = 0;
      for (int q = 0; q < cg.spec.m; ++q) {
        if (cg.spec.partition[q] != i) continue;
        bool hit = false;
        for (Vertex end : cg.graph.neighbors(robber)) {
          const auto e = edge_type(cg, robber, end);
          if (e && e->exponent == q && e->forward_from == robber && (end == cop || cg.graph.adjacent(end, cop))) hit = true;
        }
        blocked += hit;
      }
      count += blocked >= 2;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("basic families") {
    CHECK(cycle(5).size() == 5);
    CHECK(path(4).size() == 3);
    CHECK(complete(6).size() == 15);
    CHECK(star(3).degree(0) == 3);
    const Graph s = spider(3, 2);
    CHECK(s.order() == 7);
    CHECK(s.degree(0) == 3);
    CHECK(metrics(s).girth == std::nullopt);
    CHECK_THROWS_AS(cycle(2), Error);
  }

  TEST_CASE("Heawood and Petersen") {
    const auto h = metrics(heawood());
    CHECK((h.order == 14 && h.girth == 6 && h.min_degree == 3 && h.max_degree == 3));
    const auto p = metrics(petersen());
    CHECK((p.order == 10 && p.girth == 5 && p.min_degree == 3 && p.max_degree == 3));
  }

  TEST_CASE("random trees") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 40; ++n) {
      const Graph t = random_tree(n, rng);
      CHECK(t.order() == n);
      CHECK(t.size() == static_cast<std::size_t>(n - 1));
      CHECK(is_connected(t));
    }
  }

  TEST_CASE("attach_path appends a pendant path") {
    const Graph g = attach_path(cycle(4), 0, 3);
    CHECK(g.order() == 6);
    CHECK(g.adjacent(0, 4));
    CHECK(g.adjacent(4, 5));
    CHECK(g.degree(5) == 1);
  }

  TEST_CASE("family specs") {
    CHECK(make_family("cycle:5") == cycle(5));
    CHECK(make_family("spider:3,2") == spider(3, 2));
    CHECK(make_family("tree:9,4") == make_family("tree:9,4"));
    CHECK(make_family("construction:2,8").order() == 4 * 256 + 4);
    CHECK_THROWS_AS(make_family("cycle"), Error);
    CHECK_THROWS_AS(make_family("cycle:x"), Error);
    CHECK_THROWS_AS(make_family("moebius:5"), Error);
  }

  TEST_CASE("construction degrees and partitions") {
    const ConstructionSpec spec{2, 8, default_partition(2, 8)};
    CHECK(partition_is_regular(spec));
    CHECK(partition_is_spaced(spec));
    const auto cg = build_construction(spec);
    CHECK(cg.graph.order() == 4 * 256 + 4);
    for (Vertex v = 0; v < cg.graph.order(); ++v) CHECK(cg.graph.degree(v) == (cg.is_middle(v) ? 259 : 13));
    CHECK(check_middle_dominating(cg));
    // middle forms K_4
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(cg.graph.adjacent(cg.middle(i), cg.middle(j)));
    CHECK_THROWS_AS(build_construction(ConstructionSpec{1, 4, default_partition(1, 4)}), Error);
    ConstructionSpec crowded = spec;
    std::swap(crowded.partition[1], crowded.partition[4]);
    CHECK_FALSE(partition_is_spaced(crowded));
    CHECK_THROWS_AS(build_construction(crowded), Error);
  }

  TEST_CASE("full-size construction degrees") {
    const auto cg = build_construction(ConstructionSpec{2, 16, default_partition(2, 16)});
    CHECK(cg.graph.degree(cg.outside(12345, 2)) == 25);
    CHECK(cg.graph.degree(cg.middle(0)) == 65536 + 3);
  }

  TEST_CASE("blocking check agrees with a pairwise recount") {
    const ConstructionSpec spec{2, 8, default_partition(2, 8)};
    CHECK(check_blocking(build_construction(spec)).violation_count == brute_violations(build_construction(spec)));
    for (auto [x, y] : {std::pair{2, 4}, std::pair{1, 4}, std::pair{3, 5}}) {
      ConstructionSpec bad = spec;
      std::swap(bad.partition[x], bad.partition[y]);
      const auto cg = build_construction(bad, SpacingPolicy::Allow);
      const auto report = check_blocking(cg);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(report.violation_count == brute_violations(cg));
      for (const auto& v : report.violations) CHECK(blocked_directions(cg, v.robber, v.cop).size() >= 2);
    }
  }

  TEST_CASE("exponents two apart in one class break blocking") {
    ConstructionSpec bad{2, 8, default_partition(2, 8)};
    std::swap(bad.partition[2], bad.partition[4]);
    const auto report = check_blocking(build_construction(bad, SpacingPolicy::Allow));
    CHECK_FALSE(report.passed);
    CHECK(report.violation_count > 0);
  }

  TEST_CASE("sampled blocking is reproducible") {
    const auto cg = build_construction(ConstructionSpec{2, 8, default_partition(2, 8)});
    const auto a = check_blocking_sampled(cg, 5000, 9);
    const auto b = check_blocking_sampled(cg, 5000, 9);
    CHECK(a.passed);
    CHECK(a.checked_pairs == 5000);
    CHECK(a.violations == b.violations);
  }

  TEST_CASE("scripted strategy sees everything at turn 1") {
    const auto cg = build_construction(ConstructionSpec{2, 8, default_partition(2, 8)});
    const auto trace = run_script(cg.graph, scripted_seeing_strategy(cg));
    CHECK(trace.fully_cleaned_at == 1);
    const auto partial = run_script(cg.graph, scripted_seeing_strategy(cg, 1));
    CHECK(partial.fully_cleaned_at == std::nullopt);
  }
}
