#include <doctest.h>

#include <limits>
#include <map>
#include <random>

#include "copclean/cleaning_solver.hpp"
#include "copclean/enumerate.hpp"
#include "copclean/error.hpp"
#include "copclean/families.hpp"
#include "copclean/knowledge.hpp"
#include "copclean/metrics.hpp"
#include "copclean/pursuit.hpp"
#include "test_support.hpp"

using namespace copclean;

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Classical capture time by relaxation over ordered cop tuples (k <= 2).
// Returns the optimal placement time, kInf when the robber escapes.
int oracle_capture_time(const Graph& g, int k, int rho) {
  const int n = g.order();
  std::vector<std::vector<int>> dist;
  for (Vertex v = 0; v < n; ++v) dist.push_back(bfs_distances(g, v));
  auto near = [&](int a, int b, Vertex r) { return dist[a][r] <= rho || (k == 2 && dist[b][r] <= rho); };
  const int tuples = k == 1 ? n : n * n;
  std::vector<int> t(static_cast<std::size_t>(tuples * n), kInf);
  auto idx = [&](int a, int b, Vertex r) { return ((k == 1 ? a : a * n + b) * n) + r; };
  auto moves = [&](int v) {
    std::vector<int> m{v};
    for (Vertex w : g.neighbors(v)) m.push_back(w);
    return m;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < (k == 2 ? n : 1); ++b) {
        for (Vertex r = 0; r < n; ++r) {
          if (near(a, b, r)) continue;
          int best = kInf;
          for (int a2 : moves(a)) {
            for (int b2 : (k == 2 ? moves(b) : std::vector<int>{0})) {
              int worst = 0;
              if (!near(a2, b2, r)) {
                for (int r2 : moves(r)) {
                  if (near(a2, b2, r2)) continue;
                  worst = std::max(worst, t[idx(a2, b2, r2)]);
                }
              }
              if (worst != kInf) best = std::min(best, worst + 1);
            }
          }
          if (best < t[idx(a, b, r)]) {
            t[idx(a, b, r)] = best;
            changed = true;
          }
        }
      }
    }
  }
  int best = kInf;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < (k == 2 ? n : 1); ++b) {
      int worst = 0;
      for (Vertex r = 0; r < n; ++r)
        if (!near(a, b, r)) worst = std::max(worst, t[idx(a, b, r)]);
      best = std::min(best, worst);
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("pursuit") {
  TEST_CASE("classical values") {
    CHECK(cop_number(cycle(4)) == 2);
    CHECK(reach_number(cycle(4), 1) == 1);
    CHECK(cop_number(petersen()) == 3);
    CHECK(cop_number(heawood()) == 3);
    CHECK(cop_number(complete(6)) == 1);
    const auto c5 = pursuit_solve(cycle(5), 2, 0);
    CHECK(c5.cops_win);
    CHECK(c5.capture_time == 1);
    CHECK(pursuit_solve(cycle(5), 1, 0).cops_win == false);
  }

  TEST_CASE("trees are cop-win and reach-1 at every radius") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph t = random_tree(2 + static_cast<int>(rng() % 11), rng);
      CHECK(cop_number(t) == 1);
      for (int l = 0; l <= 2; ++l) CHECK(reach_number(t, l) == 1);
    }
  }

  TEST_CASE("capture times agree with a tuple-based oracle") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = test::random_connected(rng, 3 + static_cast<int>(rng() % 5), 0.2);
      for (int k = 1; k <= 2; ++k) {
        for (int rho = 0; rho <= 1; ++rho) {
          const auto r = pursuit_solve(g, k, rho);
          const int expected = oracle_capture_time(g, k, rho);
          CAPTURE(trial);
          CAPTURE(k);
          CAPTURE(rho);
          CHECK(r.cops_win == (expected != kInf));
          if (r.cops_win) CHECK(*r.capture_time == expected);
        }
      }
    }
  }

  TEST_CASE("limited visibility on C4") {
    CHECK_FALSE(capture_number_limited(cycle(4), 1, 1));
    CHECK(capture_number_limited(cycle(4), 2, 1));
    CHECK(limited_capture_number(cycle(4), 1) == 2);
    CHECK(seeing_number(cycle(4), 1) == 1);
  }

  TEST_CASE("complete graphs need one limited cop") {
    for (int n = 2; n <= 7; ++n) CHECK(capture_number_limited(complete(n), 1, 1));
  }

  TEST_CASE("full visibility reduces to the classical game") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : enumerate_connected(n)) {
        const int diam = *diameter(g);
        for (int k = 1; k <= 2; ++k) {
          const auto lim = solve_capture_limited(g, k, diam);
          const auto cls = pursuit_solve(g, k, 0);
          CHECK(lim.cops_win == cls.cops_win);
          if (lim.cops_win) CHECK(lim.capture_time == cls.capture_time);
        }
      }
    }
  }

  TEST_CASE("capture radius equal to visibility is cleaning") {
    for (int n = 2; n <= 6; ++n) {
      for (const auto& g : enumerate_connected(n)) {
        for (int k = 1; k <= 2; ++k) {
          for (int l = 0; l <= 1; ++l) {
            LimitedOptions o;
            o.capture_radius = l;
            CHECK(capture_number_limited(g, k, l, o) == solve_cleaning(g, k, l).fully_cleanable);
          }
        }
      }
    }
  }

  TEST_CASE("observation granularity") {
    LimitedOptions round;
    round.observation = Observation::PerRound;
    // observing less never helps the cops
    for (const auto& g : enumerate_connected(6)) {
      for (int k = 1; k <= 2; ++k) {
        if (capture_number_limited(g, k, 1, round)) CHECK(capture_number_limited(g, k, 1));
      }
    }
  }

  TEST_CASE("chain on small graphs") {
    for (int n = 1; n <= 6; ++n) {
      for (const auto& g : enumerate_connected(n)) {
        const int reach = reach_number(g, 1);
        const int cop = cop_number(g);
        const int see = seeing_number(g, 1);
        const int capt = limited_capture_number(g, 1);
        CHECK(reach <= see);
        CHECK(see <= cop);
        CHECK(cop <= capt);
      }
    }
  }

  TEST_CASE("bad parameters") {
    CHECK_THROWS_AS(pursuit_solve(cycle(5), 0, 0), Error);
    CHECK_THROWS_AS(pursuit_solve(cycle(5), 1, -1), Error);
    CHECK_THROWS_AS(pursuit_solve(heawood(), 3, 0, 100), Error);
  }
}
