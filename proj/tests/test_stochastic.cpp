#include <doctest.h>

#include <cmath>
#include <random>

#include "copclean/enumerate.hpp"
#include "copclean/error.hpp"
#include "copclean/families.hpp"
#include "copclean/pursuit.hpp"
#include "copclean/stochastic.hpp"
#include "test_support.hpp"

using namespace copclean;

namespace {

// Value iteration over ordered cop pairs with independent uniform moves;
// returns the optimal-placement value or -1 when some state is infinite
// for every placement. Only used where the exact game is cop-win.
double oracle_expected(const Graph& g, int k) {
  const int n = g.order();
  auto moves = [&](int v) {
    std::vector<int> m{v};
    for (Vertex w : g.neighbors(v)) m.push_back(w);
    return m;
  };
  const int b_count = k == 2 ? n : 1;
  std::vector<double> v(static_cast<std::size_t>(n * b_count * n), 0.0);
  auto idx = [&](int a, int b, int r) { return (a * b_count + b) * n + r; };
  auto caught = [&](int a, int b, int r) { return a == r || (k == 2 && b == r); };
  for (int sweep = 0; sweep < 200000; ++sweep) {
    double delta = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < b_count; ++b) {
        for (int r = 0; r < n; ++r) {
          if (caught(a, b, r)) continue;
          const auto ma = moves(a);
          const auto mb = k == 2 ? moves(b) : std::vector<int>{0};
          const double p = 1.0 / static_cast<double>(ma.size() * mb.size());
          double val = 1.0;
          for (int a2 : ma) {
            for (int b2 : mb) {
              if (caught(a2, b2, r)) continue;
              double best = 0.0;
              for (int r2 : moves(r))
                if (!caught(a2, b2, r2)) best = std::max(best, v[idx(a2, b2, r2)]);
              val += p * best;
            }
          }
          delta = std::max(delta, std::abs(val - v[idx(a, b, r)]));
          v[idx(a, b, r)] = val;
        }
      }
    }
    if (delta < 1e-13) break;
  }
  double best = 1e300;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < b_count; ++b) {
      double worst = 0.0;
      for (int r = 0; r < n; ++r)
        if (!caught(a, b, r)) worst = std::max(worst, v[idx(a, b, r)]);
      best = std::min(best, worst);
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("stochastic") {
  TEST_CASE("one random cop on K_n takes n moves") {
    // capture probability 1/n per move whatever the robber does
    for (int n = 2; n <= 7; ++n) {
      const auto r = expected_time(complete(n), 1, 0);
      REQUIRE(r.value);
      CHECK(*r.value == doctest::Approx(n).epsilon(1e-9));
    }
  }

  TEST_CASE("expected time agrees with a tuple-based oracle") {
    std::mt19937_64 rng(31);
    int compared = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = test::random_connected(rng, 3 + static_cast<int>(rng() % 4), 0.3);
      for (int k = 1; k <= 2; ++k) {
        if (k < cop_number(g)) continue;
        ExpectedTimeOptions o;
        o.tolerance = 1e-11;
        const auto r = expected_time(g, k, 1, o);
        REQUIRE(r.value);
        CHECK(*r.value == doctest::Approx(oracle_expected(g, k)).epsilon(1e-8));
        ++compared;
      }
    }
    CHECK(compared > 20);
  }

  TEST_CASE("infinite exactly below the cop number") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& g : enumerate_connected(n)) {
        const int cop = cop_number(g);
        const int reach = reach_number(g, 1);
        for (int k = 1; k <= 2; ++k) {
          CHECK(expected_time(g, k, 1).value.has_value() == (k >= cop));
          ExpectedTimeOptions seeing;
          seeing.capture_radius = 1;
          CHECK(expected_time(g, k, 1, seeing).value.has_value() == (k >= reach));
        }
      }
    }
  }

  TEST_CASE("classical capture time bounds the belief-optimal time") {
    for (const auto& g : enumerate_connected(5)) {
      const auto cls = pursuit_solve(g, 2, 0);
      ExpectedTimeOptions o;
      o.convention = TimeConvention::BeliefOptimal;
      const auto lim = expected_time(g, 2, 1, o);
      REQUIRE(cls.cops_win);
      REQUIRE(lim.value);
      CHECK(*lim.value >= *cls.capture_time);
    }
  }

  TEST_CASE("four conventions on C5") {
    const auto rows = expected_time_conventions(cycle(5), 2, 1);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) CHECK(r.value);
    CHECK(*rows[2].value == 1.0);
    CHECK(*rows[0].value > *rows[2].value);
  }

  TEST_CASE("uniform-over-configurations law differs from per-cop on C5") {
    ExpectedTimeOptions per_cop;
    ExpectedTimeOptions uniform;
    uniform.law = MoveLaw::UniformConfig;
    const double a = *expected_time(cycle(5), 2, 1, per_cop).value;
    const double b = *expected_time(cycle(5), 2, 1, uniform).value;
    CHECK(a != doctest::Approx(b));
    // a single cop has distinct targets only, so both laws coincide
    CHECK(*expected_time(cycle(5), 1, 1, [] {
      ExpectedTimeOptions o;
      o.capture_radius = 1;
      return o;
    }()).value == doctest::Approx(3.0));
  }

  TEST_CASE("no convergence is reported") {
    ExpectedTimeOptions o;
    o.max_sweeps = 2;
    CHECK_THROWS_AS(expected_time(cycle(5), 2, 1, o), Error);
  }

  TEST_CASE("Monte Carlo is reproducible and independent of worker count") {
    MonteCarloOptions o;
    o.trials = 3000;
    o.seed = 5;
    const auto a = monte_carlo(cycle(5), 2, o);
    o.jobs = 3;
    const auto b = monte_carlo(cycle(5), 2, o);
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);
    CHECK(a.captured == b.captured);
    o.seed = 6;
    CHECK(monte_carlo(cycle(5), 2, o).mean != a.mean);
  }

  TEST_CASE("Monte Carlo capture frequencies") {
    MonteCarloOptions o;
    o.trials = 2000;
    o.horizon = 250;
    CHECK(monte_carlo(cycle(5), 2, o).capture_frequency >= 0.999);
    CHECK(monte_carlo(cycle(5), 1, o).capture_frequency == 0.0);
    CHECK(monte_carlo(petersen(), 2, o).capture_frequency == 0.0);
    // one seeing cop on C5 at radius 1
    MonteCarloOptions see = o;
    see.capture_radius = 1;
    see.horizon = 40;
    CHECK(monte_carlo(cycle(5), 1, see).capture_frequency >= 0.999);
  }

  TEST_CASE("Monte Carlo mean tracks the exact value on K_4") {
    MonteCarloOptions o;
    o.trials = 20000;
    const auto mc = monte_carlo(complete(4), 1, o);
    CHECK(std::abs(mc.mean - 4.0) < 4 * mc.standard_error);
  }

  TEST_CASE("bad parameters") {
    MonteCarloOptions o;
    o.trials = 0;
    CHECK_THROWS_AS(monte_carlo(cycle(5), 2, o), Error);
    CHECK_THROWS_AS(expected_time(cycle(5), 0, 1), Error);
  }
}
