#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mistqueue/bounds.hpp"

using namespace mistqueue;

TEST_CASE("p_star closed form") {
  CHECK(p_star(1, 2, 1) == Catch::Approx(1.0));
  CHECK(p_star(2, 2, 1) == Catch::Approx(0.5));
  CHECK(p_star(1, 3, 1) == Catch::Approx(0.5));
  CHECK(p_star(2, 4, 2) == Catch::Approx(0.2));
  CHECK_THROWS_AS(p_star(1, 2, 2), std::domain_error);  // V=1, w=W is degenerate
}

TEST_CASE("general lower bound evaluates the closed form") {
  CHECK(lower_bound_general({1, 2, 1, 1}) == Catch::Approx(1.0));
  CHECK(lower_bound_general({2, 2, 1, 1}) == Catch::Approx(1.0));
  CHECK(lower_bound_general({1, 3, 1, 2}) == Catch::Approx(1.5));
}

TEST_CASE("general lower bound is monotone in M") {
  for (int V : {1, 2, 4, 16}) {
    for (int W : {2, 8, 256}) {
      for (int w : {1, W / 2, W}) {
        if (bound_params_degenerate(V, W, w)) continue;
        double prev = 0.0;
        for (int M = 1; M <= 64; ++M) {
          const double b = lower_bound_general({V, W, w, M});
          REQUIRE(b >= prev);
          prev = b;
        }
      }
    }
  }
}

TEST_CASE("small-M check holds exactly on the region boundary") {
  // (V=2, W=2, w=1): boundary M = V(W-1)+1-w = 2
  const BoundParams bp{2, 2, 1, 2};
  REQUIRE(in_small_m_region(bp));
  REQUIRE_FALSE(in_small_m_region({2, 2, 1, 3}));
  CHECK(check_small_M(bp));
  CHECK(lower_bound_general(bp) == Catch::Approx(1.5));  // 2 * (1 - 1/4)
}

TEST_CASE("region propositions hold on a parameter grid") {
  for (int V : {1, 2, 4}) {
    for (int W : {2, 4, 8}) {
      for (int w : {1, W / 2, W}) {
        if (bound_params_degenerate(V, W, w)) continue;
        for (int M = 1; M <= 16; ++M) {
          const BoundParams bp{V, W, w, M};
          if (in_small_m_region(bp)) {
            REQUIRE(check_small_M(bp));
          } else {
            REQUIRE(check_large_M(bp));
          }
        }
      }
    }
  }
}

TEST_CASE("corollary floors are dominated by the general bound") {
  SECTION("uniform profit, large M: the V*W branch applies") {
    const double floor = corollary_floor(1, 2, 100, CorollaryVariant::UniformProfit);
    CHECK(floor == Catch::Approx((std::exp(1.0) - 1.0) / (2.0 * std::exp(1.0)) * 2.0));
    CHECK(lower_bound_general({1, 2, 1, 100}) >= floor);
  }
  SECTION("general, M = 1: the M/2 branch applies") {
    CHECK(corollary_floor(16, 256, 1, CorollaryVariant::General) == Catch::Approx(0.5));
    CHECK(lower_bound_general({16, 256, 1, 1}) >= 0.5);
  }
  SECTION("smallest grid point") {
    CHECK(corollary_floor(1, 2, 1, CorollaryVariant::General) == Catch::Approx(0.5));
    CHECK(lower_bound_general({1, 2, 1, 1}) == Catch::Approx(1.0));
  }
  SECTION("uniform work") {
    CHECK_NOTHROW(corollary_floor(4, 16, 8, CorollaryVariant::UniformWork));
  }
}

TEST_CASE("adversarial trace composition") {
  const BoundParams bp{2, 4, 1, 3};
  SplitMix64 rng(31);
  SECTION("p forced to 1 yields only best packets") {
    const Trace t = adversarial_trace(bp, 50, 2, rng, 1.0);
    for (const ArrivalBatch& b : t.batches) {
      REQUIRE(b.packets.size() == 3);
      for (const Arrival& a : b.packets) {
        CHECK(a.work == 1);
        CHECK(a.profit == 2);
        CHECK_FALSE(a.known);
      }
    }
  }
  SECTION("p forced to 0 yields only worst packets") {
    const Trace t = adversarial_trace(bp, 50, 2, rng, 0.0);
    for (const ArrivalBatch& b : t.batches) {
      for (const Arrival& a : b.packets) {
        CHECK(a.work == 4);
        CHECK(a.profit == 1);
      }
    }
  }
  SECTION("best-packet fraction matches p_star") {
    const long long n_cycles = 10000;
    const Trace t = adversarial_trace(bp, n_cycles, 2, rng);
    long long best = 0;
    long long total = 0;
    for (const ArrivalBatch& b : t.batches) {
      for (const Arrival& a : b.packets) {
        total += 1;
        if (a.work == 1 && a.profit == 2) best += 1;
      }
    }
    const double p = p_star(2, 4, 1);  // 1/6
    const double frac = static_cast<double>(best) / total;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(total));
    CHECK(std::abs(frac - p) <= 3.0 * sigma);
  }
}

TEST_CASE("subopt on degenerate traces") {
  SplitMix64 rng(32);
  SECTION("no best packets means zero throughput") {
    const BoundParams bp{2, 4, 2, 2};
    const Trace t = adversarial_trace(bp, 100, 2, rng, 0.0);
    CHECK(subopt_run(t, bp) == 0);
  }
  SECTION("w=1 with a best packet every cycle transmits one per period") {
    const BoundParams bp{2, 4, 1, 2};
    const long long n = 500;
    const Trace t = adversarial_trace(bp, n, 2, rng, 1.0);
    CHECK(subopt_run(t, bp) == n * bp.V);
  }
}

TEST_CASE("subopt mean throughput tracks the closed form") {
  const BoundParams bp{2, 4, 2, 2};
  const long long n = 2000;
  const int seeds = 50;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    SplitMix64 rng(derive_seed(900, static_cast<std::uint64_t>(s)));
    total += static_cast<double>(subopt_run(adversarial_trace(bp, n, 2, rng), bp));
  }
  const double mean = total / seeds;
  const double expected = subopt_expected_throughput(bp, n);
  // per-trace variance: Binomial(n/w, q) picks scaled by V
  const double q = expected / (static_cast<double>(n) / bp.w * bp.V);
  const double var = static_cast<double>(n) / bp.w * q * (1 - q) * bp.V * bp.V;
  const double se = std::sqrt(var / seeds);
  CHECK(std::abs(mean - expected) <= 3.0 * se);
}

TEST_CASE("tail bound values and monotonicity") {
  SECTION("published operating point") {
    CHECK(tail_bound(10.0, 0.3, 10, 100) < 0.0003);
  }
  SECTION("p = 0 leaves only the Poisson tail") {
    // independent evaluation of Pr(X > N) via logarithmic pmf, summed upward
    const double lambda = 10.0;
    const int N = 40;
    long double expected = 0.0L;
    for (int n = N + 1; n <= N + 400; ++n) {
      expected += std::exp(n * std::log(static_cast<long double>(lambda)) - lambda -
                           std::lgamma(static_cast<long double>(n) + 1));
    }
    CHECK(tail_bound(lambda, 0.0, 10, N) ==
          Catch::Approx(static_cast<double>(expected)).epsilon(1e-9));
  }
  SECTION("truncation point is immaterial once the tail is negligible") {
    CHECK(std::abs(tail_bound(10.0, 0.3, 10, 100) - tail_bound(10.0, 0.3, 10, 200)) < 1e-9);
  }
  SECTION("nonincreasing in k") {
    double prev = 1.0;
    for (int k = 0; k <= 20; ++k) {
      const double v = tail_bound(10.0, 0.3, k, 150);
      CHECK(v <= prev + 1e-15);
      prev = v;
    }
  }
  SECTION("nondecreasing in p_unknown") {
    double prev = 0.0;
    for (double p = 0.0; p <= 1.0001; p += 0.1) {
      const double v = tail_bound(10.0, std::min(p, 1.0), 10, 150);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}
