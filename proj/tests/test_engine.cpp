#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mistqueue/engine.hpp"
#include "mistqueue/knapsack.hpp"
#include "mistqueue/traffic.hpp"

#include "oracles.hpp"

using namespace mistqueue;

namespace {

std::vector<PolicyConfig> all_policies(int B, int W, int V, double r = 1.0) {
  std::vector<PolicyConfig> out;
  PolicyConfig fifo;
  fifo.kind = PolicyKind::PlainFifo;
  fifo.B = B;
  fifo.W = W;
  fifo.V = V;
  out.push_back(fifo);

  PolicyConfig sam;
  sam.kind = PolicyKind::Sam;
  sam.B = B;
  sam.W = W;
  sam.V = V;
  sam.r = r;
  sam.selector.regime = Regime::Exact;
  out.push_back(sam);

  for (SchedOrder ord : {SchedOrder::Fifo, SchedOrder::WThenV, SchedOrder::Effect}) {
    PolicyConfig sao;
    sao.kind = PolicyKind::Sao;
    sao.order = ord;
    sao.pipelining = true;
    sao.B = B;
    sao.W = W;
    sao.V = V;
    sao.r = r;
    sao.selector.regime = Regime::Closure;
    out.push_back(sao);
  }

  PolicyConfig ss;
  ss.kind = PolicyKind::SamSs;
  ss.B = B;
  ss.W = W;
  ss.V = V;
  ss.r = r;
  ss.small_set_works = {1, 2, 3};
  ss.small_set_profits = {1, 2};
  out.push_back(ss);
  return out;
}

}  // namespace

TEST_CASE("a single one-cycle packet yields its profit under every policy") {
  Trace t;
  t.meta.W = 8;
  t.meta.V = 8;
  t.batches.push_back({0, {{1, 5, true}}});
  for (const PolicyConfig& cfg : all_policies(3, 8, 8)) {
    PolicyConfig adjusted = cfg;
    if (adjusted.kind == PolicyKind::SamSs) adjusted.small_set_profits = {5};
    const RunStats s = run(t, adjusted, 33);
    CHECK(s.throughput == 5);
    CHECK(s.transmitted_count == 1);
    CHECK(s.total_cycles == 1);
  }
}

TEST_CASE("runs are deterministic in trace, policy and seed") {
  SplitMix64 rng(12);
  const Trace t = oracles::random_small_trace(rng, 150);
  for (const PolicyConfig& cfg : all_policies(4, t.meta.W, t.meta.V, 0.7)) {
    RunOptions opts;
    opts.record_transmissions = true;
    const RunStats a = run(t, cfg, 99, opts);
    const RunStats b = run(t, cfg, 99, opts);
    REQUIRE(a == b);
  }
}

TEST_CASE("cycle steps run transmission, arrival, processing in order") {
  SplitMix64 rng(13);
  const Trace t = oracles::random_small_trace(rng, 100);
  for (const PolicyConfig& cfg : all_policies(3, t.meta.W, t.meta.V)) {
    std::vector<StepEvent> events;
    RunOptions opts;
    opts.observer = [&](const StepEvent& ev) { events.push_back(ev); };
    const RunStats stats = run(t, cfg, 5, opts);

    std::uint64_t cycle = 0;
    std::size_t i = 0;
    std::set<std::uint64_t> parsed;
    long long parse_events = 0;
    const std::uint64_t last_arrival = t.batches.back().cycle;
    while (i < events.size()) {
      REQUIRE(events[i].kind == StepKind::Transmission);
      REQUIRE(events[i].cycle == cycle);
      ++i;
      if (i == events.size()) break;  // final transmission drained the buffer
      if (cycle <= last_arrival) {
        REQUIRE(events[i].kind == StepKind::Arrival);
        REQUIRE(events[i].buffer_size <= 3);  // occupancy bound after admission
        ++i;
      }
      REQUIRE(events[i].kind == StepKind::Processing);
      if (events[i].buffer_size > 0) {
        REQUIRE(events[i].processed.has_value());  // work conserving
      }
      if (events[i].processed && events[i].processed->second) {
        ++parse_events;
        REQUIRE(parsed.insert(events[i].processed->first).second);  // parsed once
      }
      ++i;
      ++cycle;
    }
    REQUIRE(parse_events == stats.parse_cycles);
    REQUIRE(cycle == static_cast<std::uint64_t>(stats.total_cycles));
  }
}

TEST_CASE("certified knapsack bound dominates every policy") {
  SplitMix64 rng(14);
  for (int iter = 0; iter < 60; ++iter) {
    const Trace t = oracles::random_small_trace(rng, 150);
    const int B = 2 + static_cast<int>(rng.uniform_below(5));
    const KnapsackBound kb = knapsack_upper_bound(t, B, t.meta.V);
    for (const PolicyConfig& cfg : all_policies(B, t.meta.W, t.meta.V)) {
      const RunStats s = run(t, cfg, rng.next_u64());
      REQUIRE(static_cast<double>(s.throughput) <= kb.ub_certified);
    }
  }
}

TEST_CASE("run_batch produces a deterministic cartesian table") {
  SplitMix64 rng(15);
  std::vector<Trace> traces;
  std::vector<std::uint64_t> seeds;
  for (int k = 0; k < 3; ++k) {
    traces.push_back(oracles::random_small_trace(rng, 80));
    traces.back().meta.W = 16;  // same family so one policy set fits all
    traces.back().meta.V = 8;
    for (ArrivalBatch& b : traces.back().batches) {
      for (Arrival& a : b.packets) {
        a.work = std::min(a.work, 16);
        a.profit = std::min(a.profit, 8);
      }
    }
    seeds.push_back(derive_seed(21, static_cast<std::uint64_t>(k)));
  }
  std::vector<PolicyConfig> policies = all_policies(3, 16, 8);
  policies.resize(2);

  const std::vector<RunRow> rows = run_batch(traces, policies, seeds, 1);
  REQUIRE(rows.size() == 6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].trace_index == i / 2);
    CHECK(rows[i].policy_index == i % 2);
  }
  const std::vector<RunRow> parallel = run_batch(traces, policies, seeds, 4);
  REQUIRE(parallel.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parallel[i].stats == rows[i].stats);
  }

  const std::vector<RunRow> empty = run_batch(traces, {}, seeds, 1);
  CHECK(empty.empty());
}

TEST_CASE("values-oblivious selection works end to end") {
  SplitMix64 rng(16);
  const Trace t = oracles::random_small_trace(rng, 150);
  PolicyConfig cfg;
  cfg.kind = PolicyKind::Sao;
  cfg.order = SchedOrder::Effect;
  cfg.pipelining = true;
  cfg.B = 4;
  cfg.W = t.meta.W;
  cfg.V = t.meta.V;
  cfg.selector = oblivious_selector(Regime::Closure);
  ClassSelector final_sel;
  const RunStats s = run(t, cfg, 77, {}, &final_sel);
  CHECK(s.accepted_count == s.transmitted_count + s.pushed_out_count);
  CHECK(final_sel.oblivious);
  CHECK(final_sel.has_selection);
  CHECK(final_sel.seen.size() >= 1);
  CHECK(final_sel.seen.contains(final_sel.selected));
}

TEST_CASE("summarize computes mean and sample deviation") {
  const std::vector<double> values{1.0, 2.0, 3.0, 4.0};
  const Summary s = summarize(values);
  CHECK(s.mean == Catch::Approx(2.5));
  CHECK(s.stddev == Catch::Approx(1.2909944487));
  CHECK(s.n == 4);
  CHECK(summarize({}).n == 0);
}
