#pragma once

#include <atomic>
#include <cmath>
#include <functional>
#include <span>
#include <thread>
#include <vector>

#include "mistqueue/core.hpp"
#include "mistqueue/policy.hpp"

namespace mistqueue {

enum class StepKind { Transmission, Arrival, Processing };

struct StepEvent {
  StepKind kind = StepKind::Transmission;
  std::uint64_t cycle = 0;
  std::size_t buffer_size = 0;
  // Set on processing events: (packet id, whether it was a parsing cycle).
  std::optional<std::pair<std::uint64_t, bool>> processed;
};

struct RunOptions {
  bool record_transmissions = false;
  std::function<void(const StepEvent&)> observer;
};

// Drives the transmission -> arrival -> processing cycle over a trace, then
// keeps processing until the buffer drains. Deterministic in (trace, policy,
// seed). selector_out, when given, receives the selector the run ended with
// (the class actually used; final reservoir state in oblivious mode).
inline RunStats run(const Trace& trace, const PolicyConfig& cfg, std::uint64_t seed,
                    const RunOptions& opts = {}, ClassSelector* selector_out = nullptr) {
  validate_trace(trace);
  QueuePolicy policy(cfg, seed, opts.record_transmissions);
  RunStats stats;

  const auto notify = [&](StepKind kind, std::uint64_t cycle) {
    if (!opts.observer) return;
    StepEvent ev;
    ev.kind = kind;
    ev.cycle = cycle;
    ev.buffer_size = policy.state().buffer.size();
    if (kind == StepKind::Processing) ev.processed = policy.state().last_processed;
    opts.observer(ev);
  };

  const bool has_batches = !trace.batches.empty();
  const std::uint64_t last_cycle = has_batches ? trace.batches.back().cycle : 0;
  std::size_t batch_index = 0;
  std::uint64_t next_id = 0;
  std::uint64_t t = 0;
  while (true) {
    policy.transmission_step(stats);
    notify(StepKind::Transmission, t);
    const bool in_span = has_batches && t <= last_cycle;
    if (!in_span && policy.buffer_empty()) break;
    if (in_span) {
      std::vector<Packet> batch;
      if (batch_index < trace.batches.size() && trace.batches[batch_index].cycle == t) {
        const ArrivalBatch& b = trace.batches[batch_index];
        batch.reserve(b.packets.size());
        for (const Arrival& a : b.packets) {
          Packet p;
          p.id = next_id++;
          p.total_work = a.work;
          p.remaining_work = a.work;
          p.profit = a.profit;
          p.known = a.known;
          p.arrival_cycle = t;
          batch.push_back(p);
        }
        ++batch_index;
      }
      policy.arrival_step(batch, stats);
      notify(StepKind::Arrival, t);
    }
    policy.processing_step(stats);
    notify(StepKind::Processing, t);
    stats.total_cycles += 1;
    ++t;
  }
  if (selector_out) *selector_out = policy.selector();
  return stats;
}

struct RunRow {
  std::size_t trace_index = 0;
  std::size_t policy_index = 0;
  std::uint64_t seed = 0;
  RunStats stats;
  ClassSelector selector;  // selection actually used (final state if oblivious)
};

// Cartesian product of traces and policies; seeds pair with traces so the
// same trace gets the same randomness under every policy. Rows come back in
// (trace, policy) order regardless of worker scheduling.
inline std::vector<RunRow> run_batch(std::span<const Trace> traces,
                                     std::span<const PolicyConfig> policies,
                                     std::span<const std::uint64_t> seeds, int jobs = 1,
                                     const RunOptions& opts = {}) {
  if (seeds.size() != traces.size()) {
    throw std::invalid_argument("run_batch: one seed per trace required");
  }
  std::vector<RunRow> rows(traces.size() * policies.size());
  const auto work_one = [&](std::size_t row) {
    const std::size_t ti = row / policies.size();
    const std::size_t pi = row % policies.size();
    rows[row].trace_index = ti;
    rows[row].policy_index = pi;
    rows[row].seed = seeds[ti];
    rows[row].stats = run(traces[ti], policies[pi], seeds[ti], opts, &rows[row].selector);
  };
  const std::size_t total = rows.size();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads =
      jobs <= 1 ? 1u : std::min<unsigned>(static_cast<unsigned>(jobs), hw);
  if (n_threads <= 1 || total <= 1) {
    for (std::size_t i = 0; i < total; ++i) work_one(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned k = 0; k < n_threads; ++k) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        work_one(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
  return rows;
}

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t n = 0;
};

inline Summary summarize(std::span<const double> values) {
  Summary s;
  s.n = values.size();
  if (s.n == 0) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(s.n);
  if (s.n > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

}  // namespace mistqueue
