#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mistqueue/core.hpp"
#include "mistqueue/rng.hpp"

namespace mistqueue {

struct ParetoParams {
  double shape = 1.0;
  double scale = 1.0;
};

// Defaults produced by scripts/calibrate_pareto.py: truncated+rounded draws
// hit mean/std 17.97/22.22 for work (max 256) and 3.66/3.20 for profit
// (max 16).
inline constexpr ParetoParams kWorkPareto{1.6921242720, 7.7588672160};
inline constexpr ParetoParams kProfitPareto{1.4482736906, 1.4605756886};

// 2-state MMPP with geometric per-cycle sojourns. LOW-state mean duration is
// duration_ratio times the HIGH one (0 means "use W"), so bursts can drain
// during the long quiet periods.
struct TrafficConfig {
  double lambda_high = 10.0;
  double lambda_low = 0.5;
  double mean_high_duration = 10.0;
  double duration_ratio = 0.0;  // 0 -> W
  double alpha = 0.3;           // probability a packet is unknown
  int W = 256;
  int V = 16;
  ParetoParams pareto_work = kWorkPareto;
  ParetoParams pareto_profit = kProfitPareto;
  long long total_packets = 10000;
  std::uint64_t seed = 1;
};

inline void validate_config(const TrafficConfig& c) {
  if (c.alpha < 0.0 || c.alpha > 1.0) throw std::invalid_argument("traffic: alpha outside [0,1]");
  if (c.pareto_work.shape <= 0.0 || c.pareto_profit.shape <= 0.0) {
    throw std::invalid_argument("traffic: Pareto shape must be positive");
  }
  if (c.pareto_work.scale < 1.0 || c.pareto_profit.scale < 1.0) {
    throw std::invalid_argument("traffic: Pareto scale must be >= 1");
  }
  if (c.W < 2 || c.V < 1) throw std::invalid_argument("traffic: requires W >= 2, V >= 1");
  if ((c.W & (c.W - 1)) != 0 || (c.V & (c.V - 1)) != 0) {
    throw std::invalid_argument("traffic: W and V must be powers of two");
  }
  if (c.lambda_high <= 0.0 || c.lambda_low <= 0.0) {
    throw std::invalid_argument("traffic: arrival rates must be positive");
  }
  if (c.mean_high_duration < 1.0) throw std::invalid_argument("traffic: HIGH duration < 1");
  if (c.total_packets < 0) throw std::invalid_argument("traffic: negative packet budget");
}

// Pareto draw rounded to the nearest integer, then clamped to [1, max]; draws
// beyond the maximum collapse onto it, producing the spike at max.
inline int sample_truncated_pareto(SplitMix64& rng, double shape, double scale, int max) {
  if (shape <= 0.0 || scale < 1.0 || max < 1) {
    throw std::invalid_argument("sample_truncated_pareto: bad parameters");
  }
  const double u = 1.0 - rng.uniform01();  // (0, 1]
  const double x = scale * std::pow(u, -1.0 / shape);
  long long k = std::llround(x);
  if (k < 1) k = 1;
  if (k > max) k = max;
  return static_cast<int>(k);
}

enum class MmppState { High, Low };

// Optional per-cycle probe for tests and diagnostics.
struct GenerationProbe {
  std::vector<MmppState> state_per_cycle;
  std::vector<int> arrivals_per_cycle;
};

namespace traffic_stream {
inline constexpr std::uint64_t kArrivals = 1;  // MMPP state + Poisson counts
inline constexpr std::uint64_t kWork = 2;
inline constexpr std::uint64_t kProfit = 3;
inline constexpr std::uint64_t kMark = 4;  // unknown-marking
}  // namespace traffic_stream

// MMPP trace generation. Each component draws from its own substream, so e.g.
// changing alpha flips only the K/U marks of an otherwise identical trace.
inline Trace generate_trace(const TrafficConfig& config, GenerationProbe* probe = nullptr) {
  validate_config(config);
  SplitMix64 arrivals(derive_seed(config.seed, traffic_stream::kArrivals));
  SplitMix64 work(derive_seed(config.seed, traffic_stream::kWork));
  SplitMix64 profit(derive_seed(config.seed, traffic_stream::kProfit));
  SplitMix64 mark(derive_seed(config.seed, traffic_stream::kMark));

  const double ratio = config.duration_ratio > 0.0 ? config.duration_ratio
                                                   : static_cast<double>(config.W);
  const double p_leave_high = 1.0 / config.mean_high_duration;
  const double p_leave_low = 1.0 / (ratio * config.mean_high_duration);

  Trace trace;
  trace.meta.W = config.W;
  trace.meta.V = config.V;
  trace.meta.seed = config.seed;
  trace.gen_params = {{"lambda_high", config.lambda_high},
                      {"lambda_low", config.lambda_low},
                      {"mean_high_duration", config.mean_high_duration},
                      {"duration_ratio", ratio},
                      {"alpha", config.alpha},
                      {"total_packets", static_cast<double>(config.total_packets)}};

  MmppState state = MmppState::High;
  long long remaining = config.total_packets;
  std::uint64_t cycle = 0;
  while (remaining > 0) {
    const double lambda = state == MmppState::High ? config.lambda_high : config.lambda_low;
    int count = arrivals.poisson(lambda);
    if (count > remaining) count = static_cast<int>(remaining);
    if (probe) {
      probe->state_per_cycle.push_back(state);
      probe->arrivals_per_cycle.push_back(count);
    }
    if (count > 0) {
      ArrivalBatch batch;
      batch.cycle = cycle;
      batch.packets.reserve(count);
      for (int k = 0; k < count; ++k) {
        Arrival a;
        a.work = sample_truncated_pareto(work, config.pareto_work.shape, config.pareto_work.scale,
                                         config.W);
        a.profit = sample_truncated_pareto(profit, config.pareto_profit.shape,
                                           config.pareto_profit.scale, config.V);
        a.known = !mark.bernoulli(config.alpha);
        batch.packets.push_back(a);
      }
      remaining -= count;
      trace.batches.push_back(std::move(batch));
    }
    const double p_leave = state == MmppState::High ? p_leave_high : p_leave_low;
    if (arrivals.bernoulli(p_leave)) {
      state = state == MmppState::High ? MmppState::Low : MmppState::High;
    }
    ++cycle;
  }
  return trace;
}

}  // namespace mistqueue
