#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "mistqueue/core.hpp"
#include "mistqueue/rng.hpp"

namespace mistqueue {

// Parameters of the lower-bound constructions: profits in [1, V], work of
// every packet in [w, W], at most M unknown packets per cycle.
struct BoundParams {
  int V = 1;
  int W = 2;
  int w = 1;  // minimum work
  int M = 1;
  double r = 1.0;
};

namespace detail {
inline long long bound_denominator(int V, int W, int w) {
  return static_cast<long long>(V) * (W - 1) + 1 - w;
}
}  // namespace detail

inline void validate_bound_params(const BoundParams& bp) {
  if (bp.V < 1 || bp.W < 2 || bp.w < 1 || bp.w > bp.W || bp.M < 1) {
    throw std::invalid_argument("bounds: need V >= 1, W >= 2, 1 <= w <= W, M >= 1");
  }
}

// True when the adversarial distribution is well defined. The only excluded
// grid point is V == 1 && w == W, where every packet is identical and the
// construction carries no information.
inline bool bound_params_degenerate(int V, int W, int w) {
  return detail::bound_denominator(V, W, w) < 1;
}

// p* = 1 / (V(W-1) + 1 - w): the probability a fill-phase packet is a best
// packet in the adversarial distribution.
inline double p_star(int V, int W, int w) {
  const long long d = detail::bound_denominator(V, W, w);
  if (d < 1) throw std::domain_error("p_star: V(W-1)+1-w must be >= 1");
  return 1.0 / static_cast<double>(d);
}

// Competitive-ratio floor for any randomized algorithm:
//   (V(W-1)/w) * [1 - (1 - p*)^(M w)].
inline double lower_bound_general(const BoundParams& bp) {
  validate_bound_params(bp);
  const long long d = detail::bound_denominator(bp.V, bp.W, bp.w);
  if (d < 1) throw std::domain_error("lower_bound_general: degenerate parameters");
  const long double p = 1.0L / static_cast<long double>(d);
  const long double exponent = static_cast<long double>(bp.M) * bp.w;
  // (1-p)^(Mw) via exp(Mw log1p(-p)); avoids underflow for large Mw.
  const long double pow_term = p >= 1.0L ? 0.0L : std::exp(exponent * std::log1p(-p));
  const long double bracket = 1.0L - pow_term;
  return static_cast<double>(static_cast<long double>(bp.V) * (bp.W - 1) / bp.w * bracket);
}

// Region split: M <= 1/(p* w) + 1 - 1/w, evaluated exactly in integers as
// M w <= V(W-1) + w - w  ... i.e. M*w <= d + w - 1.
inline bool in_small_m_region(const BoundParams& bp) {
  const long long d = detail::bound_denominator(bp.V, bp.W, bp.w);
  if (d < 1) throw std::domain_error("in_small_m_region: degenerate parameters");
  return static_cast<long long>(bp.M) * bp.w <= d + bp.w - 1;
}

// Small-M proposition: within its region the general bound is at least M/2.
inline bool check_small_M(const BoundParams& bp) {
  if (!in_small_m_region(bp)) throw std::domain_error("check_small_M: outside region");
  return lower_bound_general(bp) >= static_cast<double>(bp.M) / 2.0;
}

// Large-M proposition: past the region boundary the bound exceeds
// ((e-1)/(2e)) * V W / w.
inline bool check_large_M(const BoundParams& bp) {
  if (in_small_m_region(bp)) throw std::domain_error("check_large_M: outside region");
  const double floor =
      (std::exp(1.0) - 1.0) / (2.0 * std::exp(1.0)) * static_cast<double>(bp.V) * bp.W / bp.w;
  return lower_bound_general(bp) > floor;
}

enum class CorollaryVariant { General, UniformProfit, UniformWork };

// Floor implied by the corollaries: M/2 in the small-M region, otherwise
// ((e-1)/(2e)) V W / w with w = 1 (General / UniformProfit, the latter called
// with V = 1) or w = W (UniformWork). Throws if the general bound fails to
// dominate the floor; the region checks guarantee it never does.
inline double corollary_floor(int V, int W, int M, CorollaryVariant variant) {
  const int w = variant == CorollaryVariant::UniformWork ? W : 1;
  BoundParams bp{V, W, w, M};
  validate_bound_params(bp);
  if (bound_params_degenerate(V, W, w)) {
    throw std::domain_error("corollary_floor: degenerate parameters");
  }
  const double floor =
      in_small_m_region(bp)
          ? static_cast<double>(M) / 2.0
          : (std::exp(1.0) - 1.0) / (2.0 * std::exp(1.0)) * static_cast<double>(V) * W / w;
  if (lower_bound_general(bp) < floor * (1.0 - 1e-12)) {
    throw std::logic_error("corollary_floor: general bound fails to dominate the floor");
  }
  return floor;
}

// The adversarial arrival sequence behind the general lower bound: N fill
// cycles of M unknown packets, each a best packet (work w, profit V) with
// probability p*, otherwise a worst packet (work W, profit 1); followed by
// B*W arrival-free cycles (implicit in the trace). p_override, when in
// [0, 1], replaces p* for sensitivity experiments.
inline Trace adversarial_trace(const BoundParams& bp, long long N, int B, SplitMix64& rng,
                               double p_override = -1.0) {
  validate_bound_params(bp);
  if (N < 1 || B < 2) throw std::invalid_argument("adversarial_trace: need N >= 1, B >= 2");
  const double p = p_override >= 0.0 ? p_override : p_star(bp.V, bp.W, bp.w);
  Trace t;
  t.meta.W = bp.W;
  t.meta.V = bp.V;
  t.meta.seed = 0;
  t.gen_params = {{"p_star", p},
                  {"M", static_cast<double>(bp.M)},
                  {"N", static_cast<double>(N)},
                  {"flush_cycles", static_cast<double>(static_cast<long long>(B) * bp.W)}};
  t.batches.reserve(static_cast<std::size_t>(N));
  for (long long cycle = 0; cycle < N; ++cycle) {
    ArrivalBatch batch;
    batch.cycle = static_cast<std::uint64_t>(cycle);
    batch.packets.reserve(static_cast<std::size_t>(bp.M));
    for (int k = 0; k < bp.M; ++k) {
      Arrival a;
      if (rng.bernoulli(p)) {
        a.work = bp.w;
        a.profit = bp.V;
      } else {
        a.work = bp.W;
        a.profit = 1;
      }
      a.known = false;
      batch.packets.push_back(a);
    }
    t.batches.push_back(std::move(batch));
  }
  return t;
}

// The deliberately suboptimal offline reference policy of the adversarial
// construction. It
// works in periods of w cycles: each period it picks at most one best packet
// that arrived during the period; from the second period on it processes the
// previous pick (w cycles) and transmits it at period end; the flush phase
// processes the final pick. Neither greedy nor work conserving.
inline long long subopt_run(const Trace& trace, const BoundParams& bp, int B = 2) {
  validate_bound_params(bp);
  if (B < 2) throw std::invalid_argument("subopt_run: B must be >= 2");
  if (trace.batches.empty()) return 0;
  const long long fill_cycles = static_cast<long long>(trace.batches.back().cycle) + 1;
  const long long periods = fill_cycles / bp.w;

  long long throughput = 0;
  bool pending_pick = false;
  std::size_t bi = 0;
  for (long long period = 0; period < periods; ++period) {
    if (pending_pick) {
      throughput += bp.V;  // processed through this period, transmitted at its end
      pending_pick = false;
    }
    const std::uint64_t begin = static_cast<std::uint64_t>(period * bp.w);
    const std::uint64_t end = begin + static_cast<std::uint64_t>(bp.w);
    for (; bi < trace.batches.size() && trace.batches[bi].cycle < end; ++bi) {
      if (trace.batches[bi].cycle < begin || pending_pick) continue;
      for (const Arrival& a : trace.batches[bi].packets) {
        if (a.work == bp.w && a.profit == bp.V) {
          pending_pick = true;  // at most one pick per period
          break;
        }
      }
    }
  }
  if (pending_pick) throughput += bp.V;  // final pick finishes in the flush phase
  return throughput;
}

// Expected SubOPT throughput (NV/w)(1 - (1-p*)^(Mw)) from the construction.
inline double subopt_expected_throughput(const BoundParams& bp, long long N) {
  const double p = p_star(bp.V, bp.W, bp.w);
  const long long periods = N / bp.w;
  const double q = 1.0 - std::exp(static_cast<double>(bp.M) * bp.w * std::log1p(-p));
  return static_cast<double>(periods) * bp.V * q;
}

// Upper bound on Pr(more than k U-packets arrive in one cycle), with arrivals
// X ~ Poisson(lambda) and per-packet unknown-marking Bernoulli(p_unknown):
//   sum_{n=k}^{N} Pr(Bin(n, p) > k) Pr(X = n) + Pr(X > N).
// Poisson pmf and binomial CDF run on stable recurrences.
inline double tail_bound(double lambda, double p_unknown, int k, int N) {
  if (lambda <= 0.0 || p_unknown < 0.0 || p_unknown > 1.0 || k < 0 || N < k) {
    throw std::invalid_argument("tail_bound: bad parameters");
  }
  long double pois = std::exp(static_cast<long double>(-lambda));  // Pr(X = 0)
  long double total = 0.0L;
  const long double p = p_unknown;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) pois *= static_cast<long double>(lambda) / n;
    if (n > k) {  // Pr(Bin(n,p) > k) is zero for n <= k
      long double binom_cdf;
      if (p >= 1.0L) {
        binom_cdf = 0.0L;  // all n trials succeed; n > k means the tail is 1
      } else if (p <= 0.0L) {
        binom_cdf = 1.0L;
      } else {
        long double term = std::pow(1.0L - p, static_cast<long double>(n));  // i = 0
        binom_cdf = term;
        for (int i = 0; i < k; ++i) {
          term *= static_cast<long double>(n - i) / (i + 1) * (p / (1.0L - p));
          binom_cdf += term;
        }
      }
      total += (1.0L - binom_cdf) * pois;
    }
  }
  // Pr(X > N), summed upward so the small tail never cancels against 1.
  long double tail = 0.0L;
  for (int n = N + 1; n < N + 1000; ++n) {
    pois *= static_cast<long double>(lambda) / n;
    tail += pois;
    if (pois < 1e-40L && n > lambda) break;
  }
  total += tail;
  return static_cast<double>(total);
}

}  // namespace mistqueue
