#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mistqueue {

// Unit-size packet. Work and profit are integers in [1, W] x [1, V]; a
// U-packet (known == false) reveals them only after its first processing
// cycle (the parsing cycle).
struct Packet {
  std::uint64_t id = 0;
  int total_work = 1;      // cycles required in total
  int remaining_work = 1;  // cycles still required; 0 means transmittable
  int profit = 1;
  bool known = true;
  std::uint64_t arrival_cycle = 0;
  bool admitted = false;  // picked as its arrival cycle's admitted U-packet

  friend bool operator==(const Packet&, const Packet&) = default;
};

// Packet descriptor as it appears in a trace, before the engine assigns ids.
struct Arrival {
  int work = 1;
  int profit = 1;
  bool known = true;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

// Arrivals of one cycle, in arrival order. The order is total and stable;
// the reservoir admission draw depends on it.
struct ArrivalBatch {
  std::uint64_t cycle = 0;
  std::vector<Arrival> packets;

  friend bool operator==(const ArrivalBatch&, const ArrivalBatch&) = default;
};

struct TraceMeta {
  int W = 2;
  int V = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const TraceMeta&, const TraceMeta&) = default;
};

// Arrival trace. `gen_params` is advisory bookkeeping about how the trace was
// generated; it is not persisted by the trace file format and is excluded
// from equality.
struct Trace {
  TraceMeta meta;
  std::vector<ArrivalBatch> batches;  // sorted by cycle, strictly increasing
  std::map<std::string, double> gen_params;

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.meta == b.meta && a.batches == b.batches;
  }
};

enum class Phase { Fill, Flush };

inline const char* to_string(Phase p) { return p == Phase::Fill ? "fill" : "flush"; }

// Per-run counters. parse/work/idle partition the simulated cycles.
struct RunStats {
  long long throughput = 0;  // summed profit of transmitted packets
  long long transmitted_count = 0;
  long long accepted_count = 0;
  long long rejected_count = 0;    // arrivals never stored in the buffer
  long long pushed_out_count = 0;  // dropped after acceptance
  long long dropped_count = 0;     // rejected_count + pushed_out_count
  long long parse_cycles = 0;
  long long work_cycles = 0;
  long long idle_cycles = 0;
  long long total_cycles = 0;
  // Evictions of packets that were known selected-class members at eviction
  // time. The admission rules keep this at zero for SAM/SAO.
  long long selected_known_evictions = 0;
  // Packets that were ever a known selected-class member while buffered, and
  // how many of those were transmitted. Equal counts mean none was lost.
  long long selected_known_seen = 0;
  long long selected_known_transmitted = 0;
  std::map<std::pair<int, int>, long long> per_class_profit;
  std::vector<std::uint64_t> transmissions;  // filled when recording is on

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

// One processing application: decrements remaining work; the first processing
// of a U-packet is its parsing cycle and reveals its characteristics.
inline void apply_processing(Packet& p) {
  if (p.remaining_work < 1) {
    throw std::logic_error("apply_processing: packet has no remaining work");
  }
  --p.remaining_work;
  p.known = true;
}

inline void validate_trace(const Trace& t) {
  if (t.meta.W < 2 || t.meta.V < 1) {
    throw std::invalid_argument("trace: requires W >= 2 and V >= 1");
  }
  std::uint64_t prev_cycle = 0;
  bool first = true;
  for (const ArrivalBatch& b : t.batches) {
    if (!first && b.cycle <= prev_cycle) {
      throw std::invalid_argument("trace: batch cycles must be strictly increasing");
    }
    if (b.packets.empty()) {
      throw std::invalid_argument("trace: empty batch for cycle " + std::to_string(b.cycle));
    }
    for (const Arrival& a : b.packets) {
      if (a.work < 1 || a.work > t.meta.W) {
        throw std::invalid_argument("trace: work out of range in cycle " + std::to_string(b.cycle));
      }
      if (a.profit < 1 || a.profit > t.meta.V) {
        throw std::invalid_argument("trace: profit out of range in cycle " +
                                    std::to_string(b.cycle));
      }
    }
    prev_cycle = b.cycle;
    first = false;
  }
}

inline std::size_t packet_count(const Trace& t) {
  std::size_t n = 0;
  for (const ArrivalBatch& b : t.batches) n += b.packets.size();
  return n;
}

}  // namespace mistqueue
