#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mistqueue/core.hpp"

namespace mistqueue {

struct KnapsackItem {
  long long size = 1;
  long long value = 1;
};

// Classic greedy 2-approximation: sort by value density, take the maximal
// prefix that fits, answer max(prefix value, best single item). Items larger
// than the capacity cannot appear in any packing and are dropped up front.
// Guarantee: result >= exact optimum / 2.
inline long long knapsack_greedy(std::vector<KnapsackItem> items, long long capacity) {
  if (capacity <= 0) return 0;
  std::erase_if(items, [&](const KnapsackItem& it) { return it.size > capacity; });
  std::sort(items.begin(), items.end(), [](const KnapsackItem& a, const KnapsackItem& b) {
    const long long da = a.value * b.size;
    const long long db = b.value * a.size;
    if (da != db) return da > db;
    if (a.value != b.value) return a.value > b.value;
    return a.size < b.size;
  });
  long long prefix_value = 0;
  long long used = 0;
  long long best_single = 0;
  bool prefix_open = true;
  for (const KnapsackItem& it : items) {
    best_single = std::max(best_single, it.value);
    if (prefix_open && used + it.size <= capacity) {
      used += it.size;
      prefix_value += it.value;
    } else {
      prefix_open = false;
    }
  }
  return std::max(prefix_value, best_single);
}

struct KnapsackBound {
  long long capacity = 0;
  double greedy_value = 0.0;  // max(prefix, best single)
  double ub_approx = 0.0;      // greedy_value + B*V; the ratio denominator
  double ub_certified = 0.0;  // 2*greedy_value + B*V; provably >= any policy's gain
};

// Offline relaxation of a trace: packets are items (size = work, value =
// profit), capacity is the arrival span in cycles (optionally only cycles
// with arrivals). The B*V term covers whatever remains buffered when
// arrivals end.
inline KnapsackBound knapsack_upper_bound(const Trace& trace, int B, int V,
                                          bool count_nonempty_only = false) {
  if (B < 0 || V < 1) throw std::invalid_argument("knapsack: need B >= 0, V >= 1");
  KnapsackBound out;
  if (!trace.batches.empty()) {
    out.capacity = count_nonempty_only
                       ? static_cast<long long>(trace.batches.size())
                       : static_cast<long long>(trace.batches.back().cycle) -
                             static_cast<long long>(trace.batches.front().cycle) + 1;
    std::vector<KnapsackItem> items;
    items.reserve(packet_count(trace));
    for (const ArrivalBatch& b : trace.batches) {
      for (const Arrival& a : b.packets) items.push_back({a.work, a.profit});
    }
    out.greedy_value = static_cast<double>(knapsack_greedy(std::move(items), out.capacity));
  }
  const double slack = static_cast<double>(B) * V;
  out.ub_approx = out.greedy_value + slack;
  out.ub_certified = 2.0 * out.greedy_value + slack;
  return out;
}

// Algorithm throughput over the (approximate) optimal throughput.
inline double performance_ratio(long long alg_throughput, double upper) {
  if (upper <= 0.0) {
    if (alg_throughput == 0) return 0.0;
    throw std::invalid_argument("performance_ratio: positive throughput with zero bound");
  }
  return static_cast<double>(alg_throughput) / upper;
}

}  // namespace mistqueue
