#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mistqueue/classes.hpp"
#include "mistqueue/core.hpp"
#include "mistqueue/rng.hpp"

namespace mistqueue {

enum class PolicyKind { PlainFifo, Sam, Sao, SamSs };

enum class SchedOrder { Fifo, WThenV, Effect };

inline const char* to_string(SchedOrder o) {
  switch (o) {
    case SchedOrder::Fifo: return "fifo";
    case SchedOrder::WThenV: return "wtv";
    case SchedOrder::Effect: return "effect";
  }
  return "?";
}

struct PolicyConfig {
  PolicyKind kind = PolicyKind::PlainFifo;
  double r = 1.0;  // admittance probability per cycle with U-arrivals
  SchedOrder order = SchedOrder::Fifo;
  bool pipelining = false;  // fill-during-flush (SAO)
  ClassSelector selector;   // no selection yet -> drawn at policy start
  int B = 10;
  int W = 256;
  int V = 16;
  std::vector<int> small_set_works;    // SamSs value sets
  std::vector<int> small_set_profits;
  // Experimental: sort once per arrival batch instead of after every
  // acceptance (changes mid-batch flush-entry timing).
  bool batch_sort = false;
};

inline std::string policy_name(const PolicyConfig& cfg) {
  switch (cfg.kind) {
    case PolicyKind::PlainFifo: return "fifo";
    case PolicyKind::Sam: return "sam";
    case PolicyKind::SamSs: return "sam-ss";
    case PolicyKind::Sao: return std::string("sao-") + to_string(cfg.order);
  }
  return "?";
}

inline void validate_policy(const PolicyConfig& cfg) {
  if (cfg.B < 2) throw std::invalid_argument("policy: B must be >= 2");
  if (cfg.r < 0.0 || cfg.r > 1.0) throw std::invalid_argument("policy: r outside [0,1]");
  if (cfg.W < 2 || cfg.V < 1) throw std::invalid_argument("policy: requires W >= 2, V >= 1");
  if (cfg.kind == PolicyKind::SamSs && !cfg.selector.has_selection && !cfg.selector.oblivious &&
      (cfg.small_set_works.empty() || cfg.small_set_profits.empty())) {
    throw std::invalid_argument("policy: sam-ss needs value sets or a fixed/oblivious selector");
  }
}

struct QueueState {
  std::vector<Packet> buffer;  // priority order; front is the HoL packet
  Phase phase = Phase::Fill;
  std::optional<std::uint64_t> admitted_slot;  // this cycle's admitted U-packet
  std::vector<std::uint64_t> flush_barrier;    // ids frozen when Hfull triggered
  int u_seen_this_cycle = 0;                   // reservoir denominator
  std::optional<std::pair<std::uint64_t, bool>> last_processed;  // (id, was a parse)
};

// Algorithm primitives, exposed for direct testing.

// Admittance coin: true with probability exactly r.
inline bool decide_admittance(SplitMix64& rng, double r) { return rng.bernoulli(r); }

// Reservoir step: the count_so_far-th U-arrival of the cycle replaces the
// current candidate with probability 1/count_so_far, which leaves every
// arrival equally likely to be the admitted packet.
inline bool admit_candidate(SplitMix64& rng, int count_so_far) {
  if (count_so_far < 1) throw std::invalid_argument("admit_candidate: count must be >= 1");
  return rng.uniform_below(static_cast<std::uint64_t>(count_so_far)) == 0;
}

namespace policy_stream {
inline constexpr std::uint64_t kAdmittance = 11;
inline constexpr std::uint64_t kReservoir = 12;
inline constexpr std::uint64_t kClass = 13;
}  // namespace policy_stream

// One queue-management policy instance driving a single buffer. The engine
// calls transmission_step / arrival_step / processing_step once per cycle, in
// that order.
class QueuePolicy {
 public:
  QueuePolicy(PolicyConfig cfg, std::uint64_t seed, bool record_transmissions = false)
      : cfg_(std::move(cfg)),
        admit_rng_(derive_seed(seed, policy_stream::kAdmittance)),
        reservoir_rng_(derive_seed(seed, policy_stream::kReservoir)),
        class_rng_(derive_seed(seed, policy_stream::kClass)),
        record_transmissions_(record_transmissions) {
    validate_policy(cfg_);
    sel_ = cfg_.selector;
    if (cfg_.kind != PolicyKind::PlainFifo && !sel_.has_selection && !sel_.oblivious) {
      if (cfg_.kind == PolicyKind::SamSs || sel_.regime == Regime::SmallSets) {
        sel_ = select_class_small_sets(class_rng_, cfg_.small_set_works, cfg_.small_set_profits);
      } else {
        sel_ = select_class(class_rng_, cfg_.W, cfg_.V, sel_.regime);
      }
    }
  }

  const QueueState& state() const { return st_; }
  const PolicyConfig& config() const { return cfg_; }
  const ClassSelector& selector() const { return sel_; }
  bool buffer_empty() const { return st_.buffer.empty(); }

  // For tests and experiments: install a buffer snapshot directly.
  void reset_state(QueueState st) {
    st_ = std::move(st);
    sort_buffer();
  }

  // Removes every fully-processed packet and credits its profit.
  void transmission_step(RunStats& stats) {
    auto it = st_.buffer.begin();
    while (it != st_.buffer.end()) {
      if (it->remaining_work == 0) {
        stats.throughput += it->profit;
        stats.transmitted_count += 1;
        stats.per_class_profit[{work_class(it->total_work), profit_class(it->profit)}] +=
            it->profit;
        if (is_selected(*it, sel_)) stats.selected_known_transmitted += 1;
        if (record_transmissions_) stats.transmissions.push_back(it->id);
        erase_barrier(it->id);
        it = st_.buffer.erase(it);
      } else {
        ++it;
      }
    }
  }

  // Admission control for one cycle's batch (possibly empty). Packets must
  // carry their engine-assigned ids and arrival cycle.
  void arrival_step(std::span<const Packet> batch, RunStats& stats) {
    st_.u_seen_this_cycle = 0;
    st_.admitted_slot.reset();
    update_phase();

    bool admittance = false;
    bool admittance_drawn = false;
    for (const Packet& arrival : batch) {
      Packet p = arrival;
      if (p.known) observe_class(p);
      bool reservoir_win = false;
      if (!p.known && cfg_.kind != PolicyKind::PlainFifo) {
        ++st_.u_seen_this_cycle;
        if (!admittance_drawn) {
          admittance = decide_admittance(admit_rng_, cfg_.r);
          admittance_drawn = true;
        }
        reservoir_win = admit_candidate(reservoir_rng_, st_.u_seen_this_cycle);
      }

      if (cfg_.kind == PolicyKind::PlainFifo) {
        if (st_.buffer.size() < static_cast<std::size_t>(cfg_.B)) {
          accept(p, stats);
        } else {
          reject(stats);
        }
        continue;
      }

      if (st_.phase == Phase::Flush && !cfg_.pipelining) {
        reject(stats);  // flush discards all arrivals
        continue;
      }

      bool accepted = false;
      const bool admit_win = !p.known && admittance && reservoir_win;
      if (st_.buffer.size() < static_cast<std::size_t>(cfg_.B)) {
        accept(p, stats);
        accepted = true;
      } else {
        const bool csk = p.known && is_selected(p, sel_);
        if (csk || admit_win) {
          if (push_out_tail(stats)) {
            accept(p, stats);
            accepted = true;
          } else {
            reject(stats);  // only barrier / selected-class packets left
          }
        } else {
          reject(stats);
        }
      }
      if (accepted && admit_win) {
        if (st_.admitted_slot) {  // reservoir replaced an earlier candidate
          auto old = std::find_if(st_.buffer.begin(), st_.buffer.end(), [&](const Packet& q) {
            return q.id == *st_.admitted_slot;
          });
          if (old != st_.buffer.end()) old->admitted = false;
        }
        st_.buffer.back().admitted = true;
        st_.admitted_slot = p.id;
      }
      if (accepted && !cfg_.batch_sort) {
        update_phase();
        sort_buffer();
      }
    }
    if (cfg_.batch_sort) {
      update_phase();
      sort_buffer();
    }
  }

  // Processes exactly one packet if the buffer is nonempty: the admitted
  // packet (moved to HoL) during fill, otherwise the HoL packet.
  void processing_step(RunStats& stats) {
    st_.last_processed.reset();
    if (st_.buffer.empty()) {
      stats.idle_cycles += 1;
      st_.admitted_slot.reset();
      return;
    }
    if (st_.phase == Phase::Fill && st_.admitted_slot) {
      auto it = std::find_if(st_.buffer.begin(), st_.buffer.end(),
                             [&](const Packet& q) { return q.id == *st_.admitted_slot; });
      if (it != st_.buffer.end()) {
        std::rotate(st_.buffer.begin(), it, it + 1);  // move to HoL
      }
    }
    Packet& hol = st_.buffer.front();
    const bool was_unknown = !hol.known;
    apply_processing(hol);
    if (was_unknown) {
      stats.parse_cycles += 1;
      observe_class(hol);  // a parse may uncover a class
      if (is_selected(hol, sel_)) stats.selected_known_seen += 1;
    } else {
      stats.work_cycles += 1;
    }
    st_.last_processed = {{hol.id, was_unknown}};
    st_.admitted_slot.reset();  // admitted status ends with the parsing cycle
    update_phase();
    sort_buffer();
  }

  // Phase machine: empty -> fill; Hfull -> flush; otherwise unchanged. With
  // pipelining, flush ends when the barrier has drained, and Hfull is then
  // re-evaluated immediately.
  Phase update_phase() {
    if (st_.buffer.empty()) {
      st_.phase = Phase::Fill;
      st_.flush_barrier.clear();
      return st_.phase;
    }
    if (cfg_.pipelining) {
      if (st_.phase == Phase::Flush) {
        if (!st_.flush_barrier.empty()) return st_.phase;
        st_.phase = Phase::Fill;
      }
      if (hfull()) {
        st_.phase = Phase::Flush;
        st_.flush_barrier.clear();
        for (const Packet& p : st_.buffer) st_.flush_barrier.push_back(p.id);
      }
    } else if (hfull()) {
      st_.phase = Phase::Flush;
    }
    return st_.phase;
  }

  // All B slots hold known selected-class packets.
  bool hfull() const {
    if (cfg_.kind == PolicyKind::PlainFifo) return false;
    if (st_.buffer.size() != static_cast<std::size_t>(cfg_.B)) return false;
    return std::all_of(st_.buffer.begin(), st_.buffer.end(), [&](const Packet& p) {
      return p.known && is_selected(p, sel_);
    });
  }

  // Priority bands: barrier packets first during a pipelined flush, then
  // known selected-class packets, then (for SAO) other known packets, then
  // unknown packets in FIFO order. SAM keeps two bands with FIFO inside.
  void sort_buffer() {
    std::stable_sort(st_.buffer.begin(), st_.buffer.end(),
                     [this](const Packet& a, const Packet& b) { return before(a, b); });
  }

 private:
  int band(const Packet& p) const {
    if (cfg_.pipelining && st_.phase == Phase::Flush && in_barrier(p.id)) return 0;
    if (cfg_.kind == PolicyKind::PlainFifo) return 1;
    if (p.known && is_selected(p, sel_)) return 1;
    if (cfg_.kind != PolicyKind::Sao) return 2;
    return p.known ? 2 : 3;
  }

  bool before(const Packet& a, const Packet& b) const {
    const int ba = band(a);
    const int bb = band(b);
    if (ba != bb) return ba < bb;
    if (cfg_.kind != PolicyKind::Sao || ba == 3) return a.id < b.id;
    switch (cfg_.order) {
      case SchedOrder::Fifo:
        return a.id < b.id;
      case SchedOrder::WThenV:
        if (a.remaining_work != b.remaining_work) return a.remaining_work < b.remaining_work;
        if (a.profit != b.profit) return a.profit > b.profit;
        return false;  // stable: equals keep arrival / in-service order
      case SchedOrder::Effect: {
        const long long ea = static_cast<long long>(a.profit) * b.remaining_work;
        const long long eb = static_cast<long long>(b.profit) * a.remaining_work;
        return ea > eb;  // stable on ties
      }
    }
    return false;
  }

  bool in_barrier(std::uint64_t id) const {
    return std::find(st_.flush_barrier.begin(), st_.flush_barrier.end(), id) !=
           st_.flush_barrier.end();
  }

  void erase_barrier(std::uint64_t id) {
    auto it = std::find(st_.flush_barrier.begin(), st_.flush_barrier.end(), id);
    if (it != st_.flush_barrier.end()) st_.flush_barrier.erase(it);
  }

  void accept(const Packet& p, RunStats& stats) {
    st_.buffer.push_back(p);
    stats.accepted_count += 1;
    if (p.known && is_selected(p, sel_)) stats.selected_known_seen += 1;
  }

  void reject(RunStats& stats) {
    stats.rejected_count += 1;
    stats.dropped_count += 1;
  }

  // Drops the lowest-priority droppable packet: never a barrier member and
  // never a known selected-class packet. Returns false if none exists.
  bool push_out_tail(RunStats& stats) {
    for (auto it = st_.buffer.rbegin(); it != st_.buffer.rend(); ++it) {
      const bool protected_member =
          (cfg_.pipelining && st_.phase == Phase::Flush && in_barrier(it->id)) ||
          (it->known && is_selected(*it, sel_));
      if (protected_member) continue;
      if (it->known && is_selected(*it, sel_)) stats.selected_known_evictions += 1;
      if (st_.admitted_slot && *st_.admitted_slot == it->id) st_.admitted_slot.reset();
      st_.buffer.erase(std::next(it).base());
      stats.pushed_out_count += 1;
      stats.dropped_count += 1;
      return true;
    }
    return false;
  }

  void observe_class(const Packet& p) {
    if (!sel_.oblivious) return;
    const ClassId revealed = sel_.regime == Regime::SmallSets
                                 ? ClassId{p.total_work, p.profit}
                                 : exact_class_of(p);
    oblivious_uncover(sel_, revealed, class_rng_);
  }

  PolicyConfig cfg_;
  ClassSelector sel_;
  QueueState st_;
  SplitMix64 admit_rng_;
  SplitMix64 reservoir_rng_;
  SplitMix64 class_rng_;
  bool record_transmissions_;
};

}  // namespace mistqueue
