#pragma once

#include <bit>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mistqueue/core.hpp"
#include "mistqueue/rng.hpp"

namespace mistqueue {

// Work/profit class partition: value 1 or 2 maps to class 1, otherwise class
// ceil(log2(value)), so class i > 1 covers (2^(i-1), 2^i]. Work classes are
// computed from a packet's total work, never its remaining work.

inline int value_class(int value) {
  if (value < 1) throw std::invalid_argument("value_class: value must be >= 1");
  if (value <= 2) return 1;
  return std::bit_width(static_cast<unsigned>(value - 1));
}

inline int work_class(int w) { return value_class(w); }
inline int profit_class(int v) { return value_class(v); }

// Number of classes for a maximum value: log2(max) for powers of two, rounded
// up otherwise.
inline int class_count(int max_value) { return value_class(max_value); }

enum class Regime { Exact, Closure, SmallSets };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::Exact: return "exact";
    case Regime::Closure: return "closure";
    case Regime::SmallSets: return "small-sets";
  }
  return "?";
}

// For Exact/Closure, (i, j) are work/profit class indices. For SmallSets the
// pair is the concrete (work, profit) value.
struct ClassId {
  int i = 0;
  int j = 0;

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend bool operator<(const ClassId& a, const ClassId& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  }
};

// The selected class plus, in values-oblivious mode, the reservoir over
// classes uncovered so far (N == seen.size()).
struct ClassSelector {
  Regime regime = Regime::Exact;
  bool has_selection = false;
  ClassId selected;
  bool oblivious = false;
  std::set<ClassId> seen;
};

inline ClassId exact_class_of(const Packet& p) {
  return ClassId{work_class(p.total_work), profit_class(p.profit)};
}

// Membership of the packet in the selected class. Unknown packets have no
// class; querying one is a policy bug.
inline bool is_selected(const Packet& p, const ClassSelector& sel) {
  if (!p.known) throw std::logic_error("is_selected: queried an unknown packet");
  if (!sel.has_selection) return false;
  switch (sel.regime) {
    case Regime::Exact:
      return work_class(p.total_work) == sel.selected.i && profit_class(p.profit) == sel.selected.j;
    case Regime::Closure:
      return p.total_work <= (1 << sel.selected.i) && p.profit >= (1 << (sel.selected.j - 1));
    case Regime::SmallSets:
      return p.total_work == sel.selected.i && p.profit == sel.selected.j;
  }
  return false;
}

// Uniform selection of a combined class (i*, j*) over the index grid.
inline ClassSelector select_class(SplitMix64& rng, int W, int V, Regime regime) {
  if (regime == Regime::SmallSets) {
    throw std::invalid_argument("select_class: small-sets needs explicit value sets");
  }
  ClassSelector sel;
  sel.regime = regime;
  sel.has_selection = true;
  sel.selected.i = 1 + static_cast<int>(rng.uniform_below(class_count(W)));
  sel.selected.j = 1 + static_cast<int>(rng.uniform_below(class_count(V)));
  return sel;
}

// Uniform selection of a concrete (w*, v*) pair from the declared value sets.
inline ClassSelector select_class_small_sets(SplitMix64& rng, std::span<const int> work_values,
                                             std::span<const int> profit_values) {
  if (work_values.empty() || profit_values.empty()) {
    throw std::invalid_argument("select_class_small_sets: empty value set");
  }
  ClassSelector sel;
  sel.regime = Regime::SmallSets;
  sel.has_selection = true;
  sel.selected.i = work_values[rng.uniform_below(work_values.size())];
  sel.selected.j = profit_values[rng.uniform_below(profit_values.size())];
  return sel;
}

inline ClassSelector fixed_selector(Regime regime, ClassId selected) {
  ClassSelector sel;
  sel.regime = regime;
  sel.has_selection = true;
  sel.selected = selected;
  return sel;
}

inline ClassSelector oblivious_selector(Regime regime) {
  ClassSelector sel;
  sel.regime = regime;
  sel.oblivious = true;
  return sel;
}

// Reservoir step on class uncovering: a class seen for the first time bumps N
// and becomes the selection with probability 1/N; re-revealed classes change
// nothing. Over any uncovering sequence the final selection is uniform over
// the uncovered classes.
inline void oblivious_uncover(ClassSelector& sel, ClassId revealed, SplitMix64& rng) {
  if (!sel.oblivious) throw std::logic_error("oblivious_uncover: selector is values-aware");
  if (sel.seen.contains(revealed)) return;
  sel.seen.insert(revealed);
  const auto n = static_cast<std::uint64_t>(sel.seen.size());
  if (rng.uniform_below(n) == 0) {
    sel.selected = revealed;
    sel.has_selection = true;
  }
}

}  // namespace mistqueue
