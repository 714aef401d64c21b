#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <map>

#include "mistqueue/classes.hpp"

using namespace mistqueue;

namespace {
Packet known_packet(int w, int v) {
  Packet p;
  p.total_work = w;
  p.remaining_work = w;
  p.profit = v;
  p.known = true;
  return p;
}
}  // namespace

TEST_CASE("work and profit class indices") {
  CHECK(work_class(1) == 1);
  CHECK(work_class(2) == 1);
  CHECK(work_class(5) == 3);
  CHECK(work_class(256) == 8);
  CHECK(profit_class(1) == 1);
  CHECK(profit_class(3) == 2);
  CHECK(profit_class(16) == 4);
  CHECK(class_count(256) == 8);
  CHECK(class_count(16) == 4);
  CHECK(class_count(2) == 1);
}

TEST_CASE("every value pair belongs to exactly one exact class") {
  for (int w = 1; w <= 256; ++w) {
    for (int v = 1; v <= 16; ++v) {
      const Packet p = known_packet(w, v);
      int memberships = 0;
      for (int i = 1; i <= 8; ++i) {
        for (int j = 1; j <= 4; ++j) {
          if (is_selected(p, fixed_selector(Regime::Exact, {i, j}))) ++memberships;
        }
      }
      REQUIRE(memberships == 1);
      CHECK(is_selected(p, fixed_selector(Regime::Exact, {work_class(w), profit_class(v)})));
    }
  }
}

TEST_CASE("closure membership covers every class at least as good") {
  // p in exact class (i, j) with i <= i*, j >= j*  =>  p in closure (i*, j*).
  for (int w = 1; w <= 256; ++w) {
    for (int v = 1; v <= 16; ++v) {
      const Packet p = known_packet(w, v);
      const int i = work_class(w);
      const int j = profit_class(v);
      for (int is = 1; is <= 8; ++is) {
        for (int js = 1; js <= 4; ++js) {
          if (i <= is && j >= js) {
            REQUIRE(is_selected(p, fixed_selector(Regime::Closure, {is, js})));
          }
        }
      }
    }
  }
}

TEST_CASE("closure membership examples") {
  CHECK(is_selected(known_packet(4, 8), fixed_selector(Regime::Closure, {3, 3})));
  CHECK_FALSE(is_selected(known_packet(9, 8), fixed_selector(Regime::Closure, {3, 3})));
  CHECK(is_selected(known_packet(5, 3), fixed_selector(Regime::Exact, {3, 2})));
}

TEST_CASE("membership of unknown packets is undefined") {
  Packet p = known_packet(4, 4);
  p.known = false;
  CHECK_THROWS_AS(is_selected(p, fixed_selector(Regime::Exact, {2, 2})), std::logic_error);
}

TEST_CASE("class selection is uniform over the index grid") {
  SplitMix64 rng(5);
  SECTION("single class is always picked") {
    for (int k = 0; k < 50; ++k) {
      const ClassSelector sel = select_class(rng, 2, 2, Regime::Exact);
      REQUIRE(sel.selected == ClassId{1, 1});
    }
  }
  SECTION("32 classes, frequency 1/32 within 0.005") {
    std::map<std::pair<int, int>, int> counts;
    const int draws = 100000;
    for (int k = 0; k < draws; ++k) {
      const ClassSelector sel = select_class(rng, 256, 16, Regime::Exact);
      counts[{sel.selected.i, sel.selected.j}] += 1;
    }
    REQUIRE(counts.size() == 32);
    for (const auto& [cls, n] : counts) {
      const double freq = static_cast<double>(n) / draws;
      CHECK(freq == Catch::Approx(1.0 / 32).margin(0.005));
    }
  }
}

TEST_CASE("small-sets selection picks concrete values") {
  SplitMix64 rng(6);
  const std::array<int, 1> lw{3};
  const std::array<int, 1> lv{7};
  for (int k = 0; k < 20; ++k) {
    const ClassSelector sel = select_class_small_sets(rng, lw, lv);
    REQUIRE(sel.selected == ClassId{3, 7});
  }
  CHECK(is_selected(known_packet(3, 7), fixed_selector(Regime::SmallSets, {3, 7})));
  CHECK_FALSE(is_selected(known_packet(3, 6), fixed_selector(Regime::SmallSets, {3, 7})));
  CHECK_FALSE(is_selected(known_packet(4, 7), fixed_selector(Regime::SmallSets, {3, 7})));
}

TEST_CASE("oblivious uncovering runs a reservoir over classes") {
  SECTION("first uncovered class is always selected") {
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
      SplitMix64 rng(seed);
      ClassSelector sel = oblivious_selector(Regime::Exact);
      oblivious_uncover(sel, {2, 3}, rng);
      REQUIRE(sel.has_selection);
      REQUIRE(sel.selected == ClassId{2, 3});
      REQUIRE(sel.seen.size() == 1);
    }
  }
  SECTION("re-revealing a seen class changes nothing") {
    SplitMix64 rng(9);
    ClassSelector sel = oblivious_selector(Regime::Exact);
    oblivious_uncover(sel, {1, 1}, rng);
    oblivious_uncover(sel, {2, 2}, rng);
    const ClassSelector before = sel;
    oblivious_uncover(sel, {1, 1}, rng);
    CHECK(sel.selected == before.selected);
    CHECK(sel.seen == before.seen);
  }
  SECTION("after n distinct classes each is selected with probability 1/n") {
    const int runs = 100000;
    std::map<int, int> wins;
    for (int k = 0; k < runs; ++k) {
      SplitMix64 rng(derive_seed(777, static_cast<std::uint64_t>(k)));
      ClassSelector sel = oblivious_selector(Regime::Exact);
      for (int c = 1; c <= 5; ++c) oblivious_uncover(sel, {c, 1}, rng);
      wins[sel.selected.i] += 1;
    }
    for (int c = 1; c <= 5; ++c) {
      const double freq = static_cast<double>(wins[c]) / runs;
      CHECK(freq == Catch::Approx(0.2).margin(0.01));
    }
  }
}

TEST_CASE("values-aware selectors reject uncovering") {
  SplitMix64 rng(1);
  ClassSelector sel = fixed_selector(Regime::Exact, {1, 1});
  CHECK_THROWS_AS(oblivious_uncover(sel, {1, 2}, rng), std::logic_error);
}
