#include <cmath>

#include "doctest.h"
#include "eedag/intervals.hpp"
#include "oracles.hpp"

using namespace eedag;

namespace {

TimeSeries series_of(std::vector<double> heights) {
  TimeSeries ts;
  ts.name = "s";
  for (std::size_t i = 0; i < heights.size(); ++i) ts.times.push_back(static_cast<double>(i));
  ts.heights = std::move(heights);
  return ts;
}

std::size_t pick_extremum(const TimeSeries& ts, SplitMix64& rng) {
  const auto ext = find_extrema(ts);
  return ext[rng.next_below(ext.size())].index;
}

}  // namespace

TEST_CASE("extremal interval hand traces") {
  const auto ts = series_of({0, 2, 1, 3});

  // Min at z=0, eps=0.5: the continuous interval ends where the first segment
  // reaches height 1; widening lands on z=1.
  const auto a = extremal_interval(ts, 0, 0.5);
  CHECK(a.left == 0.0);
  CHECK(a.right == 1.0);
  CHECK(a.closed_left);  // the domain boundary belongs to the interval
  CHECK(!a.closed_right);

  // Min at z=2, eps=0.6 passes over the max at z=1 since 2*0.6 > |2-1|.
  const auto b = extremal_interval(ts, 2, 0.6);
  CHECK(b.left == 0.0);
  CHECK(b.right == 3.0);

  // Limit interval: smallest grid-open interval containing the extremum.
  const auto c = extremal_interval(ts, 2, 0.0);
  CHECK(c.left == 1.0);
  CHECK(c.right == 3.0);

  CHECK_THROWS_AS(extremal_interval(ts, 2, -0.1), InputError);
}

TEST_CASE("non-extremum points are rejected") {
  const auto ts = series_of({0, 1, 2, 3});
  CHECK_THROWS_AS(extremal_interval(ts, 1, 0.1), InputError);
  CHECK_THROWS_AS(eps_jumps(ts, 2), InputError);
}

TEST_CASE("jump lists match the hand traces") {
  const auto ts = series_of({0, 2, 1, 3});
  CHECK(eps_jumps_right(ts, 0) == std::vector<double>{1.0, 1.5});
  CHECK(eps_jumps_right(ts, 3).empty());

  const auto monotone = series_of({0, 1, 2});
  CHECK(eps_jumps_right(monotone, 0) == std::vector<double>{0.5, 1.0});

  // Interior min at z=2: the left endpoint jumps once (at 0.5 the max at z=1
  // is passed and the interval runs to the boundary), the right jumps at 1.
  CHECK(eps_jumps_left(ts, 2) == std::vector<double>{0.5});
  CHECK(eps_jumps_right(ts, 2) == std::vector<double>{1.0});
  CHECK(eps_jumps(ts, 2) == std::vector<double>{0.5, 1.0});

  // Boundary extremum: only right jumps.
  CHECK(eps_jumps(ts, 0) == eps_jumps_right(ts, 0));

  // Symmetric tent keeps the duplicate.
  const auto tent = series_of({0, 2, 0});
  CHECK(eps_jumps(tent, 1) == std::vector<double>{1.0, 1.0});
}

TEST_CASE("interval growth lookups agree with the direct construction") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 2 + rng.next_below(12), "s");
    const std::size_t idx = pick_extremum(ts, rng);
    const IntervalGrowth growth(ts, idx);
    // Probe strictly between jumps so float reconstruction of the level
    // cannot flip a boundary comparison.
    std::vector<double> probes = {1e-9};
    const auto& jumps = growth.jumps();
    for (std::size_t k = 0; k < jumps.size(); ++k) {
      const double next = k + 1 < jumps.size() ? jumps[k + 1] : jumps[k] + 0.25;
      if (next > jumps[k]) probes.push_back(jumps[k] + (next - jumps[k]) / 3.0);
    }
    for (double eps : probes) {
      const auto direct = extremal_interval(ts, idx, eps);
      const auto fast = growth.at(eps);
      CHECK(direct.left == fast.left);
      CHECK(direct.right == fast.right);
      CHECK(direct.closed_left == fast.closed_left);
      CHECK(direct.closed_right == fast.closed_right);
    }
  }
}

TEST_CASE("intervals are nested across jumps") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 3 + rng.next_below(10), "s");
    const std::size_t idx = pick_extremum(ts, rng);
    const IntervalGrowth growth(ts, idx);
    DiscreteInterval last = growth.just_past(0.0);
    for (double J : growth.jumps()) {
      const DiscreteInterval next = growth.just_past(J);
      CHECK(next.left <= last.left);
      CHECK(next.right >= last.right);
      CHECK(next.length() >= last.length());
      last = next;
    }
  }
}

TEST_CASE("containment of the adjacent extremum flips exactly at the half gap") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 3 + rng.next_below(10), "s");
    const auto ext = find_extrema(ts);
    for (std::size_t e = 0; e + 1 < ext.size(); ++e) {
      const auto& cur = ext[e];
      // The adjacent grid point in the direction of the next extremum enters
      // exactly past the first right jump |h_{i+1} - h_i| / 2.
      if (cur.index + 1 >= ts.size()) continue;
      const double J = std::abs(ts.heights[cur.index + 1] - ts.heights[cur.index]) / 2.0;
      const IntervalGrowth growth(ts, cur.index);
      const double t_next = ts.times[cur.index + 1];
      CHECK(!growth.at(J).contains(t_next));
      CHECK(growth.just_past(J).contains(t_next));
    }
  }
}

TEST_CASE("same-label intervals stay disjoint below both half persistences") {
  SplitMix64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 4 + rng.next_below(10), "s");
    const auto ext = find_extrema(ts);
    const auto lives = node_lives(ts);
    for (std::size_t a = 0; a < ext.size(); ++a) {
      for (std::size_t b = a + 1; b < ext.size(); ++b) {
        if (ext[a].label != ext[b].label) continue;
        const double cap = std::min(lives.at(ext[a].index), lives.at(ext[b].index));
        const double eps = cap * 0.9;
        CHECK(!strictly_overlaps(extremal_interval(ts, ext[a].index, eps),
                                 extremal_interval(ts, ext[b].index, eps)));
      }
    }
  }
}

TEST_CASE("eps_intersection basics") {
  // Extrema at the same time coordinate intersect immediately.
  const auto a = series_of({0, 2, 1, 3});
  const auto b = series_of({5, 1, 4, 0});
  const auto zero = eps_intersection(a, 0, b, 0);  // both extremal at t=0
  REQUIRE(zero);
  CHECK(*zero == 0.0);

  // Symmetry.
  SplitMix64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s1 = test::random_series(rng, 3 + rng.next_below(8), "a");
    const auto s2 = test::random_series(rng, 3 + rng.next_below(8), "b");
    const std::size_t i1 = pick_extremum(s1, rng);
    const std::size_t i2 = pick_extremum(s2, rng);
    const auto fwd = eps_intersection(s1, i1, s2, i2);
    const auto rev = eps_intersection(s2, i2, s1, i1);
    REQUIRE(fwd.has_value() == rev.has_value());
    if (fwd) CHECK(*fwd == *rev);
  }
}

TEST_CASE("eps_intersection brackets against the dense scan oracle") {
  SplitMix64 rng(36);
  const double resolution = 1e-3;
  for (int trial = 0; trial < 60; ++trial) {
    const auto s1 = test::random_series(rng, 8, "a");
    const auto s2 = test::random_series(rng, 8, "b");
    const std::size_t i1 = pick_extremum(s1, rng);
    const std::size_t i2 = pick_extremum(s2, rng);
    const auto fast = eps_intersection(s1, i1, s2, i2);
    const auto slow = test::oracle_eps_star(s1, i1, s2, i2, resolution);
    REQUIRE(fast);
    REQUIRE(slow);
    CHECK(std::abs(*fast - *slow) <= resolution + 1e-12);
  }
}

TEST_CASE("disjoint domains never intersect") {
  TimeSeries a{"a", {0, 1, 2}, {0, 1, 0.5}};
  TimeSeries b{"b", {10, 11, 12}, {0, 1, 0.5}};
  CHECK(!eps_intersection(a, 0, b, 0).has_value());
}

TEST_CASE("cross-grid intersections match the oracle") {
  SplitMix64 rng(37);
  const double resolution = 1e-3;
  for (int trial = 0; trial < 40; ++trial) {
    auto s1 = test::random_series(rng, 6 + rng.next_below(4), "a");
    auto s2 = test::random_series(rng, 6 + rng.next_below(4), "b");
    // Different, overlapping grids.
    for (double& t : s2.times) t = 0.4 + t * 1.3;
    const std::size_t i1 = pick_extremum(s1, rng);
    const std::size_t i2 = pick_extremum(s2, rng);
    const auto fast = eps_intersection(s1, i1, s2, i2);
    const auto slow = test::oracle_eps_star(s1, i1, s2, i2, resolution);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) CHECK(std::abs(*fast - *slow) <= resolution + 1e-12);
  }
}
