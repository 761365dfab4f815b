#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "eedag/persistence.hpp"
#include "eedag/synthetic.hpp"
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

}  // namespace

TEST_CASE("find_extrema basics") {
  const auto zigzag = find_extrema(series_of({0, 2, 1, 3}));
  REQUIRE(zigzag.size() == 4);
  CHECK(zigzag[0].label == ExtremumLabel::min);
  CHECK(zigzag[1].label == ExtremumLabel::max);
  CHECK(zigzag[2].label == ExtremumLabel::min);
  CHECK(zigzag[3].label == ExtremumLabel::max);

  const auto monotone = find_extrema(series_of({0, 1, 2}));
  REQUIRE(monotone.size() == 2);
  CHECK(monotone[0].index == 0);
  CHECK(monotone[0].label == ExtremumLabel::min);
  CHECK(monotone[1].index == 2);
  CHECK(monotone[1].label == ExtremumLabel::max);
}

TEST_CASE("find_extrema alternates and includes endpoints") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 2 + rng.next_below(14), "s");
    const auto ext = find_extrema(ts);
    REQUIRE(ext.size() >= 2);
    CHECK(ext.front().index == 0);
    CHECK(ext.back().index == ts.size() - 1);
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
      CHECK(ext[i].label != ext[i + 1].label);
      CHECK(ext[i].index < ext[i + 1].index);
    }
  }
}

TEST_CASE("merge tree hand traces") {
  const auto zigzag = merge_tree(series_of({0, 2, 1, 3}));
  REQUIRE(zigzag.size() == 2);
  CHECK(zigzag[0] == MergeTriplet{0, 0, 0});
  CHECK(zigzag[1] == MergeTriplet{2, 1, 0});

  const auto monotone = merge_tree(series_of({0, 1, 2}));
  REQUIRE(monotone.size() == 1);
  CHECK(monotone[0] == MergeTriplet{0, 0, 0});

  // W shape: the minimum at index 3 merges into the one at index 1 at the
  // interior saddle.
  const auto w = merge_tree(series_of({3, 0, 2, 1, 4}));
  REQUIRE(w.size() == 2);
  CHECK(w[0] == MergeTriplet{1, 1, 1});
  CHECK(w[1] == MergeTriplet{3, 2, 1});
}

TEST_CASE("triplet count equals minimum count") {
  SplitMix64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto ts = test::random_series(rng, 2 + rng.next_below(14), "s");
    std::size_t minima = 0;
    for (const auto& e : find_extrema(ts)) {
      if (e.label == ExtremumLabel::min) ++minima;
    }
    CHECK(merge_tree(ts).size() == minima);
  }
}

TEST_CASE("min_lives hand traces") {
  const auto zigzag = series_of({0, 2, 1, 3});
  const auto lives = min_lives(zigzag, merge_tree(zigzag));
  CHECK(lives.at(0) == doctest::Approx(1.5));
  CHECK(lives.at(2) == doctest::Approx(0.5));

  const auto monotone = series_of({0, 1, 2});
  CHECK(min_lives(monotone, merge_tree(monotone)).at(0) == doctest::Approx(1.0));
}

TEST_CASE("min_lives on the sine fixture") {
  SynthSpec spec;
  spec.kind = WaveKind::sine;
  spec.n_points = 1001;
  const Dataset ds = generate_synthetic(spec, 0);
  const auto& ts = ds.series[0];
  const auto lives = min_lives(ts, merge_tree(ts));
  REQUIRE(lives.size() == 2);  // minima at 0 and 3*pi/2
  CHECK(lives.begin()->second == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(std::next(lives.begin())->second == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("node_lives on the sine fixture") {
  SynthSpec spec;
  spec.kind = WaveKind::sine;
  spec.n_points = 1001;
  const Dataset ds = generate_synthetic(spec, 0);
  const auto extrema = find_extrema(ds.series[0]);
  const auto lives = node_lives(ds.series[0]);
  REQUIRE(extrema.size() == 4);
  CHECK(lives.at(extrema[0].index) == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(lives.at(extrema[1].index) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(lives.at(extrema[2].index) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(lives.at(extrema[3].index) == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("node_lives on the cosine fixture are all one") {
  SynthSpec spec;
  spec.kind = WaveKind::cosine;
  spec.n_points = 1001;
  const Dataset ds = generate_synthetic(spec, 0);
  const auto lives = node_lives(ds.series[0]);
  REQUIRE(lives.size() == 3);
  for (const auto& [idx, life] : lives) {
    CHECK(life == doctest::Approx(1.0).epsilon(1e-4));
  }
}

TEST_CASE("node_lives zigzag hand trace") {
  const auto lives = node_lives(series_of({0, 2, 1, 3}));
  CHECK(lives.at(0) == doctest::Approx(1.5));
  CHECK(lives.at(1) == doctest::Approx(0.5));
  CHECK(lives.at(2) == doctest::Approx(0.5));
  CHECK(lives.at(3) == doctest::Approx(1.5));
}

TEST_CASE("node_lives equals the threshold-sweep oracle") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ts = test::random_series(rng, 2 + rng.next_below(11), "s");
    const auto fast = node_lives(ts);
    const auto slow = test::oracle_node_lives(ts);
    REQUIRE(fast.size() == slow.size());
    for (const auto& [idx, life] : slow) {
      REQUIRE(fast.count(idx) == 1);
      CHECK(fast.at(idx) == life);  // exact: both take the same height differences
    }
  }
}

TEST_CASE("finite persistences are symmetric between a series and its negation") {
  SplitMix64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const auto ts = test::random_series(rng, 4 + rng.next_below(10), "s");
    TimeSeries neg = ts;
    for (double& h : neg.heights) h = -h;
    auto finite = [](const std::vector<PersistencePoint>& d) {
      std::vector<double> out;
      for (const auto& p : d) {
        if (p.death) out.push_back(*p.death - p.birth);
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    CHECK(finite(persistence_diagram(ts, FiltrationSide::sublevel)) ==
          finite(persistence_diagram(neg, FiltrationSide::superlevel)));
  }
}

TEST_CASE("node lives scale with the heights") {
  SplitMix64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const auto ts = test::random_series(rng, 3 + rng.next_below(10), "s");
    TimeSeries scaled = ts;
    const double c = 3.5;
    for (double& h : scaled.heights) h *= c;
    const auto base = node_lives(ts);
    const auto big = node_lives(scaled);
    for (const auto& [idx, life] : base) {
      CHECK(big.at(idx) == doctest::Approx(c * life).epsilon(1e-12));
    }
  }
}

TEST_CASE("persistence diagram from triplets") {
  const auto d = persistence_diagram(series_of({0, 2, 1, 3}), FiltrationSide::sublevel);
  REQUIRE(d.size() == 2);
  CHECK(d[0].birth == 0.0);
  CHECK(!d[0].death);
  CHECK(d[1].birth == 1.0);
  REQUIRE(d[1].death);
  CHECK(*d[1].death == 2.0);

  const auto m = persistence_diagram(series_of({0, 1, 2}), FiltrationSide::sublevel);
  REQUIRE(m.size() == 1);
  CHECK(!m[0].death);
}

TEST_CASE("persistence diagram matches the textbook five-point shape") {
  // Minima at t1 < t3 < t5 with pairings (f(t1), inf), (f(t3), f(t2)),
  // (f(t5), f(t4)).
  const auto ts = series_of({0, 5, 1, 3, 2});
  auto d = persistence_diagram(ts, FiltrationSide::sublevel);
  std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) { return a.birth < b.birth; });
  REQUIRE(d.size() == 3);
  CHECK(d[0].birth == 0.0);
  CHECK(!d[0].death);
  CHECK(d[1].birth == 1.0);
  CHECK(*d[1].death == 5.0);
  CHECK(d[2].birth == 2.0);
  CHECK(*d[2].death == 3.0);
}

TEST_CASE("diagram csv uses inf for the essential point") {
  const auto csv = diagram_to_csv(persistence_diagram(series_of({0, 2, 1, 3}), FiltrationSide::sublevel));
  CHECK(csv.find("birth,death,index\n") == 0);
  CHECK(csv.find("0,inf,0") != std::string::npos);
  CHECK(csv.find("1,2,2") != std::string::npos);
}

TEST_CASE("plateaued input is rejected") {
  CHECK_THROWS_AS(find_extrema(series_of({0, 1, 1, 2})), InputError);
  CHECK_THROWS_AS(merge_tree(series_of({0, 1, 1, 2})), InputError);
}
