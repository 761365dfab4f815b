#include "eedag/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace eedag {

namespace {

void require_plateau_free(const TimeSeries& ts) {
  validate_series(ts);
  if (!plateau_free(ts)) {
    throw InputError("series '" + ts.name + "' has plateaus; collapse them first");
  }
}

TimeSeries negated(const TimeSeries& ts) {
  TimeSeries out;
  out.name = ts.name;
  out.times = ts.times;
  out.heights.reserve(ts.size());
  for (double h : ts.heights) out.heights.push_back(-h);
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<Extremum> find_extrema(const TimeSeries& ts) {
  require_plateau_free(ts);
  const auto& h = ts.heights;
  const std::size_t n = h.size();
  std::vector<Extremum> out;
  auto push = [&](std::size_t i, ExtremumLabel l) {
    out.push_back({i, ts.times[i], h[i], l});
  };
  push(0, h[0] < h[1] ? ExtremumLabel::min : ExtremumLabel::max);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (h[i] < h[i - 1] && h[i] < h[i + 1]) push(i, ExtremumLabel::min);
    if (h[i] > h[i - 1] && h[i] > h[i + 1]) push(i, ExtremumLabel::max);
  }
  push(n - 1, h[n - 1] < h[n - 2] ? ExtremumLabel::min : ExtremumLabel::max);
  return out;
}

std::vector<MergeTriplet> merge_tree(const TimeSeries& ts) {
  require_plateau_free(ts);
  const auto& h = ts.heights;
  const std::size_t n = h.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return h[a] != h[b] ? h[a] < h[b] : a < b;
  });

  UnionFind uf(n);
  // Representative minimum of each component root; the elder rule keeps the
  // minimum with the lower height (ties: smaller domain coordinate).
  std::vector<std::size_t> rep_min(n);
  std::iota(rep_min.begin(), rep_min.end(), 0);
  std::vector<bool> alive(n, false);
  std::vector<MergeTriplet> triplets;

  auto older = [&](std::size_t a, std::size_t b) {
    return h[a] != h[b] ? h[a] < h[b] : a < b;
  };

  for (std::size_t idx : order) {
    std::vector<std::size_t> roots;
    if (idx > 0 && alive[idx - 1]) roots.push_back(uf.find(idx - 1));
    if (idx + 1 < n && alive[idx + 1]) roots.push_back(uf.find(idx + 1));
    alive[idx] = true;
    if (roots.empty()) {
      rep_min[idx] = idx;  // a component is born only at a local minimum
    } else if (roots.size() == 1 || roots[0] == roots[1]) {
      uf.parent[idx] = roots[0];
    } else {
      std::size_t survivor = older(rep_min[roots[0]], rep_min[roots[1]]) ? roots[0] : roots[1];
      std::size_t dying = survivor == roots[0] ? roots[1] : roots[0];
      triplets.push_back({rep_min[dying], idx, rep_min[survivor]});
      uf.parent[dying] = survivor;
      uf.parent[idx] = survivor;
    }
  }

  // One essential triplet per surviving component (a single one here, since
  // the domain is an interval).
  for (std::size_t i = 0; i < n; ++i) {
    if (uf.find(i) == i) {
      triplets.push_back({rep_min[i], rep_min[i], rep_min[i]});
    }
  }
  std::sort(triplets.begin(), triplets.end(),
            [](const MergeTriplet& a, const MergeTriplet& b) { return a.u < b.u; });
  return triplets;
}

NodeLifeTable min_lives(const TimeSeries& ts, const std::vector<MergeTriplet>& tree) {
  auto [mn, mx] = std::minmax_element(ts.heights.begin(), ts.heights.end());
  NodeLifeTable lives;
  for (const auto& t : tree) {
    if (t.essential()) {
      lives[t.u] = (*mx - *mn) / 2.0;
    } else {
      lives[t.u] = std::abs(ts.heights[t.s] - ts.heights[t.u]) / 2.0;
    }
  }
  return lives;
}

NodeLifeTable node_lives(const TimeSeries& ts) {
  NodeLifeTable lives = min_lives(ts, merge_tree(ts));
  const TimeSeries neg = negated(ts);
  for (const auto& [idx, life] : min_lives(neg, merge_tree(neg))) {
    lives[idx] = life;
  }
  return lives;
}

std::vector<PersistencePoint> persistence_diagram(const TimeSeries& ts, FiltrationSide side) {
  const TimeSeries* src = &ts;
  TimeSeries neg;
  if (side == FiltrationSide::superlevel) {
    neg = negated(ts);
    src = &neg;
  }
  std::vector<PersistencePoint> out;
  for (const auto& t : merge_tree(*src)) {
    if (t.essential()) {
      out.push_back({src->heights[t.u], std::nullopt, t.u});
    } else {
      out.push_back({src->heights[t.u], src->heights[t.s], t.u});
    }
  }
  return out;
}

std::string diagram_to_csv(const std::vector<PersistencePoint>& diagram) {
  auto append_number = [](std::string& s, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw InternalError("number formatting failed");
    s.append(buf, ptr);
  };
  std::string out = "birth,death,index\n";
  for (const auto& p : diagram) {
    append_number(out, p.birth);
    out += ',';
    if (p.death) {
      append_number(out, *p.death);
    } else {
      out += "inf";
    }
    out += ',';
    out += std::to_string(p.minimum_index);
    out += '\n';
  }
  return out;
}

}  // namespace eedag
