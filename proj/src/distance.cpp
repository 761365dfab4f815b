#include "eedag/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"

namespace eedag {

namespace {

constexpr std::size_t kMaxCombinations = 1024;

/// Index of the first vertex of each series in a DAG's vertex array.
std::vector<std::size_t> series_offsets(const ExtremalEventDAG& dag) {
  std::vector<std::size_t> offsets(dag.series_names.size(), dag.vertices.size());
  for (std::size_t i = dag.vertices.size(); i-- > 0;) {
    offsets[dag.vertices[i].series] = i;
  }
  return offsets;
}

double edge_weight(const ExtremalEventDAG& dag, std::size_t src, std::size_t dst) {
  auto it = std::lower_bound(dag.edges.begin(), dag.edges.end(), std::make_pair(src, dst),
                             [](const DagEdge& e, const std::pair<std::size_t, std::size_t>& key) {
                               return std::make_pair(e.src, e.dst) < key;
                             });
  if (it == dag.edges.end() || it->src != src || it->dst != dst) {
    throw InternalError("missing edge in extremal event DAG");
  }
  return it->weight;
}

/// One aligned position projected into both DAGs.
struct Position {
  std::size_t pair_index;
  std::ptrdiff_t xv = -1;  // vertex id in DAG A, -1 for an insertion
  std::ptrdiff_t yv = -1;
  double tx = 0.0;
  double ty = 0.0;
};

std::vector<Position> project_positions(const ExtremalEventDAG& a, const ExtremalEventDAG& b,
                                        const std::vector<std::size_t>& b_series_for_pair,
                                        const std::vector<std::size_t>& offsets_a,
                                        const std::vector<std::size_t>& offsets_b,
                                        const std::vector<const Alignment*>& alignments) {
  std::vector<Position> out;
  for (std::size_t i = 0; i < alignments.size(); ++i) {
    for (const auto& pr : *alignments[i]) {
      Position p;
      p.pair_index = i;
      if (pr.x) {
        p.xv = static_cast<std::ptrdiff_t>(offsets_a[i] + *pr.x);
        p.tx = a.vertices[static_cast<std::size_t>(p.xv)].time;
      }
      if (pr.y) {
        p.yv = static_cast<std::ptrdiff_t>(offsets_b[b_series_for_pair[i]] + *pr.y);
        p.ty = b.vertices[static_cast<std::size_t>(p.yv)].time;
      }
      out.push_back(p);
    }
  }
  return out;
}

/// Sum over supergraph edges of |w_A - w_B|; pairs that are edges in neither
/// DAG contribute nothing and are skipped.
double edge_term_of(const ExtremalEventDAG& a, const ExtremalEventDAG& b,
                    const std::vector<Position>& pos) {
  double total = 0.0;
  const std::size_t n = pos.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const bool ea = pos[p].xv >= 0 && pos[q].xv >= 0 && pos[p].tx < pos[q].tx;
      const bool eb = pos[p].yv >= 0 && pos[q].yv >= 0 && pos[p].ty < pos[q].ty;
      if (!ea && !eb) continue;
      const double wa = ea ? edge_weight(a, static_cast<std::size_t>(pos[p].xv),
                                         static_cast<std::size_t>(pos[q].xv))
                           : 0.0;
      const double wb = eb ? edge_weight(b, static_cast<std::size_t>(pos[p].yv),
                                         static_cast<std::size_t>(pos[q].yv))
                           : 0.0;
      total += std::abs(wa - wb);
    }
  }
  return total;
}

std::vector<std::size_t> match_series_by_name(const ExtremalEventDAG& a,
                                              const ExtremalEventDAG& b) {
  if (a.series_names.size() != b.series_names.size()) {
    throw InputError("datasets have different series counts");
  }
  std::vector<std::size_t> b_index(a.series_names.size());
  for (std::size_t i = 0; i < a.series_names.size(); ++i) {
    auto it = std::find(b.series_names.begin(), b.series_names.end(), a.series_names[i]);
    if (it == b.series_names.end()) {
      throw InputError("series '" + a.series_names[i] + "' missing from second dataset");
    }
    b_index[i] = static_cast<std::size_t>(it - b.series_names.begin());
  }
  return b_index;
}

/// delta_f of one curve: half the smallest L-infinity distance among diagram
/// points (including a point's distance to the diagonal), over both the
/// sublevel and superlevel diagrams. The essential point is infinitely far
/// from everything and never constrains.
double delta_f(const TimeSeries& ts) {
  double best = std::numeric_limits<double>::infinity();
  for (auto side : {FiltrationSide::sublevel, FiltrationSide::superlevel}) {
    std::vector<std::pair<double, double>> finite;
    for (const auto& p : persistence_diagram(ts, side)) {
      if (p.death) finite.emplace_back(p.birth, *p.death);
    }
    for (std::size_t i = 0; i < finite.size(); ++i) {
      best = std::min(best, (finite[i].second - finite[i].first) / 2.0);
      for (std::size_t j = i + 1; j < finite.size(); ++j) {
        best = std::min(best, std::max(std::abs(finite[i].first - finite[j].first),
                                       std::abs(finite[i].second - finite[j].second)));
      }
    }
  }
  return best / 2.0;
}

struct StabilityInputs {
  std::vector<double> eps;       // per pair, L-infinity distance of the raw heights
  std::vector<double> delta;     // per pair, delta_f of the first dataset's curve
  std::vector<std::size_t> k;    // per pair, extrema count of the second dataset's curve
};

/// nullopt when the grids differ or any series does not sample the full grid.
std::optional<StabilityInputs> stability_inputs(const Dataset& raw_a, const Dataset& raw_b,
                                                const Dataset& collapsed_a,
                                                const Dataset& collapsed_b,
                                                const std::vector<std::string>& pair_names) {
  if (raw_a.grid != raw_b.grid) return std::nullopt;
  for (const auto& ds : {&raw_a, &raw_b}) {
    for (const auto& ts : ds->series) {
      if (ts.times != ds->grid) return std::nullopt;
    }
  }
  StabilityInputs in;
  for (const auto& name : pair_names) {
    const TimeSeries* fa = raw_a.find(name);
    const TimeSeries* fb = raw_b.find(name);
    double eps = 0.0;
    for (std::size_t r = 0; r < fa->heights.size(); ++r) {
      eps = std::max(eps, std::abs(fa->heights[r] - fb->heights[r]));
    }
    in.eps.push_back(eps);
    in.delta.push_back(delta_f(*collapsed_a.find(name)));
    in.k.push_back(find_extrema(*collapsed_b.find(name)).size());
  }
  return in;
}

std::optional<double> evaluate_bound(const StabilityInputs& in,
                                     const std::vector<Position>& positions) {
  for (std::size_t i = 0; i < in.eps.size(); ++i) {
    if (!(in.eps[i] < in.delta[i] / 2.0)) return std::nullopt;
  }
  double bound = 0.0;
  for (std::size_t i = 0; i < in.k.size(); ++i) {
    const double ki = static_cast<double>(in.k[i]);
    bound += ki * in.eps[i];
    bound += ki * (ki - 1.0) / 2.0 * in.eps[i];
  }
  // Cross edges of the supergraph, assigned to their unordered block pair.
  const std::size_t n = positions.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q || positions[p].pair_index == positions[q].pair_index) continue;
      const bool ea = positions[p].xv >= 0 && positions[q].xv >= 0 && positions[p].tx < positions[q].tx;
      const bool eb = positions[p].yv >= 0 && positions[q].yv >= 0 && positions[p].ty < positions[q].ty;
      if (ea || eb) {
        bound += std::max(in.eps[positions[p].pair_index], in.eps[positions[q].pair_index]);
      }
    }
  }
  return bound;
}

}  // namespace

Supergraph build_supergraph(const ExtremalEventDAG& a, const ExtremalEventDAG& b,
                            const std::vector<Alignment>& alignments) {
  const auto b_index = match_series_by_name(a, b);
  if (alignments.size() != a.series_names.size()) {
    throw InputError("expected one alignment per series pair");
  }
  const auto offsets_a = series_offsets(a);
  const auto offsets_b = series_offsets(b);

  Supergraph sg;
  sg.pair_names = a.series_names;
  std::vector<const Alignment*> ptrs;
  for (std::size_t i = 0; i < alignments.size(); ++i) {
    const Backbone xa = extract_backbone(a, a.series_names[i]);
    const Backbone yb = extract_backbone(b, a.series_names[i]);
    auto violations = validate_alignment(alignments[i], xa, yb);
    if (!violations.empty()) {
      throw InputError("invalid alignment for series '" + a.series_names[i] +
                       "': " + violations.front().property + ": " + violations.front().detail);
    }
    ptrs.push_back(&alignments[i]);
  }

  const auto positions = project_positions(a, b, b_index, offsets_a, offsets_b, ptrs);
  for (const auto& p : positions) {
    SupergraphVertex v;
    v.pair_index = p.pair_index;
    v.weight_a = 0.0;
    v.weight_b = 0.0;
    if (p.xv >= 0) {
      const auto& av = a.vertices[static_cast<std::size_t>(p.xv)];
      v.x_node = static_cast<std::size_t>(p.xv) - offsets_a[p.pair_index];
      v.weight_a = av.weight;
    }
    if (p.yv >= 0) {
      const auto& bv = b.vertices[static_cast<std::size_t>(p.yv)];
      v.y_node = static_cast<std::size_t>(p.yv) - offsets_b[b_index[p.pair_index]];
      v.weight_b = bv.weight;
    }
    v.position = sg.vertices.size();
    sg.vertices.push_back(v);
  }
  // Re-derive per-pair positions (vertex order follows alignment order already).
  {
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < alignments.size(); ++i) {
      for (std::size_t k = 0; k < alignments[i].size(); ++k) {
        sg.vertices[cursor].position = k;
        ++cursor;
      }
    }
  }

  const std::size_t n = positions.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;
      const bool ea = positions[p].xv >= 0 && positions[q].xv >= 0 && positions[p].tx < positions[q].tx;
      const bool eb = positions[p].yv >= 0 && positions[q].yv >= 0 && positions[p].ty < positions[q].ty;
      if (!ea && !eb) continue;
      SupergraphEdge e;
      e.src = p;
      e.dst = q;
      e.weight_a = ea ? edge_weight(a, static_cast<std::size_t>(positions[p].xv),
                                    static_cast<std::size_t>(positions[q].xv))
                      : 0.0;
      e.weight_b = eb ? edge_weight(b, static_cast<std::size_t>(positions[p].yv),
                                    static_cast<std::size_t>(positions[q].yv))
                      : 0.0;
      sg.edges.push_back(e);
    }
  }
  return sg;
}

DistanceReport dag_distance(const Dataset& raw_a, const Dataset& raw_b, std::size_t cap) {
  if (cap < 1) throw InputError("cap must be >= 1");
  const Dataset a = collapse_dataset(raw_a);
  const Dataset b = collapse_dataset(raw_b);
  const ExtremalEventDAG dag_a = build_dag(a);
  const ExtremalEventDAG dag_b = build_dag(b);
  const auto b_index = match_series_by_name(dag_a, dag_b);
  const auto offsets_a = series_offsets(dag_a);
  const auto offsets_b = series_offsets(dag_b);
  const std::size_t n_pairs = dag_a.series_names.size();

  DistanceReport report;
  std::vector<EnumerationResult> sets(n_pairs);
  for (std::size_t i = 0; i < n_pairs; ++i) {
    const Backbone xa = extract_backbone(dag_a, dag_a.series_names[i]);
    const Backbone yb = extract_backbone(dag_b, dag_a.series_names[i]);
    const AlignmentMatrix m(xa, yb);
    sets[i] = enumerate_optimal(m, xa, yb, cap);
    PairReport pr;
    pr.name = dag_a.series_names[i];
    pr.backbone_dist = m.corner();
    pr.optimal_count = sets[i].alignments.size();
    pr.tied = sets[i].alignments.size() > 1 || sets[i].truncated;
    pr.truncated = sets[i].truncated;
    report.pairs.push_back(std::move(pr));
    report.node_term += m.corner();
    report.tie_flag = report.tie_flag || report.pairs.back().tied;
    report.truncated = report.truncated || sets[i].truncated;
  }

  // Cartesian product of the per-pair optimal sets, bounded by the global
  // combination budget; past the budget only the canonical alignments enter.
  const std::size_t budget = std::max<std::size_t>(1, std::min(cap * cap, kMaxCombinations));
  std::size_t total_combos = 1;
  for (const auto& s : sets) {
    total_combos = total_combos > budget ? total_combos : total_combos * s.alignments.size();
  }
  if (total_combos > budget) {
    report.truncated = true;
    total_combos = 1;  // canonical choice per pair
  }

  std::vector<double> terms(total_combos);
  std::vector<std::vector<const Alignment*>> combo_choices(total_combos);
  for (std::size_t c = 0; c < total_combos; ++c) {
    std::vector<const Alignment*> choice(n_pairs);
    std::size_t rem = c;
    for (std::size_t i = 0; i < n_pairs; ++i) {
      const std::size_t sz = sets[i].alignments.size();
      choice[i] = &sets[i].alignments[total_combos == 1 ? 0 : rem % sz];
      if (total_combos != 1) rem /= sz;
    }
    combo_choices[c] = std::move(choice);
  }

  const std::ptrdiff_t n_combos = static_cast<std::ptrdiff_t>(total_combos);
#pragma omp parallel for schedule(dynamic) if (n_combos > 1)
  for (std::ptrdiff_t c = 0; c < n_combos; ++c) {
    const auto pos = project_positions(dag_a, dag_b, b_index, offsets_a, offsets_b,
                                       combo_choices[static_cast<std::size_t>(c)]);
    terms[static_cast<std::size_t>(c)] = edge_term_of(dag_a, dag_b, pos);
  }
  std::size_t best = 0;
  for (std::size_t c = 1; c < total_combos; ++c) {
    if (terms[c] < terms[best]) best = c;
  }
  report.edge_term = terms[best];
  report.total = report.node_term + report.edge_term;
  for (std::size_t i = 0; i < n_pairs; ++i) {
    report.pairs[i].alignment = *combo_choices[best][i];
  }

  if (auto inputs = stability_inputs(raw_a, raw_b, a, b, dag_a.series_names)) {
    const auto pos = project_positions(dag_a, dag_b, b_index, offsets_a, offsets_b,
                                       combo_choices[best]);
    report.stability_bound = evaluate_bound(*inputs, pos);
  }
  return report;
}

std::optional<double> stability_bound(const Dataset& a, const Dataset& b) {
  if (a.grid != b.grid) throw InputError("stability bound requires identical grids");
  return dag_distance(a, b).stability_bound;
}

std::string to_json(const DistanceReport& report) {
  nlohmann::ordered_json doc;
  doc["total"] = report.total;
  doc["node_term"] = report.node_term;
  doc["edge_term"] = report.edge_term;
  doc["tie_flag"] = report.tie_flag;
  doc["truncated"] = report.truncated;
  if (report.stability_bound) {
    doc["stability_bound"] = *report.stability_bound;
  } else {
    doc["stability_bound"] = nullptr;
  }
  doc["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : report.pairs) {
    nlohmann::ordered_json jp;
    jp["name"] = p.name;
    jp["backbone_distance"] = p.backbone_dist;
    jp["optimal_count"] = p.optimal_count;
    jp["tied"] = p.tied;
    jp["truncated"] = p.truncated;
    jp["alignment"] = nlohmann::ordered_json::array();
    for (const auto& pr : p.alignment) {
      nlohmann::ordered_json pair;
      pair["x"] = pr.x ? nlohmann::ordered_json(*pr.x) : nlohmann::ordered_json(nullptr);
      pair["y"] = pr.y ? nlohmann::ordered_json(*pr.y) : nlohmann::ordered_json(nullptr);
      jp["alignment"].push_back(pair);
    }
    doc["pairs"].push_back(jp);
  }
  return doc.dump(2) + "\n";
}

}  // namespace eedag
