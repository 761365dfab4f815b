#include "eedag/event_dag.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "eedag/intervals.hpp"
#include "json.hpp"

namespace eedag {

namespace {

struct VertexSource {
  std::size_t series;
  std::size_t grid_index;  // index on the owning series' own time axis
};

void check_buildable(const Dataset& ds) {
  validate_dataset(ds);
  if (ds.series.empty()) throw InputError("dataset has no series");
  for (const auto& ts : ds.series) {
    if (!plateau_free(ts)) {
      throw InputError("series '" + ts.name + "' has plateaus; collapse them first");
    }
  }
}

/// Vertices sorted by (series, ordinal) and the complete strict-time-order
/// edge list with unset weights.
ExtremalEventDAG skeleton(const Dataset& ds, std::vector<VertexSource>& sources) {
  ExtremalEventDAG dag;
  dag.series_names = ds.names();
  for (std::size_t s = 0; s < ds.series.size(); ++s) {
    const auto& ts = ds.series[s];
    const auto extrema = find_extrema(ts);
    const auto lives = node_lives(ts);
    for (std::size_t j = 0; j < extrema.size(); ++j) {
      const auto& e = extrema[j];
      dag.vertices.push_back({s, j + 1, e.label, e.time, lives.at(e.index)});
      sources.push_back({s, e.index});
    }
  }
  const std::size_t n = dag.vertices.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (dag.vertices[a].time < dag.vertices[b].time) {
        dag.edges.push_back({a, b, 0.0});
      }
    }
  }
  return dag;
}

}  // namespace

ExtremalEventDAG build_dag(const Dataset& ds, const BuildOptions& options) {
  check_buildable(ds);
  std::vector<VertexSource> sources;
  ExtremalEventDAG dag = skeleton(ds, sources);

  std::vector<IntervalGrowth> growth;
  growth.reserve(sources.size());
  for (const auto& src : sources) {
    growth.emplace_back(ds.series[src.series], src.grid_index);
  }

  const std::ptrdiff_t n_edges = static_cast<std::ptrdiff_t>(dag.edges.size());
#pragma omp parallel for schedule(dynamic, 64) if (options.parallel)
  for (std::ptrdiff_t k = 0; k < n_edges; ++k) {
    auto& e = dag.edges[static_cast<std::size_t>(k)];
    const auto& u = dag.vertices[e.src];
    const auto& v = dag.vertices[e.dst];
    double w = std::min(u.weight, v.weight);
    if (u.series != v.series) {
      if (auto star = eps_intersection(growth[e.src], growth[e.dst])) {
        w = std::min(w, *star);
      }
    }
    e.weight = w;
  }
  return dag;
}

ExtremalEventDAG reference_build_dag(const Dataset& ds) {
  check_buildable(ds);
  std::vector<VertexSource> sources;
  ExtremalEventDAG dag = skeleton(ds, sources);
  for (auto& e : dag.edges) {
    const auto& u = dag.vertices[e.src];
    const auto& v = dag.vertices[e.dst];
    double w = std::min(u.weight, v.weight);
    if (u.series != v.series) {
      const auto& su = sources[e.src];
      const auto& sv = sources[e.dst];
      if (auto star = eps_intersection(ds.series[su.series], su.grid_index, ds.series[sv.series],
                                       sv.grid_index)) {
        w = std::min(w, *star);
      }
    }
    e.weight = w;
  }
  return dag;
}

ExtremalEventDAG epsilon_slice(const ExtremalEventDAG& dag, double eps, SliceMode mode) {
  if (eps < 0.0) throw InputError("eps must be >= 0");
  auto keep = [&](double w) { return mode == SliceMode::comparable ? w > eps : w <= eps; };

  ExtremalEventDAG out;
  out.series_names = dag.series_names;
  std::vector<std::size_t> remap(dag.vertices.size(), SIZE_MAX);
  for (std::size_t i = 0; i < dag.vertices.size(); ++i) {
    if (keep(dag.vertices[i].weight)) {
      remap[i] = out.vertices.size();
      out.vertices.push_back(dag.vertices[i]);
    }
  }
  for (const auto& e : dag.edges) {
    if (keep(e.weight) && remap[e.src] != SIZE_MAX && remap[e.dst] != SIZE_MAX) {
      out.edges.push_back({remap[e.src], remap[e.dst], e.weight});
    }
  }
  return out;
}

std::string to_json(const ExtremalEventDAG& dag) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : dag.vertices) {
    doc["vertices"].push_back({{"series", dag.series_names.at(v.series)},
                               {"ordinal", v.ordinal},
                               {"label", label_name(v.label)},
                               {"time", v.time},
                               {"weight", v.weight}});
  }
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : dag.edges) {
    doc["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"weight", e.weight}});
  }
  return doc.dump(2) + "\n";
}

ExtremalEventDAG dag_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid DAG JSON: ") + e.what());
  }
  ExtremalEventDAG dag;
  try {
    for (const auto& jv : doc.at("vertices")) {
      DagVertex v;
      const std::string series = jv.at("series").get<std::string>();
      auto it = std::find(dag.series_names.begin(), dag.series_names.end(), series);
      if (it == dag.series_names.end()) {
        dag.series_names.push_back(series);
        v.series = dag.series_names.size() - 1;
      } else {
        v.series = static_cast<std::size_t>(it - dag.series_names.begin());
      }
      v.ordinal = jv.at("ordinal").get<std::size_t>();
      const std::string label = jv.at("label").get<std::string>();
      if (label != "min" && label != "max") throw InputError("bad vertex label '" + label + "'");
      v.label = label == "min" ? ExtremumLabel::min : ExtremumLabel::max;
      v.time = jv.at("time").get<double>();
      v.weight = jv.at("weight").get<double>();
      dag.vertices.push_back(v);
    }
    for (const auto& je : doc.at("edges")) {
      DagEdge e{je.at("src").get<std::size_t>(), je.at("dst").get<std::size_t>(),
                je.at("weight").get<double>()};
      if (e.src >= dag.vertices.size() || e.dst >= dag.vertices.size()) {
        throw InputError("edge references vertex out of range");
      }
      dag.edges.push_back(e);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid DAG JSON: ") + e.what());
  }
  return dag;
}

std::string to_dot(const ExtremalEventDAG& dag) {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  auto escaped = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string out = "digraph extremal_event_dag {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < dag.vertices.size(); ++i) {
    const auto& v = dag.vertices[i];
    out += "  v" + std::to_string(i) + " [label=\"" + escaped(dag.series_names.at(v.series)) +
           ":" + label_name(v.label) + "@" + std::to_string(v.ordinal) + " (w=" + fmt(v.weight) +
           ")\"];\n";
  }
  for (const auto& e : dag.edges) {
    out += "  v" + std::to_string(e.src) + " -> v" + std::to_string(e.dst) + " [label=\"" +
           fmt(e.weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace eedag
