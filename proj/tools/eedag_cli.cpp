#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "eedag/csv.hpp"
#include "eedag/dataset.hpp"
#include "eedag/distance.hpp"
#include "eedag/event_dag.hpp"
#include "eedag/harness.hpp"
#include "eedag/persistence.hpp"
#include "eedag/synthetic.hpp"

namespace {

eedag::Dataset load_prepared(const std::string& path, const std::optional<std::string>& normalize) {
  eedag::Dataset ds = eedag::read_dataset_file(path);
  std::vector<std::string> warnings;
  ds = eedag::collapse_dataset(ds, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (normalize) {
    double lo = 0.0, hi = 0.0;
    if (std::sscanf(normalize->c_str(), "%lf,%lf", &lo, &hi) != 2) {
      throw eedag::InputError("--normalize expects 'lo,hi'");
    }
    ds = eedag::normalize_amplitude(ds, lo, hi);
  }
  return ds;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw eedag::InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(int argc, char** argv) {
  CLI::App app{"Extremal event DAG construction and comparison for collections of time series"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Build the extremal event DAG of a CSV dataset");
  std::string build_in, build_json, build_dot;
  std::optional<std::string> build_norm;
  build->add_option("input", build_in, "wide CSV input")->required();
  build->add_option("--json", build_json, "write the DAG as JSON");
  build->add_option("--dot", build_dot, "write the DAG in Graphviz DOT format");
  build->add_option("--normalize", build_norm, "rescale each series to lo,hi before building");

  // distance
  auto* dist = app.add_subcommand("distance", "Extremal event DAG distance between two datasets");
  std::string dist_a, dist_b, dist_report;
  std::size_t dist_cap = 64;
  std::uint64_t dist_seed = 0;
  dist->add_option("a", dist_a, "first wide CSV")->required();
  dist->add_option("b", dist_b, "second wide CSV")->required();
  dist->add_option("--report", dist_report, "write the full report as JSON");
  dist->add_option("--cap", dist_cap, "per-pair optimal-alignment enumeration cap");
  dist->add_option("--seed", dist_seed, "recorded for reproducibility (the distance is deterministic)");

  // slice
  auto* slice = app.add_subcommand("slice", "Filter a DAG JSON export by a weight threshold");
  std::string slice_in, slice_dot, slice_mode = "comparable";
  double slice_eps = 0.0;
  slice->add_option("dag", slice_in, "DAG JSON file")->required();
  slice->add_option("--epsilon", slice_eps, "threshold")->required();
  slice->add_option("--mode", slice_mode, "comparable (keep weights > eps) or verbatim (keep <= eps)")
      ->check(CLI::IsMember({"comparable", "verbatim"}));
  slice->add_option("--dot", slice_dot, "write the sliced DAG in DOT format")->required();

  // persistence
  auto* pers = app.add_subcommand("persistence", "Sublevel persistence diagram of one series");
  std::string pers_in, pers_series, pers_csv;
  bool pers_super = false;
  pers->add_option("input", pers_in, "wide CSV input")->required();
  pers->add_option("--series", pers_series, "series name")->required();
  pers->add_option("--csv", pers_csv, "write the diagram as CSV");
  pers->add_flag("--superlevel", pers_super, "use the superlevel filtration instead");

  // baseline
  auto* base = app.add_subcommand("baseline", "Null-distribution experiment against a reference");
  std::string base_a, base_b, base_report;
  std::size_t base_samples = 100, base_cap = 64;
  std::uint64_t base_seed = 0;
  bool base_permute = false, base_shift = false;
  base->add_option("a", base_a, "reference wide CSV")->required();
  base->add_option("b", base_b, "comparison wide CSV")->required();
  base->add_option("--samples", base_samples, "number of null samples")->required();
  base->add_option("--seed", base_seed, "RNG seed")->required();
  base->add_flag("--permute", base_permute, "scramble series names (default: both operations)");
  base->add_flag("--shift", base_shift, "cyclically shift each series (default: both operations)");
  base->add_option("--cap", base_cap, "per-pair optimal-alignment enumeration cap");
  base->add_option("--report", base_report, "write the result as JSON");

  // synth
  auto* synth = app.add_subcommand("synth", "Generate a synthetic sinusoid dataset");
  std::string synth_kind = "sine", synth_out, synth_name;
  std::size_t synth_points = 0, synth_bumps = 0;
  double synth_noise = 0.0, synth_amp = 1.0, synth_phase = 0.0;
  std::uint64_t synth_seed = 0;
  synth->add_option("--kind", synth_kind, "sine or cosine")
      ->check(CLI::IsMember({"sine", "cosine"}));
  synth->add_option("--points", synth_points, "number of samples (>= 8)")->required();
  synth->add_option("--noise", synth_noise, "noise bump amplitude");
  synth->add_option("--bumps", synth_bumps, "number of noise bumps");
  synth->add_option("--amplitude", synth_amp, "sinusoid amplitude");
  synth->add_option("--phase", synth_phase, "phase offset in radians");
  synth->add_option("--seed", synth_seed, "RNG seed")->required();
  synth->add_option("--name", synth_name, "series name");
  synth->add_option("--out", synth_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (build->parsed()) {
    auto ds = load_prepared(build_in, build_norm);
    auto dag = eedag::build_dag(ds);
    std::cout << "vertices: " << dag.vertices.size() << ", edges: " << dag.edges.size() << "\n";
    if (!build_json.empty()) eedag::write_text_file(build_json, eedag::to_json(dag));
    if (!build_dot.empty()) eedag::write_text_file(build_dot, eedag::to_dot(dag));
  } else if (dist->parsed()) {
    auto a = eedag::read_dataset_file(dist_a);
    auto b = eedag::read_dataset_file(dist_b);
    auto report = eedag::dag_distance(a, b, dist_cap);
    std::cout << "distance: " << report.total << " (node term " << report.node_term
              << ", edge term " << report.edge_term << ")\n";
    if (!dist_report.empty()) eedag::write_text_file(dist_report, eedag::to_json(report));
  } else if (slice->parsed()) {
    auto dag = eedag::dag_from_json(read_file(slice_in));
    auto mode = slice_mode == "verbatim" ? eedag::SliceMode::verbatim : eedag::SliceMode::comparable;
    auto sliced = eedag::epsilon_slice(dag, slice_eps, mode);
    std::cout << "vertices: " << sliced.vertices.size() << ", edges: " << sliced.edges.size()
              << "\n";
    eedag::write_text_file(slice_dot, eedag::to_dot(sliced));
  } else if (pers->parsed()) {
    auto ds = load_prepared(pers_in, std::nullopt);
    const eedag::TimeSeries* ts = ds.find(pers_series);
    if (!ts) throw eedag::InputError("unknown series '" + pers_series + "'");
    auto side = pers_super ? eedag::FiltrationSide::superlevel : eedag::FiltrationSide::sublevel;
    auto csv = eedag::diagram_to_csv(eedag::persistence_diagram(*ts, side));
    if (!pers_csv.empty()) {
      eedag::write_text_file(pers_csv, csv);
    } else {
      std::cout << csv;
    }
  } else if (base->parsed()) {
    auto a = eedag::read_dataset_file(base_a);
    auto b = eedag::read_dataset_file(base_b);
    eedag::RunConfig config;
    config.seed = base_seed;
    config.samples = base_samples;
    config.alignment_cap = base_cap;
    if (base_permute || base_shift) {
      config.permute = base_permute;
      config.shift = base_shift;
    }
    auto result = eedag::baseline(a, b, config);
    std::cout << "reference: " << result.reference_distance << ", null mean: " << result.mean
              << ", std: " << result.stddev << ", z: " << result.z_score << "\n";
    if (!base_report.empty()) {
      eedag::write_text_file(base_report, eedag::to_json(result, config));
    }
  } else if (synth->parsed()) {
    eedag::SynthSpec spec;
    spec.kind = synth_kind == "cosine" ? eedag::WaveKind::cosine : eedag::WaveKind::sine;
    spec.amplitude = synth_amp;
    spec.phase = synth_phase;
    spec.noise_amplitude = synth_noise;
    spec.n_points = synth_points;
    spec.n_noise_bumps = synth_bumps;
    spec.name = synth_name;
    auto ds = eedag::generate_synthetic(spec, synth_seed);
    eedag::write_text_file(synth_out, eedag::serialize_dataset(ds));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const eedag::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
