#include "runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "meshmorph/adjacency.hpp"
#include "meshmorph/metrics.hpp"
#include "meshmorph/obj_io.hpp"

namespace meshmorph {

namespace {

std::vector<Phase> parse_phases(const std::string& text, double c) {
  std::vector<Phase> phases;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long n;
    int k_in, k_out;
    char c1, c2;
    std::istringstream is(item);
    if (!(is >> n >> c1 >> k_in >> c2 >> k_out) || c1 != ':' || c2 != ':' ||
        (is >> std::ws, !is.eof())) {
      throw SpecError("bad phase '" + item + "', expected n:k_in:k_out");
    }
    Phase p{n, MorphParams{k_in, k_out, c}};
    p.params.check();
    if (n < 0) throw SpecError("phase repetition count must be non-negative");
    phases.push_back(p);
  }
  if (phases.empty()) throw SpecError("empty phase list");
  return phases;
}

std::string csv_row(const MetricsRecord& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf),
                "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                r.iteration, r.area, r.volume, r.sphericity, r.radius_cv,
                r.k_min, r.k_max, r.k_mean, r.k_std);
  return buf;
}

std::string snapshot_name(long iter) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "snap_%06ld.obj", iter);
  return buf;
}

}  // namespace

int run(const RunConfig& config) {
  long last_checkpoint = -1;
  try {
    if (config.input_path.has_value() == config.generator.has_value()) {
      throw SpecError("exactly one of --input and --gen is required");
    }
    if (config.c_abs.has_value() == config.c_rel.has_value()) {
      throw SpecError("exactly one of --c and --c-rel is required");
    }
    if (config.preset_m && config.phases) {
      throw SpecError("--preset and --phases are mutually exclusive");
    }
    if (config.stride < 1) throw SpecError("--stride must be >= 1");

    TriMesh mesh = config.input_path ? load_obj(*config.input_path)
                                     : generate(*config.generator);
    validate_mesh(mesh);

    double c = config.c_abs ? *config.c_abs
                            : *config.c_rel * bbox_diagonal(mesh);
    if (!(c > 0.0)) throw SpecError("step size C must be positive");

    Schedule schedule;
    schedule.checkpoint_stride = config.stride;
    if (config.preset_m) {
      schedule = preset_schedule(*config.preset_m, c, config.stride);
    } else if (config.phases) {
      schedule.phases = parse_phases(*config.phases, c);
    }

    std::filesystem::create_directories(config.out_dir);

    if (config.dump_curvature_path) {
      CurvatureField field = compute_field(mesh, build_adjacency(mesh));
      std::ofstream dump(*config.dump_curvature_path, std::ios::binary);
      if (!dump) throw WriteError("cannot open '" + *config.dump_curvature_path + "'");
      dump << "vertex,k\n";
      char buf[64];
      for (size_t p = 0; p < field.vertex_curvature.size(); ++p) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", p,
                      field.vertex_curvature[p]);
        dump << buf;
      }
    }

    std::string metrics_path = config.metrics_path
                                   ? *config.metrics_path
                                   : config.out_dir + "/metrics.csv";
    std::ofstream metrics(metrics_path, std::ios::binary);
    if (!metrics) throw WriteError("cannot open '" + metrics_path + "'");
    metrics << "iter,area,volume,sphericity,radius_cv,k_min,k_max,k_mean,k_std\n";

    for (size_t i = 0; i < schedule.phases.size(); ++i) {
      const Phase& ph = schedule.phases[i];
      std::cerr << "phase " << i + 1 << "/" << schedule.phases.size() << ": n="
                << ph.repetitions << " k_in=" << ph.params.k_in
                << " k_out=" << ph.params.k_out << " C=" << ph.params.step
                << "\n";
    }

    MorphOptions options;
    options.refresh =
        config.frozen_t ? RefreshMode::FrozenPerT : RefreshMode::PerStep;

    auto observer = [&](long iter, const TriMesh& snapshot) {
      last_checkpoint = iter;
      save_obj(snapshot, config.out_dir + "/" + snapshot_name(iter));
      metrics << csv_row(collect_metrics(snapshot, iter));
    };

    TriMesh final_mesh = run_schedule(mesh, schedule, observer, options);
    save_obj(final_mesh, config.out_dir + "/final.obj");
    metrics.flush();
    if (!metrics) throw WriteError("write failed for '" + metrics_path + "'");
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (last_checkpoint >= 0) {
      std::cerr << "partial outputs up to iteration " << last_checkpoint
                << " retained in " << config.out_dir << "\n";
    }
    return 1;
  }
}

}  // namespace meshmorph
