// runner.hpp -- batch driver behind the meshmorph CLI: mesh acquisition,
// schedule execution, snapshot and metrics emission.

#pragma once

#include <optional>
#include <string>

#include "meshmorph/genmesh.hpp"
#include "meshmorph/morph.hpp"

namespace meshmorph {

struct RunConfig {
  std::optional<std::string> input_path;       // exactly one of these two
  std::optional<GeneratorSpec> generator;

  std::optional<long> preset_m;                // `--preset paper --m M`
  std::optional<std::string> phases;           // "n:kin:kout,..."

  std::optional<double> c_abs;                 // exactly one of these two
  std::optional<double> c_rel;                 // fraction of bbox diagonal

  long stride = 100;
  std::string out_dir = "out";
  std::optional<std::string> metrics_path;     // default: <out_dir>/metrics.csv
  bool frozen_t = false;
  std::optional<std::string> dump_curvature_path;
};

// Runs the configured job; returns the process exit status (0 on success).
// Diagnostics go to stderr, machine output only to files.
int run(const RunConfig& config);

}  // namespace meshmorph
