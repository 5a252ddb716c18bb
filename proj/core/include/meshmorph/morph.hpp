// morph.hpp -- the curvature-weighted inward/outward vertex transformations
// and their iteration schedules.
//
// One elementary step replaces every vertex simultaneously:
//   inward:  p -> p - C *      w(p)  * n_p
//   outward: p -> p + C * (1 - w(p)) * n_p
// with w(p) the normalized vertex-curvature weight and n_p the vertex normal,
// both evaluated on the step's input mesh. T(k_in, k_out, C) applies k_in
// inward steps followed by k_out outward steps. By default the curvature
// field is recomputed before every elementary step; FrozenPerT evaluates it
// once per T application instead.

#pragma once

#include <functional>
#include <vector>

#include "meshmorph/adjacency.hpp"
#include "meshmorph/curvature.hpp"
#include "meshmorph/mesh.hpp"

namespace meshmorph {

struct MorphParams {
  int k_in{};
  int k_out{};
  double step{};  // C, absolute length in mesh units

  // Throws SpecError unless step > 0, k_in >= 0, k_out >= 0, k_in+k_out >= 1.
  void check() const;
};

struct Phase {
  long repetitions{};  // n applications of T
  MorphParams params;
};

struct Schedule {
  std::vector<Phase> phases;
  long checkpoint_stride{1};
};

enum class RefreshMode { PerStep, FrozenPerT };

enum class StepKind { Inward, Outward };

struct MorphOptions {
  RefreshMode refresh = RefreshMode::PerStep;
  // Invoked after each elementary step when set; used by tests to audit
  // the I/O step ordering and by callers that count work.
  std::function<void(StepKind)> step_trace;
};

TriMesh step_inward(const TriMesh& mesh, const EdgeAdjacency& adj, double c);
TriMesh step_outward(const TriMesh& mesh, const EdgeAdjacency& adj, double c);

// Elementary displacement against an already-computed field; both step_*
// functions and the frozen mode are defined in terms of this.
TriMesh displace(const TriMesh& mesh, const CurvatureField& field, double c,
                 StepKind kind);

TriMesh apply_T(const TriMesh& mesh, const MorphParams& params,
                const MorphOptions& options = {});

TriMesh morph_step(const TriMesh& mesh, long n, const MorphParams& params,
                   const MorphOptions& options = {});

// The alternating preset: m repetitions of 100 x T(2,2,C) followed by
// 100 x T(2,1,C); 200*m applications of T in total.
TriMesh morph_preset(const TriMesh& mesh, long m, double c = 0.25,
                     const MorphOptions& options = {});

Schedule preset_schedule(long m, double c = 0.25, long stride = 1);

// Called with (global T-iteration index, current mesh).
using CheckpointFn = std::function<void(long, const TriMesh&)>;

// Executes the phases in order. The observer fires at iteration 0, at every
// multiple of checkpoint_stride, and at each phase boundary, deduplicated.
// Observer exceptions abort the run wrapped with the failing iteration.
TriMesh run_schedule(const TriMesh& mesh, const Schedule& schedule,
                     const CheckpointFn& observer,
                     const MorphOptions& options = {});

}  // namespace meshmorph
