#include "meshmorph/morph.hpp"

#include <string>
#include <utility>

namespace meshmorph {

void MorphParams::check() const {
  if (!(step > 0.0)) throw SpecError("morph step C must be positive");
  if (k_in < 0 || k_out < 0 || k_in + k_out < 1) {
    throw SpecError("morph exponents must satisfy k_in >= 0, k_out >= 0, "
                    "k_in + k_out >= 1");
  }
}

TriMesh displace(const TriMesh& mesh, const CurvatureField& field, double c,
                 StepKind kind) {
  TriMesh out;
  out.faces = mesh.faces;
  out.vertices.resize(mesh.vertices.size());
  for (size_t p = 0; p < mesh.vertices.size(); ++p) {
    double w = normalized_weight(field, static_cast<int>(p));
    double scale = kind == StepKind::Inward ? -c * w : c * (1.0 - w);
    out.vertices[p] = mesh.vertices[p] + scale * field.vertex_normal[p];
  }
  return out;
}

TriMesh step_inward(const TriMesh& mesh, const EdgeAdjacency& adj, double c) {
  return displace(mesh, compute_field(mesh, adj), c, StepKind::Inward);
}

TriMesh step_outward(const TriMesh& mesh, const EdgeAdjacency& adj, double c) {
  return displace(mesh, compute_field(mesh, adj), c, StepKind::Outward);
}

namespace {

TriMesh run_steps(TriMesh mesh, const EdgeAdjacency& adj,
                  const MorphParams& params, const MorphOptions& options) {
  auto elementary = [&](TriMesh m, StepKind kind) {
    m = displace(m, compute_field(m, adj), params.step, kind);
    if (options.step_trace) options.step_trace(kind);
    return m;
  };
  if (options.refresh == RefreshMode::PerStep) {
    for (int i = 0; i < params.k_in; ++i) {
      mesh = elementary(std::move(mesh), StepKind::Inward);
    }
    for (int i = 0; i < params.k_out; ++i) {
      mesh = elementary(std::move(mesh), StepKind::Outward);
    }
    return mesh;
  }
  // FrozenPerT: one field evaluation per T application; every elementary
  // step reuses the weights and normals of the mesh T started from.
  CurvatureField field = compute_field(mesh, adj);
  for (int i = 0; i < params.k_in; ++i) {
    mesh = displace(mesh, field, params.step, StepKind::Inward);
    if (options.step_trace) options.step_trace(StepKind::Inward);
  }
  for (int i = 0; i < params.k_out; ++i) {
    mesh = displace(mesh, field, params.step, StepKind::Outward);
    if (options.step_trace) options.step_trace(StepKind::Outward);
  }
  return mesh;
}

}  // namespace

TriMesh apply_T(const TriMesh& mesh, const MorphParams& params,
                const MorphOptions& options) {
  params.check();
  // Topology never changes, so the edge table is built once.
  EdgeAdjacency adj = build_adjacency(mesh);
  return run_steps(mesh, adj, params, options);
}

TriMesh morph_step(const TriMesh& mesh, long n, const MorphParams& params,
                   const MorphOptions& options) {
  params.check();
  if (n < 0) throw SpecError("repetition count must be non-negative");
  EdgeAdjacency adj = build_adjacency(mesh);
  TriMesh current = mesh;
  for (long i = 0; i < n; ++i) {
    current = run_steps(std::move(current), adj, params, options);
  }
  return current;
}

Schedule preset_schedule(long m, double c, long stride) {
  Schedule s;
  s.checkpoint_stride = stride;
  for (long i = 0; i < m; ++i) {
    s.phases.push_back({100, MorphParams{2, 2, c}});
    s.phases.push_back({100, MorphParams{2, 1, c}});
  }
  return s;
}

TriMesh morph_preset(const TriMesh& mesh, long m, double c,
                     const MorphOptions& options) {
  TriMesh current = mesh;
  for (long i = 0; i < m; ++i) {
    current = morph_step(current, 100, MorphParams{2, 2, c}, options);
    current = morph_step(current, 100, MorphParams{2, 1, c}, options);
  }
  return current;
}

TriMesh run_schedule(const TriMesh& mesh, const Schedule& schedule,
                     const CheckpointFn& observer,
                     const MorphOptions& options) {
  if (schedule.checkpoint_stride < 1) {
    throw SpecError("checkpoint stride must be >= 1");
  }
  EdgeAdjacency adj = build_adjacency(mesh);
  TriMesh current = mesh;
  long iter = 0;
  long last_reported = -1;
  auto checkpoint = [&](long i) {
    if (i == last_reported) return;
    last_reported = i;
    if (observer) {
      try {
        observer(i, current);
      } catch (const std::exception& e) {
        throw MeshError("checkpoint observer failed at iteration " +
                        std::to_string(i) + ": " + e.what());
      }
    }
  };
  checkpoint(0);
  for (const Phase& phase : schedule.phases) {
    phase.params.check();
    if (phase.repetitions < 0) {
      throw SpecError("phase repetition count must be non-negative");
    }
    for (long i = 0; i < phase.repetitions; ++i) {
      current = run_steps(std::move(current), adj, phase.params, options);
      ++iter;
      if (iter % schedule.checkpoint_stride == 0) checkpoint(iter);
    }
    checkpoint(iter);  // phase boundary
  }
  return current;
}

}  // namespace meshmorph
