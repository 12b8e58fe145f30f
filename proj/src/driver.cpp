#include "vmdg/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "vmdg/parallel.hpp"
#include "vmdg/projection.hpp"

namespace vmdg {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string time_tag(double t) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

}  // namespace

Simulation::Simulation(const RunConfig& config)
    : config_(config),
      mesh_(std::make_shared<PhaseMesh>(
          PhaseMesh::build(config.domain(), config.n_x, config.n_v1, config.n_v2))),
      basis_(std::make_shared<ModalBasis>(config.degree, config.family)),
      stepper_(mesh_, basis_, config.flux, config.step,
               resolve_threads(config.threads), !config.fields_frozen()),
      diag_(mesh_, basis_, config.degree, config.flux, config.weibel.k0) {
  config_.validate();
  const InitialCondition ic = config_.initial_condition();
  const int init_pts =
      config_.quad_init_pts > 0 ? config_.quad_init_pts : config_.degree + 4;
  state_.f = DistributionState(mesh_, basis_);
  state_.f.coeffs = project(ic.f0, *mesh_, *basis_, init_pts,
                            resolve_threads(config_.threads));
  state_.fields = FieldState(mesh_->n_x(), mesh_->domain().x_min, mesh_->h_x(),
                             config_.degree);
  state_.fields.e1 = project_1d(ic.e1, mesh_->n_x(), mesh_->domain().x_min,
                                mesh_->h_x(), config_.degree, init_pts);
  state_.fields.e2 = project_1d(ic.e2, mesh_->n_x(), mesh_->domain().x_min,
                                mesh_->h_x(), config_.degree, init_pts);
  state_.fields.b3 = project_1d(ic.b3, mesh_->n_x(), mesh_->domain().x_min,
                                mesh_->h_x(), config_.degree, init_pts);
  state_.time = 0.0;
}

void Simulation::advance(double dt) {
  stepper_.step(state_, dt);
  ++steps_;
}

void Simulation::advance_to(double t_target) {
  const double eps = 1e-12 * std::max(1.0, std::abs(t_target));
  while (state_.time < t_target - eps) {
    const double dt = std::min(compute_dt(), t_target - state_.time);
    advance(dt);
  }
}

void Simulation::apply_time_reversal() {
  state_ = time_reversal_setup(state_);
}

namespace {

void write_fields_csv(const std::filesystem::path& path, const FieldState& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const int nm = s.modes();
  out << "# schema=vmdg.fields.v1\n";
  out << "i,x_center";
  for (const char* f : {"e1", "e2", "b3"})
    for (int m = 0; m < nm; ++m) out << ',' << f << "_c" << m;
  for (const char* f : {"e1", "e2", "b3"})
    for (int m = 0; m < nm; ++m) out << ',' << f << "_n" << m;
  out << '\n';
  for (int i = 0; i < s.n_x; ++i) {
    const double xc = s.x_min + (i + 0.5) * s.h_x;
    out << i << ',' << num(xc);
    for (const CellCoefficients* c : {&s.e1, &s.e2, &s.b3})
      for (int m = 0; m < nm; ++m) out << ',' << num(c->at(i, m));
    // Nodal samples on a uniform in-cell subgrid.
    const double inv_sqrt_jac = 1.0 / std::sqrt(0.5 * s.h_x);
    for (const CellCoefficients* c : {&s.e1, &s.e2, &s.b3})
      for (int p = 0; p < nm; ++p) {
        const double u = -1.0 + (2.0 * p + 1.0) / nm;
        double v = 0.0;
        for (int m = 0; m < nm; ++m) v += c->at(i, m) * ortho1d_value(m, u);
        out << ',' << num(v * inv_sqrt_jac);
      }
    out << '\n';
  }
}

void write_slice_csv(const std::filesystem::path& path,
                     const DistributionState& f, double x, int res) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  const Domain1P2V& d = f.mesh->domain();
  const std::vector<double> grid = distribution_slice(f, x, res, res);
  out << "# schema=vmdg.slice.v1\n";
  out << "v1,v2,f\n";
  const double dv1 = (d.v1_max - d.v1_min) / res;
  const double dv2 = (d.v2_max - d.v2_min) / res;
  for (int l1 = 0; l1 < res; ++l1)
    for (int l2 = 0; l2 < res; ++l2)
      out << num(d.v1_min + (l1 + 0.5) * dv1) << ','
          << num(d.v2_min + (l2 + 0.5) * dv2) << ','
          << num(grid[static_cast<size_t>(l1) * res + l2]) << '\n';
}

void write_snapshots(const std::filesystem::path& dir, const Simulation& sim) {
  const std::string tag = time_tag(sim.time());
  write_fields_csv(dir / ("fields_t" + tag + ".csv"), sim.state().fields);
  for (double x : sim.config().slice_x)
    write_slice_csv(dir / ("slice_x" + time_tag(x) + "_t" + tag + ".csv"),
                    sim.state().f, x, sim.config().slice_res);
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunConfig cfg = config;
  if (const char* env = std::getenv("VMDG_OUTPUT_DIR"); env && *env)
    cfg.output_dir = env;
  cfg.validate();

  std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);

  Simulation sim(cfg);

  std::ofstream ts(dir / "timeseries.csv");
  if (!ts) throw std::runtime_error("cannot write timeseries.csv");
  ts << "# schema=vmdg.timeseries.v1\n" << DiagnosticsRecord::csv_header() << '\n';
  int rows = 0;
  int last_row_step = -1;
  auto emit = [&]() {
    ts << sim.diagnostics().csv_row() << '\n';
    ++rows;
    last_row_step = sim.steps();
  };
  emit();  // initial record

  // Breakpoints: snapshot times and the end time, deduplicated and sorted.
  std::vector<double> breaks = cfg.snapshot_times;
  breaks.push_back(cfg.t_end);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  for (double target : breaks) {
    if (target > cfg.t_end) break;
    const double eps = 1e-12 * std::max(1.0, target);
    while (sim.time() < target - eps) {
      const double dt = std::min(sim.compute_dt(), target - sim.time());
      sim.advance(dt);
      if (sim.steps() % cfg.diag_every == 0) emit();
    }
    if (last_row_step != sim.steps()) emit();
    write_snapshots(dir, sim);
  }

  // Manifest of the resolved configuration; deterministic content only.
  nlohmann::json manifest;
  manifest["schema"] = "vmdg.run.v1";
  manifest["version"] = kVersion;
  manifest["config_text"] = serialize_config(cfg);
  manifest["steps"] = sim.steps();
  manifest["t_final"] = sim.time();
  std::ofstream mf(dir / "run.json");
  mf << manifest.dump(2) << '\n';

  RunResult result;
  result.steps = sim.steps();
  result.diagnostic_rows = rows;
  result.output_dir = dir;
  return result;
}

}  // namespace vmdg
