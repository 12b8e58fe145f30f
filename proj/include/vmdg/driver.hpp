#pragma once

#include <filesystem>

#include "vmdg/config.hpp"
#include "vmdg/diagnostics.hpp"
#include "vmdg/time_integration.hpp"

namespace vmdg {

inline constexpr const char* kVersion = "0.1.0";

/// A configured run: projected initial data plus the coupled RK3 stepper.
/// Owns no I/O; the run() driver and the verification harness both build on
/// this.
class Simulation {
 public:
  explicit Simulation(const RunConfig& config);

  const RunConfig& config() const { return config_; }
  const SolutionState& state() const { return state_; }
  SolutionState& state() { return state_; }
  double time() const { return state_.time; }
  int steps() const { return steps_; }

  /// CFL (or fixed) step size for the current state.
  double compute_dt() const { return stepper_.compute_dt(state_); }
  void advance(double dt);
  /// Advances until t_target, truncating the last step to land on it.
  void advance_to(double t_target);

  DiagnosticsRecord diagnostics() const { return diag_.record(state_); }
  /// Reflects f, negates B, keeps E; see time_reversal_setup.
  void apply_time_reversal();

  const RkStepper& stepper() const { return stepper_; }
  const Diagnostics& diag() const { return diag_; }
  std::shared_ptr<const PhaseMesh> mesh() const { return mesh_; }
  std::shared_ptr<const ModalBasis> basis() const { return basis_; }

 private:
  RunConfig config_;
  std::shared_ptr<const PhaseMesh> mesh_;
  std::shared_ptr<const ModalBasis> basis_;
  RkStepper stepper_;
  Diagnostics diag_;
  SolutionState state_;
  int steps_ = 0;
};

struct RunResult {
  int steps = 0;
  int diagnostic_rows = 0;
  std::filesystem::path output_dir;
};

/// Full run with file outputs: timeseries.csv, per-snapshot field and slice
/// CSVs, and a run.json manifest of the resolved configuration. Honors the
/// VMDG_OUTPUT_DIR environment variable. Reruns with the same config are
/// byte-identical.
RunResult run(const RunConfig& config);

}  // namespace vmdg
