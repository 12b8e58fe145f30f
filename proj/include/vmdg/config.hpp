#pragma once

#include <string>
#include <vector>

#include "vmdg/maxwell.hpp"
#include "vmdg/scenario.hpp"
#include "vmdg/time_integration.hpp"

namespace vmdg {

/// Fully resolved run configuration. Defaults: weibel-choice1, 40^3 mesh,
/// degree 2 P-type, upwind flux, cfl 0.19.
struct RunConfig {
  std::string scenario = "weibel-choice1";
  WeibelParams weibel = weibel_choice1();
  double v_max = 1.2;
  int n_x = 40, n_v1 = 40, n_v2 = 40;
  int degree = 2;
  BasisFamily family = BasisFamily::PType;
  FluxKind flux = FluxKind::Upwind;
  StepControl step;
  double t_end = 50.0;
  int diag_every = 10;
  std::vector<double> snapshot_times;
  std::vector<double> slice_x;  // slice positions for snapshot output
  int slice_res = 64;
  std::string output_dir = "out";
  int threads = 0;  // 0 = all available cores
  int quad_init_pts = 0;  // 0 = degree + 4

  void validate() const;  // throws std::invalid_argument
  /// True for scenarios whose fields stay frozen (pure transport).
  bool fields_frozen() const { return scenario == "free-stream"; }
  /// Initial data resolved from the scenario name and parameters.
  InitialCondition initial_condition() const;
  Domain1P2V domain() const;
};

/// Parses the flat `key = value` format ('#' comments, blank lines ok).
/// Unknown keys, malformed values, and unknown scenarios are reported with
/// their line number.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical serialization; parse_config(serialize_config(c)) reproduces c.
std::string serialize_config(const RunConfig& c);

FluxKind flux_from_string(const std::string& s);  // throws on unknown name

}  // namespace vmdg
