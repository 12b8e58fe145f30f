#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vmdg/driver.hpp"

namespace vmdg {

/// One mesh level of an accuracy study: L2 errors of (f, B3, E1, E2) and
/// the observed orders against the previous (half-spacing) level.
struct ConvergenceRow {
  int degree = 0;
  int mesh = 0;
  double err_f = 0, err_b3 = 0, err_e1 = 0, err_e2 = 0;
  double ord_f = 0, ord_b3 = 0, ord_e1 = 0, ord_e2 = 0;  // NaN on level 0
};

struct ConvergenceTable {
  std::string scenario;
  FluxKind flux = FluxKind::Upwind;
  std::vector<ConvergenceRow> rows;

  const ConvergenceRow* find(int degree, int mesh) const;
  std::string formatted() const;
  std::string csv() const;
};

double observed_order(double err_coarse, double err_fine);

/// Time-reversal accuracy study: run choice-1 to T, reverse, run to 2T and
/// measure L2 errors against the reversed initial data with (k+4)-point
/// quadrature per direction.
ConvergenceTable time_reversal_table(const std::vector<int>& degrees,
                                     const std::vector<int>& meshes,
                                     FluxKind flux, double T = 5.0,
                                     int threads = 0,
                                     const WeibelParams& params = weibel_choice1(),
                                     std::ostream* log = nullptr);

/// Exact-solution studies for the free-stream and vacuum-maxwell scenarios.
ConvergenceTable exact_solution_table(const std::string& scenario,
                                      const std::vector<int>& degrees,
                                      const std::vector<int>& meshes,
                                      FluxKind flux, double T = 1.0,
                                      int threads = 0,
                                      std::ostream* log = nullptr);

/// Max relative drifts of the tracked invariants over a run; quantities
/// with |initial| below an absolute floor are reported as absolute drifts.
struct DriftReport {
  FluxKind flux = FluxKind::Upwind;
  double mass = 0, energy = 0, p1 = 0, p2 = 0;
};

DriftReport conservation_report(const RunConfig& config, double T);

/// Least-squares slope of log(values) against t. Series already in log10
/// form are rescaled by ln(10) so the returned rate is always the
/// e-folding rate. Throws when a raw series is not strictly positive.
double growth_rate(const std::vector<double>& t, const std::vector<double>& values,
                   bool values_are_log10,
                   std::optional<std::pair<double, double>> window = {});

/// Default fit window for a log10 amplitude series: from its first rise
/// 0.25 above the initial value (never below -5) to its first crossing of
/// -2. Throws when the series never develops such a window.
std::pair<double, double> default_growth_window(const std::vector<double>& t,
                                                const std::vector<double>& log10_series);

/// Semi-discrete identity residuals at a single state (Lemmas of the
/// conservation theory turned into computable checks).
struct IdentityReport {
  double mass_residual = 0;       // <rhs, 1> + Theta1
  double l2_rate = 0;             // <rhs, f>  (must be <= 0)
  double l2_residual = 0;         // <rhs, f> + dissipation/2
  double energy_residual = 0;     // d/dt total energy + Theta2(+)Theta3
  double scale = 1;               // magnitude reference for tolerances
};

IdentityReport check_identities(const SolutionState& state, const RkStepper& stepper,
                                const Diagnostics& diag);

}  // namespace vmdg
