#pragma once

#include <string>

#include "vmdg/projection.hpp"
#include "vmdg/state.hpp"

namespace vmdg {

/// Streaming Weibel setup: counter-streaming Maxwellian beams of thermal
/// width beta, mixture weight delta, drifts v01/-v02, perturbed by a
/// b*sin(k0 x) magnetic seed.
struct WeibelParams {
  double beta = 0.01;
  double b = 0.001;
  double delta = 0.5;
  double v01 = 0.3;
  double v02 = 0.3;
  double k0 = 0.2;
  void validate() const;
};

WeibelParams weibel_choice1();  // delta=0.5,  v01=v02=0.3, k0=0.2
WeibelParams weibel_choice2();  // delta=1/6, v01=0.5, v02=0.1, k0=0.2

/// Pointwise initial data (f0, E1, E2, B3).
struct InitialCondition {
  PhaseFunction f0;
  LineFunction e1;
  LineFunction e2;
  LineFunction b3;
};

InitialCondition weibel_initial(const WeibelParams& p);

/// Compactly supported profile advected by free streaming (fields frozen at
/// zero): f(x, xi, t) = f0(x - v2 t, xi), periodic in x.
InitialCondition free_stream_initial(double k0, double v_max);
double free_stream_exact(double k0, double v_max, double x, double v1,
                         double v2, double t, double length);

/// Vacuum standing wave of the reduced Maxwell system, f = 0:
///   E1 = sin(kappa x) cos(kappa t),  B3 = cos(kappa x) sin(kappa t).
InitialCondition vacuum_maxwell_initial(double kappa);
double vacuum_e1_exact(double kappa, double x, double t);
double vacuum_b3_exact(double kappa, double x, double t);

/// Time-reversal map at time T: f -> f(x, -xi) on the discrete space
/// (cell permutation + mode parities), E unchanged, B negated. Evolving
/// another T must recover (reflected f0, E0, -B0). Rejects meshes with odd
/// velocity counts (enforced at construction, revalidated here).
SolutionState time_reversal_setup(const SolutionState& state);

}  // namespace vmdg
