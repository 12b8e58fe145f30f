#pragma once

#include <optional>

#include "vmdg/maxwell.hpp"
#include "vmdg/state.hpp"
#include "vmdg/vlasov.hpp"

namespace vmdg {

/// TVD-RK3 convex-combination coefficients; each stage is a forward-Euler
/// step blended with earlier states.
inline constexpr double kRk3Blend1[2] = {0.75, 0.25};       // G2 = 3/4 Gn + 1/4 G1'
inline constexpr double kRk3Blend2[2] = {1.0 / 3.0, 2.0 / 3.0};
static_assert(kRk3Blend1[0] + kRk3Blend1[1] == 1.0);
static_assert(kRk3Blend2[0] + kRk3Blend2[1] == 1.0);

/// One TVD-RK3 step of du/dt = rhs(u, t) for any value-semantic scalar.
template <typename Rhs>
double rk3_scalar_step(double u, double t, double dt, Rhs&& rhs) {
  const double u1 = u + dt * rhs(u, t);
  const double u2 = kRk3Blend1[0] * u + kRk3Blend1[1] * (u1 + dt * rhs(u1, t + dt));
  return kRk3Blend2[0] * u + kRk3Blend2[1] * (u2 + dt * rhs(u2, t + 0.5 * dt));
}

struct StepControl {
  double cfl = 0.19;
  std::optional<double> fixed_dt;  // wins over the CFL formula when set
  double k3_coeff = 0.1;           // dt <= k3_coeff * h_x^(4/3) for degree 3
};

/// Couples the Vlasov and Maxwell operators under TVD-RK3 with CFL-based
/// step control. The current is recomputed from f_h at every stage so the
/// coupling stays self-consistent.
class RkStepper {
 public:
  RkStepper(std::shared_ptr<const PhaseMesh> mesh,
            std::shared_ptr<const ModalBasis> basis, FluxKind flux,
            StepControl control, int n_threads = 1, bool evolve_fields = true);

  /// dt = cfl / (max|v2|/h_x + max|a1|/h_v1 + max|a2|/h_v2 + 1/h_x); the
  /// trailing term is the unit light speed of the Maxwell block. Field
  /// maxima are taken over the x quadrature nodes each call.
  double compute_dt(const SolutionState& state) const;

  /// One TVD-RK3 step; throws on a non-finite stage result, naming the stage.
  void step(SolutionState& state, double dt) const;

  /// Coupled right-hand side at the given state (used by verification).
  void eval_rhs(const SolutionState& state, CellCoefficients& df,
                FieldState& dfields) const;

  const VlasovOperator& vlasov() const { return vlasov_; }
  const MaxwellOperator& maxwell() const { return maxwell_; }
  const MomentTables& moments() const { return moments_; }
  FluxKind flux() const { return flux_; }
  int threads() const { return n_threads_; }

 private:
  std::shared_ptr<const PhaseMesh> mesh_;
  std::shared_ptr<const ModalBasis> basis_;
  FluxKind flux_;
  StepControl control_;
  int n_threads_;
  bool evolve_fields_;
  VlasovOperator vlasov_;
  MaxwellOperator maxwell_;
  MomentTables moments_;
};

}  // namespace vmdg
