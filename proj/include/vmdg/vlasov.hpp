#pragma once

#include <array>

#include "vmdg/state.hpp"

namespace vmdg {

/// Upwind scalar flux through an oriented edge: speed = a.n with traces
/// taken in the edge orientation. Algebraically {f a}.n + (|a.n|/2)[f].n.
inline double upwind_scalar_flux(double f_minus, double f_plus, double speed) {
  return 0.5 * (speed * (f_minus + f_plus) + std::abs(speed) * (f_minus - f_plus));
}

/// One-sided flux on the velocity-box boundary (exterior state zero):
/// (f_inside/2)(speed + |speed|) with speed = a.n_xi outward.
inline double velocity_boundary_flux(double f_inside, double speed) {
  return 0.5 * f_inside * (speed + std::abs(speed));
}

/// Lorentz force of the reduced system, a = (E1 + v2 B3, E2 - v1 B3),
/// evaluated pointwise from a FieldState. Divergence-free in xi by
/// construction (a1 has no v1 dependence, a2 no v2 dependence).
struct ForceField {
  const FieldState* fields;
  std::array<double, 2> operator()(double x, double v1, double v2) const;
};

/// Semi-discrete DG right-hand side for the Vlasov equation: volume
/// transport terms plus upwind surface fluxes on periodic x-edges and
/// interior velocity edges, one-sided fluxes on the velocity-box boundary.
/// Quadrature tables live on the reference cell and are built once.
class VlasovOperator {
 public:
  VlasovOperator(std::shared_ptr<const PhaseMesh> mesh,
                 std::shared_ptr<const ModalBasis> basis, int volume_pts = 0,
                 int surface_pts = 0);

  /// Writes d(coeffs)/dt into out. Throws std::runtime_error when the input
  /// contains non-finite coefficients, naming the first offending cell.
  void rhs(const DistributionState& f, const FieldState& fields,
           CellCoefficients& out, int n_threads = 1) const;

  /// Jump dissipation of the L2 identity, split by edge family and
  /// evaluated with the operator's own surface nodes:
  ///   <rhs, f> = -1/2 (x_edges + v_interior + v_boundary).
  struct Dissipation {
    double x_edges = 0.0;
    double v_interior = 0.0;
    double v_boundary = 0.0;
    double total() const { return x_edges + v_interior + v_boundary; }
  };
  Dissipation dissipation(const DistributionState& f,
                          const FieldState& fields) const;

  /// Velocity-boundary outflow of f_h * weight(xi) with weight 1 (moment 0)
  /// or |xi|^2 (moment 2); the Theta_1 / Theta_3 integrands.
  double boundary_outflow(const DistributionState& f, const FieldState& fields,
                          int moment) const;

  int volume_points() const { return nq_vol_; }
  int surface_points() const { return nq_surf_; }
  const PhaseMesh& mesh() const { return *mesh_; }
  const ModalBasis& basis() const { return *basis_; }

 private:
  struct FieldNodalValues;
  void tabulate_field(const FieldState& fields, FieldNodalValues& out) const;
  void cell_rhs(const DistributionState& f, const FieldNodalValues& fv,
                int cell, double* out) const;

  std::shared_ptr<const PhaseMesh> mesh_;
  std::shared_ptr<const ModalBasis> basis_;
  int nq_vol_;
  int nq_surf_;
  QuadratureRule quad_vol_;
  QuadratureRule quad_surf_;
  // Volume tables, node-major: value and reference gradients per mode.
  std::vector<double> phi_;
  std::vector<double> grad_x_, grad_v1_, grad_v2_;
  // Face traces phi(m) at surface nodes; [axis][side] with side 0 = -1 face.
  std::array<std::array<std::vector<double>, 2>, 3> face_phi_;
};

}  // namespace vmdg
