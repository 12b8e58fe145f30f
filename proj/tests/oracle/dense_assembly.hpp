#pragma once

#include "vmdg/maxwell.hpp"
#include "vmdg/state.hpp"

// Brute-force reference assemblies of the semi-discrete DG forms, built on
// pointwise evaluation and dense Gauss quadrature only. Deliberately
// independent of the operator table machinery so the two paths can be
// compared coefficient by coefficient.
namespace vmdg::oracle {

/// Dense-quadrature Vlasov right-hand side (volume transport minus upwind
/// surface terms, one-sided at the velocity-box boundary).
CellCoefficients dense_vlasov_rhs(const DistributionState& f,
                                  const FieldState& fields, int pts = 10);

/// Dense-quadrature Maxwell right-hand side for a given flux choice.
FieldState dense_maxwell_rhs(const FieldState& fields,
                             const CurrentDensity& current, FluxKind kind,
                             int pts = 10);

/// Exact velocity moments (j1, j2) by dense quadrature.
CurrentDensity dense_current(const DistributionState& f, int field_degree,
                             int pts = 10);

/// Largest |a . n| sign change indicator: returns true when every velocity
/// face keeps a single sign of the normal speed at `pts`^2 probe points
/// (the stratum on which nodal upwinding is exactly integrable).
bool velocity_speeds_sign_constant(const PhaseMesh& mesh,
                                   const FieldState& fields, int pts = 12);

}  // namespace vmdg::oracle
