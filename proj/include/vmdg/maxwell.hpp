#pragma once

#include <utility>

#include "vmdg/state.hpp"

namespace vmdg {

/// Numerical flux for the Maxwell solver. Alternating fluxes take one-sided
/// traces in a fixed global orientation; EPlusBMinus is E from the upper
/// cell and B from the lower one at every interface.
enum class FluxKind {
  Upwind,
  Central,
  AlternatingEPlusBMinus,
  AlternatingEMinusBPlus,
};

const char* to_string(FluxKind kind);

/// Interface values (E1~, B3~) from the lower/upper cell traces.
std::pair<double, double> maxwell_flux(FluxKind kind, double e1_lo, double b3_lo,
                                       double e1_hi, double b3_hi);

/// Upwind flux computed by splitting into the characteristic variables
/// w± = E1 ± B3 advecting at speeds ∓1 and upwinding each. Equals the
/// average/jump form of the upwind flux; kept as a validation oracle.
std::pair<double, double> characteristic_flux_oracle(double e1_lo, double b3_lo,
                                                     double e1_hi, double b3_hi);

/// Velocity moments of f_h: current components (weights v1, v2) and the
/// charge density (weight 1), exactly integrated and represented as 1D
/// modal coefficients in x. Tables depend only on mesh and basis.
class MomentTables {
 public:
  MomentTables(std::shared_ptr<const PhaseMesh> mesh,
               std::shared_ptr<const ModalBasis> basis, int field_degree);

  CurrentDensity current(const DistributionState& f) const;
  CellCoefficients density(const DistributionState& f) const;

  int field_degree() const { return degree_; }

 private:
  std::shared_ptr<const PhaseMesh> mesh_;
  std::shared_ptr<const ModalBasis> basis_;
  int degree_;
  // Per velocity cell and mode: integral of the mode against 1, v1, v2 over
  // the velocity cell, scaled so x-modal coefficients come out directly.
  std::vector<double> w0_, w1_, w2_;
};

/// Convenience wrappers building the tables on the fly.
CurrentDensity compute_current(const DistributionState& f, int field_degree);
CellCoefficients density_profile(const DistributionState& f);

/// Semi-discrete DG right-hand side of the reduced Maxwell system
///   dB3/dt = dE1/dx,  dE1/dt = dB3/dx - j1,  dE2/dt = -j2.
/// Only the E1 <-> B3 pair carries surface fluxes.
class MaxwellOperator {
 public:
  MaxwellOperator(int n_x, double x_min, double h_x, int degree);

  void rhs(const FieldState& fields, const CurrentDensity& current,
           FluxKind kind, FieldState& out) const;

  int degree() const { return degree_; }

 private:
  int n_x_;
  double x_min_, h_x_;
  int degree_;
  QuadratureRule quad_;
  std::vector<double> psi_;    // [q][m] values at volume nodes
  std::vector<double> dpsi_;   // [q][m] reference derivatives
  std::vector<double> trace_lo_, trace_hi_;  // psi at u = -1, +1
};

}  // namespace vmdg
