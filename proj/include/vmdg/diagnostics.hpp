#pragma once

#include <array>
#include <string>

#include "vmdg/maxwell.hpp"
#include "vmdg/state.hpp"

namespace vmdg {

/// One time sample of every tracked quantity. Macroscopic quantities
/// (mass, energies, momenta) are rescaled by the spatial domain length;
/// the Theta conservation-error terms and L2f are raw integrals.
struct DiagnosticsRecord {
  double t = 0;
  double mass = 0;
  double K1 = 0, K2 = 0;          // kinetic energies 1/2 int f xi_i^2
  double Ee1 = 0, Ee2 = 0;        // electric energies 1/2 int E_i^2
  double Em = 0;                  // magnetic energy 1/2 int B3^2
  double Etot = 0;                // int f|xi|^2 + int(|E|^2+|B|^2), rescaled
  double P1 = 0, P2 = 0;          // momenta with the E x B field term
  double L2f = 0;                 // L2 norm of f_h
  double theta1 = 0, theta2 = 0, theta3 = 0;
  std::array<double, 4> logFM_E1{}, logFM_E2{}, logFM_B3{};

  static std::string csv_header();
  std::string csv_row() const;
};

/// log10 of the n-th spatial Fourier amplitude of a 1D modal field,
/// (1/L) sqrt(|int W sin(k0 n x)|^2 + |int W cos(k0 n x)|^2), integrated
/// per cell with degree+3 Gauss points. Returns the -300 floor for a
/// vanishing amplitude.
double log_fourier_mode(const CellCoefficients& field, int n_x, double x_min,
                        double h_x, int n, double k0);

/// Pointwise samples of f_h(x_point, v1, v2) on a uniform cell-centered
/// velocity grid, row-major over (v1, v2). Throws for x outside the domain.
std::vector<double> distribution_slice(const DistributionState& f,
                                       double x_point, int res_v1, int res_v2);

/// Conserved-quantity tracking. Moment tables are exact for the polynomial
/// integrands; Theta terms use the operator-grade (k+2)-point surface rule
/// through an independent assembly path.
class Diagnostics {
 public:
  Diagnostics(std::shared_ptr<const PhaseMesh> mesh,
              std::shared_ptr<const ModalBasis> basis, int field_degree,
              FluxKind flux, double k0);

  DiagnosticsRecord record(const SolutionState& state) const;

  /// (Theta1, Theta2, Theta3): velocity-boundary outflow of f_h, tangential
  /// field jumps, and outflow of f_h |xi|^2. The stored flux kind does not
  /// change the values, only which terms enter the energy balance.
  std::array<double, 3> theta_terms(const SolutionState& state) const;

  // Raw (unrescaled) integrals.
  double mass(const DistributionState& f) const;
  struct PhaseMoments {
    double mass, v1, v2, v1_sq, v2_sq;
  };
  PhaseMoments phase_moments(const DistributionState& f) const;

  FluxKind flux() const { return flux_; }

 private:
  std::shared_ptr<const PhaseMesh> mesh_;
  std::shared_ptr<const ModalBasis> basis_;
  int field_degree_;
  FluxKind flux_;
  double k0_;
  // Per velocity cell, per mode: integrals against {1, v1, v2, v1^2, v2^2}.
  std::vector<double> mom_;
  // Boundary-face trace tables at (k+2)^2 Gauss nodes.
  QuadratureRule surf_;
  std::array<std::vector<double>, 2> face_v1_;  // [side][node*dim+m]
  std::array<std::vector<double>, 2> face_v2_;
};

}  // namespace vmdg
