#pragma once

#include <functional>

#include "vmdg/state.hpp"

namespace vmdg {

using PhaseFunction = std::function<double(double x, double v1, double v2)>;
using LineFunction = std::function<double(double x)>;

/// L2 projection of g onto the DG space. With an orthonormal basis the
/// coefficients are plain inner products; no mass-matrix solve. pts_per_dir
/// is the Gauss point count per direction (0 picks degree + 2).
CellCoefficients project(const PhaseFunction& g, const PhaseMesh& mesh,
                         const ModalBasis& basis, int pts_per_dir = 0,
                         int n_threads = 1);

/// Point evaluation of f_h inside cell `cell`; the point must lie in the
/// cell's closure (1e-12 relative slack), else std::invalid_argument.
double evaluate(const CellCoefficients& coeffs, const PhaseMesh& mesh,
                const ModalBasis& basis, int cell, double x, double v1,
                double v2);

/// Evaluate f_h at a point, locating the owning cell first. Points on an
/// interior face take the trace from the lower cell.
double evaluate_at(const CellCoefficients& coeffs, const PhaseMesh& mesh,
                   const ModalBasis& basis, double x, double v1, double v2);

/// Per-mode parity signs (-1)^(b1+b2) applied in place; combined with the
/// mesh cell permutation this realizes f(x, xi) -> f(x, -xi) exactly.
void reflect_coefficients(CellCoefficients& coeffs, const ModalBasis& basis);

/// Full discrete reflection: mesh permutation composed with parity signs.
DistributionState reflect_distribution(const DistributionState& f);

/// 1D projection/evaluation for the field components.
CellCoefficients project_1d(const LineFunction& g, int n_x, double x_min,
                            double h_x, int degree, int pts = 0);
double evaluate_1d(const CellCoefficients& coeffs, double x_min, double h_x,
                   int cell, double x);

/// L2 errors against a reference function, by per-cell Gauss quadrature.
double l2_error_phase(const DistributionState& f, const PhaseFunction& ref,
                      int pts_per_dir, int n_threads = 1);
double l2_error_1d(const CellCoefficients& coeffs, int n_x, double x_min,
                   double h_x, const LineFunction& ref, int pts);

double l2_norm(const CellCoefficients& coeffs);

}  // namespace vmdg
