#pragma once

#include <memory>
#include <vector>

#include "vmdg/basis.hpp"
#include "vmdg/mesh.hpp"

namespace vmdg {

/// Modal coefficients of one scalar field: n_cells x n_modes, cell-major.
/// Coefficients are taken with respect to the basis orthonormalized on the
/// physical cell, so the discrete L2 norm is the plain Euclidean norm.
struct CellCoefficients {
  int n_cells = 0;
  int n_modes = 0;
  std::vector<double> data;

  CellCoefficients() = default;
  CellCoefficients(int cells, int modes)
      : n_cells(cells),
        n_modes(modes),
        data(static_cast<size_t>(cells) * modes, 0.0) {}

  double* cell(int c) { return data.data() + static_cast<size_t>(c) * n_modes; }
  const double* cell(int c) const {
    return data.data() + static_cast<size_t>(c) * n_modes;
  }
  double& at(int c, int m) { return data[static_cast<size_t>(c) * n_modes + m]; }
  double at(int c, int m) const {
    return data[static_cast<size_t>(c) * n_modes + m];
  }
  void set_zero() { std::fill(data.begin(), data.end(), 0.0); }
};

/// DG coefficients of f_h over the full phase mesh.
struct DistributionState {
  std::shared_ptr<const PhaseMesh> mesh;
  std::shared_ptr<const ModalBasis> basis;
  CellCoefficients coeffs;

  DistributionState() = default;
  DistributionState(std::shared_ptr<const PhaseMesh> m,
                    std::shared_ptr<const ModalBasis> b)
      : mesh(std::move(m)),
        basis(std::move(b)),
        coeffs(mesh->n_cells(), basis->dimension()) {}
};

/// Modal coefficients of (E1, E2, B3) on the 1D x-mesh, degree r per cell.
struct FieldState {
  int n_x = 0;
  double x_min = 0.0;
  double h_x = 0.0;
  int degree = 0;
  CellCoefficients e1, e2, b3;

  FieldState() = default;
  FieldState(int nx, double xmin, double hx, int r)
      : n_x(nx),
        x_min(xmin),
        h_x(hx),
        degree(r),
        e1(nx, r + 1),
        e2(nx, r + 1),
        b3(nx, r + 1) {}

  int modes() const { return degree + 1; }
};

/// Current moments (j1, j2) of f_h as 1D modal coefficients.
struct CurrentDensity {
  int n_x = 0;
  int degree = 0;
  CellCoefficients j1, j2;

  CurrentDensity() = default;
  CurrentDensity(int nx, int r) : n_x(nx), degree(r), j1(nx, r + 1), j2(nx, r + 1) {}
};

struct SolutionState {
  DistributionState f;
  FieldState fields;
  double time = 0.0;
};

bool all_finite(const CellCoefficients& c);
bool all_finite(const FieldState& s);

/// y = a*y + b*x, elementwise over the coefficient arrays.
void axpby(double a, CellCoefficients& y, double b, const CellCoefficients& x);
void axpby(double a, FieldState& y, double b, const FieldState& x);
void axpby(double a, SolutionState& y, double b, const SolutionState& x);

}  // namespace vmdg
