#pragma once

#include <memory>
#include <random>

#include "vmdg/driver.hpp"
#include "vmdg/projection.hpp"

namespace vmdg::testing {

inline std::shared_ptr<const PhaseMesh> make_mesh(int n_x, int n_v,
                                                  double k0 = 0.2,
                                                  double v_max = 1.2) {
  return std::make_shared<PhaseMesh>(PhaseMesh::build(
      Domain1P2V::from_wavenumber(k0, v_max), n_x, n_v, n_v));
}

inline std::shared_ptr<const ModalBasis> make_basis(
    int k, BasisFamily family = BasisFamily::PType) {
  return std::make_shared<ModalBasis>(k, family);
}

inline DistributionState random_distribution(std::shared_ptr<const PhaseMesh> mesh,
                                             std::shared_ptr<const ModalBasis> basis,
                                             unsigned seed, double scale = 1.0) {
  DistributionState f(std::move(mesh), std::move(basis));
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  for (double& v : f.coeffs.data) v = dist(gen);
  return f;
}

/// Fields with |E| dominating 1.2|B3| per cell so the velocity-face normal
/// speeds keep one sign per face (nodal upwinding is then exactly
/// integrable and dense-quadrature comparisons are roundoff-tight).
inline FieldState sign_safe_fields(const PhaseMesh& mesh, int degree,
                                   unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> mag(0.7, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);
  const double length = mesh.domain().length();
  std::vector<double> s1(static_cast<size_t>(mesh.n_x()));
  std::vector<double> s2(static_cast<size_t>(mesh.n_x()));
  std::vector<double> m1(static_cast<size_t>(mesh.n_x()));
  std::vector<double> m2(static_cast<size_t>(mesh.n_x()));
  for (int i = 0; i < mesh.n_x(); ++i) {
    s1[static_cast<size_t>(i)] = coin(gen) ? 1.0 : -1.0;
    s2[static_cast<size_t>(i)] = coin(gen) ? 1.0 : -1.0;
    m1[static_cast<size_t>(i)] = mag(gen);
    m2[static_cast<size_t>(i)] = mag(gen);
  }
  const double x_min = mesh.domain().x_min;
  const double h = mesh.h_x();
  auto cell_of = [x_min, h, n = mesh.n_x()](double x) {
    int i = static_cast<int>((x - x_min) / h);
    return std::min(std::max(i, 0), n - 1);
  };
  FieldState fields(mesh.n_x(), x_min, h, degree);
  fields.e1 = project_1d(
      [&](double x) {
        const int i = cell_of(x);
        return s1[static_cast<size_t>(i)] *
               (m1[static_cast<size_t>(i)] + 0.1 * std::sin(2 * M_PI * x / length));
      },
      mesh.n_x(), x_min, h, degree, degree + 4);
  fields.e2 = project_1d(
      [&](double x) {
        const int i = cell_of(x);
        return s2[static_cast<size_t>(i)] *
               (m2[static_cast<size_t>(i)] + 0.1 * std::cos(2 * M_PI * x / length));
      },
      mesh.n_x(), x_min, h, degree, degree + 4);
  fields.b3 = project_1d(
      [&](double x) { return 0.2 * std::sin(2 * M_PI * x / length); },
      mesh.n_x(), x_min, h, degree, degree + 4);
  return fields;
}

inline double max_abs_diff(const CellCoefficients& a, const CellCoefficients& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i)
    m = std::max(m, std::abs(a.data[i] - b.data[i]));
  return m;
}

inline double max_abs(const CellCoefficients& a) {
  double m = 0.0;
  for (double v : a.data) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace vmdg::testing
