#include "vmdg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vmdg/parallel.hpp"

namespace vmdg {

namespace {

double to_reference(double x, double center, double h, const char* what) {
  const double u = 2.0 * (x - center) / h;
  if (std::abs(u) > 1.0 + 1e-12)
    throw std::invalid_argument(std::string("point outside cell in ") + what);
  return std::clamp(u, -1.0, 1.0);
}

}  // namespace

CellCoefficients project(const PhaseFunction& g, const PhaseMesh& mesh,
                         const ModalBasis& basis, int pts_per_dir,
                         int n_threads) {
  const int nq = pts_per_dir > 0 ? pts_per_dir : basis.degree() + 2;
  const QuadratureRule q = gauss_legendre(nq);
  const int dim = basis.dimension();
  // Tabulate basis values at the tensor nodes once.
  std::vector<double> phi(static_cast<size_t>(nq) * nq * nq * dim);
  {
    size_t idx = 0;
    for (int qx = 0; qx < nq; ++qx)
      for (int q1 = 0; q1 < nq; ++q1)
        for (int q2 = 0; q2 < nq; ++q2)
          for (int m = 0; m < dim; ++m)
            phi[idx++] =
                basis.eval(m, q.nodes[qx], q.nodes[q1], q.nodes[q2]);
  }
  const double sqrt_jac = std::sqrt(mesh.cell_volume() / 8.0);
  CellCoefficients out(mesh.n_cells(), dim);
  parallel_for(mesh.n_cells(), n_threads, [&](int begin, int end) {
    for (int c = begin; c < end; ++c) {
      const auto [i, j1, j2] = mesh.cell_coords(c);
      const double xc = mesh.x_center(i);
      const double v1c = mesh.v1_center(j1);
      const double v2c = mesh.v2_center(j2);
      double* cc = out.cell(c);
      size_t idx = 0;
      for (int qx = 0; qx < nq; ++qx) {
        const double x = xc + 0.5 * mesh.h_x() * q.nodes[qx];
        for (int q1 = 0; q1 < nq; ++q1) {
          const double v1 = v1c + 0.5 * mesh.h_v1() * q.nodes[q1];
          for (int q2 = 0; q2 < nq; ++q2) {
            const double v2 = v2c + 0.5 * mesh.h_v2() * q.nodes[q2];
            const double w =
                q.weights[qx] * q.weights[q1] * q.weights[q2] * sqrt_jac;
            const double gv = w * g(x, v1, v2);
            const double* p = phi.data() + idx;
            for (int m = 0; m < dim; ++m) cc[m] += gv * p[m];
            idx += static_cast<size_t>(dim);
          }
        }
      }
    }
  });
  return out;
}

double evaluate(const CellCoefficients& coeffs, const PhaseMesh& mesh,
                const ModalBasis& basis, int cell, double x, double v1,
                double v2) {
  const auto [i, j1, j2] = mesh.cell_coords(cell);
  const double u = to_reference(x, mesh.x_center(i), mesh.h_x(), "x");
  const double w1 = to_reference(v1, mesh.v1_center(j1), mesh.h_v1(), "v1");
  const double w2 = to_reference(v2, mesh.v2_center(j2), mesh.h_v2(), "v2");
  const double inv_sqrt_jac = 1.0 / std::sqrt(mesh.cell_volume() / 8.0);
  const double* c = coeffs.cell(cell);
  double val = 0.0;
  for (int m = 0; m < basis.dimension(); ++m)
    val += c[m] * basis.eval(m, u, w1, w2);
  return val * inv_sqrt_jac;
}

double evaluate_at(const CellCoefficients& coeffs, const PhaseMesh& mesh,
                   const ModalBasis& basis, double x, double v1, double v2) {
  const auto& d = mesh.domain();
  if (v1 < d.v1_min || v1 > d.v1_max || v2 < d.v2_min || v2 > d.v2_max)
    throw std::invalid_argument("velocity point outside the domain");
  const int i = mesh.locate_x(x);
  auto clamp_cell = [](double v, double vmin, double h, int n) {
    int j = static_cast<int>((v - vmin) / h);
    return std::min(std::max(j, 0), n - 1);
  };
  const int j1 = clamp_cell(v1, d.v1_min, mesh.h_v1(), mesh.n_v1());
  const int j2 = clamp_cell(v2, d.v2_min, mesh.h_v2(), mesh.n_v2());
  return evaluate(coeffs, mesh, basis, mesh.cell_index(i, j1, j2), x, v1, v2);
}

void reflect_coefficients(CellCoefficients& coeffs, const ModalBasis& basis) {
  const int dim = basis.dimension();
  std::vector<double> sign(static_cast<size_t>(dim));
  for (int m = 0; m < dim; ++m) sign[static_cast<size_t>(m)] = basis.reflect_sign(m);
  for (int c = 0; c < coeffs.n_cells; ++c) {
    double* cc = coeffs.cell(c);
    for (int m = 0; m < dim; ++m) cc[m] *= sign[static_cast<size_t>(m)];
  }
}

DistributionState reflect_distribution(const DistributionState& f) {
  DistributionState out(f.mesh, f.basis);
  const std::vector<int> perm = f.mesh->reflect_velocity_permutation();
  const int dim = f.basis->dimension();
  for (int c = 0; c < f.coeffs.n_cells; ++c) {
    const double* src = f.coeffs.cell(c);
    double* dst = out.coeffs.cell(perm[static_cast<size_t>(c)]);
    for (int m = 0; m < dim; ++m) dst[m] = src[m] * f.basis->reflect_sign(m);
  }
  return out;
}

CellCoefficients project_1d(const LineFunction& g, int n_x, double x_min,
                            double h_x, int degree, int pts) {
  const int nq = pts > 0 ? pts : degree + 2;
  const QuadratureRule q = gauss_legendre(nq);
  const double sqrt_jac = std::sqrt(0.5 * h_x);
  CellCoefficients out(n_x, degree + 1);
  for (int i = 0; i < n_x; ++i) {
    const double xc = x_min + (i + 0.5) * h_x;
    double* cc = out.cell(i);
    for (int qx = 0; qx < nq; ++qx) {
      const double gv = q.weights[qx] * g(xc + 0.5 * h_x * q.nodes[qx]) * sqrt_jac;
      for (int m = 0; m <= degree; ++m) cc[m] += gv * ortho1d_value(m, q.nodes[qx]);
    }
  }
  return out;
}

double evaluate_1d(const CellCoefficients& coeffs, double x_min, double h_x,
                   int cell, double x) {
  const double xc = x_min + (cell + 0.5) * h_x;
  const double u = to_reference(x, xc, h_x, "x");
  const double* c = coeffs.cell(cell);
  double val = 0.0;
  for (int m = 0; m < coeffs.n_modes; ++m) val += c[m] * ortho1d_value(m, u);
  return val / std::sqrt(0.5 * h_x);
}

double l2_error_phase(const DistributionState& f, const PhaseFunction& ref,
                      int pts_per_dir, int n_threads) {
  const PhaseMesh& mesh = *f.mesh;
  const ModalBasis& basis = *f.basis;
  const int nq = pts_per_dir > 0 ? pts_per_dir : basis.degree() + 4;
  const QuadratureRule q = gauss_legendre(nq);
  const int dim = basis.dimension();
  std::vector<double> phi(static_cast<size_t>(nq) * nq * nq * dim);
  {
    size_t idx = 0;
    for (int qx = 0; qx < nq; ++qx)
      for (int q1 = 0; q1 < nq; ++q1)
        for (int q2 = 0; q2 < nq; ++q2)
          for (int m = 0; m < dim; ++m)
            phi[idx++] = basis.eval(m, q.nodes[qx], q.nodes[q1], q.nodes[q2]);
  }
  const double jac = mesh.cell_volume() / 8.0;
  const double inv_sqrt_jac = 1.0 / std::sqrt(jac);
  // Per-cell partial sums then a serial reduction keep the result identical
  // for every thread count.
  std::vector<double> partial(static_cast<size_t>(mesh.n_cells()), 0.0);
  parallel_for(mesh.n_cells(), n_threads, [&](int begin, int end) {
    for (int c = begin; c < end; ++c) {
      const auto [i, j1, j2] = mesh.cell_coords(c);
      const double xc = mesh.x_center(i);
      const double v1c = mesh.v1_center(j1);
      const double v2c = mesh.v2_center(j2);
      const double* cc = f.coeffs.cell(c);
      double acc = 0.0;
      size_t idx = 0;
      for (int qx = 0; qx < nq; ++qx) {
        const double x = xc + 0.5 * mesh.h_x() * q.nodes[qx];
        for (int q1i = 0; q1i < nq; ++q1i) {
          const double v1 = v1c + 0.5 * mesh.h_v1() * q.nodes[q1i];
          for (int q2i = 0; q2i < nq; ++q2i) {
            const double v2 = v2c + 0.5 * mesh.h_v2() * q.nodes[q2i];
            const double* p = phi.data() + idx;
            double fh = 0.0;
            for (int m = 0; m < dim; ++m) fh += cc[m] * p[m];
            fh *= inv_sqrt_jac;
            const double diff = fh - ref(x, v1, v2);
            acc += q.weights[qx] * q.weights[q1i] * q.weights[q2i] * diff * diff;
            idx += static_cast<size_t>(dim);
          }
        }
      }
      partial[static_cast<size_t>(c)] = acc * jac;
    }
  });
  double total = 0.0;
  for (double v : partial) total += v;
  return std::sqrt(total);
}

double l2_error_1d(const CellCoefficients& coeffs, int n_x, double x_min,
                   double h_x, const LineFunction& ref, int pts) {
  const QuadratureRule q = gauss_legendre(pts);
  const double jac = 0.5 * h_x;
  const double inv_sqrt_jac = 1.0 / std::sqrt(jac);
  double total = 0.0;
  for (int i = 0; i < n_x; ++i) {
    const double xc = x_min + (i + 0.5) * h_x;
    const double* cc = coeffs.cell(i);
    for (int qx = 0; qx < pts; ++qx) {
      double vh = 0.0;
      for (int m = 0; m < coeffs.n_modes; ++m)
        vh += cc[m] * ortho1d_value(m, q.nodes[qx]);
      vh *= inv_sqrt_jac;
      const double diff = vh - ref(xc + 0.5 * h_x * q.nodes[qx]);
      total += q.weights[qx] * diff * diff * jac;
    }
  }
  return std::sqrt(total);
}

double l2_norm(const CellCoefficients& coeffs) {
  double total = 0.0;
  for (double v : coeffs.data) total += v * v;
  return std::sqrt(total);
}

}  // namespace vmdg
