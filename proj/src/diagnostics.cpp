#include "vmdg/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "vmdg/projection.hpp"

namespace vmdg {

std::string DiagnosticsRecord::csv_header() {
  std::string h = "t,mass,K1,K2,Ee1,Ee2,Em,Etot,P1,P2,L2f,theta1,theta2,theta3";
  for (const char* f : {"E1", "E2", "B3"})
    for (int n = 1; n <= 4; ++n)
      h += std::string(",logFM_") + f + "_" + std::to_string(n);
  return h;
}

std::string DiagnosticsRecord::csv_row() const {
  char buf[64];
  std::string row;
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    if (!row.empty()) row += ',';
    row += buf;
  };
  put(t);
  put(mass);
  put(K1);
  put(K2);
  put(Ee1);
  put(Ee2);
  put(Em);
  put(Etot);
  put(P1);
  put(P2);
  put(L2f);
  put(theta1);
  put(theta2);
  put(theta3);
  for (const auto& arr : {logFM_E1, logFM_E2, logFM_B3})
    for (double v : arr) put(v);
  return row;
}

double log_fourier_mode(const CellCoefficients& field, int n_x, double x_min,
                        double h_x, int n, double k0) {
  if (n < 1) throw std::invalid_argument("Fourier mode index must be >= 1");
  const int degree = field.n_modes - 1;
  const QuadratureRule q = gauss_legendre(degree + 3);
  const double kn = k0 * n;
  const double inv_sqrt_jac = 1.0 / std::sqrt(0.5 * h_x);
  double int_sin = 0.0, int_cos = 0.0;
  for (int i = 0; i < n_x; ++i) {
    const double xc = x_min + (i + 0.5) * h_x;
    const double* c = field.cell(i);
    for (int qi = 0; qi < q.size(); ++qi) {
      const double x = xc + 0.5 * h_x * q.nodes[qi];
      double w = 0.0;
      for (int m = 0; m <= degree; ++m)
        w += c[m] * ortho1d_value(m, q.nodes[qi]);
      w *= inv_sqrt_jac * q.weights[qi] * 0.5 * h_x;
      int_sin += w * std::sin(kn * x);
      int_cos += w * std::cos(kn * x);
    }
  }
  const double length = n_x * h_x;
  const double amp =
      std::sqrt(int_sin * int_sin + int_cos * int_cos) / length;
  if (amp <= 0.0) return -300.0;
  return std::max(std::log10(amp), -300.0);
}

std::vector<double> distribution_slice(const DistributionState& f,
                                       double x_point, int res_v1,
                                       int res_v2) {
  const PhaseMesh& mesh = *f.mesh;
  const Domain1P2V& d = mesh.domain();
  const int i = mesh.locate_x(x_point);  // throws when outside
  const double dv1 = (d.v1_max - d.v1_min) / res_v1;
  const double dv2 = (d.v2_max - d.v2_min) / res_v2;
  std::vector<double> out(static_cast<size_t>(res_v1) * res_v2);
  for (int l1 = 0; l1 < res_v1; ++l1) {
    const double v1 = d.v1_min + (l1 + 0.5) * dv1;
    const int j1 = std::min(static_cast<int>((v1 - d.v1_min) / mesh.h_v1()),
                            mesh.n_v1() - 1);
    for (int l2 = 0; l2 < res_v2; ++l2) {
      const double v2 = d.v2_min + (l2 + 0.5) * dv2;
      const int j2 = std::min(static_cast<int>((v2 - d.v2_min) / mesh.h_v2()),
                              mesh.n_v2() - 1);
      out[static_cast<size_t>(l1) * res_v2 + l2] =
          evaluate(f.coeffs, mesh, *f.basis, mesh.cell_index(i, j1, j2),
                   x_point, v1, v2);
    }
  }
  return out;
}

Diagnostics::Diagnostics(std::shared_ptr<const PhaseMesh> mesh,
                         std::shared_ptr<const ModalBasis> basis,
                         int field_degree, FluxKind flux, double k0)
    : mesh_(std::move(mesh)),
      basis_(std::move(basis)),
      field_degree_(field_degree),
      flux_(flux),
      k0_(k0) {
  const int k = basis_->degree();
  const int dim = basis_->dimension();
  const int nv1 = mesh_->n_v1();
  const int nv2 = mesh_->n_v2();
  const QuadratureRule q = gauss_legendre(k + 2);
  const double h1 = mesh_->h_v1();
  const double h2 = mesh_->h_v2();
  const double hx = mesh_->h_x();
  const double sqrt_jac = std::sqrt(hx * h1 * h2 / 8.0);

  // Per-mode velocity-cell integrals; the x factor integrates the mode's
  // Legendre component a over the cell, which is nonzero only for a = 0.
  auto line = [&](int b, double center, double h, int power) {
    double acc = 0.0;
    for (int qi = 0; qi < q.size(); ++qi) {
      const double v = center + 0.5 * h * q.nodes[qi];
      acc += q.weights[qi] * ortho1d_value(b, q.nodes[qi]) *
             std::pow(v, power);
    }
    return acc;
  };
  mom_.assign(static_cast<size_t>(nv1) * nv2 * dim * 5, 0.0);
  const double x_factor = std::sqrt(2.0) * 0.5 * hx;  // int of mode 0 in x
  for (int j1 = 0; j1 < nv1; ++j1)
    for (int j2 = 0; j2 < nv2; ++j2)
      for (int m = 0; m < dim; ++m) {
        const BasisMode& md = basis_->modes()[static_cast<size_t>(m)];
        if (md.a != 0) continue;
        const double c1 = mesh_->v1_center(j1);
        const double c2 = mesh_->v2_center(j2);
        const double area = 0.25 * h1 * h2 / sqrt_jac * x_factor;
        const size_t at =
            ((static_cast<size_t>(j1) * nv2 + j2) * dim + m) * 5;
        const double i0_1 = line(md.b1, c1, h1, 0);
        const double i0_2 = line(md.b2, c2, h2, 0);
        mom_[at + 0] = area * i0_1 * i0_2;
        mom_[at + 1] = area * line(md.b1, c1, h1, 1) * i0_2;
        mom_[at + 2] = area * i0_1 * line(md.b2, c2, h2, 1);
        mom_[at + 3] = area * line(md.b1, c1, h1, 2) * i0_2;
        mom_[at + 4] = area * i0_1 * line(md.b2, c2, h2, 2);
      }

  // Trace tables for the velocity-boundary Theta integrals.
  surf_ = gauss_legendre(k + 2);
  const int ns = surf_.size();
  for (int side = 0; side < 2; ++side) {
    const double fixed = side == 0 ? -1.0 : 1.0;
    auto& t1 = face_v1_[static_cast<size_t>(side)];
    auto& t2 = face_v2_[static_cast<size_t>(side)];
    t1.resize(static_cast<size_t>(ns) * ns * dim);
    t2.resize(t1.size());
    size_t idx = 0;
    for (int qa = 0; qa < ns; ++qa)
      for (int qb = 0; qb < ns; ++qb)
        for (int m = 0; m < dim; ++m, ++idx) {
          t1[idx] = basis_->eval(m, surf_.nodes[qa], fixed, surf_.nodes[qb]);
          t2[idx] = basis_->eval(m, surf_.nodes[qa], surf_.nodes[qb], fixed);
        }
  }
}

Diagnostics::PhaseMoments Diagnostics::phase_moments(
    const DistributionState& f) const {
  const PhaseMesh& mesh = *mesh_;
  const int dim = basis_->dimension();
  PhaseMoments out{0, 0, 0, 0, 0};
  for (int i = 0; i < mesh.n_x(); ++i)
    for (int j1 = 0; j1 < mesh.n_v1(); ++j1)
      for (int j2 = 0; j2 < mesh.n_v2(); ++j2) {
        const double* c = f.coeffs.cell(mesh.cell_index(i, j1, j2));
        const size_t base =
            (static_cast<size_t>(j1) * mesh.n_v2() + j2) * dim * 5;
        for (int m = 0; m < dim; ++m) {
          const double* w = mom_.data() + base + static_cast<size_t>(m) * 5;
          out.mass += c[m] * w[0];
          out.v1 += c[m] * w[1];
          out.v2 += c[m] * w[2];
          out.v1_sq += c[m] * w[3];
          out.v2_sq += c[m] * w[4];
        }
      }
  return out;
}

double Diagnostics::mass(const DistributionState& f) const {
  return phase_moments(f).mass;
}

std::array<double, 3> Diagnostics::theta_terms(
    const SolutionState& state) const {
  const PhaseMesh& mesh = *mesh_;
  const FieldState& s = state.fields;
  const int dim = basis_->dimension();
  const int ns = surf_.size();
  const double inv_sqrt_jac_f = 1.0 / std::sqrt(mesh.cell_volume() / 8.0);
  const double inv_sqrt_jac_x = 1.0 / std::sqrt(0.5 * s.h_x);

  // Theta2: tangential field jumps at the x interfaces (point values in 1D).
  double theta2 = 0.0;
  for (int i = 0; i < s.n_x; ++i) {
    const int up = (i + 1) % s.n_x;
    double e_lo = 0.0, b_lo = 0.0, e_hi = 0.0, b_hi = 0.0;
    for (int m = 0; m < s.modes(); ++m) {
      const double plo = ortho1d_value(m, -1.0);
      const double phi = ortho1d_value(m, 1.0);
      e_lo += s.e1.at(i, m) * phi;
      b_lo += s.b3.at(i, m) * phi;
      e_hi += s.e1.at(up, m) * plo;
      b_hi += s.b3.at(up, m) * plo;
    }
    const double je = (e_hi - e_lo) * inv_sqrt_jac_x;
    const double jb = (b_hi - b_lo) * inv_sqrt_jac_x;
    theta2 += je * je + jb * jb;
  }

  // Theta1 / Theta3: outflow moments over the four velocity-box walls.
  double theta1 = 0.0, theta3 = 0.0;
  const Domain1P2V& d = mesh.domain();
  const double face_jac_v1 = 0.25 * mesh.h_x() * mesh.h_v2();
  const double face_jac_v2 = 0.25 * mesh.h_x() * mesh.h_v1();
  for (int i = 0; i < mesh.n_x(); ++i) {
    // Field values at the surface x nodes of this column.
    std::vector<double> e1(static_cast<size_t>(ns)), e2(static_cast<size_t>(ns)),
        b3(static_cast<size_t>(ns));
    for (int qa = 0; qa < ns; ++qa) {
      double ve1 = 0.0, ve2 = 0.0, vb3 = 0.0;
      for (int m = 0; m < s.modes(); ++m) {
        const double p = ortho1d_value(m, surf_.nodes[qa]) * inv_sqrt_jac_x;
        ve1 += s.e1.at(i, m) * p;
        ve2 += s.e2.at(i, m) * p;
        vb3 += s.b3.at(i, m) * p;
      }
      e1[static_cast<size_t>(qa)] = ve1;
      e2[static_cast<size_t>(qa)] = ve2;
      b3[static_cast<size_t>(qa)] = vb3;
    }
    // v1 walls: normal speed +-a1 = +-(E1 + v2 B3), |xi|^2 = v1max^2 + v2^2.
    for (int side = 0; side < 2; ++side) {
      const int j1 = side == 0 ? 0 : mesh.n_v1() - 1;
      const double sign = side == 0 ? -1.0 : 1.0;
      const double v1b = side == 0 ? d.v1_min : d.v1_max;
      for (int j2 = 0; j2 < mesh.n_v2(); ++j2) {
        const double* c = state.f.coeffs.cell(mesh.cell_index(i, j1, j2));
        const double v2c = mesh.v2_center(j2);
        size_t idx = 0;
        for (int qa = 0; qa < ns; ++qa)
          for (int qb = 0; qb < ns; ++qb) {
            const double v2 = v2c + 0.5 * mesh.h_v2() * surf_.nodes[qb];
            const double an =
                sign * (e1[static_cast<size_t>(qa)] + v2 * b3[static_cast<size_t>(qa)]);
            const double* tr =
                face_v1_[static_cast<size_t>(side)].data() + idx;
            double fv = 0.0;
            for (int m = 0; m < dim; ++m) fv += c[m] * tr[m];
            fv *= inv_sqrt_jac_f;
            const double w = face_jac_v1 * surf_.weights[qa] * surf_.weights[qb] *
                             fv * std::max(an, 0.0);
            theta1 += w;
            theta3 += w * (v1b * v1b + v2 * v2);
            idx += static_cast<size_t>(dim);
          }
      }
    }
    // v2 walls: normal speed +-a2 = +-(E2 - v1 B3).
    for (int side = 0; side < 2; ++side) {
      const int j2 = side == 0 ? 0 : mesh.n_v2() - 1;
      const double sign = side == 0 ? -1.0 : 1.0;
      const double v2b = side == 0 ? d.v2_min : d.v2_max;
      for (int j1 = 0; j1 < mesh.n_v1(); ++j1) {
        const double* c = state.f.coeffs.cell(mesh.cell_index(i, j1, j2));
        const double v1c = mesh.v1_center(j1);
        size_t idx = 0;
        for (int qa = 0; qa < ns; ++qa)
          for (int qb = 0; qb < ns; ++qb) {
            const double v1 = v1c + 0.5 * mesh.h_v1() * surf_.nodes[qb];
            const double an =
                sign * (e2[static_cast<size_t>(qa)] - v1 * b3[static_cast<size_t>(qa)]);
            const double* tr =
                face_v2_[static_cast<size_t>(side)].data() + idx;
            double fv = 0.0;
            for (int m = 0; m < dim; ++m) fv += c[m] * tr[m];
            fv *= inv_sqrt_jac_f;
            const double w = face_jac_v2 * surf_.weights[qa] * surf_.weights[qb] *
                             fv * std::max(an, 0.0);
            theta1 += w;
            theta3 += w * (v1 * v1 + v2b * v2b);
            idx += static_cast<size_t>(dim);
          }
      }
    }
  }
  return {theta1, theta2, theta3};
}

DiagnosticsRecord Diagnostics::record(const SolutionState& state) const {
  DiagnosticsRecord r;
  r.t = state.time;
  const double length = mesh_->domain().length();
  const PhaseMoments pm = phase_moments(state.f);
  r.mass = pm.mass / length;
  r.K1 = 0.5 * pm.v1_sq / length;
  r.K2 = 0.5 * pm.v2_sq / length;

  const FieldState& s = state.fields;
  auto dot = [](const CellCoefficients& a, const CellCoefficients& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) acc += a.data[i] * b.data[i];
    return acc;
  };
  r.Ee1 = 0.5 * dot(s.e1, s.e1) / length;
  r.Ee2 = 0.5 * dot(s.e2, s.e2) / length;
  r.Em = 0.5 * dot(s.b3, s.b3) / length;
  r.Etot = 2.0 * (r.K1 + r.K2 + r.Ee1 + r.Ee2 + r.Em);
  // P = int xi f + int E x B; the z-reduction leaves (E2 B3, -E1 B3).
  r.P1 = (pm.v1 + dot(s.e2, s.b3)) / length;
  r.P2 = (pm.v2 - dot(s.e1, s.b3)) / length;
  r.L2f = l2_norm(state.f.coeffs);

  const auto th = theta_terms(state);
  r.theta1 = th[0];
  r.theta2 = th[1];
  r.theta3 = th[2];

  for (int n = 1; n <= 4; ++n) {
    r.logFM_E1[static_cast<size_t>(n - 1)] =
        log_fourier_mode(s.e1, s.n_x, s.x_min, s.h_x, n, k0_);
    r.logFM_E2[static_cast<size_t>(n - 1)] =
        log_fourier_mode(s.e2, s.n_x, s.x_min, s.h_x, n, k0_);
    r.logFM_B3[static_cast<size_t>(n - 1)] =
        log_fourier_mode(s.b3, s.n_x, s.x_min, s.h_x, n, k0_);
  }
  return r;
}

}  // namespace vmdg
