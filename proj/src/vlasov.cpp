#include "vmdg/vlasov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "vmdg/parallel.hpp"

namespace vmdg {

namespace {
constexpr int kMaxPts = 8;  // supports degree <= 6 at the default k+2 rule

int check_pts(int pts) {
  if (pts < 1 || pts > kMaxPts)
    throw std::invalid_argument("quadrature points per direction out of range");
  return pts;
}
}  // namespace

std::array<double, 2> ForceField::operator()(double x, double v1,
                                             double v2) const {
  const FieldState& s = *fields;
  int i = static_cast<int>((x - s.x_min) / s.h_x);
  i = std::min(std::max(i, 0), s.n_x - 1);
  const double u = 2.0 * (x - (s.x_min + (i + 0.5) * s.h_x)) / s.h_x;
  const double inv_sqrt_jac = 1.0 / std::sqrt(0.5 * s.h_x);
  double e1 = 0.0, e2 = 0.0, b3 = 0.0;
  for (int m = 0; m < s.modes(); ++m) {
    const double p = ortho1d_value(m, u) * inv_sqrt_jac;
    e1 += s.e1.at(i, m) * p;
    e2 += s.e2.at(i, m) * p;
    b3 += s.b3.at(i, m) * p;
  }
  return {e1 + v2 * b3, e2 - v1 * b3};
}

struct VlasovOperator::FieldNodalValues {
  // Physical field values at the per-cell x quadrature nodes.
  std::vector<double> e1_vol, e2_vol, b3_vol;
  std::vector<double> e1_surf, e2_surf, b3_surf;
};

VlasovOperator::VlasovOperator(std::shared_ptr<const PhaseMesh> mesh,
                               std::shared_ptr<const ModalBasis> basis,
                               int volume_pts, int surface_pts)
    : mesh_(std::move(mesh)), basis_(std::move(basis)) {
  const int k = basis_->degree();
  nq_vol_ = check_pts(volume_pts > 0 ? volume_pts : k + 2);
  nq_surf_ = check_pts(surface_pts > 0 ? surface_pts : k + 2);
  quad_vol_ = gauss_legendre(nq_vol_);
  quad_surf_ = gauss_legendre(nq_surf_);

  const int dim = basis_->dimension();
  const int nv = nq_vol_;
  phi_.resize(static_cast<size_t>(nv) * nv * nv * dim);
  grad_x_.resize(phi_.size());
  grad_v1_.resize(phi_.size());
  grad_v2_.resize(phi_.size());
  size_t idx = 0;
  for (int qx = 0; qx < nv; ++qx)
    for (int q1 = 0; q1 < nv; ++q1)
      for (int q2 = 0; q2 < nv; ++q2)
        for (int m = 0; m < dim; ++m, ++idx) {
          const double u = quad_vol_.nodes[qx];
          const double w1 = quad_vol_.nodes[q1];
          const double w2 = quad_vol_.nodes[q2];
          phi_[idx] = basis_->eval(m, u, w1, w2);
          const auto g = basis_->grad(m, u, w1, w2);
          grad_x_[idx] = g[0];
          grad_v1_[idx] = g[1];
          grad_v2_[idx] = g[2];
        }

  // Face traces. Node layout per axis: X faces run over (w1, w2), V1 faces
  // over (u, w2), V2 faces over (u, w1); both tangential loops use the
  // surface rule.
  const int ns = nq_surf_;
  for (int axis = 0; axis < 3; ++axis)
    for (int side = 0; side < 2; ++side) {
      auto& tab = face_phi_[static_cast<size_t>(axis)][static_cast<size_t>(side)];
      tab.resize(static_cast<size_t>(ns) * ns * dim);
      const double fixed = side == 0 ? -1.0 : 1.0;
      size_t fidx = 0;
      for (int qa = 0; qa < ns; ++qa)
        for (int qb = 0; qb < ns; ++qb)
          for (int m = 0; m < dim; ++m, ++fidx) {
            const double sa = quad_surf_.nodes[qa];
            const double sb = quad_surf_.nodes[qb];
            double u, w1, w2;
            if (axis == 0) {
              u = fixed, w1 = sa, w2 = sb;
            } else if (axis == 1) {
              u = sa, w1 = fixed, w2 = sb;
            } else {
              u = sa, w1 = sb, w2 = fixed;
            }
            tab[fidx] = basis_->eval(m, u, w1, w2);
          }
    }
}

void VlasovOperator::tabulate_field(const FieldState& fields,
                                    FieldNodalValues& out) const {
  const int nx = mesh_->n_x();
  const double inv_sqrt_jac = 1.0 / std::sqrt(0.5 * fields.h_x);
  auto fill = [&](const QuadratureRule& q, std::vector<double>& e1,
                  std::vector<double>& e2, std::vector<double>& b3) {
    const int nq = q.size();
    e1.assign(static_cast<size_t>(nx) * nq, 0.0);
    e2.assign(static_cast<size_t>(nx) * nq, 0.0);
    b3.assign(static_cast<size_t>(nx) * nq, 0.0);
    for (int i = 0; i < nx; ++i)
      for (int qx = 0; qx < nq; ++qx) {
        double ve1 = 0.0, ve2 = 0.0, vb3 = 0.0;
        for (int m = 0; m < fields.modes(); ++m) {
          const double p = ortho1d_value(m, q.nodes[qx]);
          ve1 += fields.e1.at(i, m) * p;
          ve2 += fields.e2.at(i, m) * p;
          vb3 += fields.b3.at(i, m) * p;
        }
        const size_t at = static_cast<size_t>(i) * nq + qx;
        e1[at] = ve1 * inv_sqrt_jac;
        e2[at] = ve2 * inv_sqrt_jac;
        b3[at] = vb3 * inv_sqrt_jac;
      }
  };
  fill(quad_vol_, out.e1_vol, out.e2_vol, out.b3_vol);
  fill(quad_surf_, out.e1_surf, out.e2_surf, out.b3_surf);
}

void VlasovOperator::cell_rhs(const DistributionState& f,
                              const FieldNodalValues& fv, int cell,
                              double* out) const {
  const PhaseMesh& mesh = *mesh_;
  const int dim = basis_->dimension();
  const auto [i, j1, j2] = mesh.cell_coords(cell);
  const double* c = f.coeffs.cell(cell);

  const double fac_x = 2.0 / mesh.h_x();
  const double fac_1 = 2.0 / mesh.h_v1();
  const double fac_2 = 2.0 / mesh.h_v2();
  const double v1c = mesh.v1_center(j1);
  const double v2c = mesh.v2_center(j2);

  for (int m = 0; m < dim; ++m) out[m] = 0.0;

  // Volume transport: f * (v2 dg/dx + a1 dg/dv1 + a2 dg/dv2).
  {
    const int nq = nq_vol_;
    const double* nd = quad_vol_.nodes.data();
    const double* wt = quad_vol_.weights.data();
    size_t idx = 0;
    for (int qx = 0; qx < nq; ++qx) {
      const size_t xat = static_cast<size_t>(i) * nq + qx;
      const double e1 = fv.e1_vol[xat];
      const double e2 = fv.e2_vol[xat];
      const double b3 = fv.b3_vol[xat];
      for (int q1 = 0; q1 < nq; ++q1) {
        const double v1 = v1c + 0.5 * mesh.h_v1() * nd[q1];
        const double w01 = wt[qx] * wt[q1];
        for (int q2 = 0; q2 < nq; ++q2) {
          const double v2 = v2c + 0.5 * mesh.h_v2() * nd[q2];
          const double* p = phi_.data() + idx;
          double fq = 0.0;
          for (int m = 0; m < dim; ++m) fq += c[m] * p[m];
          const double w = w01 * wt[q2] * fq;
          const double tx = w * v2 * fac_x;
          const double t1 = w * (e1 + v2 * b3) * fac_1;
          const double t2 = w * (e2 - v1 * b3) * fac_2;
          const double* gx = grad_x_.data() + idx;
          const double* g1 = grad_v1_.data() + idx;
          const double* g2 = grad_v2_.data() + idx;
          for (int m = 0; m < dim; ++m)
            out[m] += tx * gx[m] + t1 * g1[m] + t2 * g2[m];
          idx += static_cast<size_t>(dim);
        }
      }
    }
  }

  // Surface fluxes. Edge fluxes are always formed in the +axis orientation
  // from (lower trace, upper trace, signed speed), so the two adjacent cells
  // compute bitwise-identical values and interior contributions telescope.
  const int ns = nq_surf_;
  const double* snd = quad_surf_.nodes.data();
  const double* swt = quad_surf_.weights.data();
  const auto& fx = face_phi_[0];
  const auto& f1 = face_phi_[1];
  const auto& f2 = face_phi_[2];

  // x faces: nodes (w1, w2), speed v2, periodic neighbors.
  {
    const double* c_lo = f.coeffs.cell(mesh.cell_index(mesh.x_neighbor(i, -1), j1, j2));
    const double* c_hi = f.coeffs.cell(mesh.cell_index(mesh.x_neighbor(i, +1), j1, j2));
    size_t fidx = 0;
    for (int qa = 0; qa < ns; ++qa)
      for (int qb = 0; qb < ns; ++qb) {
        const double speed = v2c + 0.5 * mesh.h_v2() * snd[qb];
        const double w = swt[qa] * swt[qb] * fac_x;
        const double* plo = fx[0].data() + fidx;  // trace at u = -1
        const double* pup = fx[1].data() + fidx;  // trace at u = +1
        double f_m = 0.0, f_own_lo = 0.0, f_own_hi = 0.0, f_p = 0.0;
        for (int m = 0; m < dim; ++m) {
          f_own_lo += c[m] * plo[m];
          f_own_hi += c[m] * pup[m];
          f_m += c_lo[m] * pup[m];  // left neighbor's upper trace
          f_p += c_hi[m] * plo[m];  // right neighbor's lower trace
        }
        const double flux_lo = upwind_scalar_flux(f_m, f_own_lo, speed);
        const double flux_hi = upwind_scalar_flux(f_own_hi, f_p, speed);
        for (int m = 0; m < dim; ++m)
          out[m] += w * (flux_lo * plo[m] - flux_hi * pup[m]);
        fidx += static_cast<size_t>(dim);
      }
  }

  // v1 faces: nodes (u, w2), speed a1 = E1 + v2 B3.
  {
    const bool lo_bnd = (j1 == 0);
    const bool hi_bnd = (j1 == mesh.n_v1() - 1);
    const double* c_lo = lo_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1 - 1, j2));
    const double* c_hi = hi_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1 + 1, j2));
    size_t fidx = 0;
    for (int qa = 0; qa < ns; ++qa) {
      const size_t xat = static_cast<size_t>(i) * ns + qa;
      const double e1 = fv.e1_surf[xat];
      const double b3 = fv.b3_surf[xat];
      for (int qb = 0; qb < ns; ++qb) {
        const double v2 = v2c + 0.5 * mesh.h_v2() * snd[qb];
        const double speed = e1 + v2 * b3;
        const double w = swt[qa] * swt[qb] * fac_1;
        const double* plo = f1[0].data() + fidx;
        const double* pup = f1[1].data() + fidx;
        double f_m = 0.0, f_own_lo = 0.0, f_own_hi = 0.0, f_p = 0.0;
        for (int m = 0; m < dim; ++m) {
          f_own_lo += c[m] * plo[m];
          f_own_hi += c[m] * pup[m];
          if (c_lo) f_m += c_lo[m] * pup[m];
          if (c_hi) f_p += c_hi[m] * plo[m];
        }
        const double flux_lo = lo_bnd ? -velocity_boundary_flux(f_own_lo, -speed)
                                      : upwind_scalar_flux(f_m, f_own_lo, speed);
        const double flux_hi = hi_bnd ? velocity_boundary_flux(f_own_hi, speed)
                                      : upwind_scalar_flux(f_own_hi, f_p, speed);
        for (int m = 0; m < dim; ++m)
          out[m] += w * (flux_lo * plo[m] - flux_hi * pup[m]);
        fidx += static_cast<size_t>(dim);
      }
    }
  }

  // v2 faces: nodes (u, w1), speed a2 = E2 - v1 B3.
  {
    const bool lo_bnd = (j2 == 0);
    const bool hi_bnd = (j2 == mesh.n_v2() - 1);
    const double* c_lo = lo_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1, j2 - 1));
    const double* c_hi = hi_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1, j2 + 1));
    size_t fidx = 0;
    for (int qa = 0; qa < ns; ++qa) {
      const size_t xat = static_cast<size_t>(i) * ns + qa;
      const double e2 = fv.e2_surf[xat];
      const double b3 = fv.b3_surf[xat];
      for (int qb = 0; qb < ns; ++qb) {
        const double v1 = v1c + 0.5 * mesh.h_v1() * snd[qb];
        const double speed = e2 - v1 * b3;
        const double w = swt[qa] * swt[qb] * fac_2;
        const double* plo = f2[0].data() + fidx;
        const double* pup = f2[1].data() + fidx;
        double f_m = 0.0, f_own_lo = 0.0, f_own_hi = 0.0, f_p = 0.0;
        for (int m = 0; m < dim; ++m) {
          f_own_lo += c[m] * plo[m];
          f_own_hi += c[m] * pup[m];
          if (c_lo) f_m += c_lo[m] * pup[m];
          if (c_hi) f_p += c_hi[m] * plo[m];
        }
        const double flux_lo = lo_bnd ? -velocity_boundary_flux(f_own_lo, -speed)
                                      : upwind_scalar_flux(f_m, f_own_lo, speed);
        const double flux_hi = hi_bnd ? velocity_boundary_flux(f_own_hi, speed)
                                      : upwind_scalar_flux(f_own_hi, f_p, speed);
        for (int m = 0; m < dim; ++m)
          out[m] += w * (flux_lo * plo[m] - flux_hi * pup[m]);
        fidx += static_cast<size_t>(dim);
      }
    }
  }
}

void VlasovOperator::rhs(const DistributionState& f, const FieldState& fields,
                         CellCoefficients& out, int n_threads) const {
  const int dim = basis_->dimension();
  for (int c = 0; c < f.coeffs.n_cells; ++c) {
    const double* cc = f.coeffs.cell(c);
    for (int m = 0; m < dim; ++m)
      if (!std::isfinite(cc[m])) {
        const auto [i, j1, j2] = mesh_->cell_coords(c);
        throw std::runtime_error(
            "non-finite distribution coefficient in cell (" + std::to_string(i) +
            ", " + std::to_string(j1) + ", " + std::to_string(j2) + "), mode " +
            std::to_string(m));
      }
  }
  if (!all_finite(fields))
    throw std::runtime_error("non-finite field coefficients");

  FieldNodalValues fv;
  tabulate_field(fields, fv);
  if (out.n_cells != f.coeffs.n_cells || out.n_modes != dim)
    out = CellCoefficients(f.coeffs.n_cells, dim);
  parallel_for(mesh_->n_cells(), n_threads, [&](int begin, int end) {
    for (int c = begin; c < end; ++c) cell_rhs(f, fv, c, out.cell(c));
  });
}

VlasovOperator::Dissipation VlasovOperator::dissipation(
    const DistributionState& f, const FieldState& fields) const {
  const PhaseMesh& mesh = *mesh_;
  const int dim = basis_->dimension();
  FieldNodalValues fv;
  tabulate_field(fields, fv);
  const int ns = nq_surf_;
  const double* snd = quad_surf_.nodes.data();
  const double* swt = quad_surf_.weights.data();
  const double fac_x = 2.0 / mesh.h_x();
  const double fac_1 = 2.0 / mesh.h_v1();
  const double fac_2 = 2.0 / mesh.h_v2();

  Dissipation d;
  for (int cell = 0; cell < mesh.n_cells(); ++cell) {
    const auto [i, j1, j2] = mesh.cell_coords(cell);
    const double* c = f.coeffs.cell(cell);
    const double v1c = mesh.v1_center(j1);
    const double v2c = mesh.v2_center(j2);

    // Upper x face of every cell (periodic: each x edge visited once).
    {
      const double* c_hi =
          f.coeffs.cell(mesh.cell_index(mesh.x_neighbor(i, +1), j1, j2));
      const auto& tab = face_phi_[0];
      size_t fidx = 0;
      for (int qa = 0; qa < ns; ++qa)
        for (int qb = 0; qb < ns; ++qb) {
          const double speed = v2c + 0.5 * mesh.h_v2() * snd[qb];
          double fl = 0.0, fr = 0.0;
          for (int m = 0; m < dim; ++m) {
            fl += c[m] * tab[1][fidx + static_cast<size_t>(m)];
            fr += c_hi[m] * tab[0][fidx + static_cast<size_t>(m)];
          }
          const double jump = fl - fr;
          d.x_edges += fac_x * swt[qa] * swt[qb] * std::abs(speed) * jump * jump;
          fidx += static_cast<size_t>(dim);
        }
    }

    // v1 faces: upper interior edges, plus both box boundaries.
    {
      const auto& tab = face_phi_[1];
      const bool hi_bnd = (j1 == mesh.n_v1() - 1);
      const double* c_hi =
          hi_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1 + 1, j2));
      size_t fidx = 0;
      for (int qa = 0; qa < ns; ++qa) {
        const size_t xat = static_cast<size_t>(i) * ns + qa;
        const double e1 = fv.e1_surf[xat];
        const double b3 = fv.b3_surf[xat];
        for (int qb = 0; qb < ns; ++qb) {
          const double v2 = v2c + 0.5 * mesh.h_v2() * snd[qb];
          const double speed = e1 + v2 * b3;
          const double w = fac_1 * swt[qa] * swt[qb] * std::abs(speed);
          double fl = 0.0, fr = 0.0, flo = 0.0;
          for (int m = 0; m < dim; ++m) {
            fl += c[m] * tab[1][fidx + static_cast<size_t>(m)];
            if (c_hi) fr += c_hi[m] * tab[0][fidx + static_cast<size_t>(m)];
            if (j1 == 0) flo += c[m] * tab[0][fidx + static_cast<size_t>(m)];
          }
          if (hi_bnd)
            d.v_boundary += w * fl * fl;
          else
            d.v_interior += w * (fl - fr) * (fl - fr);
          if (j1 == 0) d.v_boundary += w * flo * flo;
          fidx += static_cast<size_t>(dim);
        }
      }
    }

    // v2 faces, same pattern.
    {
      const auto& tab = face_phi_[2];
      const bool hi_bnd = (j2 == mesh.n_v2() - 1);
      const double* c_hi =
          hi_bnd ? nullptr : f.coeffs.cell(mesh.cell_index(i, j1, j2 + 1));
      size_t fidx = 0;
      for (int qa = 0; qa < ns; ++qa) {
        const size_t xat = static_cast<size_t>(i) * ns + qa;
        const double e2 = fv.e2_surf[xat];
        const double b3 = fv.b3_surf[xat];
        for (int qb = 0; qb < ns; ++qb) {
          const double v1 = v1c + 0.5 * mesh.h_v1() * snd[qb];
          const double speed = e2 - v1 * b3;
          const double w = fac_2 * swt[qa] * swt[qb] * std::abs(speed);
          double fl = 0.0, fr = 0.0, flo = 0.0;
          for (int m = 0; m < dim; ++m) {
            fl += c[m] * tab[1][fidx + static_cast<size_t>(m)];
            if (c_hi) fr += c_hi[m] * tab[0][fidx + static_cast<size_t>(m)];
            if (j2 == 0) flo += c[m] * tab[0][fidx + static_cast<size_t>(m)];
          }
          if (hi_bnd)
            d.v_boundary += w * fl * fl;
          else
            d.v_interior += w * (fl - fr) * (fl - fr);
          if (j2 == 0) d.v_boundary += w * flo * flo;
          fidx += static_cast<size_t>(dim);
        }
      }
    }
  }
  return d;
}

}  // namespace vmdg
