#include "vmdg/maxwell.hpp"

#include <cmath>
#include <stdexcept>

namespace vmdg {

const char* to_string(FluxKind kind) {
  switch (kind) {
    case FluxKind::Upwind: return "upwind";
    case FluxKind::Central: return "central";
    case FluxKind::AlternatingEPlusBMinus: return "alternating";
    case FluxKind::AlternatingEMinusBPlus: return "alternating-em-bp";
  }
  return "?";
}

std::pair<double, double> maxwell_flux(FluxKind kind, double e1_lo, double b3_lo,
                                       double e1_hi, double b3_hi) {
  switch (kind) {
    case FluxKind::Upwind:
      // Reduced form of E~ = {E} + [B]_tau/2, B~ = {B} - [E]_tau/2: the
      // tangential jumps collapse onto the E1/B3 pair.
      return {0.5 * (e1_lo + e1_hi) + 0.5 * (b3_hi - b3_lo),
              0.5 * (b3_lo + b3_hi) + 0.5 * (e1_hi - e1_lo)};
    case FluxKind::Central:
      return {0.5 * (e1_lo + e1_hi), 0.5 * (b3_lo + b3_hi)};
    case FluxKind::AlternatingEPlusBMinus:
      return {e1_hi, b3_lo};
    case FluxKind::AlternatingEMinusBPlus:
      return {e1_lo, b3_hi};
  }
  throw std::invalid_argument("unknown flux kind");
}

std::pair<double, double> characteristic_flux_oracle(double e1_lo, double b3_lo,
                                                     double e1_hi, double b3_hi) {
  // w+ = E1 + B3 satisfies dw+/dt = dw+/dx (left-moving), so its upwind
  // value comes from the upper side; w- = E1 - B3 moves right.
  const double w_plus = e1_hi + b3_hi;
  const double w_minus = e1_lo - b3_lo;
  return {0.5 * (w_plus + w_minus), 0.5 * (w_plus - w_minus)};
}

MomentTables::MomentTables(std::shared_ptr<const PhaseMesh> mesh,
                           std::shared_ptr<const ModalBasis> basis,
                           int field_degree)
    : mesh_(std::move(mesh)), basis_(std::move(basis)), degree_(field_degree) {
  const int dim = basis_->dimension();
  const int nv1 = mesh_->n_v1();
  const int nv2 = mesh_->n_v2();
  const QuadratureRule q = gauss_legendre(basis_->degree() + 2);
  const double h1 = mesh_->h_v1();
  const double h2 = mesh_->h_v2();
  const double scale = 0.5 * std::sqrt(h1 * h2);

  // 1D mode integrals against 1 and the affine velocity coordinate.
  const int k = basis_->degree();
  auto line_integrals = [&](double center, double h) {
    std::vector<double> i0(static_cast<size_t>(k) + 1, 0.0);
    std::vector<double> iv(static_cast<size_t>(k) + 1, 0.0);
    for (int b = 0; b <= k; ++b)
      for (int qi = 0; qi < q.size(); ++qi) {
        const double p = ortho1d_value(b, q.nodes[qi]);
        i0[static_cast<size_t>(b)] += q.weights[qi] * p;
        iv[static_cast<size_t>(b)] +=
            q.weights[qi] * p * (center + 0.5 * h * q.nodes[qi]);
      }
    return std::make_pair(i0, iv);
  };

  const size_t n_vc = static_cast<size_t>(nv1) * nv2;
  w0_.resize(n_vc * dim);
  w1_.resize(n_vc * dim);
  w2_.resize(n_vc * dim);
  for (int j1 = 0; j1 < nv1; ++j1) {
    const auto [i0_1, iv_1] = line_integrals(mesh_->v1_center(j1), h1);
    for (int j2 = 0; j2 < nv2; ++j2) {
      const auto [i0_2, iv_2] = line_integrals(mesh_->v2_center(j2), h2);
      const size_t base = (static_cast<size_t>(j1) * nv2 + j2) * dim;
      for (int m = 0; m < dim; ++m) {
        const BasisMode& md = basis_->modes()[static_cast<size_t>(m)];
        w0_[base + static_cast<size_t>(m)] =
            scale * i0_1[static_cast<size_t>(md.b1)] * i0_2[static_cast<size_t>(md.b2)];
        w1_[base + static_cast<size_t>(m)] =
            scale * iv_1[static_cast<size_t>(md.b1)] * i0_2[static_cast<size_t>(md.b2)];
        w2_[base + static_cast<size_t>(m)] =
            scale * i0_1[static_cast<size_t>(md.b1)] * iv_2[static_cast<size_t>(md.b2)];
      }
    }
  }
}

CurrentDensity MomentTables::current(const DistributionState& f) const {
  const PhaseMesh& mesh = *mesh_;
  const int dim = basis_->dimension();
  CurrentDensity out(mesh.n_x(), degree_);
  for (int i = 0; i < mesh.n_x(); ++i) {
    double* j1c = out.j1.cell(i);
    double* j2c = out.j2.cell(i);
    for (int v1 = 0; v1 < mesh.n_v1(); ++v1)
      for (int v2 = 0; v2 < mesh.n_v2(); ++v2) {
        const double* c = f.coeffs.cell(mesh.cell_index(i, v1, v2));
        const size_t base = (static_cast<size_t>(v1) * mesh.n_v2() + v2) *
                            static_cast<size_t>(dim);
        for (int m = 0; m < dim; ++m) {
          const int a = basis_->modes()[static_cast<size_t>(m)].a;
          if (a > degree_) continue;
          j1c[a] += c[m] * w1_[base + static_cast<size_t>(m)];
          j2c[a] += c[m] * w2_[base + static_cast<size_t>(m)];
        }
      }
  }
  return out;
}

CellCoefficients MomentTables::density(const DistributionState& f) const {
  const PhaseMesh& mesh = *mesh_;
  const int dim = basis_->dimension();
  CellCoefficients rho(mesh.n_x(), degree_ + 1);
  for (int i = 0; i < mesh.n_x(); ++i) {
    double* rc = rho.cell(i);
    for (int v1 = 0; v1 < mesh.n_v1(); ++v1)
      for (int v2 = 0; v2 < mesh.n_v2(); ++v2) {
        const double* c = f.coeffs.cell(mesh.cell_index(i, v1, v2));
        const size_t base = (static_cast<size_t>(v1) * mesh.n_v2() + v2) *
                            static_cast<size_t>(dim);
        for (int m = 0; m < dim; ++m) {
          const int a = basis_->modes()[static_cast<size_t>(m)].a;
          if (a > degree_) continue;
          rc[a] += c[m] * w0_[base + static_cast<size_t>(m)];
        }
      }
  }
  return rho;
}

CurrentDensity compute_current(const DistributionState& f, int field_degree) {
  return MomentTables(f.mesh, f.basis, field_degree).current(f);
}

CellCoefficients density_profile(const DistributionState& f) {
  return MomentTables(f.mesh, f.basis, f.basis->degree()).density(f);
}

MaxwellOperator::MaxwellOperator(int n_x, double x_min, double h_x, int degree)
    : n_x_(n_x), x_min_(x_min), h_x_(h_x), degree_(degree) {
  quad_ = gauss_legendre(degree + 2);
  const int nq = quad_.size();
  const int nm = degree + 1;
  psi_.resize(static_cast<size_t>(nq) * nm);
  dpsi_.resize(psi_.size());
  trace_lo_.resize(static_cast<size_t>(nm));
  trace_hi_.resize(static_cast<size_t>(nm));
  for (int q = 0; q < nq; ++q)
    for (int m = 0; m < nm; ++m) {
      psi_[static_cast<size_t>(q) * nm + m] = ortho1d_value(m, quad_.nodes[q]);
      dpsi_[static_cast<size_t>(q) * nm + m] = ortho1d_deriv(m, quad_.nodes[q]);
    }
  for (int m = 0; m < nm; ++m) {
    trace_lo_[static_cast<size_t>(m)] = ortho1d_value(m, -1.0);
    trace_hi_[static_cast<size_t>(m)] = ortho1d_value(m, 1.0);
  }
}

void MaxwellOperator::rhs(const FieldState& fields, const CurrentDensity& current,
                          FluxKind kind, FieldState& out) const {
  const int nm = degree_ + 1;
  const int nq = quad_.size();
  const double inv_jac = 2.0 / h_x_;
  if (out.n_x != n_x_ || out.degree != degree_)
    out = FieldState(n_x_, x_min_, h_x_, degree_);

  // Interface fluxes in reference trace scale; index i is the interface
  // between cell i and cell (i+1) mod n_x (periodic).
  std::vector<double> flux_e(static_cast<size_t>(n_x_));
  std::vector<double> flux_b(static_cast<size_t>(n_x_));
  for (int i = 0; i < n_x_; ++i) {
    const int up = (i + 1) % n_x_;
    double e_lo = 0.0, b_lo = 0.0, e_hi = 0.0, b_hi = 0.0;
    for (int m = 0; m < nm; ++m) {
      e_lo += fields.e1.at(i, m) * trace_hi_[static_cast<size_t>(m)];
      b_lo += fields.b3.at(i, m) * trace_hi_[static_cast<size_t>(m)];
      e_hi += fields.e1.at(up, m) * trace_lo_[static_cast<size_t>(m)];
      b_hi += fields.b3.at(up, m) * trace_lo_[static_cast<size_t>(m)];
    }
    const auto [fe, fb] = maxwell_flux(kind, e_lo, b_lo, e_hi, b_hi);
    flux_e[static_cast<size_t>(i)] = fe;
    flux_b[static_cast<size_t>(i)] = fb;
  }

  std::vector<double> eq(static_cast<size_t>(nq)), bq(static_cast<size_t>(nq));
  for (int i = 0; i < n_x_; ++i) {
    const int lo_iface = (i + n_x_ - 1) % n_x_;
    double* de1 = out.e1.cell(i);
    double* de2 = out.e2.cell(i);
    double* db3 = out.b3.cell(i);
    for (int q = 0; q < nq; ++q) {
      double ev = 0.0, bv = 0.0;
      for (int mm = 0; mm < nm; ++mm) {
        const double p = psi_[static_cast<size_t>(q) * nm + mm];
        ev += fields.e1.at(i, mm) * p;
        bv += fields.b3.at(i, mm) * p;
      }
      eq[static_cast<size_t>(q)] = quad_.weights[q] * ev;
      bq[static_cast<size_t>(q)] = quad_.weights[q] * bv;
    }
    for (int m = 0; m < nm; ++m) {
      double vol_e = 0.0, vol_b = 0.0;
      for (int q = 0; q < nq; ++q) {
        const double dp = dpsi_[static_cast<size_t>(q) * nm + m];
        vol_e += eq[static_cast<size_t>(q)] * dp;
        vol_b += bq[static_cast<size_t>(q)] * dp;
      }
      // dB3/dt = dE1/dx weak form; dE1/dt = dB3/dx - j1; dE2/dt = -j2.
      db3[m] = inv_jac * (-vol_e + flux_e[static_cast<size_t>(i)] * trace_hi_[static_cast<size_t>(m)] -
                          flux_e[static_cast<size_t>(lo_iface)] * trace_lo_[static_cast<size_t>(m)]);
      de1[m] = inv_jac * (-vol_b + flux_b[static_cast<size_t>(i)] * trace_hi_[static_cast<size_t>(m)] -
                          flux_b[static_cast<size_t>(lo_iface)] * trace_lo_[static_cast<size_t>(m)]) -
               current.j1.at(i, m);
      de2[m] = -current.j2.at(i, m);
    }
  }
}

}  // namespace vmdg
