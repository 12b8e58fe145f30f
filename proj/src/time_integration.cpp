#include "vmdg/time_integration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vmdg {

RkStepper::RkStepper(std::shared_ptr<const PhaseMesh> mesh,
                     std::shared_ptr<const ModalBasis> basis, FluxKind flux,
                     StepControl control, int n_threads, bool evolve_fields)
    : mesh_(mesh),
      basis_(basis),
      flux_(flux),
      control_(control),
      n_threads_(n_threads),
      evolve_fields_(evolve_fields),
      vlasov_(mesh, basis),
      maxwell_(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), basis->degree()),
      moments_(mesh, basis, basis->degree()) {}

double RkStepper::compute_dt(const SolutionState& state) const {
  if (control_.fixed_dt) return *control_.fixed_dt;
  const PhaseMesh& mesh = *mesh_;
  const Domain1P2V& d = mesh.domain();
  const double lam_x = std::max(std::abs(d.v2_min), std::abs(d.v2_max));
  const double v1_bound = std::max(std::abs(d.v1_min), std::abs(d.v1_max));
  const double v2_bound = lam_x;

  // Field maxima at the x quadrature nodes.
  const QuadratureRule q = gauss_legendre(basis_->degree() + 2);
  const FieldState& s = state.fields;
  const double inv_sqrt_jac = 1.0 / std::sqrt(0.5 * s.h_x);
  double lam_v1 = 0.0, lam_v2 = 0.0;
  for (int i = 0; i < s.n_x; ++i)
    for (int qi = 0; qi < q.size(); ++qi) {
      double e1 = 0.0, e2 = 0.0, b3 = 0.0;
      for (int m = 0; m < s.modes(); ++m) {
        const double p = ortho1d_value(m, q.nodes[qi]) * inv_sqrt_jac;
        e1 += s.e1.at(i, m) * p;
        e2 += s.e2.at(i, m) * p;
        b3 += s.b3.at(i, m) * p;
      }
      lam_v1 = std::max(lam_v1, std::abs(e1) + v2_bound * std::abs(b3));
      lam_v2 = std::max(lam_v2, std::abs(e2) + v1_bound * std::abs(b3));
    }

  double dt = control_.cfl / (lam_x / mesh.h_x() + lam_v1 / mesh.h_v1() +
                              lam_v2 / mesh.h_v2() + 1.0 / mesh.h_x());
  if (basis_->degree() == 3)
    dt = std::min(dt, control_.k3_coeff * std::pow(mesh.h_x(), 4.0 / 3.0));
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::runtime_error("non-positive or non-finite time step");
  return dt;
}

void RkStepper::eval_rhs(const SolutionState& state, CellCoefficients& df,
                         FieldState& dfields) const {
  vlasov_.rhs(state.f, state.fields, df, n_threads_);
  if (evolve_fields_) {
    const CurrentDensity current = moments_.current(state.f);
    maxwell_.rhs(state.fields, current, flux_, dfields);
  } else {
    if (dfields.n_x != state.fields.n_x || dfields.degree != state.fields.degree)
      dfields = FieldState(state.fields.n_x, state.fields.x_min,
                           state.fields.h_x, state.fields.degree);
    dfields.e1.set_zero();
    dfields.e2.set_zero();
    dfields.b3.set_zero();
  }
}

void RkStepper::step(SolutionState& state, double dt) const {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  CellCoefficients df;
  FieldState dfields;
  auto check = [&](const SolutionState& s, int stage) {
    if (!all_finite(s.f.coeffs) || !all_finite(s.fields))
      throw std::runtime_error("non-finite state after RK stage " +
                               std::to_string(stage));
  };

  // Stage 1: G1 = Gn + dt R(Gn)
  eval_rhs(state, df, dfields);
  SolutionState g1 = state;
  axpby(1.0, g1.f.coeffs, dt, df);
  axpby(1.0, g1.fields, dt, dfields);
  check(g1, 1);

  // Stage 2: G2 = 3/4 Gn + 1/4 (G1 + dt R(G1)), stored in g1
  eval_rhs(g1, df, dfields);
  axpby(kRk3Blend1[1], g1.f.coeffs, kRk3Blend1[0], state.f.coeffs);
  axpby(kRk3Blend1[1], g1.fields, kRk3Blend1[0], state.fields);
  axpby(1.0, g1.f.coeffs, kRk3Blend1[1] * dt, df);
  axpby(1.0, g1.fields, kRk3Blend1[1] * dt, dfields);
  check(g1, 2);

  // Stage 3: Gn+1 = 1/3 Gn + 2/3 (G2 + dt R(G2))
  eval_rhs(g1, df, dfields);
  axpby(kRk3Blend2[0], state.f.coeffs, kRk3Blend2[1], g1.f.coeffs);
  axpby(kRk3Blend2[0], state.fields, kRk3Blend2[1], g1.fields);
  axpby(1.0, state.f.coeffs, kRk3Blend2[1] * dt, df);
  axpby(1.0, state.fields, kRk3Blend2[1] * dt, dfields);
  check(state, 3);

  state.time += dt;
}

}  // namespace vmdg
