#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vmdg/time_integration.hpp"

using namespace vmdg;

namespace {

std::shared_ptr<const PhaseMesh> cfl_mesh(int scale) {
  // h_x = h_v = 0.12 / scale on a short periodic box.
  Domain1P2V d;
  d.x_min = 0.0;
  d.x_max = 0.48;
  const PhaseMesh m = PhaseMesh::build(d, 4 * scale, 20 * scale, 20 * scale);
  return std::make_shared<PhaseMesh>(m);
}

}  // namespace

TEST_CASE("dt formula with zero fields") {
  const auto mesh = cfl_mesh(1);
  CHECK(mesh->h_x() == doctest::Approx(0.12).epsilon(1e-14));
  const auto basis = testing::make_basis(2);
  RkStepper stepper(mesh, basis, FluxKind::Upwind, StepControl{});
  SolutionState state;
  state.f = DistributionState(mesh, basis);
  state.fields = FieldState(mesh->n_x(), 0.0, mesh->h_x(), 2);
  // 0.19 / ((1.2 + 0 + 0 + 1) / 0.12)
  CHECK(stepper.compute_dt(state) ==
        doctest::Approx(0.19 * 0.12 / 2.2).epsilon(1e-12));

  SUBCASE("doubling all mesh counts halves dt") {
    const auto fine = cfl_mesh(2);
    RkStepper fine_stepper(fine, basis, FluxKind::Upwind, StepControl{});
    SolutionState fs;
    fs.f = DistributionState(fine, basis);
    fs.fields = FieldState(fine->n_x(), 0.0, fine->h_x(), 2);
    CHECK(fine_stepper.compute_dt(fs) ==
          doctest::Approx(0.5 * stepper.compute_dt(state)).epsilon(1e-12));
  }

  SUBCASE("fixed_dt wins") {
    StepControl ctl;
    ctl.fixed_dt = 1e-3;
    RkStepper fixed(mesh, basis, FluxKind::Upwind, ctl);
    CHECK(fixed.compute_dt(state) == 1e-3);
  }
}

TEST_CASE("degree-3 runs cap dt superlinearly") {
  const auto mesh = cfl_mesh(1);
  const auto basis = testing::make_basis(3);
  StepControl ctl;
  ctl.k3_coeff = 1e-4;  // force the cap to bind
  RkStepper stepper(mesh, basis, FluxKind::Upwind, ctl);
  SolutionState state;
  state.f = DistributionState(mesh, basis);
  state.fields = FieldState(mesh->n_x(), 0.0, mesh->h_x(), 3);
  CHECK(stepper.compute_dt(state) ==
        doctest::Approx(1e-4 * std::pow(0.12, 4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("RK3 coefficient structure") {
  CHECK(kRk3Blend1[0] + kRk3Blend1[1] == 1.0);
  CHECK(kRk3Blend2[0] + kRk3Blend2[1] == 1.0);

  SUBCASE("linear ODE reproduces the cubic Taylor polynomial") {
    const double lambda = -0.37;
    const double dt = 0.21;
    const double z = lambda * dt;
    const double got =
        rk3_scalar_step(1.0, 0.0, dt, [&](double u, double) { return lambda * u; });
    const double want = 1.0 + z + z * z / 2 + z * z * z / 6;
    CHECK(got == doctest::Approx(want).epsilon(1e-15));
  }

  SUBCASE("u' = u^2 converges at third order") {
    auto solve = [](double dt) {
      double u = 0.5, t = 0.0;
      const int n = static_cast<int>(std::round(1.0 / dt));
      for (int i = 0; i < n; ++i) {
        u = rk3_scalar_step(u, t, dt, [](double v, double) { return v * v; });
        t += dt;
      }
      return std::abs(u - 1.0);  // u(t) = 0.5/(1 - 0.5 t) -> u(1) = 1
    };
    const double e1 = solve(0.02);
    const double e2 = solve(0.01);
    const double order = std::log2(e1 / e2);
    CHECK(order == doctest::Approx(3.0).epsilon(0.05 / 3.0));
  }
}

TEST_CASE("zero right-hand side leaves the state bitwise unchanged") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(1);
  RkStepper stepper(mesh, basis, FluxKind::Upwind, StepControl{});
  SolutionState state;
  state.f = DistributionState(mesh, basis);
  state.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 1);
  SolutionState before = state;
  stepper.step(state, 0.1);
  CHECK(testing::max_abs_diff(state.f.coeffs, before.f.coeffs) == 0.0);
  CHECK(testing::max_abs_diff(state.fields.b3, before.fields.b3) == 0.0);
  CHECK(testing::max_abs_diff(state.fields.e1, before.fields.e1) == 0.0);
  CHECK(state.time == doctest::Approx(0.1));
}

TEST_CASE("one CFL step conserves mass and does not grow the L2 norm") {
  RunConfig cfg;
  cfg.n_x = cfg.n_v1 = cfg.n_v2 = 16;
  cfg.degree = 2;
  cfg.threads = 1;
  Simulation sim(cfg);
  const DiagnosticsRecord before = sim.diagnostics();
  sim.advance(sim.compute_dt());
  const DiagnosticsRecord after = sim.diagnostics();
  // Theta1 is ~1e-36 here, so any drift is pure roundoff accumulation.
  CHECK(std::abs(after.mass - before.mass) <= 1e-13 * before.mass);
  CHECK(after.L2f <= before.L2f * (1.0 + 1e-10));
}

TEST_CASE("NaN during a step reports the stage") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(1);
  RkStepper stepper(mesh, basis, FluxKind::Upwind, StepControl{});
  SolutionState state;
  state.f = DistributionState(mesh, basis);
  state.f.coeffs.at(0, 0) = std::numeric_limits<double>::infinity();
  state.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 1);
  CHECK_THROWS_AS(stepper.step(state, 0.1), std::runtime_error);
}
