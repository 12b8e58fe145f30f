#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vmdg/scenario.hpp"
#include "vmdg/vlasov.hpp"

using namespace vmdg;

TEST_CASE("parameter presets") {
  const WeibelParams c1 = weibel_choice1();
  CHECK(c1.delta == 0.5);
  CHECK(c1.v01 == 0.3);
  CHECK(c1.v02 == 0.3);
  CHECK(c1.k0 == 0.2);
  CHECK(c1.beta == 0.01);
  CHECK(c1.b == 0.001);
  const WeibelParams c2 = weibel_choice2();
  CHECK(c2.delta == doctest::Approx(1.0 / 6.0));
  CHECK(c2.v01 == 0.5);
  CHECK(c2.v02 == 0.1);
  CHECK(c2.k0 == 0.2);
}

TEST_CASE("initial f0 is normalized per unit length") {
  // int f0 dxi = 1, so the unrescaled mass approaches L_y.
  RunConfig cfg;
  cfg.n_x = 4;
  cfg.n_v1 = cfg.n_v2 = 48;
  cfg.degree = 2;
  cfg.threads = 1;
  Simulation sim(cfg);
  const double length = sim.mesh()->domain().length();
  const double mass = sim.diag().mass(sim.state().f);
  CHECK(std::abs(mass - length) <= 1e-10 * length);
}

TEST_CASE("choice-1 symmetry kills the projected current") {
  const auto mesh = testing::make_mesh(2, 16);
  const auto basis = testing::make_basis(2);
  DistributionState f(mesh, basis);
  f.coeffs = project(weibel_initial(weibel_choice1()).f0, *mesh, *basis, 6);
  const CurrentDensity j = compute_current(f, 2);
  CHECK(l2_norm(j.j1) <= 1e-12 * l2_norm(f.coeffs));
}

TEST_CASE("unperturbed beams are a discrete near-equilibrium") {
  // With b = 0 the continuous state is steady; the discrete residual is
  // bounded by the projection error scaled by the transport speeds.
  WeibelParams p = weibel_choice1();
  p.b = 0.0;
  const auto ic = weibel_initial(p);
  double residuals[2];
  double bounds[2];
  int idx = 0;
  for (int n : {12, 24}) {
    const auto mesh = testing::make_mesh(2, n);
    const auto basis = testing::make_basis(2);
    DistributionState f(mesh, basis);
    f.coeffs = project(ic.f0, *mesh, *basis, 6);
    FieldState fields(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 2);
    VlasovOperator op(mesh, basis);
    CellCoefficients rhs;
    op.rhs(f, fields, rhs);
    residuals[idx] = l2_norm(rhs);
    const double proj_err = l2_error_phase(f, ic.f0, 8);
    bounds[idx] = proj_err * 1.2 / std::min(mesh->h_v1(), mesh->h_x());
    ++idx;
  }
  CHECK(residuals[0] <= 60.0 * bounds[0]);
  CHECK(residuals[1] <= 60.0 * bounds[1]);
  CHECK(residuals[1] < residuals[0]);
}

TEST_CASE("time reversal setup") {
  const auto mesh = testing::make_mesh(4, 8);
  const auto basis = testing::make_basis(2);
  SolutionState s;
  s.f = testing::random_distribution(mesh, basis, 17);
  s.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 2);
  for (double& v : s.fields.b3.data) v = 0.25;
  for (double& v : s.fields.e1.data) v = -0.5;
  s.time = 3.0;

  SUBCASE("applying the map twice restores the state bitwise") {
    const SolutionState twice = time_reversal_setup(time_reversal_setup(s));
    CHECK(testing::max_abs_diff(twice.f.coeffs, s.f.coeffs) == 0.0);
    CHECK(testing::max_abs_diff(twice.fields.b3, s.fields.b3) == 0.0);
    CHECK(testing::max_abs_diff(twice.fields.e1, s.fields.e1) == 0.0);
  }

  SUBCASE("E is kept and B negated") {
    const SolutionState r = time_reversal_setup(s);
    CHECK(r.fields.e1.at(0, 0) == -0.5);
    CHECK(r.fields.b3.at(0, 0) == -0.25);
  }
}

TEST_CASE("zero-length reversal round trip stays at roundoff") {
  RunConfig cfg;
  cfg.n_x = 4;
  cfg.n_v1 = cfg.n_v2 = 8;
  cfg.degree = 2;
  cfg.threads = 1;
  Simulation sim(cfg);
  // Reverse immediately: the state must equal the projection of the
  // reflected initial data.
  const auto ic = weibel_initial(cfg.weibel);
  SolutionState reversed = time_reversal_setup(sim.state());
  DistributionState expected(sim.mesh(), sim.basis());
  expected.coeffs = project(
      [&](double x, double v1, double v2) { return ic.f0(x, -v1, -v2); },
      *sim.mesh(), *sim.basis(), cfg.degree + 4);
  const double scale = l2_norm(expected.coeffs);
  CHECK(testing::max_abs_diff(reversed.f.coeffs, expected.coeffs) <=
        1e-11 * scale);
}

TEST_CASE("vacuum standing wave satisfies the reduced system") {
  // d/dt B3 = dx E1 and d/dt E1 = dx B3 for the implemented pair.
  const double kappa = 0.2;
  const double dx = 1e-6, dt = 1e-6;
  for (double x : {0.3, 2.0, 7.1})
    for (double t : {0.2, 1.7}) {
      const double dbdt =
          (vacuum_b3_exact(kappa, x, t + dt) - vacuum_b3_exact(kappa, x, t - dt)) /
          (2 * dt);
      const double dedx =
          (vacuum_e1_exact(kappa, x + dx, t) - vacuum_e1_exact(kappa, x - dx, t)) /
          (2 * dx);
      CHECK(dbdt == doctest::Approx(dedx).epsilon(1e-6));
      const double dedt =
          (vacuum_e1_exact(kappa, x, t + dt) - vacuum_e1_exact(kappa, x, t - dt)) /
          (2 * dt);
      const double dbdx =
          (vacuum_b3_exact(kappa, x + dx, t) - vacuum_b3_exact(kappa, x - dx, t)) /
          (2 * dx);
      CHECK(dedt == doctest::Approx(dbdx).epsilon(1e-6));
    }
}

TEST_CASE("free stream exact solution is the periodic translate") {
  const double k0 = 0.2, vmax = 1.2, L = 2 * M_PI / k0;
  const auto ic = free_stream_initial(k0, vmax);
  CHECK(free_stream_exact(k0, vmax, 1.0, 0.3, 0.5, 0.0, L) ==
        doctest::Approx(ic.f0(1.0, 0.3, 0.5)).epsilon(1e-14));
  // Translation by a full period returns the initial value.
  CHECK(free_stream_exact(k0, vmax, 1.0, 0.3, 0.5, L / 0.5, L) ==
        doctest::Approx(ic.f0(1.0, 0.3, 0.5)).epsilon(1e-9));
}
