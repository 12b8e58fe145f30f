#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "vmdg/diagnostics.hpp"

using namespace vmdg;

namespace {

SolutionState projected_state(std::shared_ptr<const PhaseMesh> mesh,
                              std::shared_ptr<const ModalBasis> basis,
                              const InitialCondition& ic, int pts) {
  SolutionState s;
  s.f = DistributionState(mesh, basis);
  s.f.coeffs = project(ic.f0, *mesh, *basis, pts);
  s.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(),
                        basis->degree());
  s.fields.e1 = project_1d(ic.e1, mesh->n_x(), mesh->domain().x_min,
                           mesh->h_x(), basis->degree(), pts);
  s.fields.e2 = project_1d(ic.e2, mesh->n_x(), mesh->domain().x_min,
                           mesh->h_x(), basis->degree(), pts);
  s.fields.b3 = project_1d(ic.b3, mesh->n_x(), mesh->domain().x_min,
                           mesh->h_x(), basis->degree(), pts);
  return s;
}

}  // namespace

TEST_CASE("all-zero state reports zeros") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(2);
  Diagnostics diag(mesh, basis, 2, FluxKind::Upwind, 0.2);
  SolutionState s;
  s.f = DistributionState(mesh, basis);
  s.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 2);
  const DiagnosticsRecord r = diag.record(s);
  CHECK(r.mass == 0.0);
  CHECK(r.K1 == 0.0);
  CHECK(r.Etot == 0.0);
  CHECK(r.P1 == 0.0);
  CHECK(r.theta1 == 0.0);
  CHECK(r.theta2 == 0.0);
  CHECK(r.logFM_B3[0] == -300.0);
}

TEST_CASE("choice-1 initial data moments") {
  const auto mesh = testing::make_mesh(4, 32);
  const auto basis = testing::make_basis(2);
  Diagnostics diag(mesh, basis, 2, FluxKind::Upwind, 0.2);
  const auto s = projected_state(mesh, basis, weibel_initial(weibel_choice1()), 6);
  const DiagnosticsRecord r = diag.record(s);
  CHECK(r.mass == doctest::Approx(1.0).epsilon(1e-6));
  // K1 = (delta v01^2 + (1-delta) v02^2 + beta/2) / 2 = 0.0475
  CHECK(r.K1 == doctest::Approx(0.0475).epsilon(1e-4));
  CHECK(std::abs(r.P1) <= 1e-10);
  // Magnetic seed energy: b^2/4.
  CHECK(r.Em == doctest::Approx(2.5e-7).epsilon(1e-6));
  // Theta terms vanish for the well-contained Maxwellian.
  CHECK(std::abs(r.theta1) <= 1e-14);
  CHECK(std::abs(r.theta3) <= 1e-14);
  // logFM of the B3 seed: log10(b/2), up to the projection error of the
  // sine on 4 x-cells.
  CHECK(r.logFM_B3[0] == doctest::Approx(std::log10(0.0005)).epsilon(1e-4));
}

TEST_CASE("theta2 vanishes for continuous fields") {
  const auto mesh = testing::make_mesh(4, 2);
  const auto basis = testing::make_basis(1);
  Diagnostics diag(mesh, basis, 1, FluxKind::Upwind, 0.2);
  SolutionState s;
  s.f = DistributionState(mesh, basis);
  s.fields = FieldState(mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 1);
  const double length = mesh->domain().length();
  auto hat = [&](double x) {
    const double t = std::fmod(x, length);
    return t < length / 2 ? t : length - t;
  };
  s.fields.e1 = project_1d(hat, mesh->n_x(), mesh->domain().x_min, mesh->h_x(), 1, 3);
  const auto th = diag.theta_terms(s);
  CHECK(std::abs(th[1]) <= 1e-24);
}

TEST_CASE("theta terms are nonnegative for nonnegative boundary traces") {
  const auto mesh = testing::make_mesh(4, 8);
  const auto basis = testing::make_basis(2);
  Diagnostics diag(mesh, basis, 2, FluxKind::Upwind, 0.2);
  // A broad positive profile with meaningful boundary values.
  auto s = projected_state(
      mesh, basis,
      InitialCondition{
          [](double, double v1, double v2) {
            return 1.0 + 0.2 * std::cos(v1) + 0.1 * v2;
          },
          [](double) { return 0.4; },
          [](double) { return -0.3; },
          [](double x) { return 0.5 * std::sin(0.2 * x); }},
      6);
  const auto th = diag.theta_terms(s);
  CHECK(th[0] >= 0.0);
  CHECK(th[1] >= 0.0);
  CHECK(th[2] >= 0.0);
}

TEST_CASE("log Fourier modes") {
  const int nx = 20;
  const double length = 10.0 * M_PI;
  const double h = length / nx;
  const double k0 = 0.2;
  SUBCASE("sin(k0 x) has mode 1 at log10(1/2) and no mode 2") {
    const auto w = project_1d([&](double x) { return std::sin(k0 * x); }, nx,
                              0.0, h, 2, 6);
    CHECK(log_fourier_mode(w, nx, 0.0, h, 1, k0) ==
          doctest::Approx(std::log10(0.5)).epsilon(1e-6));
    CHECK(log_fourier_mode(w, nx, 0.0, h, 2, k0) <= -14.0);
  }
  SUBCASE("constants sit at the noise floor") {
    const auto w = project_1d([](double) { return 3.0; }, nx, 0.0, h, 2, 6);
    for (int n = 1; n <= 4; ++n)
      CHECK(log_fourier_mode(w, nx, 0.0, h, n, k0) <= -14.0);
  }
  SUBCASE("mode index must be positive") {
    const auto w = project_1d([](double) { return 1.0; }, nx, 0.0, h, 2, 6);
    CHECK_THROWS_AS(log_fourier_mode(w, nx, 0.0, h, 0, k0),
                    std::invalid_argument);
  }
}

TEST_CASE("distribution slice") {
  const auto mesh = testing::make_mesh(4, 24);
  const auto basis = testing::make_basis(2);

  SUBCASE("single constant mode gives a flat slice") {
    DistributionState f(mesh, basis);
    f.coeffs = project([](double, double, double) { return 2.0; }, *mesh,
                       *basis, 4);
    const auto grid = distribution_slice(f, 0.05 * M_PI, 16, 16);
    for (double v : grid) CHECK(v == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("choice-1 slice shows beams at v01 and -v02") {
    DistributionState f(mesh, basis);
    const auto ic = weibel_initial(weibel_choice1());
    f.coeffs = project(ic.f0, *mesh, *basis, 6);
    const int res = 48;
    const auto grid = distribution_slice(f, 0.05 * M_PI, res, res);
    // Maxima along v1 at the v2 = 0 row.
    const Domain1P2V& d = mesh->domain();
    const double dv = (d.v1_max - d.v1_min) / res;
    const int row2 = res / 2;
    int argmax_pos = 0, argmax_neg = 0;
    for (int l1 = 0; l1 < res; ++l1) {
      const double v1 = d.v1_min + (l1 + 0.5) * dv;
      const double val = grid[static_cast<size_t>(l1) * res + row2];
      if (v1 > 0 && val > grid[static_cast<size_t>(argmax_pos) * res + row2])
        argmax_pos = l1;
      if (v1 < 0 &&
          (argmax_neg == 0 || val > grid[static_cast<size_t>(argmax_neg) * res + row2]))
        argmax_neg = l1;
    }
    CHECK(d.v1_min + (argmax_pos + 0.5) * dv == doctest::Approx(0.3).epsilon(0.2));
    CHECK(d.v1_min + (argmax_neg + 0.5) * dv == doctest::Approx(-0.3).epsilon(0.2));
  }

  SUBCASE("out-of-domain slice position is rejected") {
    DistributionState f(mesh, basis);
    CHECK_THROWS_AS(distribution_slice(f, -1.0, 8, 8), std::invalid_argument);
  }
}

TEST_CASE("total energy bracket is twice the energy sum") {
  const auto mesh = testing::make_mesh(4, 8);
  const auto basis = testing::make_basis(2);
  Diagnostics diag(mesh, basis, 2, FluxKind::Upwind, 0.2);
  const auto s = projected_state(mesh, basis, weibel_initial(weibel_choice1()), 6);
  const DiagnosticsRecord r = diag.record(s);
  CHECK(r.Etot ==
        doctest::Approx(2 * (r.K1 + r.K2 + r.Ee1 + r.Ee2 + r.Em)).epsilon(1e-14));
}
