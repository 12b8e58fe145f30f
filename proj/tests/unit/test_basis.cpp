#include <doctest.h>

#include <cmath>
#include <random>

#include "test_helpers.hpp"
#include "vmdg/basis.hpp"

using namespace vmdg;

TEST_CASE("analytic Gauss-Legendre rules") {
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  const auto r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == 2.0);
  const auto r2 = gauss_legendre(2);
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  const auto r3 = gauss_legendre(3);
  CHECK(r3.nodes[0] == doctest::Approx(-std::sqrt(3.0 / 5.0)).epsilon(1e-15));
  CHECK(r3.nodes[1] == 0.0);
  CHECK(r3.weights[1] == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
  CHECK(r3.weights[0] == doctest::Approx(5.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("quadrature integrates monomials of degree 2n-1 exactly") {
  for (int n = 1; n <= 8; ++n) {
    const auto rule = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i)
        acc += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
      CHECK(acc == doctest::Approx(exact).epsilon(1e-14));
    }
    for (int i = 0; i < n; ++i)
      CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[n - 1 - i]).epsilon(1e-15));
  }
}

TEST_CASE("basis dimensions") {
  CHECK(ModalBasis(1, BasisFamily::PType).dimension() == 4);
  CHECK(ModalBasis(2, BasisFamily::PType).dimension() == 10);
  CHECK(ModalBasis(3, BasisFamily::PType).dimension() == 20);
  CHECK(ModalBasis(1, BasisFamily::QType).dimension() == 8);
  CHECK(ModalBasis(2, BasisFamily::QType).dimension() == 27);
}

TEST_CASE("orthonormality on the reference cell") {
  for (BasisFamily fam : {BasisFamily::PType, BasisFamily::QType}) {
    const ModalBasis basis(3, fam);
    const auto q = gauss_legendre(5);
    for (int a = 0; a < basis.dimension(); ++a)
      for (int b = a; b < basis.dimension(); ++b) {
        double acc = 0.0;
        for (int qx = 0; qx < q.size(); ++qx)
          for (int q1 = 0; q1 < q.size(); ++q1)
            for (int q2 = 0; q2 < q.size(); ++q2) {
              const double w = q.weights[qx] * q.weights[q1] * q.weights[q2];
              acc += w * basis.eval(a, q.nodes[qx], q.nodes[q1], q.nodes[q2]) *
                     basis.eval(b, q.nodes[qx], q.nodes[q1], q.nodes[q2]);
            }
        CHECK(std::abs(acc - (a == b ? 1.0 : 0.0)) <= 1e-13);
      }
  }
}

TEST_CASE("projection of a constant hits only the constant mode") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(2);
  const auto c = project([](double, double, double) { return 3.5; }, *mesh,
                         *basis, 4);
  for (int cell = 0; cell < c.n_cells; ++cell)
    for (int m = 1; m < c.n_modes; ++m)
      CHECK(std::abs(c.at(cell, m)) <= 1e-13 * std::abs(c.at(cell, 0)));
}

TEST_CASE("projection reproduces polynomials up to the basis degree") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(2);
  auto poly = [](double x, double v1, double v2) {
    return 0.3 + 0.2 * x * v1 - 1.4 * v2 * v2 + 0.7 * x;
  };
  const auto c = project(poly, *mesh, *basis, 4);
  const auto q = gauss_legendre(4);
  for (int cell = 0; cell < mesh->n_cells(); ++cell) {
    const auto [i, j1, j2] = mesh->cell_coords(cell);
    for (int qi = 0; qi < q.size(); ++qi) {
      const double x = mesh->x_center(i) + 0.5 * mesh->h_x() * q.nodes[qi];
      const double v1 = mesh->v1_center(j1) + 0.5 * mesh->h_v1() * q.nodes[qi];
      const double v2 = mesh->v2_center(j2) - 0.5 * mesh->h_v2() * q.nodes[qi];
      CHECK(evaluate(c, *mesh, *basis, cell, x, v1, v2) ==
            doctest::Approx(poly(x, v1, v2)).epsilon(1e-12));
    }
  }
}

TEST_CASE("projection is idempotent and a contraction") {
  const auto mesh = testing::make_mesh(4, 4);
  const auto basis = testing::make_basis(2);
  auto g = [](double x, double v1, double v2) {
    return std::sin(0.2 * x) * std::exp(-(v1 * v1 + 2.0 * v2 * v2));
  };
  const auto c = project(g, *mesh, *basis, 6);
  // Re-project the projection: must reproduce the coefficients.
  auto g_h = [&](double x, double v1, double v2) {
    return evaluate_at(c, *mesh, *basis, x, v1, v2);
  };
  const auto c2 = project(g_h, *mesh, *basis, 6);
  CHECK(testing::max_abs_diff(c, c2) <= 1e-12 * std::max(1.0, testing::max_abs(c)));

  // ||Pi g|| <= ||g|| with the norm of g from the same quadrature.
  const QuadratureRule q = gauss_legendre(6);
  double norm_g_sq = 0.0;
  const double jac = mesh->cell_volume() / 8.0;
  for (int cell = 0; cell < mesh->n_cells(); ++cell) {
    const auto [i, j1, j2] = mesh->cell_coords(cell);
    for (int qx = 0; qx < q.size(); ++qx)
      for (int q1 = 0; q1 < q.size(); ++q1)
        for (int q2 = 0; q2 < q.size(); ++q2) {
          const double x = mesh->x_center(i) + 0.5 * mesh->h_x() * q.nodes[qx];
          const double v1 = mesh->v1_center(j1) + 0.5 * mesh->h_v1() * q.nodes[q1];
          const double v2 = mesh->v2_center(j2) + 0.5 * mesh->h_v2() * q.nodes[q2];
          norm_g_sq += jac * q.weights[qx] * q.weights[q1] * q.weights[q2] *
                       g(x, v1, v2) * g(x, v1, v2);
        }
  }
  CHECK(l2_norm(c) <= std::sqrt(norm_g_sq) * (1.0 + 1e-12));
}

TEST_CASE("projection error of sin(x) decays at order k+1") {
  for (int k : {1, 2}) {
    const auto basis = testing::make_basis(k);
    double errs[2];
    int idx = 0;
    for (int n : {8, 16}) {
      const auto mesh = testing::make_mesh(n, 2);
      auto g = [](double x, double, double) { return std::sin(0.2 * x); };
      DistributionState f(mesh, basis);
      f.coeffs = project(g, *mesh, *basis, k + 2);
      errs[idx++] = l2_error_phase(f, g, k + 5);
    }
    const double order = std::log2(errs[0] / errs[1]);
    CHECK(order == doctest::Approx(k + 1.0).epsilon(0.2 / (k + 1.0)));
  }
}

TEST_CASE("one-sided traces match an independent evaluation oracle") {
  const auto mesh = testing::make_mesh(4, 2);
  const auto basis = testing::make_basis(2);
  auto g = [](double x, double v1, double) { return std::sin(0.2 * x) + v1; };
  const auto c = project(g, *mesh, *basis, 5);
  const double sqrt_jac = std::sqrt(mesh->cell_volume() / 8.0);
  const auto q = gauss_legendre(4);
  const int lo = mesh->cell_index(0, 0, 0);
  const int hi = mesh->cell_index(1, 0, 0);
  const double x_face = mesh->domain().x_min + mesh->h_x();
  for (int qa = 0; qa < q.size(); ++qa) {
    const double v1 = mesh->v1_center(0) + 0.5 * mesh->h_v1() * q.nodes[qa];
    const double v2 = mesh->v2_center(0) + 0.25 * mesh->h_v2();
    const double trace_lo = evaluate(c, *mesh, *basis, lo, x_face, v1, v2);
    const double trace_hi = evaluate(c, *mesh, *basis, hi, x_face, v1, v2);
    // Oracle: direct modal sums at the face reference coordinates.
    const double w1 = 2.0 * (v1 - mesh->v1_center(0)) / mesh->h_v1();
    const double w2 = 0.5;
    double o_lo = 0.0, o_hi = 0.0;
    for (int m = 0; m < basis->dimension(); ++m) {
      o_lo += c.at(lo, m) * basis->eval(m, 1.0, w1, w2);
      o_hi += c.at(hi, m) * basis->eval(m, -1.0, w1, w2);
    }
    o_lo /= sqrt_jac;
    o_hi /= sqrt_jac;
    CHECK(trace_lo - trace_hi ==
          doctest::Approx(o_lo - o_hi).epsilon(1e-12));
  }
}

TEST_CASE("evaluate rejects points outside the cell") {
  const auto mesh = testing::make_mesh(2, 2);
  const auto basis = testing::make_basis(1);
  const auto c = project([](double, double, double) { return 1.0; }, *mesh,
                         *basis, 3);
  CHECK_THROWS_AS(
      evaluate(c, *mesh, *basis, 0, mesh->x_center(1), 0.0, 0.0),
      std::invalid_argument);
}

TEST_CASE("coefficient reflection signs") {
  const auto basis = testing::make_basis(2);
  // Constant mode unchanged, xi1-linear mode negated.
  for (int m = 0; m < basis->dimension(); ++m) {
    const BasisMode& md = basis->modes()[static_cast<size_t>(m)];
    if (md.a == 0 && md.b1 == 0 && md.b2 == 0)
      CHECK(basis->reflect_sign(m) == 1.0);
    if (md.a == 0 && md.b1 == 1 && md.b2 == 0)
      CHECK(basis->reflect_sign(m) == -1.0);
  }
  // Double reflection is the identity on all coefficients.
  const auto mesh = testing::make_mesh(2, 2);
  auto f = testing::random_distribution(mesh, basis, 7);
  CellCoefficients copy = f.coeffs;
  reflect_coefficients(copy, *basis);
  reflect_coefficients(copy, *basis);
  CHECK(testing::max_abs_diff(copy, f.coeffs) == 0.0);
}
