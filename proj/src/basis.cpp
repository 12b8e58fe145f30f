#include "vmdg/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace vmdg {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("quadrature needs at least 1 point");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  // Newton iteration from the Chebyshev-like initial guess; roots come in
  // symmetric pairs, so solve the upper half and mirror.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double p = legendre_value(n, x);
      const double dp = legendre_deriv(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_deriv(n, x);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<size_t>(half - 1)] = 0.0;
  return rule;
}

double legendre_value(int n, double u) {
  if (n == 0) return 1.0;
  if (n == 1) return u;
  double pm1 = 1.0, p = u;
  for (int j = 2; j <= n; ++j) {
    const double pj = ((2 * j - 1) * u * p - (j - 1) * pm1) / j;
    pm1 = p;
    p = pj;
  }
  return p;
}

double legendre_deriv(int n, double u) {
  if (n == 0) return 0.0;
  // (1-u^2) P_n' = n (P_{n-1} - u P_n); fall back to the endpoint formula.
  if (std::abs(u) < 1.0 - 1e-12) {
    return n * (legendre_value(n - 1, u) - u * legendre_value(n, u)) /
           (1.0 - u * u);
  }
  // P_n'(1) = n(n+1)/2, P_n'(-1) = (-1)^(n+1) n(n+1)/2
  const double mag = 0.5 * n * (n + 1);
  if (u > 0.0) return mag;
  return (n % 2 == 0) ? -mag : mag;
}

double ortho1d_value(int n, double u) {
  return std::sqrt((2.0 * n + 1.0) / 2.0) * legendre_value(n, u);
}

double ortho1d_deriv(int n, double u) {
  return std::sqrt((2.0 * n + 1.0) / 2.0) * legendre_deriv(n, u);
}

ModalBasis::ModalBasis(int degree, BasisFamily family)
    : degree_(degree), family_(family) {
  if (degree < 0) throw std::invalid_argument("basis degree must be >= 0");
  if (family == BasisFamily::PType) {
    for (int total = 0; total <= degree; ++total)
      for (int a = 0; a <= total; ++a)
        for (int b1 = 0; b1 <= total - a; ++b1)
          modes_.push_back({a, b1, total - a - b1});
  } else {
    for (int a = 0; a <= degree; ++a)
      for (int b1 = 0; b1 <= degree; ++b1)
        for (int b2 = 0; b2 <= degree; ++b2) modes_.push_back({a, b1, b2});
  }
}

double ModalBasis::eval(int m, double u, double w1, double w2) const {
  const BasisMode& md = modes_[static_cast<size_t>(m)];
  return ortho1d_value(md.a, u) * ortho1d_value(md.b1, w1) *
         ortho1d_value(md.b2, w2);
}

std::array<double, 3> ModalBasis::grad(int m, double u, double w1,
                                       double w2) const {
  const BasisMode& md = modes_[static_cast<size_t>(m)];
  const double pa = ortho1d_value(md.a, u);
  const double p1 = ortho1d_value(md.b1, w1);
  const double p2 = ortho1d_value(md.b2, w2);
  return {ortho1d_deriv(md.a, u) * p1 * p2, pa * ortho1d_deriv(md.b1, w1) * p2,
          pa * p1 * ortho1d_deriv(md.b2, w2)};
}

}  // namespace vmdg
