#pragma once

#include <array>
#include <vector>

namespace vmdg {

/// Gauss-Legendre nodes/weights on [-1, 1]. An n-point rule integrates
/// polynomials of degree <= 2n-1 exactly; weights sum to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

QuadratureRule gauss_legendre(int n);

/// Legendre polynomial P_n and derivative at u in [-1, 1].
double legendre_value(int n, double u);
double legendre_deriv(int n, double u);

/// L2-orthonormal 1D basis on [-1, 1]: sqrt((2n+1)/2) * P_n.
double ortho1d_value(int n, double u);
double ortho1d_deriv(int n, double u);

enum class BasisFamily { PType, QType };

/// Per-mode degrees in (x, v1, v2). Legendre parity: mode value flips by
/// (-1)^b under reflection of the corresponding reference coordinate.
struct BasisMode {
  int a;   // degree in x
  int b1;  // degree in v1
  int b2;  // degree in v2
};

/// Modal tensor-Legendre basis on the reference cell [-1,1]^3, orthonormal
/// with respect to the Lebesgue measure. P-type keeps total degree <= k
/// (dimension C(k+3,3)); Q-type keeps each degree <= k (dimension (k+1)^3).
class ModalBasis {
 public:
  ModalBasis(int degree, BasisFamily family);

  int degree() const { return degree_; }
  BasisFamily family() const { return family_; }
  int dimension() const { return static_cast<int>(modes_.size()); }
  const std::vector<BasisMode>& modes() const { return modes_; }

  /// Sign picked up by mode m under xi -> -xi: (-1)^(b1+b2).
  double reflect_sign(int m) const {
    const BasisMode& md = modes_[static_cast<size_t>(m)];
    return ((md.b1 + md.b2) % 2 == 0) ? 1.0 : -1.0;
  }

  double eval(int m, double u, double w1, double w2) const;
  /// Reference-coordinate gradient (d/du, d/dw1, d/dw2) of mode m.
  std::array<double, 3> grad(int m, double u, double w1, double w2) const;

 private:
  int degree_;
  BasisFamily family_;
  std::vector<BasisMode> modes_;
};

}  // namespace vmdg
