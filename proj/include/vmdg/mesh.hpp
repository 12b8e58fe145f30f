#pragma once

#include <array>
#include <vector>

namespace vmdg {

/// Phase-space domain for the 1x2v reduced system: x periodic on
/// [x_min, x_max], velocities on a truncated box that must be symmetric
/// about 0 (the discrete time-reversal map relies on it).
struct Domain1P2V {
  double x_min = 0.0;
  double x_max = 1.0;
  double v1_min = -1.2;
  double v1_max = 1.2;
  double v2_min = -1.2;
  double v2_max = 1.2;

  /// Periodic box of length 2*pi/k0 with velocity box [-v_max, v_max]^2.
  static Domain1P2V from_wavenumber(double k0, double v_max = 1.2);

  double length() const { return x_max - x_min; }
  /// Throws std::invalid_argument on a degenerate or asymmetric domain.
  void validate() const;
};

enum class Axis { X = 0, V1 = 1, V2 = 2 };

/// One mesh edge (a cell face). For interior edges both cells are valid and
/// cell_lo's outward normal along the axis is +1, cell_hi's is -1. Velocity
/// boundary edges have exactly one adjacent cell; the missing side is -1.
struct EdgeRef {
  Axis axis;
  int cell_lo;  // cell on the lower-coordinate side (-1 at the low boundary)
  int cell_hi;  // cell on the higher-coordinate side (-1 at the high boundary)
  bool boundary;
};

/// Uniform Cartesian mesh over (x, v1, v2). Cells are ordered x-major, then
/// v1, then v2, so each spatial column stores its velocity plane
/// contiguously. Immutable after construction.
class PhaseMesh {
 public:
  /// Validates and builds; counts must be >= 2 and velocity counts even so
  /// that xi = 0 lies on a cell interface.
  static PhaseMesh build(const Domain1P2V& domain, int n_x, int n_v1, int n_v2);

  const Domain1P2V& domain() const { return domain_; }
  int n_x() const { return n_x_; }
  int n_v1() const { return n_v1_; }
  int n_v2() const { return n_v2_; }
  int n_cells() const { return n_x_ * n_v1_ * n_v2_; }
  double h_x() const { return h_x_; }
  double h_v1() const { return h_v1_; }
  double h_v2() const { return h_v2_; }
  double cell_volume() const { return h_x_ * h_v1_ * h_v2_; }
  double total_volume() const { return cell_volume() * n_cells(); }

  int cell_index(int i, int j1, int j2) const {
    return (i * n_v1_ + j1) * n_v2_ + j2;
  }
  std::array<int, 3> cell_coords(int cell) const {
    const int j2 = cell % n_v2_;
    const int rest = cell / n_v2_;
    return {rest / n_v1_, rest % n_v1_, j2};
  }

  double x_center(int i) const { return domain_.x_min + (i + 0.5) * h_x_; }
  double v1_center(int j1) const { return domain_.v1_min + (j1 + 0.5) * h_v1_; }
  double v2_center(int j2) const { return domain_.v2_min + (j2 + 0.5) * h_v2_; }

  /// Periodic neighbor in x; side = -1 (lower) or +1 (upper).
  int x_neighbor(int i, int side) const {
    return side > 0 ? (i + 1) % n_x_ : (i + n_x_ - 1) % n_x_;
  }

  /// Index of the x-cell containing x (throws if outside the domain).
  int locate_x(double x) const;

  /// Deterministic enumeration of all edges normal to the given axis.
  std::vector<EdgeRef> edges(Axis axis) const;

  /// Cell permutation realizing xi -> -xi: (i, j1, j2) maps to
  /// (i, n_v1-1-j1, n_v2-1-j2). An involution on a symmetric mesh.
  std::vector<int> reflect_velocity_permutation() const;

 private:
  Domain1P2V domain_;
  int n_x_ = 0, n_v1_ = 0, n_v2_ = 0;
  double h_x_ = 0, h_v1_ = 0, h_v2_ = 0;
};

}  // namespace vmdg
