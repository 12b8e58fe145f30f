#include "vmdg/mesh.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vmdg {

Domain1P2V Domain1P2V::from_wavenumber(double k0, double v_max) {
  if (k0 <= 0.0) throw std::invalid_argument("wavenumber must be positive");
  Domain1P2V d;
  d.x_min = 0.0;
  d.x_max = 2.0 * M_PI / k0;
  d.v1_min = -v_max;
  d.v1_max = v_max;
  d.v2_min = -v_max;
  d.v2_max = v_max;
  d.validate();
  return d;
}

void Domain1P2V::validate() const {
  if (!(x_max > x_min)) throw std::invalid_argument("degenerate x interval");
  if (!(v1_max > v1_min) || !(v2_max > v2_min))
    throw std::invalid_argument("degenerate velocity box");
  // Symmetry about 0 is required by the time-reversal map.
  if (v1_min != -v1_max || v2_min != -v2_max)
    throw std::invalid_argument("velocity box must be symmetric about 0");
}

PhaseMesh PhaseMesh::build(const Domain1P2V& domain, int n_x, int n_v1,
                           int n_v2) {
  domain.validate();
  if (n_x < 2 || n_v1 < 2 || n_v2 < 2)
    throw std::invalid_argument("cell counts must be >= 2");
  if (n_v1 % 2 != 0 || n_v2 % 2 != 0)
    throw std::invalid_argument(
        "velocity cell counts must be even (xi = 0 must be an interface)");
  PhaseMesh m;
  m.domain_ = domain;
  m.n_x_ = n_x;
  m.n_v1_ = n_v1;
  m.n_v2_ = n_v2;
  m.h_x_ = (domain.x_max - domain.x_min) / n_x;
  m.h_v1_ = (domain.v1_max - domain.v1_min) / n_v1;
  m.h_v2_ = (domain.v2_max - domain.v2_min) / n_v2;
  return m;
}

int PhaseMesh::locate_x(double x) const {
  if (x < domain_.x_min || x > domain_.x_max)
    throw std::invalid_argument("x = " + std::to_string(x) +
                                " outside the spatial domain");
  int i = static_cast<int>((x - domain_.x_min) / h_x_);
  if (i == n_x_) --i;  // x == x_max belongs to the last cell
  return i;
}

std::vector<EdgeRef> PhaseMesh::edges(Axis axis) const {
  std::vector<EdgeRef> out;
  if (axis == Axis::X) {
    out.reserve(static_cast<size_t>(n_cells()));
    // Periodic: every x-interface is interior; edge i sits between column i
    // and column (i+1) mod n_x.
    for (int i = 0; i < n_x_; ++i)
      for (int j1 = 0; j1 < n_v1_; ++j1)
        for (int j2 = 0; j2 < n_v2_; ++j2)
          out.push_back({axis, cell_index(i, j1, j2),
                         cell_index((i + 1) % n_x_, j1, j2), false});
    return out;
  }
  const bool v1 = (axis == Axis::V1);
  const int n_norm = v1 ? n_v1_ : n_v2_;
  const int n_tan = v1 ? n_v2_ : n_v1_;
  out.reserve(static_cast<size_t>(n_x_) * (n_norm + 1) * n_tan);
  for (int i = 0; i < n_x_; ++i)
    for (int jn = 0; jn <= n_norm; ++jn)
      for (int jt = 0; jt < n_tan; ++jt) {
        const int lo = jn - 1;
        const int hi = jn;
        auto cell = [&](int j) {
          return v1 ? cell_index(i, j, jt) : cell_index(i, jt, j);
        };
        EdgeRef e;
        e.axis = axis;
        e.cell_lo = lo >= 0 ? cell(lo) : -1;
        e.cell_hi = hi < n_norm ? cell(hi) : -1;
        e.boundary = (lo < 0 || hi >= n_norm);
        out.push_back(e);
      }
  return out;
}

std::vector<int> PhaseMesh::reflect_velocity_permutation() const {
  std::vector<int> perm(static_cast<size_t>(n_cells()));
  for (int i = 0; i < n_x_; ++i)
    for (int j1 = 0; j1 < n_v1_; ++j1)
      for (int j2 = 0; j2 < n_v2_; ++j2)
        perm[static_cast<size_t>(cell_index(i, j1, j2))] =
            cell_index(i, n_v1_ - 1 - j1, n_v2_ - 1 - j2);
  return perm;
}

}  // namespace vmdg
