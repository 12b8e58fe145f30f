#include "vmdg/state.hpp"

#include <cmath>
#include <cstddef>

namespace vmdg {

bool all_finite(const CellCoefficients& c) {
  for (double v : c.data)
    if (!std::isfinite(v)) return false;
  return true;
}

bool all_finite(const FieldState& s) {
  return all_finite(s.e1) && all_finite(s.e2) && all_finite(s.b3);
}

void axpby(double a, CellCoefficients& y, double b, const CellCoefficients& x) {
  const size_t n = y.data.size();
  for (size_t i = 0; i < n; ++i) y.data[i] = a * y.data[i] + b * x.data[i];
}

void axpby(double a, FieldState& y, double b, const FieldState& x) {
  axpby(a, y.e1, b, x.e1);
  axpby(a, y.e2, b, x.e2);
  axpby(a, y.b3, b, x.b3);
}

void axpby(double a, SolutionState& y, double b, const SolutionState& x) {
  axpby(a, y.f.coeffs, b, x.f.coeffs);
  axpby(a, y.fields, b, x.fields);
}

}  // namespace vmdg
