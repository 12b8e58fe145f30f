#include "vmdg/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace vmdg {

void WeibelParams::validate() const {
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
  if (delta < 0.0 || delta > 1.0)
    throw std::invalid_argument("delta must lie in [0, 1]");
  if (!(k0 > 0.0)) throw std::invalid_argument("k0 must be positive");
}

WeibelParams weibel_choice1() { return {0.01, 0.001, 0.5, 0.3, 0.3, 0.2}; }

WeibelParams weibel_choice2() {
  return {0.01, 0.001, 1.0 / 6.0, 0.5, 0.1, 0.2};
}

InitialCondition weibel_initial(const WeibelParams& p) {
  p.validate();
  InitialCondition ic;
  ic.f0 = [p](double /*x*/, double v1, double v2) {
    const double norm = 1.0 / (M_PI * p.beta);
    const double g2 = std::exp(-v2 * v2 / p.beta);
    const double beam1 = p.delta * std::exp(-(v1 - p.v01) * (v1 - p.v01) / p.beta);
    const double beam2 =
        (1.0 - p.delta) * std::exp(-(v1 + p.v02) * (v1 + p.v02) / p.beta);
    return norm * g2 * (beam1 + beam2);
  };
  ic.e1 = [](double) { return 0.0; };
  ic.e2 = [](double) { return 0.0; };
  ic.b3 = [p](double x) { return p.b * std::sin(p.k0 * x); };
  return ic;
}

namespace {
// C^3 compactly supported velocity profile; smooth enough for the degree-3
// convergence range and exactly zero on the box boundary.
double bump(double v, double v_max) {
  const double c = std::cos(0.5 * M_PI * v / v_max);
  return c * c * c * c;
}
}  // namespace

InitialCondition free_stream_initial(double k0, double v_max) {
  InitialCondition ic;
  ic.f0 = [k0, v_max](double x, double v1, double v2) {
    return (1.0 + 0.5 * std::sin(k0 * x)) * bump(v1, v_max) * bump(v2, v_max);
  };
  ic.e1 = [](double) { return 0.0; };
  ic.e2 = [](double) { return 0.0; };
  ic.b3 = [](double) { return 0.0; };
  return ic;
}

double free_stream_exact(double k0, double v_max, double x, double v1,
                         double v2, double t, double length) {
  double x0 = std::fmod(x - v2 * t, length);
  if (x0 < 0.0) x0 += length;
  return (1.0 + 0.5 * std::sin(k0 * x0)) * bump(v1, v_max) * bump(v2, v_max);
}

InitialCondition vacuum_maxwell_initial(double kappa) {
  InitialCondition ic;
  ic.f0 = [](double, double, double) { return 0.0; };
  ic.e1 = [kappa](double x) { return std::sin(kappa * x); };
  ic.e2 = [](double) { return 0.0; };
  ic.b3 = [](double) { return 0.0; };
  return ic;
}

double vacuum_e1_exact(double kappa, double x, double t) {
  return std::sin(kappa * x) * std::cos(kappa * t);
}

double vacuum_b3_exact(double kappa, double x, double t) {
  return std::cos(kappa * x) * std::sin(kappa * t);
}

SolutionState time_reversal_setup(const SolutionState& state) {
  const PhaseMesh& mesh = *state.f.mesh;
  if (mesh.n_v1() % 2 != 0 || mesh.n_v2() % 2 != 0)
    throw std::invalid_argument("time reversal needs a reflection-symmetric mesh");
  SolutionState out;
  out.f = reflect_distribution(state.f);
  out.fields = state.fields;
  for (double& v : out.fields.b3.data) v = -v;
  out.time = state.time;
  return out;
}

}  // namespace vmdg
