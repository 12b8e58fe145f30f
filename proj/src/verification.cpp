#include "vmdg/verification.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vmdg/parallel.hpp"
#include "vmdg/projection.hpp"

namespace vmdg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double auto_cfl(FluxKind flux) {
  return (flux == FluxKind::AlternatingEPlusBMinus ||
          flux == FluxKind::AlternatingEMinusBPlus)
             ? 0.12
             : 0.19;
}

std::string cell_fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%9.2e", v);
  return buf;
}
}  // namespace

const ConvergenceRow* ConvergenceTable::find(int degree, int mesh) const {
  for (const auto& r : rows)
    if (r.degree == degree && r.mesh == mesh) return &r;
  return nullptr;
}

std::string ConvergenceTable::formatted() const {
  std::ostringstream out;
  out << "scenario=" << scenario << " flux=" << to_string(flux) << "\n";
  out << "degree  mesh   err(f)    ord    err(B3)   ord    err(E1)   ord    err(E2)   ord\n";
  for (const auto& r : rows) {
    char head[32];
    std::snprintf(head, sizeof(head), "k=%d  %6d", r.degree, r.mesh);
    out << head;
    auto pair = [&](double e, double o) {
      out << ' ' << cell_fmt(e);
      if (std::isnan(o))
        out << "    -  ";
      else {
        char b[16];
        std::snprintf(b, sizeof(b), "  %5.2f", o);
        out << b;
      }
    };
    pair(r.err_f, r.ord_f);
    pair(r.err_b3, r.ord_b3);
    pair(r.err_e1, r.ord_e1);
    pair(r.err_e2, r.ord_e2);
    out << '\n';
  }
  return out.str();
}

std::string ConvergenceTable::csv() const {
  std::ostringstream out;
  out << "# schema=vmdg.convergence.v1\n";
  out << "scenario,flux,degree,mesh,err_f,ord_f,err_b3,ord_b3,err_e1,ord_e1,err_e2,ord_e2\n";
  for (const auto& r : rows) {
    out << scenario << ',' << to_string(flux) << ',' << r.degree << ','
        << r.mesh;
    for (double v : {r.err_f, r.ord_f, r.err_b3, r.ord_b3, r.err_e1, r.ord_e1,
                     r.err_e2, r.ord_e2}) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), ",%.12g", v);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

double observed_order(double err_coarse, double err_fine) {
  return std::log2(err_coarse / err_fine);
}

namespace {

struct ErrorSet {
  double f, b3, e1, e2;
};

ErrorSet measure_errors(const Simulation& sim, const PhaseFunction& ref_f,
                        const LineFunction& ref_b3, int threads) {
  const int pts = sim.config().degree + 4;
  const FieldState& s = sim.state().fields;
  ErrorSet e;
  e.f = l2_error_phase(sim.state().f, ref_f, pts, threads);
  e.b3 = l2_error_1d(s.b3, s.n_x, s.x_min, s.h_x, ref_b3, pts);
  auto zero = [](double) { return 0.0; };
  e.e1 = l2_error_1d(s.e1, s.n_x, s.x_min, s.h_x, zero, pts);
  e.e2 = l2_error_1d(s.e2, s.n_x, s.x_min, s.h_x, zero, pts);
  return e;
}

void push_rows(ConvergenceTable& table, int degree,
               const std::vector<int>& meshes,
               const std::vector<ErrorSet>& errs) {
  for (size_t i = 0; i < errs.size(); ++i) {
    ConvergenceRow row;
    row.degree = degree;
    row.mesh = meshes[i];
    row.err_f = errs[i].f;
    row.err_b3 = errs[i].b3;
    row.err_e1 = errs[i].e1;
    row.err_e2 = errs[i].e2;
    if (i == 0) {
      row.ord_f = row.ord_b3 = row.ord_e1 = row.ord_e2 = kNaN;
    } else {
      const double refine = std::log2(double(meshes[i]) / meshes[i - 1]);
      row.ord_f = std::log2(errs[i - 1].f / errs[i].f) / refine;
      row.ord_b3 = std::log2(errs[i - 1].b3 / errs[i].b3) / refine;
      row.ord_e1 = std::log2(errs[i - 1].e1 / errs[i].e1) / refine;
      row.ord_e2 = std::log2(errs[i - 1].e2 / errs[i].e2) / refine;
    }
    table.rows.push_back(row);
  }
}

}  // namespace

ConvergenceTable time_reversal_table(const std::vector<int>& degrees,
                                     const std::vector<int>& meshes,
                                     FluxKind flux, double T, int threads,
                                     const WeibelParams& params,
                                     std::ostream* log) {
  ConvergenceTable table;
  table.scenario = "time-reversal";
  table.flux = flux;
  const InitialCondition ic = weibel_initial(params);
  const PhaseFunction reversed_f = [f0 = ic.f0](double x, double v1, double v2) {
    return f0(x, -v1, -v2);
  };
  const LineFunction reversed_b3 = [b3 = ic.b3](double x) { return -b3(x); };

  for (int k : degrees) {
    std::vector<ErrorSet> errs;
    for (int n : meshes) {
      RunConfig cfg;
      cfg.scenario = "weibel-choice1";
      cfg.weibel = params;
      cfg.n_x = cfg.n_v1 = cfg.n_v2 = n;
      cfg.degree = k;
      cfg.flux = flux;
      cfg.step.cfl = auto_cfl(flux);
      cfg.t_end = 2.0 * T;
      cfg.threads = threads;
      try {
        Simulation sim(cfg);
        sim.advance_to(T);
        sim.apply_time_reversal();
        sim.advance_to(2.0 * T);
        errs.push_back(measure_errors(sim, reversed_f, reversed_b3,
                                      resolve_threads(threads)));
        if (log)
          *log << "  k=" << k << " mesh=" << n << "^3 done, err(f)="
               << errs.back().f << "\n";
      } catch (const std::exception& e) {
        errs.push_back({kNaN, kNaN, kNaN, kNaN});
        if (log) *log << "  k=" << k << " mesh=" << n << "^3 FAILED: " << e.what() << "\n";
      }
    }
    push_rows(table, k, meshes, errs);
  }
  return table;
}

ConvergenceTable exact_solution_table(const std::string& scenario,
                                      const std::vector<int>& degrees,
                                      const std::vector<int>& meshes,
                                      FluxKind flux, double T, int threads,
                                      std::ostream* log) {
  if (scenario != "free-stream" && scenario != "vacuum-maxwell")
    throw std::invalid_argument("exact-solution study supports free-stream and vacuum-maxwell");
  ConvergenceTable table;
  table.scenario = scenario;
  table.flux = flux;
  const bool vacuum = scenario == "vacuum-maxwell";

  for (int k : degrees) {
    std::vector<ErrorSet> errs;
    for (int n : meshes) {
      RunConfig cfg;
      cfg.scenario = scenario;
      cfg.n_x = n;
      // The vacuum solution carries no velocity structure; a minimal
      // velocity mesh keeps the sweep on the Maxwell block.
      cfg.n_v1 = cfg.n_v2 = vacuum ? 4 : n;
      cfg.degree = k;
      cfg.flux = flux;
      cfg.step.cfl = auto_cfl(flux);
      cfg.t_end = T;
      cfg.threads = threads;
      try {
        Simulation sim(cfg);
        sim.advance_to(T);
        const double k0 = cfg.weibel.k0;
        const double length = sim.mesh()->domain().length();
        const double v_max = cfg.v_max;
        PhaseFunction ref_f;
        LineFunction ref_b3;
        if (vacuum) {
          ref_f = [](double, double, double) { return 0.0; };
          ref_b3 = [k0, T](double x) { return vacuum_b3_exact(k0, x, T); };
        } else {
          ref_f = [k0, v_max, T, length](double x, double v1, double v2) {
            return free_stream_exact(k0, v_max, x, v1, v2, T, length);
          };
          ref_b3 = [](double) { return 0.0; };
        }
        const int pts = k + 4;
        const FieldState& s = sim.state().fields;
        ErrorSet e;
        e.f = l2_error_phase(sim.state().f, ref_f, pts, resolve_threads(threads));
        e.b3 = l2_error_1d(s.b3, s.n_x, s.x_min, s.h_x, ref_b3, pts);
        if (vacuum) {
          e.e1 = l2_error_1d(s.e1, s.n_x, s.x_min, s.h_x,
                             [k0, T](double x) { return vacuum_e1_exact(k0, x, T); }, pts);
        } else {
          e.e1 = l2_error_1d(s.e1, s.n_x, s.x_min, s.h_x,
                             [](double) { return 0.0; }, pts);
        }
        e.e2 = l2_error_1d(s.e2, s.n_x, s.x_min, s.h_x,
                           [](double) { return 0.0; }, pts);
        errs.push_back(e);
        if (log)
          *log << "  k=" << k << " mesh=" << n << " done\n";
      } catch (const std::exception& ex) {
        errs.push_back({kNaN, kNaN, kNaN, kNaN});
        if (log) *log << "  k=" << k << " mesh=" << n << " FAILED: " << ex.what() << "\n";
      }
    }
    push_rows(table, k, meshes, errs);
  }
  return table;
}

DriftReport conservation_report(const RunConfig& config, double T) {
  RunConfig cfg = config;
  cfg.t_end = T;
  Simulation sim(cfg);
  const DiagnosticsRecord first = sim.diagnostics();
  DriftReport report;
  report.flux = cfg.flux;
  constexpr double kFloor = 1e-6;
  auto update = [&](const DiagnosticsRecord& r) {
    auto drift = [&](double now, double init) {
      const double d = std::abs(now - init);
      return std::abs(init) > kFloor ? d / std::abs(init) : d;
    };
    report.mass = std::max(report.mass, drift(r.mass, first.mass));
    report.energy = std::max(report.energy, drift(r.Etot, first.Etot));
    report.p1 = std::max(report.p1, drift(r.P1, first.P1));
    report.p2 = std::max(report.p2, drift(r.P2, first.P2));
  };
  const double eps = 1e-12 * std::max(1.0, T);
  while (sim.time() < T - eps) {
    const double dt = std::min(sim.compute_dt(), T - sim.time());
    sim.advance(dt);
    if (sim.steps() % cfg.diag_every == 0 || sim.time() >= T - eps)
      update(sim.diagnostics());
  }
  return report;
}

double growth_rate(const std::vector<double>& t, const std::vector<double>& values,
                   bool values_are_log10,
                   std::optional<std::pair<double, double>> window) {
  if (t.size() != values.size() || t.size() < 2)
    throw std::invalid_argument("growth_rate needs matching series with >= 2 samples");
  std::vector<double> ts, ys;
  for (size_t i = 0; i < t.size(); ++i) {
    if (window && (t[i] < window->first || t[i] > window->second)) continue;
    double y = values[i];
    if (values_are_log10) {
      y *= std::log(10.0);
    } else {
      if (!(y > 0.0))
        throw std::invalid_argument("growth_rate needs a positive signal");
      y = std::log(y);
    }
    ts.push_back(t[i]);
    ys.push_back(y);
  }
  if (ts.size() < 2)
    throw std::invalid_argument("growth window contains fewer than 2 samples");
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double n = static_cast<double>(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) {
    st += ts[i];
    sy += ys[i];
    stt += ts[i] * ts[i];
    sty += ts[i] * ys[i];
  }
  const double denom = n * stt - st * st;
  if (denom == 0.0) throw std::invalid_argument("degenerate time samples");
  return (n * sty - st * sy) / denom;
}

std::pair<double, double> default_growth_window(const std::vector<double>& t,
                                                const std::vector<double>& log10_series) {
  if (t.size() != log10_series.size() || t.empty())
    throw std::invalid_argument("mismatched series");
  const double lo = std::max(-5.0, log10_series.front() + 0.25);
  const double hi = -2.0;
  double t_lo = kNaN, t_hi = kNaN;
  for (size_t i = 0; i < t.size(); ++i) {
    if (std::isnan(t_lo) && log10_series[i] >= lo) t_lo = t[i];
    if (!std::isnan(t_lo) && log10_series[i] >= hi) {
      t_hi = t[i];
      break;
    }
  }
  if (std::isnan(t_lo) || std::isnan(t_hi) || !(t_hi > t_lo))
    throw std::runtime_error("series never develops a growth window");
  return {t_lo, t_hi};
}

IdentityReport check_identities(const SolutionState& state,
                                const RkStepper& stepper,
                                const Diagnostics& diag) {
  const PhaseMesh& mesh = *state.f.mesh;
  const ModalBasis& basis = *state.f.basis;
  CellCoefficients df;
  FieldState dfields;
  stepper.eval_rhs(state, df, dfields);

  auto dot = [](const CellCoefficients& a, const CellCoefficients& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) acc += a.data[i] * b.data[i];
    return acc;
  };

  const auto theta = diag.theta_terms(state);
  IdentityReport rep;

  // Mass: <rhs, 1> = -Theta1.
  const CellCoefficients ones = project(
      [](double, double, double) { return 1.0; }, mesh, basis,
      basis.degree() + 2);
  rep.mass_residual = dot(df, ones) + theta[0];

  // L2: <rhs, f> = -(jump dissipation)/2 and <= 0.
  rep.l2_rate = dot(df, state.f.coeffs);
  const auto dis = stepper.vlasov().dissipation(state.f, state.fields);
  rep.l2_residual = rep.l2_rate + 0.5 * dis.total();

  // Energy: d/dt (int f |xi|^2 + int |E|^2 + |B|^2) = -Theta2 - Theta3 for
  // the upwind Maxwell flux, -Theta3 for central/alternating. Needs
  // |xi|^2 in the approximation space, hence degree >= 2.
  if (basis.degree() >= 2) {
    const CellCoefficients xi2 = project(
        [](double, double v1, double v2) { return v1 * v1 + v2 * v2; }, mesh,
        basis, basis.degree() + 2);
    const double kinetic_rate = dot(df, xi2);
    const double field_rate = 2.0 * (dot(dfields.e1, state.fields.e1) +
                                     dot(dfields.e2, state.fields.e2) +
                                     dot(dfields.b3, state.fields.b3));
    const double expected =
        -theta[2] - (stepper.flux() == FluxKind::Upwind ? theta[1] : 0.0);
    rep.energy_residual = kinetic_rate + field_rate - expected;
    rep.scale = std::max({1.0, std::abs(kinetic_rate), std::abs(field_rate)});
  } else {
    rep.energy_residual = kNaN;
    rep.scale = std::max(1.0, std::abs(rep.l2_rate));
  }
  return rep;
}

}  // namespace vmdg
