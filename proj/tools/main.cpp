#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "vmdg/driver.hpp"
#include "vmdg/verification.hpp"

namespace {

using namespace vmdg;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::filesystem::path output_dir_or(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("VMDG_OUTPUT_DIR"); env && *env) return env;
  return "out";
}

int cmd_run(const std::string& config_path) {
  const RunConfig cfg = parse_config_file(config_path);
  const RunResult result = run(cfg);
  std::cout << "run finished: " << result.steps << " steps, "
            << result.diagnostic_rows << " diagnostic rows -> "
            << result.output_dir.string() << "\n";
  return 0;
}

int cmd_converge(const std::string& scenario, const std::string& degrees,
                 const std::string& meshes, const std::string& flux_name,
                 double t_end, int threads, const std::string& out_flag) {
  const FluxKind flux = flux_from_string(flux_name);
  const std::vector<int> ks = parse_int_list(degrees);
  const std::vector<int> ns = parse_int_list(meshes);
  ConvergenceTable table;
  if (scenario == "weibel-choice1" || scenario == "time-reversal") {
    table = time_reversal_table(ks, ns, flux, t_end > 0 ? t_end : 5.0, threads,
                                weibel_choice1(), &std::cout);
  } else if (scenario == "weibel-choice2") {
    table = time_reversal_table(ks, ns, flux, t_end > 0 ? t_end : 5.0, threads,
                                weibel_choice2(), &std::cout);
  } else {
    table = exact_solution_table(scenario, ks, ns, flux,
                                 t_end > 0 ? t_end : 5.0, threads, &std::cout);
  }
  std::cout << table.formatted();
  const auto dir = output_dir_or(out_flag);
  std::filesystem::create_directories(dir);
  const auto csv_path =
      dir / ("converge_" + table.scenario + "_" + to_string(flux) + ".csv");
  std::ofstream(csv_path) << table.csv();
  std::cout << "csv mirror: " << csv_path.string() << "\n";
  return 0;
}

int verify_identities(int mesh, int degree, int threads,
                      std::ostream& csv) {
  csv << "# schema=vmdg.verify.identities.v1\n";
  csv << "flux,mass_residual,l2_rate,l2_residual,energy_residual\n";
  bool ok = true;
  for (FluxKind flux : {FluxKind::Upwind, FluxKind::Central,
                        FluxKind::AlternatingEPlusBMinus}) {
    RunConfig cfg;
    cfg.n_x = cfg.n_v1 = cfg.n_v2 = mesh;
    cfg.degree = degree;
    cfg.flux = flux;
    cfg.threads = threads;
    Simulation sim(cfg);
    const IdentityReport rep =
        check_identities(sim.state(), sim.stepper(), sim.diag());
    const double tol = 1e-11 * rep.scale;
    const bool pass = std::abs(rep.mass_residual) < tol &&
                      rep.l2_rate <= tol && std::abs(rep.l2_residual) < tol &&
                      (std::isnan(rep.energy_residual) ||
                       std::abs(rep.energy_residual) < tol);
    ok = ok && pass;
    std::printf("%-18s mass %.3e  l2 %.3e (rate %.3e)  energy %.3e  %s\n",
                to_string(flux), rep.mass_residual, rep.l2_residual,
                rep.l2_rate, rep.energy_residual, pass ? "ok" : "FAIL");
    csv << to_string(flux) << ',' << rep.mass_residual << ',' << rep.l2_rate
        << ',' << rep.l2_residual << ',' << rep.energy_residual << '\n';
  }
  return ok ? 0 : 1;
}

int verify_conservation(int mesh, int degree, double t_end, int threads,
                        std::ostream& csv) {
  csv << "# schema=vmdg.verify.conservation.v1\n";
  csv << "flux,mass_drift,energy_drift,p1_drift,p2_drift\n";
  std::printf("conservation drift to T=%g on %d^3, k=%d\n", t_end, mesh, degree);
  double upwind_energy = 0, central_energy = 0;
  for (FluxKind flux : {FluxKind::Upwind, FluxKind::Central,
                        FluxKind::AlternatingEPlusBMinus}) {
    RunConfig cfg;
    cfg.n_x = cfg.n_v1 = cfg.n_v2 = mesh;
    cfg.degree = degree;
    cfg.flux = flux;
    cfg.threads = threads;
    cfg.step.cfl = flux == FluxKind::AlternatingEPlusBMinus ? 0.12 : 0.19;
    const DriftReport rep = conservation_report(cfg, t_end);
    if (flux == FluxKind::Upwind) upwind_energy = rep.energy;
    if (flux == FluxKind::Central) central_energy = rep.energy;
    std::printf("%-18s mass %.3e  energy %.3e  P1 %.3e  P2 %.3e\n",
                to_string(flux), rep.mass, rep.energy, rep.p1, rep.p2);
    csv << to_string(flux) << ',' << rep.mass << ',' << rep.energy << ','
        << rep.p1 << ',' << rep.p2 << '\n';
  }
  std::printf("upwind energy decay larger than central: %s\n",
              upwind_energy > central_energy ? "yes" : "NO");
  return 0;
}

int verify_weibel(int mesh, int degree, double t_end, int threads,
                  const std::string& flux_name, std::ostream& csv) {
  RunConfig cfg;
  cfg.n_x = cfg.n_v1 = cfg.n_v2 = mesh;
  cfg.degree = degree;
  cfg.flux = flux_from_string(flux_name);
  cfg.step.cfl = cfg.flux == FluxKind::AlternatingEPlusBMinus ? 0.12 : 0.19;
  cfg.threads = threads;
  cfg.t_end = t_end;
  Simulation sim(cfg);
  std::vector<double> ts, b3_m1, e2_m1, em, ee;
  std::vector<DiagnosticsRecord> recs;
  auto sample = [&]() {
    const DiagnosticsRecord r = sim.diagnostics();
    recs.push_back(r);
    ts.push_back(r.t);
    b3_m1.push_back(r.logFM_B3[0]);
    e2_m1.push_back(r.logFM_E2[0]);
    em.push_back(r.Em);
    ee.push_back(r.Ee1 + r.Ee2);
  };
  sample();
  const double eps = 1e-9;
  while (sim.time() < t_end - eps) {
    sim.advance(std::min(sim.compute_dt(), t_end - sim.time()));
    if (sim.steps() % cfg.diag_every == 0 || sim.time() >= t_end - eps) sample();
  }
  const auto window = default_growth_window(ts, b3_m1);
  const double rate_b3 = growth_rate(ts, b3_m1, true, window);
  const double rate_e2 = growth_rate(ts, e2_m1, true, window);
  const size_t peak_em = std::max_element(em.begin(), em.end()) - em.begin();
  const size_t peak_ee = std::max_element(ee.begin(), ee.end()) - ee.begin();
  std::printf("growth window [%.1f, %.1f]\n", window.first, window.second);
  std::printf("B3 mode-1 rate %.4f, E2 mode-1 rate %.4f, ratio %.2f\n", rate_b3,
              rate_e2, rate_e2 / rate_b3);
  std::printf("magnetic energy peak at t=%.1f, electric at t=%.1f\n",
              ts[peak_em], ts[peak_ee]);
  const DiagnosticsRecord& first = recs.front();
  double p1 = 0, p2 = 0;
  for (const auto& r : recs) {
    p1 = std::max(p1, std::abs(r.P1 - first.P1));
    p2 = std::max(p2, std::abs(r.P2 - first.P2));
  }
  std::printf("P1 drift %.3e, P2 drift %.3e\n", p1, p2);
  csv << "# schema=vmdg.verify.weibel.v1\n";
  csv << "window_lo,window_hi,rate_b3,rate_e2,peak_t_em,peak_t_ee,p1_drift,p2_drift\n";
  csv << window.first << ',' << window.second << ',' << rate_b3 << ','
      << rate_e2 << ',' << ts[peak_em] << ',' << ts[peak_ee] << ',' << p1
      << ',' << p2 << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discontinuous Galerkin solver for the reduced 1x2v Vlasov-Maxwell system"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "Run a simulation from a config file");
  run_cmd->add_option("config", config_path, "flat key = value config file")
      ->required();

  std::string suite;
  int mesh = 20, degree = 2, threads = 0;
  double t_end = -1;
  std::string flux_name = "upwind", out_flag;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "identities | conservation | weibel | all")
      ->required();
  verify_cmd->add_option("--mesh", mesh, "cells per direction");
  verify_cmd->add_option("--degree", degree, "polynomial degree");
  verify_cmd->add_option("--t-end", t_end, "final time");
  verify_cmd->add_option("--flux", flux_name, "upwind | central | alternating");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = all)");
  verify_cmd->add_option("--output-dir", out_flag, "directory for CSV mirrors");

  std::string scenario, degrees = "1,2", meshes = "20,40";
  auto* conv_cmd = app.add_subcommand("converge", "Convergence-order study");
  conv_cmd->add_option("scenario", scenario,
                       "weibel-choice1 | weibel-choice2 | free-stream | vacuum-maxwell")
      ->required();
  conv_cmd->add_option("--degrees", degrees, "comma-separated degrees");
  conv_cmd->add_option("--meshes", meshes, "comma-separated mesh counts");
  conv_cmd->add_option("--flux", flux_name, "upwind | central | alternating");
  conv_cmd->add_option("--t-end", t_end, "reversal / final time");
  conv_cmd->add_option("--threads", threads, "worker threads (0 = all)");
  conv_cmd->add_option("--output-dir", out_flag, "directory for CSV mirrors");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return cmd_run(config_path);
    if (conv_cmd->parsed())
      return cmd_converge(scenario, degrees, meshes, flux_name, t_end, threads,
                          out_flag);
    // verify
    const auto dir = output_dir_or(out_flag);
    std::filesystem::create_directories(dir);
    int rc = 0;
    auto open_csv = [&](const char* name) {
      return std::ofstream(dir / (std::string("verify_") + name + ".csv"));
    };
    if (suite == "identities" || suite == "all") {
      auto csv = open_csv("identities");
      rc |= verify_identities(std::min(mesh, 8), degree, threads, csv);
    }
    if (suite == "conservation" || suite == "all") {
      auto csv = open_csv("conservation");
      rc |= verify_conservation(mesh, degree, t_end > 0 ? t_end : 10.0, threads, csv);
    }
    if (suite == "weibel") {
      auto csv = open_csv("weibel");
      rc |= verify_weibel(mesh, degree, t_end > 0 ? t_end : 100.0, threads,
                          flux_name, csv);
    }
    if (suite != "identities" && suite != "conservation" && suite != "weibel" &&
        suite != "all") {
      std::cerr << "unknown suite '" << suite << "'\n";
      return 2;
    }
    return rc;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
