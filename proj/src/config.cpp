#include "vmdg/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vmdg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(line, "expected a number for '" + key + "', got '" + v + "'");
  }
}

int parse_int(const std::string& v, int line, const std::string& key) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    fail(line, "expected an integer for '" + key + "', got '" + v + "'");
  }
}

std::vector<double> parse_list(const std::string& v, int line,
                               const std::string& key) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_double(item, line, key));
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

FluxKind flux_from_string(const std::string& s) {
  if (s == "upwind") return FluxKind::Upwind;
  if (s == "central") return FluxKind::Central;
  if (s == "alternating" || s == "alternating-ep-bm")
    return FluxKind::AlternatingEPlusBMinus;
  if (s == "alternating-em-bp") return FluxKind::AlternatingEMinusBPlus;
  throw std::invalid_argument("unknown flux '" + s + "'");
}

void RunConfig::validate() const {
  weibel.validate();
  if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (diag_every < 1) throw std::invalid_argument("diag_every must be >= 1");
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  if (slice_res < 2) throw std::invalid_argument("slice_res must be >= 2");
  if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be positive");
  if (scenario != "weibel-choice1" && scenario != "weibel-choice2" &&
      scenario != "free-stream" && scenario != "vacuum-maxwell")
    throw std::invalid_argument("unknown scenario '" + scenario + "'");
  // Mesh constraints are revalidated by PhaseMesh::build.
}

Domain1P2V RunConfig::domain() const {
  return Domain1P2V::from_wavenumber(weibel.k0, v_max);
}

InitialCondition RunConfig::initial_condition() const {
  if (scenario == "weibel-choice1" || scenario == "weibel-choice2")
    return weibel_initial(weibel);
  if (scenario == "free-stream") return free_stream_initial(weibel.k0, v_max);
  if (scenario == "vacuum-maxwell") return vacuum_maxwell_initial(weibel.k0);
  throw std::invalid_argument("unknown scenario '" + scenario + "'");
}

RunConfig parse_config(const std::string& text) {
  RunConfig c;
  bool weibel_overridden[6] = {false, false, false, false, false, false};
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    if (key.empty() || val.empty()) fail(line, "expected 'key = value'");

    if (key == "scenario") {
      if (val != "weibel-choice1" && val != "weibel-choice2" &&
          val != "free-stream" && val != "vacuum-maxwell")
        fail(line, "unknown scenario '" + val + "'");
      c.scenario = val;
    } else if (key == "beta") {
      c.weibel.beta = parse_double(val, line, key);
      weibel_overridden[0] = true;
    } else if (key == "b") {
      c.weibel.b = parse_double(val, line, key);
      weibel_overridden[1] = true;
    } else if (key == "delta") {
      c.weibel.delta = parse_double(val, line, key);
      weibel_overridden[2] = true;
    } else if (key == "v01") {
      c.weibel.v01 = parse_double(val, line, key);
      weibel_overridden[3] = true;
    } else if (key == "v02") {
      c.weibel.v02 = parse_double(val, line, key);
      weibel_overridden[4] = true;
    } else if (key == "k0") {
      c.weibel.k0 = parse_double(val, line, key);
      weibel_overridden[5] = true;
    } else if (key == "v_max") {
      c.v_max = parse_double(val, line, key);
    } else if (key == "nx") {
      c.n_x = parse_int(val, line, key);
    } else if (key == "nv1") {
      c.n_v1 = parse_int(val, line, key);
    } else if (key == "nv2") {
      c.n_v2 = parse_int(val, line, key);
    } else if (key == "mesh") {
      const int n = parse_int(val, line, key);
      c.n_x = c.n_v1 = c.n_v2 = n;
    } else if (key == "degree") {
      c.degree = parse_int(val, line, key);
    } else if (key == "basis") {
      if (val == "p")
        c.family = BasisFamily::PType;
      else if (val == "q")
        c.family = BasisFamily::QType;
      else
        fail(line, "basis must be 'p' or 'q'");
    } else if (key == "flux") {
      try {
        c.flux = flux_from_string(val);
      } catch (const std::exception& e) {
        fail(line, e.what());
      }
    } else if (key == "cfl") {
      c.step.cfl = parse_double(val, line, key);
    } else if (key == "fixed_dt") {
      c.step.fixed_dt = parse_double(val, line, key);
    } else if (key == "k3_dt_coeff") {
      c.step.k3_coeff = parse_double(val, line, key);
    } else if (key == "t_end") {
      c.t_end = parse_double(val, line, key);
    } else if (key == "diag_every") {
      c.diag_every = parse_int(val, line, key);
    } else if (key == "snapshot_times") {
      c.snapshot_times = parse_list(val, line, key);
    } else if (key == "slice_x") {
      c.slice_x = parse_list(val, line, key);
    } else if (key == "slice_res") {
      c.slice_res = parse_int(val, line, key);
    } else if (key == "output_dir") {
      c.output_dir = val;
    } else if (key == "threads") {
      c.threads = parse_int(val, line, key);
    } else if (key == "quad_init_pts") {
      c.quad_init_pts = parse_int(val, line, key);
    } else {
      fail(line, "unknown key '" + key + "'");
    }
  }
  // Scenario presets fill the parameters the file did not override.
  WeibelParams preset = c.weibel;
  if (c.scenario == "weibel-choice1")
    preset = weibel_choice1();
  else if (c.scenario == "weibel-choice2")
    preset = weibel_choice2();
  if (!weibel_overridden[0]) c.weibel.beta = preset.beta;
  if (!weibel_overridden[1]) c.weibel.b = preset.b;
  if (!weibel_overridden[2]) c.weibel.delta = preset.delta;
  if (!weibel_overridden[3]) c.weibel.v01 = preset.v01;
  if (!weibel_overridden[4]) c.weibel.v02 = preset.v02;
  if (!weibel_overridden[5]) c.weibel.k0 = preset.k0;
  c.validate();
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const RunConfig& c) {
  std::ostringstream out;
  out << "scenario = " << c.scenario << "\n";
  out << "beta = " << fmt(c.weibel.beta) << "\n";
  out << "b = " << fmt(c.weibel.b) << "\n";
  out << "delta = " << fmt(c.weibel.delta) << "\n";
  out << "v01 = " << fmt(c.weibel.v01) << "\n";
  out << "v02 = " << fmt(c.weibel.v02) << "\n";
  out << "k0 = " << fmt(c.weibel.k0) << "\n";
  out << "v_max = " << fmt(c.v_max) << "\n";
  out << "nx = " << c.n_x << "\n";
  out << "nv1 = " << c.n_v1 << "\n";
  out << "nv2 = " << c.n_v2 << "\n";
  out << "degree = " << c.degree << "\n";
  out << "basis = " << (c.family == BasisFamily::PType ? "p" : "q") << "\n";
  out << "flux = " << to_string(c.flux) << "\n";
  out << "cfl = " << fmt(c.step.cfl) << "\n";
  if (c.step.fixed_dt) out << "fixed_dt = " << fmt(*c.step.fixed_dt) << "\n";
  out << "k3_dt_coeff = " << fmt(c.step.k3_coeff) << "\n";
  out << "t_end = " << fmt(c.t_end) << "\n";
  out << "diag_every = " << c.diag_every << "\n";
  auto list = [&](const char* key, const std::vector<double>& xs) {
    if (xs.empty()) return;
    out << key << " = ";
    for (size_t i = 0; i < xs.size(); ++i)
      out << (i ? "," : "") << fmt(xs[i]);
    out << "\n";
  };
  list("snapshot_times", c.snapshot_times);
  list("slice_x", c.slice_x);
  out << "slice_res = " << c.slice_res << "\n";
  out << "output_dir = " << c.output_dir << "\n";
  out << "threads = " << c.threads << "\n";
  out << "quad_init_pts = " << c.quad_init_pts << "\n";
  return out.str();
}

}  // namespace vmdg
