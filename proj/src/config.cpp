#include "squeezetrap/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace squeezetrap {

namespace {

std::string join_violations(const std::vector<std::string>& v) {
  std::ostringstream os;
  os << "configuration invalid (" << v.size() << " violation"
     << (v.size() == 1 ? "" : "s") << "):";
  for (const std::string& s : v) os << "\n  - " << s;
  return os.str();
}

}  // namespace

config_error::config_error(std::vector<std::string> v)
    : std::runtime_error(join_violations(v)), violations(std::move(v)) {}

namespace {

using nlohmann::json;

class Validator {
 public:
  explicit Validator(const json& root) : root_(root) {}

  std::vector<std::string> take() { return std::move(violations_); }

  void fail(const std::string& path, const std::string& why) {
    violations_.push_back(path + ": " + why);
  }

  bool has(const std::string& section, const std::string& key) const {
    return root_.contains(section) && root_.at(section).contains(key);
  }

  double number(const std::string& section, const std::string& key,
                double fallback) {
    if (!has(section, key)) return fallback;
    const json& v = root_.at(section).at(key);
    if (!v.is_number()) {
      fail(section + "." + key, "must be a number");
      return fallback;
    }
    return v.get<double>();
  }

  int integer(const std::string& section, const std::string& key,
              int fallback) {
    if (!has(section, key)) return fallback;
    const json& v = root_.at(section).at(key);
    if (!v.is_number_integer()) {
      fail(section + "." + key, "must be an integer");
      return fallback;
    }
    return v.get<int>();
  }

  bool boolean(const std::string& section, const std::string& key,
               bool fallback) {
    if (!has(section, key)) return fallback;
    const json& v = root_.at(section).at(key);
    if (!v.is_boolean()) {
      fail(section + "." + key, "must be a boolean");
      return fallback;
    }
    return v.get<bool>();
  }

  std::string text(const std::string& section, const std::string& key,
                   const std::string& fallback) {
    if (!has(section, key)) return fallback;
    const json& v = root_.at(section).at(key);
    if (!v.is_string()) {
      fail(section + "." + key, "must be a string");
      return fallback;
    }
    return v.get<std::string>();
  }

  bool pair(const std::string& section, const std::string& key, double out[2]) {
    if (!has(section, key)) return false;
    const json& v = root_.at(section).at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      fail(section + "." + key, "must be an array of two numbers");
      return false;
    }
    out[0] = v[0].get<double>();
    out[1] = v[1].get<double>();
    return true;
  }

  bool triple(const std::string& section, const std::string& key,
              double out[3]) {
    if (!has(section, key)) return false;
    const json& v = root_.at(section).at(key);
    if (!v.is_array() || v.size() != 3) {
      fail(section + "." + key, "must be an array of three numbers");
      return false;
    }
    for (int i = 0; i < 3; ++i) {
      if (!v[i].is_number()) {
        fail(section + "." + key, "must be an array of three numbers");
        return false;
      }
      out[i] = v[i].get<double>();
    }
    return true;
  }

 private:
  const json& root_;
  std::vector<std::string> violations_;
};

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw config_error({std::string("parse error: ") + e.what()});
  }
  if (!root.is_object()) throw config_error({"top level: must be an object"});

  Validator v(root);
  RunConfig c;

  const std::string kind = v.text("trap", "kind", "combined");
  if (kind == "combined") {
    c.trap.kind = TrapKind::combined;
  } else if (kind == "ideal_paul") {
    c.trap.kind = TrapKind::ideal_paul;
  } else {
    v.fail("trap.kind", "must be \"combined\" or \"ideal_paul\"");
  }
  if (v.has("trap", "c2")) {
    c.trap.c2 = v.number("trap", "c2", 0.0);
    if (c.trap.c2 == 0.0) v.fail("trap.c2", "must be nonzero");
  } else {
    const double r0 = v.number("trap", "r0", 0.0);
    const double z0 = v.number("trap", "z0", 0.0);
    if (r0 * r0 + 2.0 * z0 * z0 <= 0.0) {
      v.fail("trap", "needs c2 or a nondegenerate (r0, z0) pair");
    } else {
      c.trap.c2 = quadrupole_coefficient(r0, z0);
    }
  }
  c.trap.D = v.number("trap", "D", 0.0);
  c.trap.C4 = v.number("trap", "C4", 0.0);
  c.trap.C6 = v.number("trap", "C6", 0.0);
  c.trap.B0 = v.number("trap", "B0", 0.0);

  c.drive.U0 = v.number("drive", "U0", 0.0);
  c.drive.V0 = v.number("drive", "V0", 0.0);
  c.drive.Omega = v.number("drive", "Omega", 0.0);
  if (c.drive.V0 != 0.0 && c.drive.Omega <= 0.0)
    v.fail("drive.Omega", "must be > 0 when V0 is nonzero");

  c.particle.Q = v.number("particle", "Q", 0.0);
  c.particle.M = v.number("particle", "M", 0.0);
  if (c.particle.Q == 0.0) v.fail("particle.Q", "must be nonzero");
  if (c.particle.M <= 0.0) v.fail("particle.M", "must be > 0");

  c.k_a = v.number("modes", "k_a", 0.25);
  if (c.k_a != 0.25 && c.k_a != 0.75)
    v.fail("modes.k_a", "allowed values are 0.25 and 0.75");
  c.m_a = v.integer("modes", "m_a", 0);
  if (c.m_a < 0) v.fail("modes.m_a", "must be >= 0");
  c.l = v.integer("modes", "l", 0);
  if (c.l < 0) v.fail("modes.l", "must be >= 0");
  c.m_r = v.integer("modes", "m_r", 0);
  if (c.m_r < 0) v.fail("modes.m_r", "must be >= 0");

  double buf2[2];
  if (v.pair("initial_state", "z_a", buf2)) {
    c.z_a = complexd(buf2[0], buf2[1]);
    if (std::norm(c.z_a) >= 1.0)
      v.fail("initial_state.z_a", "must satisfy |z| < 1 (open unit disk)");
  }
  if (v.pair("initial_state", "z_r", buf2)) {
    c.z_r = complexd(buf2[0], buf2[1]);
    if (std::norm(c.z_r) >= 1.0)
      v.fail("initial_state.z_r", "must satisfy |z| < 1 (open unit disk)");
  }
  double buf3[3];
  if (v.triple("initial_state", "xieta_a", buf3)) {
    c.has_xieta_a = true;
    c.xieta_a = {buf3[0], buf3[1], buf3[2]};
    if (buf3[0] <= 0.0 || buf3[1] <= 0.0)
      v.fail("initial_state.xieta_a", "xi and eta must be > 0");
    else if (std::abs(sheet_residual(c.xieta_a)) > 1e-9)
      v.fail("initial_state.xieta_a",
             "must satisfy sigma^2 = xi*eta - 1 (sheet constraint)");
  }
  if (v.triple("initial_state", "xieta_r", buf3)) {
    c.has_xieta_r = true;
    c.xieta_r = {buf3[0], buf3[1], buf3[2]};
    if (buf3[0] <= 0.0 || buf3[1] <= 0.0)
      v.fail("initial_state.xieta_r", "xi and eta must be > 0");
    else if (std::abs(sheet_residual(c.xieta_r)) > 1e-9)
      v.fail("initial_state.xieta_r",
             "must satisfy sigma^2 = xi*eta - 1 (sheet constraint)");
  }

  c.t0 = v.number("integration", "t0", 0.0);
  c.t1 = v.number("integration", "t1", c.t0);
  if (c.t1 < c.t0) v.fail("integration.t1", "must be >= t0");
  c.tol = v.number("integration", "tol", 1e-10);
  if (c.tol <= 0.0 || c.tol >= 1.0)
    v.fail("integration.tol", "must lie in (0, 1)");

  c.dimensionless = v.boolean("scales", "dimensionless", false);
  c.physical_scales = v.boolean("scales", "physical_scales", true);

  c.omega_a_override = v.number("frequencies", "omega_a", 0.0);
  c.omega_r_override = v.number("frequencies", "omega_r", 0.0);
  if (v.has("frequencies", "omega_a") && c.omega_a_override <= 0.0)
    v.fail("frequencies.omega_a", "must be > 0 when given");
  if (v.has("frequencies", "omega_r") && c.omega_r_override <= 0.0)
    v.fail("frequencies.omega_r", "must be > 0 when given");

  c.output_path = v.text("output", "path", "");
  c.output_format = v.text("output", "format", "csv");
  if (c.output_format != "csv")
    v.fail("output.format", "only \"csv\" is supported");

  c.stability.a_min = v.number("stability", "a_min", 0.0);
  c.stability.a_max = v.number("stability", "a_max", 1.0);
  c.stability.na = v.integer("stability", "na", 50);
  c.stability.q_min = v.number("stability", "q_min", 0.0);
  c.stability.q_max = v.number("stability", "q_max", 1.0);
  c.stability.nq = v.integer("stability", "nq", 50);
  if (c.stability.na < 1) v.fail("stability.na", "must be >= 1");
  if (c.stability.nq < 1) v.fail("stability.nq", "must be >= 1");

  c.spectrum_m_max = v.integer("spectrum", "m_max", 4);
  if (c.spectrum_m_max < 0) v.fail("spectrum.m_max", "must be >= 0");

  c.equilibria_t = v.number("equilibria", "t", 0.0);
  c.multistart.lo = v.number("equilibria", "lo", 0.1);
  c.multistart.hi = v.number("equilibria", "hi", 10.0);
  if (c.multistart.lo <= 0.0 || c.multistart.hi <= c.multistart.lo)
    v.fail("equilibria", "needs 0 < lo < hi");
  c.multistart.grid = v.integer("equilibria", "grid", 4);
  if (c.multistart.grid < 1) v.fail("equilibria.grid", "must be >= 1");

  std::vector<std::string> violations = v.take();
  if (!violations.empty()) throw config_error(std::move(violations));
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error({"file: cannot open " + path});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

double config_hbar(const RunConfig& c) {
  return c.dimensionless ? 1.0 : kHbarSI;
}

HamiltonianParams to_hamiltonian_params(const RunConfig& c) {
  HamiltonianParams p;
  p.labels_a = {c.k_a, c.m_a};
  p.labels_r = {(c.l + 1) / 2.0, c.m_r};
  p.l = c.l;
  p.particle = c.particle;
  p.geometry = c.trap;
  p.drive = c.drive;
  p.physical_scales = c.physical_scales;
  p.freq = derive_frequencies(c.particle, c.trap, c.drive, config_hbar(c),
                              c.omega_a_override, c.omega_r_override);
  return p;
}

PhaseState initial_state(const RunConfig& c) {
  PhaseState s;
  s.axial = c.has_xieta_a ? c.xieta_a : disk_to_xieta(c.z_a);
  s.radial = c.has_xieta_r ? c.xieta_r : disk_to_xieta(c.z_r);
  return s;
}

}  // namespace squeezetrap
