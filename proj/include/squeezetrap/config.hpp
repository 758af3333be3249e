#pragma once

// JSON run configuration.  Validation collects every violation with its
// field path before failing, so one load reports all problems at once.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "squeezetrap/dynamics.hpp"
#include "squeezetrap/equilibria.hpp"
#include "squeezetrap/floquet.hpp"

namespace squeezetrap {

struct config_error : std::runtime_error {
  explicit config_error(std::vector<std::string> v);
  std::vector<std::string> violations;
};

struct RunConfig {
  TrapGeometry trap;
  DriveParams drive;
  Particle particle;

  double k_a = 0.25;
  int m_a = 0;
  int l = 0;  // fixes k_r = (l + 1) / 2
  int m_r = 0;

  // Initial state per mode; the xieta variant wins when given.
  complexd z_a{0.0, 0.0};
  complexd z_r{0.0, 0.0};
  bool has_xieta_a = false;
  bool has_xieta_r = false;
  XiEtaState xieta_a;
  XiEtaState xieta_r;

  double t0 = 0.0;
  double t1 = 0.0;
  double tol = 1e-10;

  bool dimensionless = false;  // hbar = 1 instead of the SI value
  bool physical_scales = true;

  double omega_a_override = 0.0;  // 0: derive from the trap
  double omega_r_override = 0.0;

  std::string output_path;  // empty: stdout
  std::string output_format = "csv";

  StabilityGrid stability;
  int spectrum_m_max = 4;

  double equilibria_t = 0.0;
  MultistartOptions multistart;
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& json_text);

double config_hbar(const RunConfig& c);

// Assembles labels, frequencies and trap data; throws
// std::invalid_argument when no confining frequency can be derived.
HamiltonianParams to_hamiltonian_params(const RunConfig& c);

// Initial (xi, eta, sigma) state from either representation.
PhaseState initial_state(const RunConfig& c);

}  // namespace squeezetrap
