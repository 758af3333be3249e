#include "squeezetrap/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "squeezetrap/io.hpp"
#include "squeezetrap/verify.hpp"

namespace squeezetrap {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitDivergence = 2;

// Writes through `fn` to the configured path, or to stdout when no path is
// set (run summaries then go to stderr to keep the data stream clean).
template <typename Fn>
bool with_output(const RunConfig& c, Fn&& fn, std::ostream*& summary) {
  if (c.output_path.empty()) {
    fn(std::cout);
    summary = &std::cerr;
    return true;
  }
  std::ofstream out(c.output_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << c.output_path << "\n";
    return false;
  }
  fn(out);
  summary = &std::cout;
  return true;
}

}  // namespace

int cmd_verify(const std::string& filter, int threads) {
  const std::vector<CheckResult> results = run_verification(filter, threads);
  if (results.empty()) {
    std::cerr << "error: no checks match filter \"" << filter << "\"\n";
    return kExitCheckFailure;
  }
  bool all_passed = true;
  for (const CheckResult& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name
              << "  residual=" << format_g17(r.residual)
              << "  threshold=" << format_g17(r.threshold) << "  (" << r.detail
              << ")\n";
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED")
            << " (" << results.size() << " run)\n";
  return all_passed ? kExitOk : kExitCheckFailure;
}

int cmd_simulate(const RunConfig& c) {
  HamiltonianParams p;
  PhaseState s0;
  try {
    p = to_hamiltonian_params(c);
    s0 = initial_state(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }

  const Trajectory tr = integrate(s0, c.t0, c.t1, p, c.tol);

  std::ostream* summary = nullptr;
  if (!with_output(c, [&](std::ostream& os) { write_trajectory_csv(os, tr); },
                   summary))
    return kExitCheckFailure;

  double max_res = 0.0;
  for (const Trajectory::Sample& s : tr.samples)
    max_res = std::max({max_res, std::abs(s.res_a), std::abs(s.res_r)});
  const double final_energy =
      tr.samples.empty() ? 0.0 : tr.samples.back().energy;
  *summary << "steps=" << tr.steps << " max_residual=" << format_g17(max_res)
           << " final_energy=" << format_g17(final_energy) << "\n";

  if (tr.status != OdeStatus::completed) {
    *summary << "divergence: " << tr.diagnostic << "\n";
    return kExitDivergence;
  }
  return kExitOk;
}

int cmd_equilibria(const RunConfig& c) {
  HamiltonianParams p;
  try {
    p = to_hamiltonian_params(c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }

  std::vector<StationaryPoint> roots;
  if (c.trap.kind == TrapKind::combined) {
    roots = solve_combined(c.equilibria_t, p);
  } else {
    roots = solve_pseudopotential(p, c.multistart).roots;
  }

  std::vector<RootRow> rows;
  rows.reserve(roots.size());
  for (const StationaryPoint& pt : roots)
    rows.push_back({pt, classify_stationary(pt, p, c.equilibria_t)});

  std::ostream* summary = nullptr;
  if (!with_output(c, [&](std::ostream& os) { write_roots_csv(os, rows); },
                   summary))
    return kExitCheckFailure;
  *summary << "roots=" << rows.size() << "\n";
  if (!rows.empty())
    *summary << "note: eta is not part of the stationarity system; the "
                "phase-space condition xi*eta >= 1 is not enforced\n";
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c) {
  MathieuParams mpa, mpr;
  FloquetResult fa, fr;
  try {
    mpa = mathieu_params(c.particle, c.trap, c.drive, Mode::axial);
    mpr = mathieu_params(c.particle, c.trap, c.drive, Mode::radial);
    fa = monodromy(mpa, c.drive.Omega);
    fr = monodromy(mpr, c.drive.Omega);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  if (!fa.stable || !fr.stable) {
    const char* name = !fa.stable ? "axial" : "radial";
    const MathieuParams& bad = !fa.stable ? mpa : mpr;
    std::cerr << "error: " << name << " mode is unstable at a="
              << format_g17(bad.a) << " q=" << format_g17(bad.q) << "\n";
    return kExitCheckFailure;
  }

  const double hbar = config_hbar(c);
  const double omega_c = (c.trap.kind == TrapKind::combined)
                             ? c.particle.Q * c.trap.B0 / c.particle.M
                             : 0.0;
  const double k_r = (c.l + 1) / 2.0;
  std::vector<SpectrumRow> rows;
  for (int ma = 0; ma <= c.spectrum_m_max; ++ma) {
    for (int mr = 0; mr <= c.spectrum_m_max; ++mr) {
      SpectrumRow row;
      row.k_a = c.k_a;
      row.m_a = ma;
      row.k_r = k_r;
      row.m_r = mr;
      row.l = c.l;
      row.E = quasienergy(fa.mu, fr.mu, {c.k_a, ma}, {k_r, mr}, c.l, omega_c,
                          hbar);
      rows.push_back(row);
    }
  }

  std::ostream* summary = nullptr;
  if (!with_output(c, [&](std::ostream& os) { write_spectrum_csv(os, rows); },
                   summary))
    return kExitCheckFailure;
  *summary << "rows=" << rows.size() << " mu_a=" << format_g17(fa.mu)
           << " mu_r=" << format_g17(fr.mu) << "\n";
  return kExitOk;
}

int cmd_stability(const RunConfig& c, int threads) {
  std::vector<StabilityPoint> points;
  try {
    points = stability_scan(c.stability, 2.0, threads);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDivergence;
  }
  std::ostream* summary = nullptr;
  if (!with_output(c,
                   [&](std::ostream& os) { write_stability_csv(os, points); },
                   summary))
    return kExitCheckFailure;
  int stable_count = 0;
  for (const StabilityPoint& p : points) stable_count += p.stable ? 1 : 0;
  *summary << "points=" << points.size() << " stable=" << stable_count
           << "\n";
  return kExitOk;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"squeezed coherent state dynamics in quadrupole and octupole "
               "ion traps"};
  app.require_subcommand(1);

  std::string config_path;
  std::string filter;
  int threads = 0;

  CLI::App* verify = app.add_subcommand("verify", "run the oracle and "
                                                  "property checks");
  verify->add_option("--filter", filter, "only run checks whose name "
                                         "contains this substring");
  verify->add_option("--threads", threads, "worker threads (0 = all)");
  verify->add_option("--config", config_path, "ignored by verify");

  auto add_config_command = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--config", config_path, "JSON configuration file")
        ->required();
    cmd->add_option("--threads", threads, "worker threads (0 = all)");
    return cmd;
  };
  CLI::App* simulate =
      add_config_command("simulate", "integrate the phase-space equations");
  CLI::App* equilibria =
      add_config_command("equilibria", "solve for stationary configurations");
  CLI::App* spectrum =
      add_config_command("spectrum", "quasienergy spectrum of stable modes");
  CLI::App* stability =
      add_config_command("stability", "Mathieu stability map over (a, q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitCheckFailure;
  }

  if (const char* env = std::getenv("SQUEEZETRAP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      threads = static_cast<int>(v);
  }

  if (verify->parsed()) return cmd_verify(filter, threads);

  RunConfig c;
  try {
    c = load_config(config_path);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  c.multistart.threads = threads;

  if (simulate->parsed()) return cmd_simulate(c);
  if (equilibria->parsed()) return cmd_equilibria(c);
  if (spectrum->parsed()) return cmd_spectrum(c);
  if (stability->parsed()) return cmd_stability(c, threads);
  return kExitCheckFailure;
}

}  // namespace squeezetrap
