#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "squeezetrap/config.hpp"
#include "squeezetrap/verify.hpp"

using namespace squeezetrap;

namespace {

bool mentions(const config_error& e, const std::string& needle) {
  return std::any_of(e.violations.begin(), e.violations.end(),
                     [&](const std::string& v) {
                       return v.find(needle) != std::string::npos;
                     });
}

const char* kMinimal = R"({
  "trap": {"kind": "combined", "c2": -1.0, "B0": 2.0},
  "drive": {"U0": -0.25},
  "particle": {"Q": 1.0, "M": 1.0},
  "scales": {"dimensionless": true}
})";

}  // namespace

TEST_CASE("minimal configuration fills the documented defaults") {
  const RunConfig c = parse_config(kMinimal);
  CHECK(c.trap.kind == TrapKind::combined);
  CHECK(c.k_a == 0.25);
  CHECK(c.m_a == 0);
  CHECK(c.l == 0);
  CHECK(c.z_a == complexd(0.0, 0.0));
  CHECK(!c.has_xieta_a);
  CHECK(c.t0 == 0.0);
  CHECK(c.t1 == 0.0);
  CHECK(c.tol == 1e-10);
  CHECK(c.output_format == "csv");
  CHECK(c.stability.na == 50);
  CHECK(c.spectrum_m_max == 4);
  CHECK(c.multistart.lo == 0.1);
  CHECK(c.multistart.hi == 10.0);
  CHECK(config_hbar(c) == 1.0);

  RunConfig si = c;
  si.dimensionless = false;
  CHECK(config_hbar(si) == 1.054571817e-34);
}

TEST_CASE("electrode radii are an alternative to a direct c2") {
  const RunConfig c = parse_config(R"({
    "trap": {"kind": "combined", "r0": 1.0, "z0": 1.0, "B0": 2.0},
    "drive": {"U0": -0.25},
    "particle": {"Q": 1.0, "M": 1.0}
  })");
  CHECK(c.trap.c2 == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("every violation is reported at once with its field path") {
  try {
    parse_config(R"({
      "trap": {"kind": "hexapole", "c2": -1.0},
      "particle": {"Q": 0.0, "M": -2.0},
      "modes": {"k_a": 0.5, "m_a": -1},
      "initial_state": {"z_a": [0.8, 0.7]},
      "integration": {"t0": 1.0, "t1": 0.0, "tol": 2.0},
      "output": {"format": "parquet"}
    })");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(e.violations.size() == 9);
    CHECK(mentions(e, "trap.kind"));
    CHECK(mentions(e, "particle.Q"));
    CHECK(mentions(e, "particle.M"));
    CHECK(mentions(e, "modes.k_a: allowed values are 0.25 and 0.75"));
    CHECK(mentions(e, "modes.m_a"));
    CHECK(mentions(e, "initial_state.z_a: must satisfy |z| < 1 (open unit disk)"));
    CHECK(mentions(e, "integration.t1"));
    CHECK(mentions(e, "integration.tol"));
    CHECK(mentions(e, "output.format"));
  }
}

TEST_CASE("malformed JSON and wrong types are rejected") {
  CHECK_THROWS_AS((void)parse_config("{ not json"), config_error);
  CHECK_THROWS_AS((void)parse_config("[1,2]"), config_error);
  try {
    parse_config(R"({
      "trap": {"kind": "combined", "c2": -1.0},
      "particle": {"Q": "one", "M": 1.0},
      "modes": {"m_a": 1.5}
    })");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(mentions(e, "particle.Q: must be a number"));
    CHECK(mentions(e, "modes.m_a: must be an integer"));
  }
}

TEST_CASE("hyperboloid initial data overrides the disk parameter") {
  const RunConfig c = parse_config(R"({
    "trap": {"kind": "combined", "c2": -1.0, "B0": 2.0},
    "drive": {"U0": -0.25},
    "particle": {"Q": 1.0, "M": 1.0},
    "initial_state": {"z_a": [0.5, 0.0], "xieta_a": [2.0, 1.0, 1.0]}
  })");
  REQUIRE(c.has_xieta_a);
  const PhaseState s = initial_state(c);
  CHECK(s.axial.xi == 2.0);
  CHECK(s.axial.eta == 1.0);
  CHECK(s.axial.sigma == 1.0);
  // z_r was absent: the radial mode starts at the vacuum.
  CHECK(s.radial.xi == 1.0);
  CHECK(s.radial.sigma == 0.0);

  try {
    parse_config(R"({
      "trap": {"kind": "combined", "c2": -1.0},
      "particle": {"Q": 1.0, "M": 1.0},
      "initial_state": {"xieta_r": [2.0, 1.0, 0.5]}
    })");
    FAIL("expected config_error");
  } catch (const config_error& e) {
    CHECK(mentions(e, "sheet constraint"));
  }
}

TEST_CASE("angular momentum quantum number fixes the radial index") {
  RunConfig c = parse_config(kMinimal);
  for (int l : {0, 1, 2, 5}) {
    c.l = l;
    const HamiltonianParams p = to_hamiltonian_params(c);
    CHECK(p.labels_r.k == (l + 1) / 2.0);
    CHECK(p.l == l);
  }
  const HamiltonianParams p = to_hamiltonian_params(c);
  CHECK(p.freq.omega_a == doctest::Approx(1.0));
  CHECK(p.freq.omega_r == doctest::Approx(std::sqrt(0.5)));
  CHECK(p.freq.hbar == 1.0);
}

TEST_CASE("verification checks run and pass on the unmodified library") {
  const auto results = run_verification("casimir");
  REQUIRE(results.size() == 2);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.passed);
    CHECK(r.residual <= r.threshold);
  }
  CHECK(run_verification("no-such-check").empty());
}

TEST_CASE("a corrupted moment oracle is caught by the verification suite") {
  // The third closed-form moment is deliberately detuned through the test
  // hook; the sample sweep against the operator oracle must notice.
  VerifyHooks hooks;
  hooks.husimi = [](int n, const ModeLabels& lab) {
    const double q = husimi_Q(n, lab);
    return (n == 3) ? q + 4.0 * lab.m * (2.0 * lab.k + lab.m - 1.0) : q;
  };
  const auto results = run_verification("s_oracle_moments", 0, hooks);
  REQUIRE(results.size() == 1);
  CHECK(!results.front().passed);
  CHECK(results.front().residual > results.front().threshold);

  const auto clean = run_verification("s_oracle_moments");
  REQUIRE(clean.size() == 1);
  CHECK(clean.front().passed);
}
