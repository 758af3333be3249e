#pragma once

// Deterministic text output: fixed 17-significant-digit scientific notation
// so identical inputs give byte-identical files.

#include <ostream>
#include <string>
#include <vector>

#include "squeezetrap/dynamics.hpp"
#include "squeezetrap/equilibria.hpp"
#include "squeezetrap/floquet.hpp"

namespace squeezetrap {

std::string format_g17(double x);

void write_trajectory_csv(std::ostream& os, const Trajectory& tr);
void write_stability_csv(std::ostream& os,
                         const std::vector<StabilityPoint>& points);

struct SpectrumRow {
  double k_a = 0.0;
  int m_a = 0;
  double k_r = 0.0;
  int m_r = 0;
  int l = 0;
  double E = 0.0;
};

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows);

struct RootRow {
  StationaryPoint point;
  StationaryClass classification = StationaryClass::degenerate;
};

void write_roots_csv(std::ostream& os, const std::vector<RootRow>& rows);

}  // namespace squeezetrap
