#include "squeezetrap/io.hpp"

#include <cstdio>

namespace squeezetrap {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,xi_a,eta_a,sigma_a,xi_r,eta_r,sigma_r,H,res_a,res_r\n";
  for (const Trajectory::Sample& s : tr.samples) {
    os << format_g17(s.t) << ',' << format_g17(s.state.axial.xi) << ','
       << format_g17(s.state.axial.eta) << ','
       << format_g17(s.state.axial.sigma) << ','
       << format_g17(s.state.radial.xi) << ','
       << format_g17(s.state.radial.eta) << ','
       << format_g17(s.state.radial.sigma) << ',' << format_g17(s.energy)
       << ',' << format_g17(s.res_a) << ',' << format_g17(s.res_r) << '\n';
  }
}

void write_stability_csv(std::ostream& os,
                         const std::vector<StabilityPoint>& points) {
  os << "a,q,stable,beta\n";
  for (const StabilityPoint& p : points) {
    os << format_g17(p.a) << ',' << format_g17(p.q) << ','
       << (p.stable ? 1 : 0) << ',' << format_g17(p.beta) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os,
                        const std::vector<SpectrumRow>& rows) {
  os << "k_a,m_a,k_r,m_r,l,E\n";
  for (const SpectrumRow& r : rows) {
    os << format_g17(r.k_a) << ',' << r.m_a << ',' << format_g17(r.k_r) << ','
       << r.m_r << ',' << r.l << ',' << format_g17(r.E) << '\n';
  }
}

void write_roots_csv(std::ostream& os, const std::vector<RootRow>& rows) {
  os << "xi_a,xi_r,residual,admissible,classification\n";
  for (const RootRow& r : rows) {
    os << format_g17(r.point.xi_a) << ',' << format_g17(r.point.xi_r) << ','
       << format_g17(r.point.residual) << ',' << (r.point.admissible ? 1 : 0)
       << ',' << to_string(r.classification) << '\n';
  }
}

}  // namespace squeezetrap
