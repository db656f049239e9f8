#pragma once

#include "nulgi/params.hpp"

namespace nulgi {

// Four equally spaced measurement baselines L1, L1+dL, L1+2dL, L1+3dL.
struct BaselineSchedule {
  double l1_km = 0.0;
  double spacing_km = 0.0;

  double l2_km() const { return l1_km + spacing_km; }
  double l3_km() const { return l1_km + 2.0 * spacing_km; }
  double l4_km() const { return l1_km + 3.0 * spacing_km; }

  void validate() const;  // throws std::invalid_argument
};

struct CorrelatorResult {
  double c12 = 0.0;
  double c23 = 0.0;
  double c34 = 0.0;
  double c14 = 0.0;
  double c_total = 0.0;  // c12 + c23 + c34 - c14
  BaselineSchedule schedule{};
};

// <Q(l_first) Q(l_first + separation)> for a nu_e beam:
//   P_e(l_first) [2 P_ee(sep) - 1] - P_mu(l_first) [2 P_mu->e(sep) - 1]
//                                  - P_tau(l_first) [2 P_tau->e(sep) - 1]
double pair_correlator(const OscillationParams& params, double l_first_km,
                       double separation_km);

// C = C12 + C23 + C34 - C14 over the schedule. Each pair's first leg starts
// from the source: the first factor is the unconditioned flavor triple at
// the pair's first measurement length.
CorrelatorResult lgi_correlator(const OscillationParams& params,
                                const BaselineSchedule& schedule);

}  // namespace nulgi
