#include "nulgi/lgi.hpp"

#include <stdexcept>

#include "nulgi/osc_model.hpp"

namespace nulgi {

void BaselineSchedule::validate() const {
  if (!(l1_km >= 0.0)) {
    throw std::invalid_argument("BaselineSchedule.l1_km: must be >= 0");
  }
  if (!(spacing_km >= 0.0)) {
    throw std::invalid_argument("BaselineSchedule.spacing_km: must be >= 0");
  }
}

double pair_correlator(const OscillationParams& params, double l_first_km,
                       double separation_km) {
  const FlavorTriple first = flavor_probabilities_from_e(params, l_first_km);
  const FlavorTriple ret =
      conditional_return_probabilities(params, separation_km);
  return first.e * (2.0 * ret.e - 1.0) - first.mu * (2.0 * ret.mu - 1.0) -
         first.tau * (2.0 * ret.tau - 1.0);
}

CorrelatorResult lgi_correlator(const OscillationParams& params,
                                const BaselineSchedule& schedule) {
  schedule.validate();
  CorrelatorResult r;
  r.schedule = schedule;
  r.c12 = pair_correlator(params, schedule.l1_km, schedule.spacing_km);
  r.c23 = pair_correlator(params, schedule.l2_km(), schedule.spacing_km);
  r.c34 = pair_correlator(params, schedule.l3_km(), schedule.spacing_km);
  r.c14 = pair_correlator(params, schedule.l1_km, 3.0 * schedule.spacing_km);
  r.c_total = r.c12 + r.c23 + r.c34 - r.c14;
  return r;
}

}  // namespace nulgi
