#pragma once

#include <numbers>

namespace nulgi {

// Natural-unit conversions. Baselines enter the phases as L in 1/eV;
// the km factor follows from hbar*c = 197.3269804 MeV*fm, so that
// dm2[eV^2] * L[km] / (4 E[GeV]) matches the conventional
// 1.2669 * dm2 * L / E phase.
inline constexpr double kKmToInvEv = 5.0677307e9;
inline constexpr double kGevToEv = 1.0e9;

inline constexpr double deg_to_rad(double deg) {
  return deg * std::numbers::pi / 180.0;
}

inline constexpr double rad_to_deg(double rad) {
  return rad * 180.0 / std::numbers::pi;
}

}  // namespace nulgi
