#pragma once

#include <optional>

#include "nulgi/units.hpp"

namespace nulgi {

enum class Flavor { e = 0, mu = 1, tau = 2 };

// Dichotomic observable: +1 for nu_e, -1 for nu_mu or nu_tau.
constexpr int q_value(Flavor f) { return f == Flavor::e ? +1 : -1; }

const char* to_string(Flavor f);

// Physical inputs of the three-flavor transition probabilities.
// Angles are radians; degrees exist only at the CLI boundary.
// Defaults are the global-fit working point used throughout the CLI.
struct OscillationParams {
  double dm21_sq = 7.50e-5;                    // eV^2
  double dm31_sq = 2.457e-3;                   // eV^2, nonzero
  double theta12 = deg_to_rad(33.48);          // rad
  double theta13 = deg_to_rad(8.50);           // rad
  double theta23 = deg_to_rad(42.3);           // rad
  double delta_cp = deg_to_rad(306.0);         // rad, [0, 2pi)
  double energy = 1.0 * kGevToEv;              // eV, positive
  double potential = 7.56e-14 * 3.0 * 0.5;     // eV, nonnegative

  // Replaces alpha = dm21_sq/dm31_sq in the expansion formulas while
  // dm31_sq (hence the phase and the matter parameter) stays fixed.
  std::optional<double> alpha_override{};

  double alpha() const {
    return alpha_override ? *alpha_override : dm21_sq / dm31_sq;
  }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace nulgi
