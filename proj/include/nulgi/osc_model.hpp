#pragma once

#include "nulgi/params.hpp"

namespace nulgi {

// Dimensionless quantities shared by the series-expansion probabilities:
//   delta = dm31_sq * L / (4E)
//   a_mat = 2 E V / dm31_sq
//   f     = sin(V L / 2) / a_mat         (solar factor; V L / 2 == a_mat*delta)
//   g     = sin((a_mat - 1) delta) / (a_mat - 1)   (resonance factor)
// f and g use a Taylor fallback across their removable singularities at
// a_mat -> 0 and a_mat -> 1.
struct KinematicFactors {
  double delta;
  double a_mat;
  double f;
  double g;
};

struct FlavorTriple {
  double e;
  double mu;
  double tau;

  double operator[](Flavor f) const {
    switch (f) {
      case Flavor::e: return e;
      case Flavor::mu: return mu;
      default: return tau;
    }
  }
  double sum() const { return e + mu + tau; }
};

// V = 7.56e-14 (rho / g cm^-3) Y_e eV. Throws std::domain_error on
// rho < 0 or ye outside [0, 1].
double potential_from_density(double rho_g_cm3, double ye);

KinematicFactors kinematic_factors(const OscillationParams& params,
                                   double length_km);

// Second-order expansion probabilities (P_e, P_mu, P_tau) for a nu_e beam
// after length_km. The three values sum to 1 identically; they are not
// clamped to [0, 1]. Validity domain: alpha and sin(theta13) small, E ~ GeV.
FlavorTriple flavor_probabilities_from_e(const OscillationParams& params,
                                         double length_km);

// Second-leg return probabilities (P_ee, P_mu->e, P_tau->e) over a
// separation, as they appear in the pair-correlator brackets: the mu/tau
// interference factor is {cos(delta - d_cp) - sin d_cp sin delta}, with
// + sign for the mu row and - for the tau row.
FlavorTriple conditional_return_probabilities(const OscillationParams& params,
                                              double separation_km);

// Collapse-chain joint probability: nu_e observed at l1, then `target`
// observed at l2. Throws std::invalid_argument if l2 < l1.
double joint_probability_e_then(const OscillationParams& params, Flavor target,
                                double l1_km, double l2_km);

}  // namespace nulgi
