#include "nulgi/osc_model.hpp"

#include <cmath>
#include <stdexcept>

#include "nulgi/units.hpp"

namespace nulgi {

namespace {

// sin(k x)/x, third-order Taylor below |x| = 1e-6 so the removable
// singularities at x = 0 stay smooth to ~1e-12.
double sin_ratio(double k, double x) {
  if (std::abs(x) < 1e-6) {
    return k - k * k * k * x * x / 6.0;
  }
  return std::sin(k * x) / x;
}

// Everything Eqs.-(4)-(6)-shaped expressions share at one length.
struct ExpansionTerms {
  double delta;
  double a_mat;
  double f;
  double g;
  double solar;        // alpha^2 sin^2(2 th12) f^2
  double resonance;    // 4 s13^2 g^2
  double interf_coef;  // 2 alpha s13 sin(2 th12) sin(2 th23) f g
  double c23_sq;
  double s23_sq;
};

ExpansionTerms expansion_terms(const OscillationParams& p, double length_km) {
  ExpansionTerms t{};
  const double length = length_km * kKmToInvEv;
  t.delta = p.dm31_sq * length / (4.0 * p.energy);
  t.a_mat = 2.0 * p.energy * p.potential / p.dm31_sq;
  t.f = sin_ratio(t.delta, t.a_mat);
  t.g = sin_ratio(t.delta, t.a_mat - 1.0);

  const double alpha = p.alpha();
  const double s13 = std::sin(p.theta13);
  const double sin2_12 = std::sin(2.0 * p.theta12);
  const double sin2_23 = std::sin(2.0 * p.theta23);
  const double c23 = std::cos(p.theta23);
  const double s23 = std::sin(p.theta23);

  t.solar = alpha * alpha * sin2_12 * sin2_12 * t.f * t.f;
  t.resonance = 4.0 * s13 * s13 * t.g * t.g;
  t.interf_coef = 2.0 * alpha * s13 * sin2_12 * sin2_23 * t.f * t.g;
  t.c23_sq = c23 * c23;
  t.s23_sq = s23 * s23;
  return t;
}

FlavorTriple assemble(const ExpansionTerms& t, double phase_factor) {
  const double interf = t.interf_coef * phase_factor;
  return {1.0 - t.solar - t.resonance,
          t.solar * t.c23_sq + t.resonance * t.s23_sq + interf,
          t.solar * t.s23_sq + t.resonance * t.c23_sq - interf};
}

}  // namespace

double potential_from_density(double rho_g_cm3, double ye) {
  if (!(rho_g_cm3 >= 0.0)) {
    throw std::domain_error("potential_from_density: rho must be >= 0");
  }
  if (!(ye >= 0.0 && ye <= 1.0)) {
    throw std::domain_error("potential_from_density: ye must be in [0, 1]");
  }
  return 7.56e-14 * rho_g_cm3 * ye;
}

KinematicFactors kinematic_factors(const OscillationParams& params,
                                   double length_km) {
  if (!(length_km >= 0.0)) {
    throw std::invalid_argument("kinematic_factors: length must be >= 0");
  }
  const ExpansionTerms t = expansion_terms(params, length_km);
  return {t.delta, t.a_mat, t.f, t.g};
}

FlavorTriple flavor_probabilities_from_e(const OscillationParams& params,
                                         double length_km) {
  if (!(length_km >= 0.0)) {
    throw std::invalid_argument(
        "flavor_probabilities_from_e: length must be >= 0");
  }
  const ExpansionTerms t = expansion_terms(params, length_km);
  return assemble(t, std::cos(t.delta - params.delta_cp));
}

FlavorTriple conditional_return_probabilities(const OscillationParams& params,
                                              double separation_km) {
  if (!(separation_km >= 0.0)) {
    throw std::invalid_argument(
        "conditional_return_probabilities: separation must be >= 0");
  }
  const ExpansionTerms t = expansion_terms(params, separation_km);
  // Literal second-leg factor; algebraically equal to cos(delta) cos(d_cp).
  const double factor = std::cos(t.delta - params.delta_cp) -
                        std::sin(params.delta_cp) * std::sin(t.delta);
  return assemble(t, factor);
}

double joint_probability_e_then(const OscillationParams& params, Flavor target,
                                double l1_km, double l2_km) {
  if (!(l1_km >= 0.0)) {
    throw std::invalid_argument("joint_probability_e_then: l1 must be >= 0");
  }
  if (l2_km < l1_km) {
    throw std::invalid_argument("joint_probability_e_then: requires l2 >= l1");
  }
  const double first = flavor_probabilities_from_e(params, l1_km).e;
  const FlavorTriple second =
      flavor_probabilities_from_e(params, l2_km - l1_km);
  return first * second[target];
}

}  // namespace nulgi
