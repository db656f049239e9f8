#pragma once

#include <array>
#include <complex>

#include "nulgi/lgi.hpp"
#include "nulgi/osc_model.hpp"
#include "nulgi/params.hpp"

namespace nulgi {

using Complex = std::complex<double>;
using Mat3c = std::array<std::array<Complex, 3>, 3>;

// Row-index = initial flavor, column = final flavor; entries are squared
// moduli of a unitary matrix, so rows and columns each sum to 1.
struct TransitionMatrix {
  std::array<std::array<double, 3>, 3> p{};

  double operator()(Flavor a, Flavor b) const {
    return p[static_cast<int>(a)][static_cast<int>(b)];
  }
};

// Standard PMNS parameterization; angles in [0, pi/2], phase in radians.
Mat3c pmns_matrix(double theta12, double theta13, double theta23,
                  double delta_cp);

// Exact constant-density evolution. The Hamiltonian (flavor basis) is
//   H = U diag(0, dm21, dm31) U^dagger / 2E + diag(V, 0, 0),
// diagonalized once per parameter point; exp(-iHL) then costs one 3x3
// sandwich per length. Falls back to a scaled-and-squared series if the
// Jacobi sweep ever fails to converge.
class Propagator {
 public:
  explicit Propagator(const OscillationParams& params);

  Mat3c evolution(double length_km) const;
  TransitionMatrix transition(double length_km) const;

  // e-row of the transition matrix: exact counterpart of the expansion.
  FlavorTriple probabilities_from_e(double length_km) const;

  double pair_correlator(double l_first_km, double separation_km) const;
  CorrelatorResult lgi_correlator(const BaselineSchedule& schedule) const;

  bool eigensolve_converged() const { return eig_ok_; }

 private:
  Mat3c hamiltonian_{};            // eV
  std::array<double, 3> eigenvalues_{};  // eV
  Mat3c eigenvectors_{};           // columns
  bool eig_ok_ = false;
};

Mat3c evolution_operator(const OscillationParams& params, double length_km);
TransitionMatrix exact_transition_matrix(const OscillationParams& params,
                                         double length_km);
CorrelatorResult exact_lgi_correlator(const OscillationParams& params,
                                      const BaselineSchedule& schedule);

}  // namespace nulgi
