#include "nulgi/exact_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "nulgi/units.hpp"

namespace nulgi {

namespace {

Mat3c zero3() {
  return Mat3c{};
}

Mat3c identity3() {
  Mat3c m{};
  m[0][0] = m[1][1] = m[2][2] = 1.0;
  return m;
}

Mat3c multiply(const Mat3c& a, const Mat3c& b) {
  Mat3c r{};
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      const Complex aik = a[i][k];
      if (aik == Complex{}) continue;
      for (int j = 0; j < 3; ++j) r[i][j] += aik * b[k][j];
    }
  }
  return r;
}

Mat3c adjoint(const Mat3c& a) {
  Mat3c r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = std::conj(a[j][i]);
  }
  return r;
}

double inf_norm(const Mat3c& a) {
  double n = 0.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (const auto& v : row) s += std::abs(v);
    n = std::max(n, s);
  }
  return n;
}

struct Eigensystem {
  std::array<double, 3> values{};
  Mat3c vectors{};  // columns
  bool converged = false;
};

// Cyclic Jacobi for a 3x3 complex Hermitian matrix. Each rotation first
// strips the phase of A[p][q], then applies the real Jacobi angle; the
// combined unitary is accumulated into V so that A = V diag V^dagger.
Eigensystem hermitian_eigensystem(const Mat3c& h) {
  Eigensystem out;
  Mat3c a = h;
  Mat3c v = identity3();

  const auto off_diag_sq = [](const Mat3c& m) {
    return std::norm(m[0][1]) + std::norm(m[0][2]) + std::norm(m[1][2]);
  };
  double scale = 0.0;
  for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(a[i][i].real()));
  scale = std::max(scale, 1e-300);

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diag_sq(a) < 1e-30 * scale * scale) {
      out.converged = true;
      break;
    }
    constexpr int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& pq : pairs) {
      const int p = pq[0], q = pq[1];
      const Complex apq = a[p][q];
      const double r = std::abs(apq);
      if (r < 1e-300) continue;

      const double phase = std::arg(apq);
      const double app = a[p][p].real();
      const double aqq = a[q][q].real();
      const double tau = (aqq - app) / (2.0 * r);
      const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
      const double c = 1.0 / std::sqrt(1.0 + t * t);
      const double s = t * c;

      // G = diag-phase * real rotation, restricted to the (p, q) plane.
      Mat3c g = identity3();
      const Complex eim = std::polar(1.0, -phase);
      g[p][p] = c;
      g[p][q] = s;
      g[q][p] = -s * eim;
      g[q][q] = c * eim;

      a = multiply(adjoint(g), multiply(a, g));
      v = multiply(v, g);
    }
  }
  if (!out.converged && off_diag_sq(a) < 1e-24 * scale * scale) {
    out.converged = true;
  }
  for (int i = 0; i < 3; ++i) out.values[i] = a[i][i].real();
  out.vectors = v;
  return out;
}

// exp(m) by scaling and squaring with a Taylor series on the scaled matrix.
Mat3c series_exponential(const Mat3c& m) {
  int squarings = 0;
  double norm = inf_norm(m);
  while (norm > 0.5 && squarings < 64) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  Mat3c b{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) b[i][j] = m[i][j] * scale;
  }
  Mat3c result = identity3();
  Mat3c term = identity3();
  for (int k = 1; k <= 24; ++k) {
    term = multiply(term, b);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        term[i][j] /= static_cast<double>(k);
        result[i][j] += term[i][j];
      }
    }
  }
  for (int k = 0; k < squarings; ++k) result = multiply(result, result);
  return result;
}

}  // namespace

Mat3c pmns_matrix(double theta12, double theta13, double theta23,
                  double delta_cp) {
  const double s12 = std::sin(theta12), c12 = std::cos(theta12);
  const double s13 = std::sin(theta13), c13 = std::cos(theta13);
  const double s23 = std::sin(theta23), c23 = std::cos(theta23);
  const Complex em = std::polar(1.0, -delta_cp);  // e^{-i d}
  const Complex ep = std::polar(1.0, delta_cp);

  Mat3c u = zero3();
  u[0][0] = c12 * c13;
  u[0][1] = s12 * c13;
  u[0][2] = s13 * em;
  u[1][0] = -s12 * c23 - c12 * s13 * s23 * ep;
  u[1][1] = c12 * c23 - s12 * s13 * s23 * ep;
  u[1][2] = c13 * s23;
  u[2][0] = s12 * s23 - c12 * s13 * c23 * ep;
  u[2][1] = -c12 * s23 - s12 * s13 * c23 * ep;
  u[2][2] = c13 * c23;
  return u;
}

Propagator::Propagator(const OscillationParams& params) {
  params.validate();
  const Mat3c u = pmns_matrix(params.theta12, params.theta13, params.theta23,
                              params.delta_cp);
  // alpha_override maps to an effective dm21 so oracle-evaluated sweeps see
  // the same alpha knob as the expansion.
  const double dm21 =
      params.alpha_override ? *params.alpha_override * params.dm31_sq
                            : params.dm21_sq;

  Mat3c mass = zero3();
  mass[1][1] = dm21 / (2.0 * params.energy);
  mass[2][2] = params.dm31_sq / (2.0 * params.energy);

  hamiltonian_ = multiply(u, multiply(mass, adjoint(u)));
  hamiltonian_[0][0] += params.potential;

  const Eigensystem eig = hermitian_eigensystem(hamiltonian_);
  eig_ok_ = eig.converged;
  eigenvalues_ = eig.values;
  eigenvectors_ = eig.vectors;
}

Mat3c Propagator::evolution(double length_km) const {
  if (!(length_km >= 0.0)) {
    throw std::invalid_argument("Propagator::evolution: length must be >= 0");
  }
  const double length = length_km * kKmToInvEv;
  if (!eig_ok_) {
    Mat3c m{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        m[i][j] = Complex(0.0, -length) * hamiltonian_[i][j];
      }
    }
    return series_exponential(m);
  }
  Mat3c phased{};
  for (int k = 0; k < 3; ++k) {
    const Complex phase = std::polar(1.0, -eigenvalues_[k] * length);
    for (int i = 0; i < 3; ++i) phased[i][k] = eigenvectors_[i][k] * phase;
  }
  return multiply(phased, adjoint(eigenvectors_));
}

TransitionMatrix Propagator::transition(double length_km) const {
  const Mat3c m = evolution(length_km);
  TransitionMatrix t;
  // amplitude a -> b is <b| M |a> = m[b][a]
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) t.p[a][b] = std::norm(m[b][a]);
  }
  return t;
}

FlavorTriple Propagator::probabilities_from_e(double length_km) const {
  const TransitionMatrix t = transition(length_km);
  return {t.p[0][0], t.p[0][1], t.p[0][2]};
}

double Propagator::pair_correlator(double l_first_km,
                                   double separation_km) const {
  const TransitionMatrix first = transition(l_first_km);
  const TransitionMatrix second = transition(separation_km);
  double c = 0.0;
  for (int a = 0; a < 3; ++a) {
    const double qa = (a == 0) ? 1.0 : -1.0;
    for (int b = 0; b < 3; ++b) {
      const double qb = (b == 0) ? 1.0 : -1.0;
      c += qa * qb * first.p[0][a] * second.p[a][b];
    }
  }
  return c;
}

CorrelatorResult Propagator::lgi_correlator(
    const BaselineSchedule& schedule) const {
  schedule.validate();
  CorrelatorResult r;
  r.schedule = schedule;
  r.c12 = pair_correlator(schedule.l1_km, schedule.spacing_km);
  r.c23 = pair_correlator(schedule.l2_km(), schedule.spacing_km);
  r.c34 = pair_correlator(schedule.l3_km(), schedule.spacing_km);
  r.c14 = pair_correlator(schedule.l1_km, 3.0 * schedule.spacing_km);
  r.c_total = r.c12 + r.c23 + r.c34 - r.c14;
  return r;
}

Mat3c evolution_operator(const OscillationParams& params, double length_km) {
  return Propagator(params).evolution(length_km);
}

TransitionMatrix exact_transition_matrix(const OscillationParams& params,
                                         double length_km) {
  return Propagator(params).transition(length_km);
}

CorrelatorResult exact_lgi_correlator(const OscillationParams& params,
                                      const BaselineSchedule& schedule) {
  return Propagator(params).lgi_correlator(schedule);
}

}  // namespace nulgi
