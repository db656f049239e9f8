#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "nulgi/lgi.hpp"
#include "nulgi/osc_model.hpp"
#include "nulgi/units.hpp"

using namespace nulgi;

namespace {

// Frozen 60-digit evaluations at the default parameter point.
constexpr double kC12 = 0.94422406615508922;
constexpr double kC23 = 0.94608464916860823;
constexpr double kC34 = 0.94905349173511127;
constexpr double kC14 = 0.67116435735361301;
constexpr double kCTotal = 2.1681978497051957;
constexpr double kCTheta13Zero = 2.0777437329803360;  // at (638, 1376.34)
constexpr double kCNoCp = 2.1668872112654517;         // at (140.15, 1253.8)

// Independent simplified route: the bracket factor collapsed to
// cos(delta) cos(delta_cp).
double simplified_pair(const OscillationParams& p, double l_first,
                       double sep) {
  const FlavorTriple first = flavor_probabilities_from_e(p, l_first);
  const KinematicFactors k = kinematic_factors(p, sep);
  const double s13 = std::sin(p.theta13);
  const double alpha = p.alpha();
  const double solar = alpha * alpha * std::pow(std::sin(2.0 * p.theta12), 2) *
                       k.f * k.f;
  const double res = 4.0 * s13 * s13 * k.g * k.g;
  const double interf = 2.0 * alpha * s13 * std::sin(2.0 * p.theta12) *
                        std::sin(2.0 * p.theta23) * std::cos(k.delta) *
                        std::cos(p.delta_cp) * k.f * k.g;
  const double c23sq = std::pow(std::cos(p.theta23), 2);
  const double s23sq = std::pow(std::sin(p.theta23), 2);
  const double ree = 1.0 - solar - res;
  const double rmu = solar * c23sq + res * s23sq + interf;
  const double rtau = solar * s23sq + res * c23sq - interf;
  return first.e * (2.0 * ree - 1.0) - first.mu * (2.0 * rmu - 1.0) -
         first.tau * (2.0 * rtau - 1.0);
}

}  // namespace

TEST_CASE("schedule validation and derived lengths") {
  BaselineSchedule s{140.15, 1255.7};
  CHECK_NOTHROW(s.validate());
  CHECK(s.l2_km() == doctest::Approx(1395.85));
  CHECK(s.l3_km() == doctest::Approx(2651.55));
  CHECK(s.l4_km() == doctest::Approx(3907.25));
  CHECK_THROWS_AS((BaselineSchedule{-1.0, 10.0}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS((BaselineSchedule{1.0, -10.0}.validate()),
                  std::invalid_argument);
}

TEST_CASE("pair correlator at zero separation is one") {
  const OscillationParams p;
  for (const double l : {0.0, 140.15, 999.0}) {
    CHECK(pair_correlator(p, l, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pair correlator is one when the beam is frozen") {
  OscillationParams p;
  p.theta13 = 0.0;
  p.alpha_override = 0.0;
  for (const double l : {0.0, 300.0, 1500.0}) {
    for (const double sep : {0.0, 755.5, 2100.0}) {
      CHECK(pair_correlator(p, l, sep) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("pair correlator frozen value") {
  const OscillationParams p;
  CHECK(pair_correlator(p, 140.15, 1255.7) ==
        doctest::Approx(kC12).epsilon(1e-13));
}

TEST_CASE("literal bracket factor agrees with the simplified route") {
  const OscillationParams base;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> length(0.0, 2500.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 500; ++i) {
    OscillationParams p = base;
    p.delta_cp = phase(rng);
    const double l = length(rng);
    const double sep = length(rng);
    CHECK(pair_correlator(p, l, sep) ==
          doctest::Approx(simplified_pair(p, l, sep)).epsilon(1e-12));
  }
}

TEST_CASE("lgi correlator at the frozen schedule") {
  const OscillationParams p;
  const CorrelatorResult r = lgi_correlator(p, {140.15, 1255.7});
  CHECK(r.c12 == doctest::Approx(kC12).epsilon(1e-13));
  CHECK(r.c23 == doctest::Approx(kC23).epsilon(1e-13));
  CHECK(r.c34 == doctest::Approx(kC34).epsilon(1e-13));
  CHECK(r.c14 == doctest::Approx(kC14).epsilon(1e-13));
  CHECK(r.c_total == doctest::Approx(kCTotal).epsilon(1e-13));
  CHECK(r.c_total == r.c12 + r.c23 + r.c34 - r.c14);
}

TEST_CASE("lgi correlator frozen regression at other parameter points") {
  OscillationParams p13;
  p13.theta13 = 0.0;
  CHECK(lgi_correlator(p13, {638.0, 1376.34}).c_total ==
        doctest::Approx(kCTheta13Zero).epsilon(1e-13));

  OscillationParams pcp;
  pcp.delta_cp = 0.0;
  CHECK(lgi_correlator(pcp, {140.15, 1253.8}).c_total ==
        doctest::Approx(kCNoCp).epsilon(1e-13));
}

TEST_CASE("zero spacing gives the classical boundary exactly") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> length(0.0, 2000.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  for (int i = 0; i < 200; ++i) {
    OscillationParams p;
    p.delta_cp = phase(rng);
    const CorrelatorResult r = lgi_correlator(p, {length(rng), 0.0});
    CHECK(r.c_total == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("frozen beam gives c_total = 2 for any schedule") {
  OscillationParams p;
  p.theta13 = 0.0;
  p.alpha_override = 0.0;
  for (const double l1 : {0.0, 140.15, 888.0}) {
    for (const double dl : {0.0, 500.0, 1255.7}) {
      CHECK(lgi_correlator(p, {l1, dl}).c_total ==
            doctest::Approx(2.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("alpha_override at the ratio leaves c_total bit-identical") {
  OscillationParams a;
  OscillationParams b = a;
  b.alpha_override = a.dm21_sq / a.dm31_sq;
  const CorrelatorResult ra = lgi_correlator(a, {140.15, 1255.7});
  const CorrelatorResult rb = lgi_correlator(b, {140.15, 1255.7});
  CHECK(ra.c_total == rb.c_total);
}

TEST_CASE("delta_cp enters only through its cosine and sine factors") {
  // c_total at delta_cp = 0 equals the simplified route with cos(d)=1, sin(d)=0.
  OscillationParams p;
  p.delta_cp = 0.0;
  const BaselineSchedule s{140.15, 1255.7};
  const CorrelatorResult lit = lgi_correlator(p, s);
  const double c12 = simplified_pair(p, s.l1_km, s.spacing_km);
  const double c23 = simplified_pair(p, s.l2_km(), s.spacing_km);
  const double c34 = simplified_pair(p, s.l3_km(), s.spacing_km);
  const double c14 = simplified_pair(p, s.l1_km, 3.0 * s.spacing_km);
  CHECK(lit.c_total == doctest::Approx(c12 + c23 + c34 - c14).epsilon(1e-13));
}

TEST_CASE("pair correlators stay within the truncation slack") {
  const OscillationParams p;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> length(0.0, 2000.0);
  for (int i = 0; i < 500; ++i) {
    const CorrelatorResult r = lgi_correlator(p, {length(rng), length(rng)});
    for (const double c : {r.c12, r.c23, r.c34, r.c14}) {
      CHECK(std::abs(c) <= 1.0 + 1e-2);
    }
  }
}
