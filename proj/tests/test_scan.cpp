#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nulgi/lgi.hpp"
#include "nulgi/scan.hpp"
#include "nulgi/units.hpp"

using namespace nulgi;

TEST_CASE("grid validation and node coordinates") {
  ScanGrid g;
  CHECK_NOTHROW(g.validate());
  CHECK(g.l1_at(0) == 0.0);
  CHECK(g.l1_at(150) == doctest::Approx(1500.0));
  CHECK(g.dl_at(300) == doctest::Approx(3000.0));

  ScanGrid bad = g;
  bad.l1_steps = 0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = g;
  bad.dl_min_km = 10.0;
  bad.dl_max_km = 5.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("1x1 grid reproduces the library value") {
  const OscillationParams p;
  const ScanGrid g{140.15, 140.15, 1255.7, 1255.7, 1, 1};
  const ScanSurface s = grid_scan(p, g, Evaluator::expansion);
  REQUIRE(s.samples.size() == 1);
  CHECK(s.samples[0].c == lgi_correlator(p, {140.15, 1255.7}).c_total);
  CHECK(s.best().c == s.samples[0].c);
}

TEST_CASE("zero-spacing axis scans to the classical boundary everywhere") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1000.0, 0.0, 0.0, 11, 1};
  const ScanSurface s = grid_scan(p, g, Evaluator::expansion);
  for (const ScanSample& sample : s.samples) {
    CHECK(sample.c == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("grid scan is a pure map with deterministic ordering") {
  const OscillationParams p;
  const ScanGrid g{0.0, 400.0, 800.0, 1600.0, 5, 9};
  const ScanSurface s = grid_scan(p, g, Evaluator::expansion);
  REQUIRE(s.samples.size() == 45);

  // row-major: l1 outer ascending, dl inner ascending
  std::size_t idx = 0;
  for (int i = 0; i < g.l1_steps; ++i) {
    for (int j = 0; j < g.dl_steps; ++j, ++idx) {
      CHECK(s.samples[idx].l1_km == g.l1_at(i));
      CHECK(s.samples[idx].dl_km == g.dl_at(j));
    }
  }

  // re-evaluating in reverse order gives identical values
  const auto fn = make_correlator_fn(p, Evaluator::expansion);
  for (auto it = s.samples.rbegin(); it != s.samples.rend(); ++it) {
    CHECK(fn(it->l1_km, it->dl_km) == it->c);
  }
}

TEST_CASE("coarse grid maximum lands near the refined basin value") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1000.0, 500.0, 2000.0, 50, 50};
  const ScanSurface s = grid_scan(p, g, Evaluator::expansion);
  // Exhaustive grid evaluation is its own oracle for the scan plumbing.
  double best = -10.0;
  for (const ScanSample& sample : s.samples) best = std::max(best, sample.c);
  CHECK(s.best().c == best);
  CHECK(std::abs(best - 2.17036) <= 1e-2);
}

TEST_CASE("refinement is idempotent at a maximum and never loses value") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1500.0, 0.0, 3000.0, 76, 151};
  const ScanSurface s = grid_scan(p, g, Evaluator::expansion);

  const MaximumReport first =
      refine_maximum(p, s.best().l1_km, s.best().dl_km, Evaluator::expansion);
  CHECK(first.refined);
  CHECK(first.c_star >= s.best().c);

  const MaximumReport again = refine_maximum(
      p, first.l1_star_km, first.dl_star_km, Evaluator::expansion);
  CHECK(again.c_star >= first.c_star);
  CHECK(std::abs(again.l1_star_km - first.l1_star_km) < 0.1);
  CHECK(std::abs(again.dl_star_km - first.dl_star_km) < 0.1);

  // c_star re-evaluates to itself at the reported coordinates
  const auto fn = make_correlator_fn(p, Evaluator::expansion);
  CHECK(fn(first.l1_star_km, first.dl_star_km) ==
        doctest::Approx(first.c_star).epsilon(1e-12));
}

TEST_CASE("refinement from a nearby seed climbs into the basin peak") {
  const OscillationParams p;
  const MaximumReport r =
      refine_maximum(p, 150.0, 1250.0, Evaluator::expansion);
  CHECK(r.refined);
  CHECK(r.c_star >= lgi_correlator(p, {150.0, 1250.0}).c_total);
  // the spacing settles at the basin's interior optimum
  CHECK(r.dl_star_km == doctest::Approx(1254.4).epsilon(2e-3));
  CHECK(r.c_star > 2.168);
}

TEST_CASE("iteration cap returns best-so-far flagged unrefined") {
  const OscillationParams p;
  RefineOptions opt;
  opt.max_iterations = 1;  // seed far from the peak cannot converge in one pass
  const MaximumReport r =
      refine_maximum(p, 400.0, 900.0, Evaluator::expansion, opt);
  CHECK_FALSE(r.refined);
  CHECK(r.c_star >= lgi_correlator(p, {400.0, 900.0}).c_total);
  CHECK(r.evaluations > 1);
}

TEST_CASE("fixed-l1 refinement moves only the spacing") {
  const OscillationParams p;
  RefineOptions opt;
  opt.fix_l1 = true;
  const MaximumReport r =
      refine_maximum(p, 140.15, 1250.0, Evaluator::expansion, opt);
  CHECK(r.l1_star_km == 140.15);
  CHECK(r.refined);
  CHECK(r.c_star >= lgi_correlator(p, {140.15, 1250.0}).c_total);
}

TEST_CASE("oracle evaluator shares machinery with the exact correlator") {
  const OscillationParams p;
  const auto fn = make_correlator_fn(p, Evaluator::oracle);
  const double direct = fn(140.15, 1255.7);
  CHECK(std::abs(direct - lgi_correlator(p, {140.15, 1255.7}).c_total) < 1e-2);
  const ScanGrid g{140.15, 140.15, 1255.7, 1255.7, 1, 1};
  const ScanSurface s = grid_scan(p, g, Evaluator::oracle);
  CHECK(s.samples[0].c == direct);
}

TEST_CASE("theta13 sweep is strictly increasing") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1500.0, 0.0, 3000.0, 76, 151};
  const std::vector<double> degs = {0.0, 4.0, 6.0, 8.5, 12.0};
  std::vector<double> values;
  for (const double d : degs) values.push_back(deg_to_rad(d));

  const auto points =
      parameter_sweep(p, SweepAxis::theta13, values, g, true,
                      Evaluator::expansion);
  REQUIRE(points.size() == 5);
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].report.c_star > points[i - 1].report.c_star);
  }
}

TEST_CASE("alpha sweep is strictly increasing") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1500.0, 0.0, 3000.0, 76, 151};
  const std::vector<double> values = {0.0, 0.01, 0.0305, 0.06};
  const auto points =
      parameter_sweep(p, SweepAxis::alpha, values, g, true,
                      Evaluator::expansion);
  REQUIRE(points.size() == 4);
  for (std::size_t i = 1; i < points.size(); ++i) {
    CHECK(points[i].report.c_star > points[i - 1].report.c_star);
  }
}

TEST_CASE("delta_cp sweep reports both phases") {
  const OscillationParams p;
  const ScanGrid g{0.0, 1500.0, 0.0, 3000.0, 76, 151};
  const std::vector<double> values = {0.0, deg_to_rad(306.0)};
  const auto points = parameter_sweep(p, SweepAxis::delta_cp, values, g, true,
                                      Evaluator::expansion);
  REQUIRE(points.size() == 2);
  // the CP phase raises the maximum
  CHECK(points[1].report.c_star > points[0].report.c_star);
}

TEST_CASE("unrefined sweep reports the grid node itself") {
  const OscillationParams p;
  const ScanGrid g{100.0, 200.0, 1200.0, 1300.0, 3, 3};
  const auto points = parameter_sweep(p, SweepAxis::alpha, {0.0305}, g, false,
                                      Evaluator::expansion);
  REQUIRE(points.size() == 1);
  CHECK_FALSE(points[0].report.refined);
  const ScanSurface s = grid_scan([&] {
    OscillationParams q = p;
    q.alpha_override = 0.0305;
    return q;
  }(), g, Evaluator::expansion);
  CHECK(points[0].report.c_star == s.best().c);
  CHECK(points[0].report.l1_star_km == s.best().l1_km);
}
