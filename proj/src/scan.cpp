#include "nulgi/scan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "nulgi/exact_oracle.hpp"

namespace nulgi {

const char* to_string(Evaluator e) {
  return e == Evaluator::expansion ? "expansion" : "oracle";
}

const char* to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::theta13: return "theta13";
    case SweepAxis::alpha: return "alpha";
    default: return "delta_cp";
  }
}

void ScanGrid::validate() const {
  if (!(l1_min_km >= 0.0 && l1_min_km <= l1_max_km)) {
    throw std::invalid_argument("ScanGrid: requires 0 <= l1_min <= l1_max");
  }
  if (!(dl_min_km >= 0.0 && dl_min_km <= dl_max_km)) {
    throw std::invalid_argument("ScanGrid: requires 0 <= dl_min <= dl_max");
  }
  if (l1_steps < 1 || dl_steps < 1) {
    throw std::invalid_argument("ScanGrid: steps must be >= 1");
  }
}

double ScanGrid::l1_at(int i) const {
  if (l1_steps == 1) return l1_min_km;
  return l1_min_km + (l1_max_km - l1_min_km) * i / (l1_steps - 1);
}

double ScanGrid::dl_at(int j) const {
  if (dl_steps == 1) return dl_min_km;
  return dl_min_km + (dl_max_km - dl_min_km) * j / (dl_steps - 1);
}

std::function<double(double, double)> make_correlator_fn(
    const OscillationParams& params, Evaluator evaluator) {
  params.validate();
  if (evaluator == Evaluator::expansion) {
    return [params](double l1, double dl) {
      return lgi_correlator(params, {l1, dl}).c_total;
    };
  }
  auto prop = std::make_shared<Propagator>(params);
  return [prop](double l1, double dl) {
    return prop->lgi_correlator({l1, dl}).c_total;
  };
}

ScanSurface grid_scan(const OscillationParams& params, const ScanGrid& grid,
                      Evaluator evaluator) {
  grid.validate();
  const auto fn = make_correlator_fn(params, evaluator);

  ScanSurface surface;
  surface.grid = grid;
  surface.samples.reserve(static_cast<std::size_t>(grid.l1_steps) *
                          grid.dl_steps);
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.l1_steps; ++i) {
    const double l1 = grid.l1_at(i);
    for (int j = 0; j < grid.dl_steps; ++j) {
      const double dl = grid.dl_at(j);
      const double c = fn(l1, dl);
      // strict > keeps the first (smallest l1, then dl) sample on ties
      if (c > best) {
        best = c;
        surface.best_index = surface.samples.size();
      }
      surface.samples.push_back({l1, dl, c});
    }
  }
  return surface;
}

namespace {

struct GoldenResult {
  double x;
  double fx;
  std::int64_t evals;
};

// Golden-section ascent on [lo, hi]; returns the best point evaluated.
template <typename F>
GoldenResult golden_max(const F& f, double lo, double hi, double xtol) {
  constexpr double kInvPhi = 0.6180339887498949;
  GoldenResult best{lo, -std::numeric_limits<double>::infinity(), 0};
  const auto eval = [&](double x) {
    const double v = f(x);
    ++best.evals;
    if (v > best.fx) {
      best.fx = v;
      best.x = x;
    }
    return v;
  };

  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = eval(x1);
  double f2 = eval(x2);
  while (hi - lo > xtol) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = eval(x2);
    }
  }
  return best;
}

}  // namespace

MaximumReport refine_maximum(const OscillationParams& params,
                             double seed_l1_km, double seed_dl_km,
                             Evaluator evaluator,
                             const RefineOptions& options) {
  if (!(seed_l1_km >= 0.0 && seed_dl_km >= 0.0)) {
    throw std::invalid_argument("refine_maximum: seed must be nonnegative");
  }
  if (!(options.window_km > 0.0 && options.coord_tol_km > 0.0)) {
    throw std::invalid_argument("refine_maximum: bad options");
  }
  const auto fn = make_correlator_fn(params, evaluator);

  MaximumReport report;
  report.l1_star_km = seed_l1_km;
  report.dl_star_km = seed_dl_km;
  report.c_star = fn(seed_l1_km, seed_dl_km);
  report.evaluations = 1;

  const double w = options.window_km;
  const double gold_tol = options.coord_tol_km * 0.25;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double prev_l1 = report.l1_star_km;
    const double prev_dl = report.dl_star_km;

    if (!options.fix_l1) {
      const double lo = std::max(0.0, report.l1_star_km - w);
      const auto g = golden_max(
          [&](double x) { return fn(x, report.dl_star_km); }, lo,
          report.l1_star_km + w, gold_tol);
      report.evaluations += g.evals;
      if (g.fx >= report.c_star) {
        report.c_star = g.fx;
        report.l1_star_km = g.x;
      }
    }
    {
      const double lo = std::max(0.0, report.dl_star_km - w);
      const auto g = golden_max(
          [&](double x) { return fn(report.l1_star_km, x); }, lo,
          report.dl_star_km + w, gold_tol);
      report.evaluations += g.evals;
      if (g.fx >= report.c_star) {
        report.c_star = g.fx;
        report.dl_star_km = g.x;
      }
    }

    if (std::abs(report.l1_star_km - prev_l1) < options.coord_tol_km &&
        std::abs(report.dl_star_km - prev_dl) < options.coord_tol_km) {
      report.refined = true;
      break;
    }
  }
  return report;
}

std::vector<SweepPoint> parameter_sweep(const OscillationParams& params,
                                        SweepAxis axis,
                                        const std::vector<double>& values,
                                        const ScanGrid& grid, bool refine,
                                        Evaluator evaluator) {
  std::vector<SweepPoint> points;
  points.reserve(values.size());
  for (const double value : values) {
    OscillationParams p = params;
    switch (axis) {
      case SweepAxis::theta13: p.theta13 = value; break;
      case SweepAxis::alpha: p.alpha_override = value; break;
      case SweepAxis::delta_cp: p.delta_cp = value; break;
    }
    p.validate();

    const ScanSurface surface = grid_scan(p, grid, evaluator);
    const ScanSample& seed = surface.best();
    MaximumReport report;
    if (refine) {
      report = refine_maximum(p, seed.l1_km, seed.dl_km, evaluator);
      report.evaluations += static_cast<std::int64_t>(surface.samples.size());
    } else {
      report.l1_star_km = seed.l1_km;
      report.dl_star_km = seed.dl_km;
      report.c_star = seed.c;
      report.evaluations = static_cast<std::int64_t>(surface.samples.size());
      report.refined = false;
    }
    points.push_back({value, report});
  }
  return points;
}

}  // namespace nulgi
