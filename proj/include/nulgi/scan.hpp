#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "nulgi/lgi.hpp"
#include "nulgi/params.hpp"

namespace nulgi {

enum class Evaluator { expansion, oracle };

const char* to_string(Evaluator e);

struct ScanGrid {
  double l1_min_km = 0.0;
  double l1_max_km = 1500.0;
  double dl_min_km = 0.0;
  double dl_max_km = 3000.0;
  int l1_steps = 151;
  int dl_steps = 301;

  void validate() const;  // throws std::invalid_argument
  double l1_at(int i) const;
  double dl_at(int j) const;
};

struct ScanSample {
  double l1_km;
  double dl_km;
  double c;
};

struct ScanSurface {
  ScanGrid grid{};
  std::vector<ScanSample> samples;  // row-major: l1 outer, dl inner
  // Index of the maximum sample; ties broken by smallest l1, then smallest dl.
  std::size_t best_index = 0;

  const ScanSample& best() const { return samples[best_index]; }
};

struct MaximumReport {
  double l1_star_km = 0.0;
  double dl_star_km = 0.0;
  double c_star = 0.0;
  std::int64_t evaluations = 0;
  bool refined = false;
};

struct RefineOptions {
  double window_km = 25.0;    // half-width of the re-centered search window
  double coord_tol_km = 1e-3; // stop when both coordinates move less than this
  int max_iterations = 200;
  bool fix_l1 = false;        // refine only the spacing axis
};

// C(l1, dl) as a function object; the oracle variant shares one cached
// eigendecomposition across calls.
std::function<double(double, double)> make_correlator_fn(
    const OscillationParams& params, Evaluator evaluator);

ScanSurface grid_scan(const OscillationParams& params, const ScanGrid& grid,
                      Evaluator evaluator);

// Alternating golden-section ascent from the seed. Never returns a c_star
// below the seed's value; refined=false if the iteration cap is hit first.
MaximumReport refine_maximum(const OscillationParams& params, double seed_l1_km,
                             double seed_dl_km, Evaluator evaluator,
                             const RefineOptions& options = {});

enum class SweepAxis { theta13, alpha, delta_cp };

const char* to_string(SweepAxis a);

struct SweepPoint {
  double value;  // radians for angle axes
  MaximumReport report;
};

// Overrides the axis parameter per value (alpha via alpha_override) and
// re-maximizes C over the grid, refining each grid maximum when requested.
std::vector<SweepPoint> parameter_sweep(const OscillationParams& params,
                                        SweepAxis axis,
                                        const std::vector<double>& values,
                                        const ScanGrid& grid, bool refine,
                                        Evaluator evaluator);

}  // namespace nulgi
