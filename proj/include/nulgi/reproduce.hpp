#pragma once

#include <string>

#include "nulgi/scan.hpp"

namespace nulgi {

// One scan+refine job checked against a published target value/location.
struct TargetOutcome {
  std::string name;
  double c_target = 0.0;
  double c_tol = 0.0;
  double l1_target = 0.0;
  double l1_tol = -1.0;  // negative: coordinate not checked
  double dl_target = 0.0;
  double dl_tol = -1.0;
  MaximumReport achieved{};
  bool gated = true;  // false: reported but not counted toward overall pass

  bool value_pass() const;
  bool location_pass() const;
  bool pass() const { return value_pass() && location_pass(); }
};

struct DerivedOutcome {
  std::string name;
  double target = 0.0;
  double achieved = 0.0;
  double tol = 0.0;

  bool pass() const;
};

struct ReproduceReport {
  TargetOutcome full;              // all terms at the working point
  TargetOutcome theta13_zero;      // theta13 = 0
  TargetOutcome alpha_zero_fixed;  // alpha_override = 0, L1 held at 140.15 km
  TargetOutcome alpha_zero_joint;  // alpha_override = 0, both axes free (ungated)
  TargetOutcome no_cp;             // delta_cp = 0

  DerivedOutcome theta13_gain;     // C_full - C_theta13=0
  DerivedOutcome cp_gain;          // C_full - C_nocp
  DerivedOutcome classical_excess_pct;  // 100 (C_full - 2) / 2

  bool all_pass() const;
};

// Runs the four maximization jobs on the given grid and evaluates every
// target at its pinned tolerance.
ReproduceReport run_reproduction(const OscillationParams& base,
                                 const ScanGrid& grid, Evaluator evaluator);

}  // namespace nulgi
