#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nulgi/lgi.hpp"
#include "nulgi/params.hpp"
#include "nulgi/scan.hpp"

namespace nulgi {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SimSettings {
  std::uint64_t n_runs = 1'000'000;
  std::uint64_t seed = 1;
};

// Flat key-value run configuration. Keys take physical inputs in their
// customary units (angles in degrees, dm^2 in eV^2, E in GeV, rho in g/cm^3);
// everything is normalized to internal units (radians, eV) on load, exactly
// once. Unknown and duplicate keys are rejected.
struct RunConfigFile {
  double rho = 3.0;  // g/cm^3, kept for echoing
  double ye = 0.5;
  OscillationParams params{};
  BaselineSchedule schedule{140.15, 1255.7};
  ScanGrid grid{};
  std::vector<double> sweep_theta13{deg_to_rad(0.0), deg_to_rad(4.0),
                                    deg_to_rad(6.0), deg_to_rad(8.5),
                                    deg_to_rad(12.0)};
  std::vector<double> sweep_alpha{0.0, 0.01, 0.0305, 0.06};
  std::vector<double> sweep_delta_cp{deg_to_rad(0.0), deg_to_rad(306.0)};
  SimSettings sim{};

  static RunConfigFile load(const std::string& path);  // throws ConfigError
  static RunConfigFile parse(const std::string& text);

  // Validates every physical constraint; throws ConfigError naming the key.
  void check() const;

  // Normalized internal values, one `key = value` line each.
  std::string echo() const;
};

// 12-significant-digit formatting used by every emitter.
std::string format_sig(double v);

std::string csv_row(const std::vector<std::string>& cells);

}  // namespace nulgi
