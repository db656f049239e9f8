#include "nulgi/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nulgi {

const char* to_string(Flavor f) {
  switch (f) {
    case Flavor::e: return "e";
    case Flavor::mu: return "mu";
    default: return "tau";
  }
}

namespace {

void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("OscillationParams." + field + ": " + what);
}

void require_angle(double v, const char* name) {
  if (!(v >= 0.0 && v <= std::numbers::pi / 2.0)) {
    fail(name, "must be within [0, pi/2] radians");
  }
}

}  // namespace

void OscillationParams::validate() const {
  if (!std::isfinite(dm21_sq)) fail("dm21_sq", "must be finite");
  if (!(std::isfinite(dm31_sq) && dm31_sq != 0.0)) {
    fail("dm31_sq", "must be finite and nonzero");
  }
  require_angle(theta12, "theta12");
  require_angle(theta13, "theta13");
  require_angle(theta23, "theta23");
  if (!(delta_cp >= 0.0 && delta_cp < 2.0 * std::numbers::pi)) {
    fail("delta_cp", "must be within [0, 2pi) radians");
  }
  if (!(energy > 0.0)) fail("energy", "must be positive");
  if (!(potential >= 0.0)) fail("potential", "must be nonnegative");
  if (alpha_override && !std::isfinite(*alpha_override)) {
    fail("alpha_override", "must be finite");
  }
}

}  // namespace nulgi
