#pragma once

#include <array>
#include <cstdint>

#include "nulgi/lgi.hpp"
#include "nulgi/params.hpp"

namespace nulgi {

// Negative-result-measurement orientation of the first probe:
//   trigger_on_e:     probe fires on nu_e; untriggered runs have Q(L1) = -1.
//   trigger_on_not_e: inverted setup; untriggered runs have Q(L1) = +1.
enum class Orientation { trigger_on_e = 0, trigger_on_not_e = 1 };

const char* to_string(Orientation o);
Orientation inverted(Orientation o);

struct RunConfig {
  std::uint64_t n_runs = 1'000'000;  // total across both orientations
  std::uint64_t seed = 1;
  double first_km = 0.0;
  double second_km = 0.0;            // second >= first
  Orientation orientation = Orientation::trigger_on_e;  // gets the first n/2

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Scripted-probability estimates for one measurement pair. Only untriggered
// runs are followed to the second length; each orientation measures the two
// joint outcomes whose first Q-value its untriggered runs fix, renormalized
// so the four probabilities sum to 1 exactly.
struct PairEstimate {
  Estimate p_pp, p_pm, p_mp, p_mm;
  Estimate c12_hat;  // p_pp - p_pm - p_mp + p_mm
  std::array<std::uint64_t, 2> n_total{};     // per Orientation index
  std::array<std::uint64_t, 2> n_retained{};  // untriggered counts

  double retention(Orientation o) const {
    const auto i = static_cast<int>(o);
    return n_total[i] ? static_cast<double>(n_retained[i]) / n_total[i] : 0.0;
  }
};

// Throws std::runtime_error naming the orientation if it retains zero runs.
// Deterministic for fixed seed.
PairEstimate simulate_pair(const OscillationParams& params,
                           const RunConfig& config);

struct LgiEstimate {
  std::array<PairEstimate, 4> pairs;  // (l1,l2), (l2,l3), (l3,l4), (l1,l4)
  Estimate c_total;                   // errors combined in quadrature
  BaselineSchedule schedule{};
  std::uint64_t seed = 0;
  std::uint64_t n_runs_per_pair = 0;
};

// Four pair simulations with independent sub-seeds derived from (seed, pair
// index); combined as c12 + c23 + c34 - c14.
LgiEstimate simulate_lgi(const OscillationParams& params,
                         const BaselineSchedule& schedule,
                         std::uint64_t n_runs_per_pair, std::uint64_t seed);

}  // namespace nulgi
