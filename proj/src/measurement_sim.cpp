#include "nulgi/measurement_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "nulgi/exact_oracle.hpp"
#include "nulgi/philox.hpp"

namespace nulgi {

const char* to_string(Orientation o) {
  return o == Orientation::trigger_on_e ? "trigger-on-e" : "trigger-on-not-e";
}

Orientation inverted(Orientation o) {
  return o == Orientation::trigger_on_e ? Orientation::trigger_on_not_e
                                        : Orientation::trigger_on_e;
}

void RunConfig::validate() const {
  if (n_runs < 1) {
    throw std::invalid_argument("RunConfig.n_runs: must be >= 1");
  }
  if (!(first_km >= 0.0)) {
    throw std::invalid_argument("RunConfig.first_km: must be >= 0");
  }
  if (second_km < first_km) {
    throw std::invalid_argument("RunConfig: requires second >= first");
  }
}

namespace {

int sample_category(const FlavorTriple& probs, double u) {
  if (u < probs.e) return 0;
  if (u < probs.e + probs.mu) return 1;
  return 2;
}

// Per-orientation tallies. Untriggered runs fix Q1 (by the orientation);
// counts split on the second measurement's Q value.
struct OrientationTally {
  std::uint64_t total = 0;
  std::uint64_t retained = 0;
  std::uint64_t second_plus = 0;   // untriggered and Q2 = +1
  std::uint64_t second_minus = 0;  // untriggered and Q2 = -1

  double r() const { return static_cast<double>(retained) / total; }
};

OrientationTally run_orientation(const Propagator& prop, Orientation o,
                                 std::uint64_t n, std::uint64_t seed,
                                 double first_km, double separation_km) {
  const FlavorTriple first_row = prop.probabilities_from_e(first_km);
  const TransitionMatrix hop = prop.transition(separation_km);
  const PhiloxStream stream(seed, static_cast<std::uint32_t>(o));

  OrientationTally tally;
  tally.total = n;
  for (std::uint64_t t = 0; t < n; ++t) {
    const auto [u1, u2] = stream.uniforms(t);
    const int flavor = sample_category(first_row, u1);
    const bool probe_fires =
        (o == Orientation::trigger_on_e) ? (flavor == 0) : (flavor != 0);
    if (probe_fires) continue;  // triggered runs are discarded

    ++tally.retained;
    const FlavorTriple row{hop.p[flavor][0], hop.p[flavor][1],
                           hop.p[flavor][2]};
    const int second = sample_category(row, u2);
    if (second == 0) {
      ++tally.second_plus;
    } else {
      ++tally.second_minus;
    }
  }
  return tally;
}

}  // namespace

PairEstimate simulate_pair(const OscillationParams& params,
                           const RunConfig& config) {
  config.validate();
  const Propagator prop(params);
  const double separation = config.second_km - config.first_km;

  const Orientation first_o = config.orientation;
  const std::uint64_t n_first = config.n_runs / 2;
  const std::uint64_t n_second = config.n_runs - n_first;

  OrientationTally tallies[2];
  for (const auto& [o, n] : {std::pair{first_o, n_first},
                             std::pair{inverted(first_o), n_second}}) {
    const auto idx = static_cast<int>(o);
    tallies[idx] = run_orientation(prop, o, n, config.seed, config.first_km,
                                   separation);
    if (tallies[idx].retained == 0) {
      throw std::runtime_error(
          std::string("simulate_pair: zero retained runs in orientation ") +
          to_string(o));
    }
  }

  const OrientationTally& te = tallies[static_cast<int>(
      Orientation::trigger_on_e)];  // untriggered => Q1 = -1
  const OrientationTally& tn = tallies[static_cast<int>(
      Orientation::trigger_on_not_e)];  // untriggered => Q1 = +1

  // Raw per-orientation frequencies of the four scripted outcomes.
  const double q_mp = static_cast<double>(te.second_plus) / te.total;
  const double q_mm = static_cast<double>(te.second_minus) / te.total;
  const double q_pp = static_cast<double>(tn.second_plus) / tn.total;
  const double q_pm = static_cast<double>(tn.second_minus) / tn.total;

  // Joint renormalization over the two orientation budgets; Z is the sum of
  // the measured first-outcome marginals, so the four estimates sum to 1.
  const double z = q_mp + q_mm + q_pp + q_pm;

  PairEstimate est;
  est.n_total = {te.total, tn.total};
  est.n_retained = {te.retained, tn.retained};

  const auto scripted = [&](double q, std::uint64_t n) {
    return Estimate{q / z, std::sqrt(std::max(0.0, q * (1.0 - q) / n)) / z};
  };
  est.p_mp = scripted(q_mp, te.total);
  est.p_mm = scripted(q_mm, te.total);
  est.p_pp = scripted(q_pp, tn.total);
  est.p_pm = scripted(q_pm, tn.total);

  // Single division keeps c_hat exactly 1 when only the diagonal outcomes
  // occur (zero separation).
  const double c_hat = (q_pp - q_pm - q_mp + q_mm) / z;

  // Delta method for (d_e + d_n) / Z, written as the variance of the per-run
  // residual s - c_hat * u (s = signed score on retained runs, u = retention
  // indicator); this form is exactly zero at separation 0. Orientations are
  // independent.
  double var = 0.0;
  const auto accumulate = [&](double q_same, double q_flip, double r,
                              std::uint64_t n) {
    const double mean = (q_same - q_flip) - c_hat * r;
    const double second = q_same * (1.0 - c_hat) * (1.0 - c_hat) +
                          q_flip * (1.0 + c_hat) * (1.0 + c_hat);
    var += (second - mean * mean) / n;
  };
  accumulate(q_mm, q_mp, te.r(), te.total);
  accumulate(q_pp, q_pm, tn.r(), tn.total);
  est.c12_hat = {c_hat, std::sqrt(std::max(0.0, var)) / z};
  return est;
}

LgiEstimate simulate_lgi(const OscillationParams& params,
                         const BaselineSchedule& schedule,
                         std::uint64_t n_runs_per_pair, std::uint64_t seed) {
  schedule.validate();
  LgiEstimate out;
  out.schedule = schedule;
  out.seed = seed;
  out.n_runs_per_pair = n_runs_per_pair;

  const double firsts[4] = {schedule.l1_km, schedule.l2_km(), schedule.l3_km(),
                            schedule.l1_km};
  const double seconds[4] = {schedule.l2_km(), schedule.l3_km(),
                             schedule.l4_km(), schedule.l4_km()};
  for (int i = 0; i < 4; ++i) {
    RunConfig cfg;
    cfg.n_runs = n_runs_per_pair;
    cfg.seed = derive_subseed(seed, static_cast<std::uint32_t>(i));
    cfg.first_km = firsts[i];
    cfg.second_km = seconds[i];
    out.pairs[i] = simulate_pair(params, cfg);
  }

  out.c_total.value = out.pairs[0].c12_hat.value + out.pairs[1].c12_hat.value +
                      out.pairs[2].c12_hat.value - out.pairs[3].c12_hat.value;
  double var = 0.0;
  for (const auto& pair : out.pairs) {
    var += pair.c12_hat.std_error * pair.c12_hat.std_error;
  }
  out.c_total.std_error = std::sqrt(var);
  return out;
}

}  // namespace nulgi
