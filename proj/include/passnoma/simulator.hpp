#pragma once

// Independent Monte Carlo engine for the downlink model.
//
// Every estimator here samples the physical system directly — antenna-to-node
// distances, fading draws, per-trial SINRs — and shares no code with the
// closed-form module, so agreement between the two is genuine cross-validation.
// Unlike the closed forms, the simulator accepts any path-loss exponent.
//
// Conventions shared with the closed forms:
//   * node positions are uniform on a disk of radius R around the antenna's
//     ground point, so the squared horizontal distance is R^2 * U(0,1);
//   * line-of-sight channel gain is eta / (r^2 + d^2)^(alpha/2);
//   * the far link under non-line-of-sight multiplies that gain by a unit-mean
//     (omega_f) exponential power draw; the near link is line-of-sight only;
//   * the near node is blocked unless it can decode BOTH messages:
//     gamma_{n->f} > gamma_th_f and gamma_n >= gamma_th_n;
//   * the far node is blocked unless gamma_f > gamma_th_f.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include "passnoma/errors.hpp"
#include "passnoma/model.hpp"
#include "passnoma/rng.hpp"

namespace passnoma {

// Time-sharing baseline flavors for the orthogonal-access comparison.
enum class OmaScheme { kTdmaHalf, kFullResource };

inline OmaScheme oma_scheme_from_string(std::string_view name) {
  if (name == "tdma-half") {
    return OmaScheme::kTdmaHalf;
  }
  if (name == "full-resource") {
    return OmaScheme::kFullResource;
  }
  throw argument_error("unknown OMA scheme '" + std::string(name) +
                       "' (expected 'tdma-half' or 'full-resource')");
}

inline const char* to_string(OmaScheme scheme) {
  return scheme == OmaScheme::kTdmaHalf ? "tdma-half" : "full-resource";
}

// One Monte Carlo result: sample mean, its standard error, and provenance.
struct MetricEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Squared horizontal distance of a uniform point on a disk of radius `radius`.
inline double sample_disk_r2(Xoshiro256pp& rng, double radius) {
  return radius * radius * rng.uniform();
}

// Exponential power draw with mean `omega` (inverse-CDF method).
inline double sample_exp_power(Xoshiro256pp& rng, double omega) {
  return -omega * std::log1p(-rng.uniform());
}

namespace detail {

inline constexpr std::uint64_t kChunkTrials = 65536;

inline void require_trials(std::uint64_t trials) {
  if (trials == 0) {
    throw argument_error("trials must be at least 1");
  }
}

inline void require_near_is_los(Node node, Condition cond) {
  if (node == Node::kNear && cond == Condition::kNlos) {
    throw unsupported_error(
        "the near node is modeled line-of-sight only; "
        "non-line-of-sight applies to the far node");
  }
}

// Line-of-sight gain for squared horizontal distance r2 at any exponent.
inline double los_gain(double r2, const NetworkConfig& c) {
  const double sq = r2 + c.d_m * c.d_m;
  if (c.alpha == 2.0) {
    return c.eta() / sq;  // fast path: squared distance is the path loss
  }
  return c.eta() / std::pow(sq, 0.5 * c.alpha);
}

// Runs `trials` Bernoulli draws in chunks; `trial` returns true on the event.
template <typename TrialFn>
MetricEstimate run_bernoulli(std::uint64_t trials, std::uint64_t seed, TrialFn&& trial) {
  Xoshiro256pp rng(seed);
  std::uint64_t hits = 0;
  std::uint64_t done = 0;
  while (done < trials) {
    const std::uint64_t n = std::min(kChunkTrials, trials - done);
    std::uint64_t chunk_hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      chunk_hits += trial(rng) ? 1u : 0u;
    }
    hits += chunk_hits;
    done += n;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return {p, se, trials, seed};
}

// Runs `trials` real-valued draws in chunks and returns mean and its SE.
template <typename TrialFn>
MetricEstimate run_mean(std::uint64_t trials, std::uint64_t seed, TrialFn&& trial) {
  Xoshiro256pp rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  std::uint64_t done = 0;
  while (done < trials) {
    const std::uint64_t n = std::min(kChunkTrials, trials - done);
    double chunk_sum = 0.0;
    double chunk_sum_sq = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double v = trial(rng);
      chunk_sum += v;
      chunk_sum_sq += v * v;
    }
    sum += chunk_sum;
    sum_sq += chunk_sum_sq;
    done += n;
  }
  const double nd = static_cast<double>(trials);
  const double mean = sum / nd;
  double se = 0.0;
  if (trials > 1) {
    const double var = std::max(0.0, (sum_sq - nd * mean * mean) / (nd - 1.0));
    se = std::sqrt(var / nd);
  }
  return {mean, se, trials, seed};
}

// Per-trial SINR of the near node's own message after (im)perfect cancellation.
inline double draw_gamma_n(Xoshiro256pp& rng, double rho, const NetworkConfig& c,
                           SicMode mode, double gain) {
  double denom = 1.0;
  if (mode == SicMode::kNisic) {
    denom += rho * sample_exp_power(rng, c.omega_i);
  }
  return rho * gain * c.a_n / denom;
}

// Per-trial effective gain of the far link (fading applied when NLoS).
inline double draw_far_gain(Xoshiro256pp& rng, const NetworkConfig& c, Condition cond) {
  double gain = los_gain(sample_disk_r2(rng, c.r_f_m), c);
  if (cond == Condition::kNlos) {
    gain *= sample_exp_power(rng, c.omega_f);
  }
  return gain;
}

}  // namespace detail

// Probability that a node cannot decode at its target rate(s).
inline MetricEstimate mc_blockage(double rho_db, const NetworkConfig& c, Node node,
                                  SicMode mode, Condition cond, std::uint64_t trials,
                                  std::uint64_t seed) {
  detail::require_trials(trials);
  detail::require_near_is_los(node, cond);
  const double rho = rho_linear(rho_db);
  const double gth_n = c.gamma_th_n();
  const double gth_f = c.gamma_th_f();
  if (node == Node::kNear) {
    return detail::run_bernoulli(trials, seed, [&](Xoshiro256pp& rng) {
      const double gain = detail::los_gain(sample_disk_r2(rng, c.r_n_m), c);
      const double gamma_nf = rho * gain * c.a_f / (rho * gain * c.a_n + 1.0);
      const double gamma_n = detail::draw_gamma_n(rng, rho, c, mode, gain);
      return !(gamma_nf > gth_f && gamma_n >= gth_n);
    });
  }
  return detail::run_bernoulli(trials, seed, [&](Xoshiro256pp& rng) {
    const double gain = detail::draw_far_gain(rng, c, cond);
    const double gamma_f = rho * gain * c.a_f / (rho * gain * c.a_n + 1.0);
    return !(gamma_f > gth_f);
  });
}

// Mean achievable rate of a node's own message, in bits per channel use.
inline MetricEstimate mc_ergodic_rate(double rho_db, const NetworkConfig& c, Node node,
                                      SicMode mode, Condition cond,
                                      std::uint64_t trials, std::uint64_t seed) {
  detail::require_trials(trials);
  detail::require_near_is_los(node, cond);
  const double rho = rho_linear(rho_db);
  if (node == Node::kNear) {
    return detail::run_mean(trials, seed, [&](Xoshiro256pp& rng) {
      const double gain = detail::los_gain(sample_disk_r2(rng, c.r_n_m), c);
      const double gamma_n = detail::draw_gamma_n(rng, rho, c, mode, gain);
      return std::log1p(gamma_n) / std::numbers::ln2;
    });
  }
  return detail::run_mean(trials, seed, [&](Xoshiro256pp& rng) {
    const double gain = detail::draw_far_gain(rng, c, cond);
    const double gamma_f = rho * gain * c.a_f / (rho * gain * c.a_n + 1.0);
    return std::log1p(gamma_f) / std::numbers::ln2;
  });
}

namespace detail {

// Orthogonal access: each node is served alone. tdma-half gives it half the
// resource at full power (SNR threshold 2^(2*target) - 1); full-resource is the
// single-user bound (threshold 2^target - 1).
struct OmaTerms {
  double snr_threshold;
  double rate_scale;
};

inline OmaTerms oma_terms(const NetworkConfig& c, Node node, OmaScheme scheme) {
  const double target = node == Node::kNear ? c.rate_n_bpcu : c.rate_f_bpcu;
  if (scheme == OmaScheme::kTdmaHalf) {
    return {std::exp2(2.0 * target) - 1.0, 0.5};
  }
  return {std::exp2(target) - 1.0, 1.0};
}

template <typename GainFn>
double oma_snr(Xoshiro256pp& rng, double rho, GainFn&& gain_fn) {
  return rho * gain_fn(rng);
}

}  // namespace detail

inline MetricEstimate mc_oma_blockage(double rho_db, const NetworkConfig& c, Node node,
                                      Condition cond, OmaScheme scheme,
                                      std::uint64_t trials, std::uint64_t seed) {
  detail::require_trials(trials);
  detail::require_near_is_los(node, cond);
  const double rho = rho_linear(rho_db);
  const auto terms = detail::oma_terms(c, node, scheme);
  auto gain_fn = [&](Xoshiro256pp& rng) {
    return node == Node::kNear ? detail::los_gain(sample_disk_r2(rng, c.r_n_m), c)
                               : detail::draw_far_gain(rng, c, cond);
  };
  return detail::run_bernoulli(trials, seed, [&](Xoshiro256pp& rng) {
    return !(detail::oma_snr(rng, rho, gain_fn) > terms.snr_threshold);
  });
}

inline MetricEstimate mc_oma_rate(double rho_db, const NetworkConfig& c, Node node,
                                  Condition cond, OmaScheme scheme,
                                  std::uint64_t trials, std::uint64_t seed) {
  detail::require_trials(trials);
  detail::require_near_is_los(node, cond);
  const double rho = rho_linear(rho_db);
  const auto terms = detail::oma_terms(c, node, scheme);
  auto gain_fn = [&](Xoshiro256pp& rng) {
    return node == Node::kNear ? detail::los_gain(sample_disk_r2(rng, c.r_n_m), c)
                               : detail::draw_far_gain(rng, c, cond);
  };
  return detail::run_mean(trials, seed, [&](Xoshiro256pp& rng) {
    return terms.rate_scale * std::log1p(detail::oma_snr(rng, rho, gain_fn)) /
           std::numbers::ln2;
  });
}

}  // namespace passnoma
