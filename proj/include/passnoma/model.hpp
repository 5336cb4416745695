#pragma once

// Network model shared by the closed-form evaluators and the Monte Carlo simulator:
// the scenario configuration with its validation rules, link geometry, channel gains,
// and the three SINR expressions of the two-user superposition-coded downlink.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "passnoma/errors.hpp"

namespace passnoma {

inline constexpr double kSpeedOfLightMps = 299792458.0;

// Successive-interference-cancellation quality at the near node.
enum class SicMode { kIsic, kNisic };

// Propagation condition of the far node's link (the near node is always LoS).
enum class Condition { kLos, kNlos };

enum class Node { kNear, kFar };

inline std::string to_string(SicMode m) { return m == SicMode::kIsic ? "isic" : "nisic"; }
inline std::string to_string(Condition c) { return c == Condition::kLos ? "los" : "nlos"; }
inline std::string to_string(Node n) { return n == Node::kNear ? "n" : "f"; }

// Scenario parameters. Defaults reproduce the reference evaluation setup: 1 GHz
// carrier, 1 GHz bandwidth, a 10 m deployment disk with the near node confined to
// the inner 60%, antenna height 5 m, power split 0.3/0.7, unit-mean far-link fading
// and 1% mean residual interference after imperfect cancellation.
struct NetworkConfig {
  double a_n = 0.3;             // near-node power fraction
  double a_f = 0.7;             // far-node power fraction
  double rate_n_bpcu = 1.0;     // near-node target rate (bits per channel use)
  double rate_f_bpcu = 1.0;     // far-node target rate
  double fc_hz = 1.0e9;         // carrier frequency
  double bw_hz = 1.0e9;         // system bandwidth (bookkeeping/noise derivation)
  double alpha = 2.0;           // path-loss exponent (closed forms require 2)
  int num_antennas = 10;        // pinch points sharing the radiated power
  double d_m = 5.0;             // antenna height above the deployment plane
  double r_d_m = 10.0;          // deployment disk radius
  double r_n_m = 6.0;           // near-node disk radius
  double r_f_m = 10.0;          // far-node disk radius
  double omega_i = 0.01;        // mean residual-interference power (NISIC)
  double omega_f = 1.0;         // mean far-link fading power (NLoS)
  // Noise variance in dB; NaN means "derive from bandwidth" as -140 + 10*log10(bw_hz).
  double noise_variance_db = std::numeric_limits<double>::quiet_NaN();

  double eta() const {
    return kSpeedOfLightMps * kSpeedOfLightMps /
           (16.0 * std::numbers::pi * std::numbers::pi * fc_hz * fc_hz);
  }
  double gamma_th_n() const { return std::exp2(rate_n_bpcu) - 1.0; }
  double gamma_th_f() const { return std::exp2(rate_f_bpcu) - 1.0; }
  double effective_noise_variance_db() const {
    return std::isnan(noise_variance_db) ? -140.0 + 10.0 * std::log10(bw_hz)
                                         : noise_variance_db;
  }
};

// Validates every structural invariant and reports all violations at once.
inline void validate(const NetworkConfig& c) {
  std::vector<std::string> v;
  if (!(c.a_n > 0.0)) v.push_back("a_n must be positive");
  if (!(c.a_n < c.a_f)) v.push_back("a_n must be strictly less than a_f");
  if (!(std::fabs(c.a_n + c.a_f - 1.0) <= 1e-12)) v.push_back("a_n + a_f must equal 1");
  if (!(c.rate_n_bpcu > 0.0)) v.push_back("rate_n_bpcu must be positive");
  if (!(c.rate_f_bpcu > 0.0)) v.push_back("rate_f_bpcu must be positive");
  if (!(c.fc_hz > 0.0)) v.push_back("fc_hz must be positive");
  if (!(c.bw_hz > 0.0)) v.push_back("bw_hz must be positive");
  if (!(c.alpha > 0.0)) v.push_back("alpha must be positive");
  if (c.num_antennas < 1) v.push_back("num_antennas must be at least 1");
  if (!(c.d_m > 0.0)) v.push_back("d_m must be positive");
  if (!(c.r_n_m > 0.0)) v.push_back("r_n_m must be positive");
  if (!(c.r_n_m < c.r_f_m)) v.push_back("r_n_m must be strictly less than r_f_m");
  if (!(c.r_f_m <= c.r_d_m)) v.push_back("r_f_m must not exceed r_d_m");
  if (!(c.omega_i > 0.0)) v.push_back("omega_i must be positive");
  if (!(c.omega_f > 0.0)) v.push_back("omega_f must be positive");
  if (!v.empty()) {
    throw validation_error("invalid network configuration", std::move(v));
  }
}

// CDF of the squared planar distance of a disk-uniform node from the disk center:
// P(r^2 <= y) = y/R^2 on [0, R^2].
inline double cdf_squared_distance(double y, double radius_m) {
  if (!(radius_m > 0.0)) {
    throw argument_error("cdf_squared_distance requires a positive radius");
  }
  return std::clamp(y / (radius_m * radius_m), 0.0, 1.0);
}

// Line-of-sight channel power gain eta/(r^2 + d^2)^{alpha/2} for planar squared
// distance r^2 and antenna height d.
inline double channel_power_los(double r_sq, double d_m, double eta, double alpha = 2.0) {
  const double y = r_sq + d_m * d_m;
  return alpha == 2.0 ? eta / y : eta / std::pow(y, 0.5 * alpha);
}

// SINR at the near node when decoding the far node's message (before cancellation):
// rho*g_f*a_f / (rho*g_n*a_n + 1). Callers evaluating the event at the near node's
// own position pass the same gain for both arguments.
inline double sinr_n_to_f(double g_n, double g_f, double rho, const NetworkConfig& c) {
  return rho * g_f * c.a_f / (rho * g_n * c.a_n + 1.0);
}

// Post-cancellation SINR of the near node's own message. Under imperfect
// cancellation a residual with instantaneous power residual_power remains.
inline double sinr_n(double g_n, double residual_power, SicMode mode, double rho,
                     const NetworkConfig& c) {
  const double varpi = mode == SicMode::kNisic ? 1.0 : 0.0;
  return rho * g_n * c.a_n / (varpi * rho * residual_power + 1.0);
}

// SINR of the far node decoding its own message, treating the near-node signal as
// interference: rho*g_f*a_f / (rho*g_f*a_n + 1).
inline double sinr_f(double g_f, double rho, const NetworkConfig& c) {
  return rho * g_f * c.a_f / (rho * g_f * c.a_n + 1.0);
}

inline double rho_linear(double rho_db) { return std::pow(10.0, rho_db / 10.0); }

// ------------------------------------------------------------------------------------
// Flat key=value configuration files
// ------------------------------------------------------------------------------------

struct ParsedConfig {
  NetworkConfig config;
  std::vector<std::string> overridden_keys;  // keys present in the file
  std::vector<std::string> defaulted_keys;   // keys left at their defaults
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw argument_error("config key '" + key + "' has a non-numeric value '" + value + "'");
  }
  if (pos != value.size()) {
    throw argument_error("config key '" + key + "' has trailing junk in value '" + value + "'");
  }
  return out;
}

}  // namespace detail

// Parses a flat key=value file ('#' starts a comment). Unknown keys are a hard
// error; keys not present fall back to the defaults and are reported so the caller
// can log them.
inline ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open config file: " + path);
  }
  ParsedConfig out;
  const std::vector<std::string> known = {
      "a_n", "a_f", "rate_n_bpcu", "rate_f_bpcu", "fc_hz", "bw_hz", "alpha",
      "num_antennas", "d_m", "r_d_m", "r_n_m", "r_f_m", "omega_i", "omega_f",
      "noise_variance_db"};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw argument_error("config line " + std::to_string(lineno) +
                           " is not of the form key=value: '" + line + "'");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw argument_error("unknown config key '" + key + "' on line " +
                           std::to_string(lineno));
    }
    if (std::find(out.overridden_keys.begin(), out.overridden_keys.end(), key) !=
        out.overridden_keys.end()) {
      throw argument_error("duplicate config key '" + key + "' on line " +
                           std::to_string(lineno));
    }
    NetworkConfig& c = out.config;
    if (key == "a_n") c.a_n = detail::parse_double(key, value);
    else if (key == "a_f") c.a_f = detail::parse_double(key, value);
    else if (key == "rate_n_bpcu") c.rate_n_bpcu = detail::parse_double(key, value);
    else if (key == "rate_f_bpcu") c.rate_f_bpcu = detail::parse_double(key, value);
    else if (key == "fc_hz") c.fc_hz = detail::parse_double(key, value);
    else if (key == "bw_hz") c.bw_hz = detail::parse_double(key, value);
    else if (key == "alpha") c.alpha = detail::parse_double(key, value);
    else if (key == "num_antennas") {
      const double k = detail::parse_double(key, value);
      if (k != std::floor(k)) {
        throw argument_error("config key 'num_antennas' must be an integer");
      }
      c.num_antennas = static_cast<int>(k);
    } else if (key == "d_m") c.d_m = detail::parse_double(key, value);
    else if (key == "r_d_m") c.r_d_m = detail::parse_double(key, value);
    else if (key == "r_n_m") c.r_n_m = detail::parse_double(key, value);
    else if (key == "r_f_m") c.r_f_m = detail::parse_double(key, value);
    else if (key == "omega_i") c.omega_i = detail::parse_double(key, value);
    else if (key == "omega_f") c.omega_f = detail::parse_double(key, value);
    else if (key == "noise_variance_db") c.noise_variance_db = detail::parse_double(key, value);
    out.overridden_keys.push_back(key);
  }
  for (const auto& k : known) {
    if (std::find(out.overridden_keys.begin(), out.overridden_keys.end(), k) ==
        out.overridden_keys.end()) {
      out.defaulted_keys.push_back(k);
    }
  }
  validate(out.config);
  return out;
}

}  // namespace passnoma
