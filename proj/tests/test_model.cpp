#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "passnoma/model.hpp"
#include "reference_values.hpp"
#include "support/oracles.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using passnoma::argument_error;
using passnoma::cdf_squared_distance;
using passnoma::channel_power_los;
using passnoma::Condition;
using passnoma::NetworkConfig;
using passnoma::Node;
using passnoma::parse_config_file;
using passnoma::rho_linear;
using passnoma::SicMode;
using passnoma::sinr_f;
using passnoma::sinr_n;
using passnoma::sinr_n_to_f;
using passnoma::validation_error;

namespace {

std::filesystem::path write_temp_config(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("default configuration matches the reference setup", "[model]") {
  const NetworkConfig c;
  REQUIRE(c.a_n == 0.3);
  REQUIRE(c.a_f == 0.7);
  REQUIRE(c.rate_n_bpcu == 1.0);
  REQUIRE(c.rate_f_bpcu == 1.0);
  REQUIRE(c.fc_hz == 1.0e9);
  REQUIRE(c.bw_hz == 1.0e9);
  REQUIRE(c.alpha == 2.0);
  REQUIRE(c.num_antennas == 10);
  REQUIRE(c.d_m == 5.0);
  REQUIRE(c.r_d_m == 10.0);
  REQUIRE(c.r_n_m == 6.0);
  REQUIRE(c.r_f_m == 10.0);
  REQUIRE(c.omega_i == 0.01);
  REQUIRE(c.omega_f == 1.0);
  REQUIRE_NOTHROW(passnoma::validate(c));

  // eta = c^2/(16 pi^2 fc^2) with the exact speed of light
  REQUIRE_THAT(c.eta(), WithinRel(refvals::kEta, 1e-15));
  // unit target rates put both SINR thresholds at exactly 1
  REQUIRE(c.gamma_th_n() == 1.0);
  REQUIRE(c.gamma_th_f() == 1.0);
  // noise derives from bandwidth unless overridden: -140 + 10*log10(1e9) = -50
  REQUIRE_THAT(c.effective_noise_variance_db(), WithinAbs(-50.0, 1e-12));
  NetworkConfig o = c;
  o.noise_variance_db = -94.0;
  REQUIRE(o.effective_noise_variance_db() == -94.0);
}

TEST_CASE("validation lists every violated invariant", "[model]") {
  NetworkConfig c;
  c.a_n = 0.7;
  c.a_f = 0.3;  // violates a_n < a_f (sum still fine)
  c.d_m = 0.0;
  c.omega_i = 0.0;
  try {
    passnoma::validate(c);
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    REQUIRE(e.violations().size() == 3);
    bool saw_split = false, saw_d = false, saw_omega = false;
    for (const auto& v : e.violations()) {
      if (v.find("a_n") != std::string::npos) saw_split = true;
      if (v.find("d_m") != std::string::npos) saw_d = true;
      if (v.find("omega_i") != std::string::npos) saw_omega = true;
    }
    REQUIRE(saw_split);
    REQUIRE(saw_d);
    REQUIRE(saw_omega);
  }

  NetworkConfig s;
  s.a_n = 0.3;
  s.a_f = 0.75;
  REQUIRE_THROWS_AS(passnoma::validate(s), validation_error);

  NetworkConfig radii;
  radii.r_n_m = 10.0;
  radii.r_f_m = 10.0;  // must be strict
  REQUIRE_THROWS_AS(passnoma::validate(radii), validation_error);
  radii.r_n_m = 6.0;
  radii.r_f_m = 12.0;  // exceeds the deployment disk
  REQUIRE_THROWS_AS(passnoma::validate(radii), validation_error);
  radii.r_f_m = 10.0;
  REQUIRE_NOTHROW(passnoma::validate(radii));

  NetworkConfig k;
  k.num_antennas = 0;
  REQUIRE_THROWS_AS(passnoma::validate(k), validation_error);
}

TEST_CASE("squared-distance CDF is the disk-uniform law", "[model]") {
  REQUIRE(cdf_squared_distance(-1.0, 10.0) == 0.0);
  REQUIRE(cdf_squared_distance(0.0, 10.0) == 0.0);
  REQUIRE(cdf_squared_distance(25.0, 10.0) == 0.25);
  REQUIRE(cdf_squared_distance(100.0, 10.0) == 1.0);
  REQUIRE(cdf_squared_distance(150.0, 10.0) == 1.0);
  REQUIRE(cdf_squared_distance(18.0, 6.0) == 0.5);
  REQUIRE_THROWS_AS(cdf_squared_distance(1.0, 0.0), argument_error);
  REQUIRE_THROWS_AS(cdf_squared_distance(1.0, -2.0), argument_error);
}

TEST_CASE("line-of-sight channel gain", "[model]") {
  const NetworkConfig c;
  const double eta = c.eta();
  REQUIRE_THAT(channel_power_los(0.0, 5.0, eta), WithinRel(eta / 25.0, 1e-15));
  REQUIRE_THAT(channel_power_los(75.0, 5.0, eta), WithinRel(eta / 100.0, 1e-15));
  // steeper path-loss exponent: (r^2+d^2)^{alpha/2}
  REQUIRE_THAT(channel_power_los(75.0, 5.0, eta, 4.0), WithinRel(eta / 10000.0, 1e-14));
  REQUIRE(channel_power_los(10.0, 5.0, eta) > channel_power_los(20.0, 5.0, eta));
}

TEST_CASE("SINR expressions on hand-checkable inputs", "[model]") {
  const NetworkConfig c;
  const double g = 1e-4;
  const double rho = 1e4;  // rho*g = 1
  REQUIRE_THAT(sinr_n_to_f(g, g, rho, c), WithinRel(0.7 / 1.3, 1e-15));
  REQUIRE_THAT(sinr_f(g, rho, c), WithinRel(0.7 / 1.3, 1e-15));
  REQUIRE_THAT(sinr_n(g, 0.5, SicMode::kIsic, rho, c), WithinRel(0.3, 1e-15));
  REQUIRE_THAT(sinr_n(g, 0.01, SicMode::kNisic, rho, c), WithinRel(0.3 / 101.0, 1e-15));
  // far-node SINR saturates at a_f/a_n as the link gain grows
  REQUIRE_THAT(sinr_f(1.0, 1e12, c), WithinRel(0.7 / 0.3, 1e-9));
  REQUIRE(sinr_f(1e-6, rho, c) < sinr_f(1e-3, rho, c));
}

TEST_CASE("rho conversion", "[model]") {
  REQUIRE_THAT(rho_linear(0.0), WithinRel(1.0, 1e-15));
  REQUIRE_THAT(rho_linear(30.0), WithinRel(1000.0, 1e-14));
  REQUIRE_THAT(rho_linear(-10.0), WithinRel(0.1, 1e-14));
}

TEST_CASE("config file parsing applies overrides and reports defaults", "[model]") {
  const auto path = write_temp_config("passnoma_model_ok.cfg",
                                      "# comment line\n"
                                      "a_n = 0.2\n"
                                      "a_f = 0.8   # trailing comment\n"
                                      "\n"
                                      "r_n_m=4\n"
                                      "omega_i = 0.1\n");
  const auto parsed = parse_config_file(path.string());
  REQUIRE(parsed.config.a_n == 0.2);
  REQUIRE(parsed.config.a_f == 0.8);
  REQUIRE(parsed.config.r_n_m == 4.0);
  REQUIRE(parsed.config.omega_i == 0.1);
  REQUIRE(parsed.config.r_f_m == 10.0);  // untouched default
  REQUIRE(parsed.overridden_keys.size() == 4);
  REQUIRE(parsed.defaulted_keys.size() == 11);
  std::filesystem::remove(path);
}

TEST_CASE("config file parsing rejects unknown keys, junk and duplicates", "[model]") {
  const auto unknown = write_temp_config("passnoma_model_unknown.cfg", "bogus_key = 3\n");
  REQUIRE_THROWS_AS(parse_config_file(unknown.string()), argument_error);
  std::filesystem::remove(unknown);

  const auto junk = write_temp_config("passnoma_model_junk.cfg", "a_n = banana\n");
  REQUIRE_THROWS_AS(parse_config_file(junk.string()), argument_error);
  std::filesystem::remove(junk);

  const auto dup = write_temp_config("passnoma_model_dup.cfg", "a_n = 0.3\na_n = 0.4\n");
  REQUIRE_THROWS_AS(parse_config_file(dup.string()), argument_error);
  std::filesystem::remove(dup);

  const auto noeq = write_temp_config("passnoma_model_noeq.cfg", "a_n 0.3\n");
  REQUIRE_THROWS_AS(parse_config_file(noeq.string()), argument_error);
  std::filesystem::remove(noeq);

  // an unreadable file is a filesystem failure, not a config-content error
  REQUIRE_THROWS_AS(parse_config_file("/nonexistent/path/nope.cfg"), passnoma::io_error);

  // invalid values parse but fail validation
  const auto bad = write_temp_config("passnoma_model_bad.cfg", "a_n = 0.9\na_f = 0.1\n");
  REQUIRE_THROWS_AS(parse_config_file(bad.string()), validation_error);
  std::filesystem::remove(bad);
}

TEST_CASE("empty config file keeps every default", "[model]") {
  const auto path = write_temp_config("passnoma_model_empty.cfg", "# nothing here\n");
  const auto parsed = parse_config_file(path.string());
  REQUIRE(parsed.overridden_keys.empty());
  REQUIRE(parsed.defaulted_keys.size() == 15);
  REQUIRE(parsed.config.a_n == 0.3);
  std::filesystem::remove(path);
}

TEST_CASE("squared-distance CDF matches disk sampling (KS)", "[model]") {
  // r = R*sqrt(u) sampling puts r^2 uniform on [0, R^2]; the KS distance of 1e6
  // samples against the model CDF must sit well inside the 0.002 budget.
  const double radius = 6.0;
  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::vector<double> samples;
  samples.reserve(1000000);
  for (int i = 0; i < 1000000; ++i) {
    const double r = radius * std::sqrt(uni(gen));
    samples.push_back(r * r);
  }
  const double ks = oracles::ks_statistic(
      std::move(samples), [&](double y) { return cdf_squared_distance(y, radius); });
  REQUIRE(ks < 0.002);
}
