// Command-line front end: power sweeps, figure presets, and engine comparison.
//
// Exit codes: 0 success, 1 validation/usage error, 2 comparison failure,
// 3 filesystem failure. Configuration comes only from flags and the optional
// --config file; no environment variables are consulted.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "passnoma/errors.hpp"
#include "passnoma/model.hpp"
#include "passnoma/numerics.hpp"
#include "passnoma/simulator.hpp"
#include "passnoma/sweep.hpp"

namespace {

struct CommonOptions {
  std::string config_path;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  std::string out;
  std::string engine = "both";
  std::string oma_scheme = "tdma-half";
  int quad_order = passnoma::kDefaultQuadratureOrder;
  double start_db = 0.0;
  double stop_db = 60.0;
  double step_db = 2.0;
};

void add_common_options(CLI::App* cmd, CommonOptions* opt) {
  cmd->add_option("--config", opt->config_path,
                  "network configuration file (flat key=value lines)");
  cmd->add_option("--seed", opt->seed, "master seed for the Monte Carlo substreams")
      ->capture_default_str();
  cmd->add_option("--trials", opt->trials, "Monte Carlo trials per sweep point")
      ->capture_default_str();
  cmd->add_option("--out", opt->out,
                  "output CSV path (default: sweep.csv / <fig-id>.csv)");
  cmd->add_option("--engine", opt->engine, "restrict evaluation engines")
      ->check(CLI::IsMember({"analytic", "mc", "both"}))
      ->capture_default_str();
  cmd->add_option("--oma-scheme", opt->oma_scheme,
                  "orthogonal baseline resource split")
      ->check(CLI::IsMember({"tdma-half", "full-resource"}))
      ->capture_default_str();
  cmd->add_option("--quad-order", opt->quad_order,
                  "Gauss-Chebyshev quadrature order for the integral rates")
      ->capture_default_str();
  cmd->add_option("--start", opt->start_db, "sweep start (rho in dB)")
      ->capture_default_str();
  cmd->add_option("--stop", opt->stop_db, "sweep stop (rho in dB)")
      ->capture_default_str();
  cmd->add_option("--step", opt->step_db, "sweep step (dB)")
      ->capture_default_str();
}

// --engine narrows a metric list: "both" requests keep only the chosen engine,
// single-engine requests that do not match are dropped entirely.
void narrow_engines(std::vector<passnoma::MetricRequest>* metrics,
                    passnoma::Engine engine) {
  if (engine == passnoma::Engine::kBoth) return;
  std::vector<passnoma::MetricRequest> kept;
  for (auto& m : *metrics) {
    if (m.engine == passnoma::Engine::kBoth || m.engine == engine) {
      m.engine = engine;
      kept.push_back(std::move(m));
    }
  }
  *metrics = std::move(kept);
}

int run_sweep_command(const CommonOptions& opt, passnoma::SweepSpec spec,
                      const std::string& default_out) {
  spec.rho_db_start = opt.start_db;
  spec.rho_db_stop = opt.stop_db;
  spec.rho_db_step = opt.step_db;
  spec.seed = opt.seed;
  spec.mc_trials = opt.trials;
  spec.quad_order = opt.quad_order;
  spec.oma_scheme = passnoma::oma_scheme_from_string(opt.oma_scheme);
  spec.output_path = opt.out.empty() ? default_out : opt.out;
  narrow_engines(&spec.metrics, passnoma::engine_from_string(opt.engine));

  passnoma::NetworkConfig cfg;
  if (!opt.config_path.empty()) {
    const passnoma::ParsedConfig parsed = passnoma::parse_config_file(opt.config_path);
    cfg = parsed.config;
    if (!parsed.defaulted_keys.empty()) {
      std::cerr << "config: defaults in effect for:";
      for (const auto& key : parsed.defaulted_keys) std::cerr << ' ' << key;
      std::cerr << "\n";
    }
  }

  const passnoma::SweepDataset ds = passnoma::run_sweep(spec, cfg);
  std::size_t error_rows = 0;
  for (const auto& row : ds.rows) {
    if (!row.note.empty()) {
      ++error_rows;
      std::cerr << "row-level error: " << row.metric_id << " [" << row.engine
                << "] at rho_db=" << row.rho_db << ": " << row.note << "\n";
    }
  }
  std::cout << "wrote " << ds.rows.size() << " rows";
  if (error_rows > 0) std::cout << " (" << error_rows << " error records)";
  std::cout << " to " << spec.output_path << "\n";
  return 0;
}

int run_compare_command(const std::string& dataset_path) {
  const passnoma::SweepDataset ds = passnoma::read_csv(dataset_path);
  const passnoma::CompareReport report = passnoma::compare_report(ds);
  std::cout << passnoma::format_report(report);
  if (report.total_pairs == 0) return 0;  // warning, not a failure
  return report.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"performance-analysis toolkit for pinching-antenna NOMA downlinks"};
  app.require_subcommand(1);

  CommonOptions opt;

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "evaluate the default metric set over a transmit-power sweep");
  add_common_options(sweep_cmd, &opt);

  CLI::App* preset_cmd = app.add_subcommand(
      "preset", "evaluate the curve family behind a published figure");
  std::string fig_id;
  preset_cmd->add_option("fig-id", fig_id, "figure id, fig2..fig9")->required();
  std::vector<double> omega_i_list = passnoma::default_omega_i_list();
  add_common_options(preset_cmd, &opt);
  preset_cmd
      ->add_option("--omega-i-list", omega_i_list,
                   "residual-interference means for the NISIC curve families")
      ->expected(1, -1);

  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "check closed-form vs Monte Carlo agreement in a dataset");
  std::string dataset_path;
  compare_cmd->add_option("dataset", dataset_path, "CSV produced by sweep/preset")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage problems are validation errors
  }

  try {
    if (compare_cmd->parsed()) {
      return run_compare_command(dataset_path);
    }
    if (preset_cmd->parsed()) {
      passnoma::FigurePreset preset = passnoma::figure_preset(fig_id, omega_i_list);
      std::cerr << fig_id << ": " << preset.description << "\n";
      return run_sweep_command(opt, std::move(preset.spec), fig_id + ".csv");
    }
    passnoma::SweepSpec spec;
    spec.metrics = passnoma::default_metrics();
    return run_sweep_command(opt, std::move(spec), "sweep.csv");
  } catch (const passnoma::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const passnoma::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
