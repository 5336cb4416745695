#pragma once

// Sweep runner: executes rho sweeps over selected metrics with the closed-form
// and/or Monte Carlo engines, serializes the results as provenance-carrying CSV
// datasets, re-parses its own output, and compares engine pairs under the 3*SE
// rule. Figure presets bundle the metric families behind each published curve
// set, including geometry (R_D) and antenna-count (K) parameter families.
//
// Dataset schema (stable): one header line
//   rho_db,metric_id,mode,condition,engine,value,std_error,trials,seed
// preceded by a leading comment block of '# key=value' lines recording the tool
// version, master seed, quadrature order, OMA scheme, resolved configuration,
// and the quadrature node mapping. std_error is empty on analytic rows. All
// numbers are printed with %.17g so reruns are byte-identical and round-trips
// are lossless. Rows appear in deterministic order: metric, then engine
// (analytic before mc), then ascending rho.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "passnoma/analytic.hpp"
#include "passnoma/errors.hpp"
#include "passnoma/model.hpp"
#include "passnoma/numerics.hpp"
#include "passnoma/rng.hpp"
#include "passnoma/simulator.hpp"

namespace passnoma {

inline constexpr const char* kToolName = "passnoma";
inline constexpr const char* kToolVersion = "1.0.0";

// ------------------------------------------------------------------------------------
// Sweep specification
// ------------------------------------------------------------------------------------

enum class Engine { kAnalytic, kMc, kBoth };

inline const char* to_string(Engine e) {
  switch (e) {
    case Engine::kAnalytic: return "analytic";
    case Engine::kMc: return "mc";
    default: return "both";
  }
}

inline Engine engine_from_string(std::string_view name) {
  if (name == "analytic") return Engine::kAnalytic;
  if (name == "mc") return Engine::kMc;
  if (name == "both") return Engine::kBoth;
  throw argument_error("unknown engine '" + std::string(name) +
                       "' (expected 'analytic', 'mc', or 'both')");
}

// Per-metric configuration adjustments used by the figure presets.
struct ConfigPatch {
  std::optional<double> omega_i;
  std::optional<double> r_d_m;   // deployment radius family (also rescales disks)
  std::optional<int> num_antennas;
  double rho_shift_db = 0.0;     // per-antenna power shift for antenna-count sweeps

  NetworkConfig apply(NetworkConfig c) const {
    if (omega_i) c.omega_i = *omega_i;
    if (r_d_m) {
      c.r_d_m = *r_d_m;
      c.r_f_m = *r_d_m;           // far disk spans the deployment region
      c.r_n_m = 0.6 * (*r_d_m);   // near disk keeps the default 6/10 proportion
    }
    if (num_antennas) c.num_antennas = *num_antennas;
    return c;
  }
};

struct MetricRequest {
  std::string metric_id;  // base id plus optional family suffix, e.g. "rate-n:omega_i=0.1"
  SicMode mode = SicMode::kIsic;
  Condition condition = Condition::kLos;
  Engine engine = Engine::kBoth;
  ConfigPatch patch;
};

struct SweepSpec {
  double rho_db_start = 0.0;
  double rho_db_stop = 60.0;
  double rho_db_step = 2.0;
  std::vector<MetricRequest> metrics;
  std::uint64_t mc_trials = 100000;
  std::uint64_t seed = 1;
  std::string output_path;  // empty: build the dataset without writing a file
  int quad_order = kDefaultQuadratureOrder;
  OmaScheme oma_scheme = OmaScheme::kTdmaHalf;
};

inline void validate(const SweepSpec& s) {
  std::vector<std::string> v;
  if (!(s.rho_db_step > 0.0) || !std::isfinite(s.rho_db_step)) {
    v.push_back("rho_db_step must be positive and finite");
  }
  if (!(s.rho_db_start <= s.rho_db_stop)) {
    v.push_back("rho_db_start must not exceed rho_db_stop");
  }
  if (s.metrics.empty()) v.push_back("metric list must be non-empty");
  if (s.mc_trials == 0) v.push_back("mc_trials must be at least 1");
  if (s.quad_order < 1) v.push_back("quad_order must be at least 1");
  if (!v.empty()) throw validation_error("invalid sweep specification", std::move(v));
}

// The default metric set: every closed-form observable with its Monte Carlo twin.
inline std::vector<MetricRequest> default_metrics() {
  return {
      {"blockage-n", SicMode::kIsic, Condition::kLos, Engine::kBoth, {}},
      {"blockage-n", SicMode::kNisic, Condition::kLos, Engine::kBoth, {}},
      {"blockage-f", SicMode::kIsic, Condition::kLos, Engine::kBoth, {}},
      {"blockage-f", SicMode::kIsic, Condition::kNlos, Engine::kBoth, {}},
      {"rate-n", SicMode::kIsic, Condition::kLos, Engine::kBoth, {}},
      {"rate-n", SicMode::kNisic, Condition::kLos, Engine::kBoth, {}},
      {"rate-f", SicMode::kIsic, Condition::kLos, Engine::kBoth, {}},
      {"rate-f", SicMode::kIsic, Condition::kNlos, Engine::kBoth, {}},
  };
}

// ------------------------------------------------------------------------------------
// Dataset rows
// ------------------------------------------------------------------------------------

struct SweepRow {
  double rho_db = 0.0;
  std::string metric_id;
  std::string mode;       // "isic", "nisic", or "-" when not applicable
  std::string condition;  // "los", "nlos", or "-"
  std::string engine;     // "analytic" or "mc"
  double value = std::numeric_limits<double>::quiet_NaN();
  double std_error = std::numeric_limits<double>::quiet_NaN();  // NaN = empty field
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string note;  // error reason for nan-value rows; not serialized
};

struct SweepDataset {
  std::vector<std::pair<std::string, std::string>> header;  // '# key=value' block
  std::vector<SweepRow> rows;
};

namespace detail {

inline std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string metric_base(std::string_view id) {
  const auto colon = id.find(':');
  return std::string(colon == std::string_view::npos ? id : id.substr(0, colon));
}

struct MetricTraits {
  bool analytic = false;
  bool mc = false;
  bool mode_applies = false;       // near-node SIC distinction
  bool condition_applies = false;  // far-link LoS/NLoS distinction
};

inline MetricTraits metric_traits(const std::string& base) {
  static const std::map<std::string, MetricTraits> table = {
      {"blockage-n", {true, true, true, false}},
      {"blockage-f", {true, true, false, true}},
      {"rate-n", {true, true, true, false}},
      {"rate-f", {true, true, false, true}},
      {"asym-blockage-n", {true, false, false, false}},
      {"asym-blockage-f", {true, false, false, true}},
      {"asym-rate-f", {true, false, false, true}},
      {"rate-n-upper", {true, false, false, false}},
      {"throughput-dl", {true, true, true, true}},
      {"throughput-dt", {true, true, true, true}},
      {"oma-blockage-n", {false, true, false, false}},
      {"oma-blockage-f", {false, true, false, true}},
      {"oma-rate-n", {false, true, false, false}},
      {"oma-rate-f", {false, true, false, true}},
  };
  const auto it = table.find(base);
  if (it == table.end()) {
    throw argument_error("unknown metric id '" + base + "'");
  }
  return it->second;
}

inline double evaluate_analytic(const std::string& base, const MetricRequest& req,
                                double rho_db, const NetworkConfig& cfg,
                                const QuadratureRule& rule) {
  if (base == "blockage-n") {
    return req.mode == SicMode::kIsic ? blockage_n_isic(rho_db, cfg).probability
                                      : blockage_n_nisic(rho_db, cfg).probability;
  }
  if (base == "blockage-f") {
    return req.condition == Condition::kLos ? blockage_f_los(rho_db, cfg).probability
                                            : blockage_f_nlos(rho_db, cfg).probability;
  }
  if (base == "rate-n") {
    return req.mode == SicMode::kIsic ? ergodic_rate_n_isic(rho_db, cfg).rate
                                      : ergodic_rate_n_nisic(rho_db, cfg, rule).rate;
  }
  if (base == "rate-f") {
    return req.condition == Condition::kLos
               ? ergodic_rate_f_los(rho_db, cfg).rate
               : ergodic_rate_f_nlos(rho_db, cfg, rule).rate;
  }
  if (base == "asym-blockage-n") return asym_blockage_n_nisic(cfg);
  if (base == "asym-blockage-f") return asym_blockage_f_nlos(rho_db, cfg);
  if (base == "asym-rate-f") {
    return req.condition == Condition::kLos ? asym_rate_f_los(cfg)
                                            : asym_rate_f_nlos(cfg, rule);
  }
  if (base == "rate-n-upper") return rate_upper_n_isic_asym(rho_db, cfg);
  if (base == "throughput-dl") {
    return throughput_delay_constrained(rho_db, cfg, req.mode, req.condition);
  }
  if (base == "throughput-dt") {
    return throughput_latency_tolerant(rho_db, cfg, req.mode, req.condition, rule);
  }
  throw argument_error("metric '" + base + "' has no closed-form engine");
}

inline MetricEstimate evaluate_mc(const std::string& base, const MetricRequest& req,
                                  double rho_db, const NetworkConfig& cfg,
                                  OmaScheme scheme, std::uint64_t trials,
                                  std::uint64_t row_seed) {
  if (base == "blockage-n") {
    return mc_blockage(rho_db, cfg, Node::kNear, req.mode, Condition::kLos, trials,
                       row_seed);
  }
  if (base == "blockage-f") {
    return mc_blockage(rho_db, cfg, Node::kFar, SicMode::kIsic, req.condition, trials,
                       row_seed);
  }
  if (base == "rate-n") {
    return mc_ergodic_rate(rho_db, cfg, Node::kNear, req.mode, Condition::kLos, trials,
                           row_seed);
  }
  if (base == "rate-f") {
    return mc_ergodic_rate(rho_db, cfg, Node::kFar, SicMode::kIsic, req.condition,
                           trials, row_seed);
  }
  if (base == "throughput-dl") {
    // fixed-rate throughput: target rates weighted by each node's success odds;
    // the two nodes draw from independent substreams folded into the row seed
    const auto n = mc_blockage(rho_db, cfg, Node::kNear, req.mode, Condition::kLos,
                               trials, mix64(row_seed ^ 1));
    const auto f = mc_blockage(rho_db, cfg, Node::kFar, SicMode::kIsic, req.condition,
                               trials, mix64(row_seed ^ 2));
    const double value = cfg.rate_n_bpcu * (1.0 - n.mean) + cfg.rate_f_bpcu * (1.0 - f.mean);
    const double se =
        std::hypot(cfg.rate_n_bpcu * n.std_error, cfg.rate_f_bpcu * f.std_error);
    return {value, se, trials, row_seed};
  }
  if (base == "throughput-dt") {
    const auto n = mc_ergodic_rate(rho_db, cfg, Node::kNear, req.mode, Condition::kLos,
                                   trials, mix64(row_seed ^ 1));
    const auto f = mc_ergodic_rate(rho_db, cfg, Node::kFar, SicMode::kIsic,
                                   req.condition, trials, mix64(row_seed ^ 2));
    return {n.mean + f.mean, std::hypot(n.std_error, f.std_error), trials, row_seed};
  }
  if (base == "oma-blockage-n") {
    return mc_oma_blockage(rho_db, cfg, Node::kNear, Condition::kLos, scheme, trials,
                           row_seed);
  }
  if (base == "oma-blockage-f") {
    return mc_oma_blockage(rho_db, cfg, Node::kFar, req.condition, scheme, trials,
                           row_seed);
  }
  if (base == "oma-rate-n") {
    return mc_oma_rate(rho_db, cfg, Node::kNear, Condition::kLos, scheme, trials,
                       row_seed);
  }
  if (base == "oma-rate-f") {
    return mc_oma_rate(rho_db, cfg, Node::kFar, req.condition, scheme, trials, row_seed);
  }
  throw argument_error("metric '" + base + "' has no Monte Carlo engine");
}

}  // namespace detail

// ------------------------------------------------------------------------------------
// Sweep execution
// ------------------------------------------------------------------------------------

inline void write_csv(const SweepDataset& ds, const std::string& path);

inline SweepDataset run_sweep(const SweepSpec& spec, const NetworkConfig& cfg) {
  validate(spec);
  validate(cfg);
  const QuadratureRule rule = chebyshev_nodes(spec.quad_order);

  SweepDataset ds;
  auto put = [&](const std::string& k, const std::string& v) {
    ds.header.emplace_back(k, v);
  };
  put("tool", kToolName);
  put("version", kToolVersion);
  put("seed", std::to_string(spec.seed));
  put("default_trials", std::to_string(spec.mc_trials));
  put("quad_order", std::to_string(spec.quad_order));
  put("oma_scheme", to_string(spec.oma_scheme));
  put("rho_db_start", detail::fmt_g17(spec.rho_db_start));
  put("rho_db_stop", detail::fmt_g17(spec.rho_db_stop));
  put("rho_db_step", detail::fmt_g17(spec.rho_db_step));
  put("quadrature_map", kFNlosQuadratureMapDoc);
  put("config.a_n", detail::fmt_g17(cfg.a_n));
  put("config.a_f", detail::fmt_g17(cfg.a_f));
  put("config.rate_n_bpcu", detail::fmt_g17(cfg.rate_n_bpcu));
  put("config.rate_f_bpcu", detail::fmt_g17(cfg.rate_f_bpcu));
  put("config.fc_hz", detail::fmt_g17(cfg.fc_hz));
  put("config.bw_hz", detail::fmt_g17(cfg.bw_hz));
  put("config.alpha", detail::fmt_g17(cfg.alpha));
  put("config.num_antennas", std::to_string(cfg.num_antennas));
  put("config.d_m", detail::fmt_g17(cfg.d_m));
  put("config.r_d_m", detail::fmt_g17(cfg.r_d_m));
  put("config.r_n_m", detail::fmt_g17(cfg.r_n_m));
  put("config.r_f_m", detail::fmt_g17(cfg.r_f_m));
  put("config.omega_i", detail::fmt_g17(cfg.omega_i));
  put("config.omega_f", detail::fmt_g17(cfg.omega_f));
  put("config.noise_variance_db", detail::fmt_g17(cfg.effective_noise_variance_db()));

  const std::size_t points = static_cast<std::size_t>(
      std::floor((spec.rho_db_stop - spec.rho_db_start) / spec.rho_db_step + 1e-9)) + 1;

  for (const auto& req : spec.metrics) {
    const std::string base = detail::metric_base(req.metric_id);
    const auto traits = detail::metric_traits(base);
    const NetworkConfig patched = req.patch.apply(cfg);
    const std::string mode_str = traits.mode_applies ? to_string(req.mode) : "-";
    // metrics without a far-link dimension are near-node metrics; that link is LoS
    const std::string cond_str =
        traits.condition_applies ? to_string(req.condition) : "los";

    // An explicit single-engine request is honored even when the metric lacks
    // that engine, so the mismatch surfaces as row-level error records instead
    // of silently dropped curves; "both" means every engine the metric has.
    const bool want_analytic = req.engine == Engine::kAnalytic ||
                               (req.engine == Engine::kBoth && traits.analytic);
    const bool want_mc = req.engine == Engine::kMc ||
                         (req.engine == Engine::kBoth && traits.mc);

    for (int pass = 0; pass < 2; ++pass) {
      const bool analytic_pass = pass == 0;
      if (analytic_pass && !want_analytic) continue;
      if (!analytic_pass && !want_mc) continue;
      for (std::size_t i = 0; i < points; ++i) {
        const double axis_db = spec.rho_db_start + static_cast<double>(i) * spec.rho_db_step;
        const double eff_db = axis_db + req.patch.rho_shift_db;
        SweepRow row;
        row.rho_db = axis_db;
        row.metric_id = req.metric_id;
        row.mode = mode_str;
        row.condition = cond_str;
        row.engine = analytic_pass ? "analytic" : "mc";
        try {
          if (analytic_pass) {
            row.value = detail::evaluate_analytic(base, req, eff_db, patched, rule);
          } else {
            const std::uint64_t row_seed =
                derive_substream(spec.seed, i, req.metric_id);
            const auto est = detail::evaluate_mc(base, req, eff_db, patched,
                                                 spec.oma_scheme, spec.mc_trials,
                                                 row_seed);
            row.value = est.mean;
            row.std_error = est.std_error;
            row.trials = est.trials;
            row.seed = est.seed;
          }
        } catch (const error& e) {
          row.value = std::numeric_limits<double>::quiet_NaN();
          row.note = e.what();  // row-level error record; the sweep continues
        }
        ds.rows.push_back(std::move(row));
      }
    }
  }
  if (!spec.output_path.empty()) {
    write_csv(ds, spec.output_path);
  }
  return ds;
}

// ------------------------------------------------------------------------------------
// CSV serialization
// ------------------------------------------------------------------------------------

inline constexpr const char* kCsvHeaderLine =
    "rho_db,metric_id,mode,condition,engine,value,std_error,trials,seed";

inline void write_csv(const SweepDataset& ds, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw io_error("cannot open output path for writing: " + path);
  }
  for (const auto& [k, v] : ds.header) {
    out << "# " << k << "=" << v << "\n";
  }
  out << kCsvHeaderLine << "\n";
  for (const auto& r : ds.rows) {
    out << detail::fmt_g17(r.rho_db) << ',' << r.metric_id << ',' << r.mode << ','
        << r.condition << ',' << r.engine << ',' << detail::fmt_g17(r.value) << ',';
    if (!std::isnan(r.std_error)) out << detail::fmt_g17(r.std_error);
    out << ',' << r.trials << ',' << r.seed << "\n";
  }
  out.flush();
  if (!out) {
    throw io_error("failed while writing dataset to: " + path);
  }
}

inline SweepDataset read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot open dataset for reading: " + path);
  }
  SweepDataset ds;
  std::string line;
  bool saw_header_line = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = line.substr(1);
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        ds.header.emplace_back(body.substr(0, eq), body.substr(eq + 1));
      }
      continue;
    }
    if (!saw_header_line) {
      if (line != kCsvHeaderLine) {
        throw io_error("unexpected column header on line " + std::to_string(lineno) +
                       " of " + path);
      }
      saw_header_line = true;
      continue;
    }
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");  // trailing empty field
    if (fields.size() != 9) {
      throw io_error("malformed row on line " + std::to_string(lineno) + " of " + path);
    }
    SweepRow r;
    try {
      r.rho_db = std::stod(fields[0]);
      r.metric_id = fields[1];
      r.mode = fields[2];
      r.condition = fields[3];
      r.engine = fields[4];
      r.value = std::stod(fields[5]);
      r.std_error = fields[6].empty() ? std::numeric_limits<double>::quiet_NaN()
                                      : std::stod(fields[6]);
      r.trials = std::stoull(fields[7]);
      r.seed = std::stoull(fields[8]);
    } catch (const std::exception&) {
      throw io_error("unparseable row on line " + std::to_string(lineno) + " of " + path);
    }
    ds.rows.push_back(std::move(r));
  }
  if (!saw_header_line) {
    throw io_error("dataset has no column header: " + path);
  }
  return ds;
}

// ------------------------------------------------------------------------------------
// Engine comparison
// ------------------------------------------------------------------------------------

struct MetricComparison {
  std::string metric_id;
  std::string mode;
  std::string condition;
  std::size_t pairs = 0;
  double max_abs_diff = 0.0;
  double max_se_ratio = 0.0;   // |diff| / SE over pairs with SE > 0
  double worst_rho_db = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> failed_rho_db;  // points violating the 3*SE rule
  bool pass = true;
};

struct CompareReport {
  std::vector<MetricComparison> metrics;
  std::size_t total_pairs = 0;
  std::size_t error_rows = 0;  // nan-valued row-level error records in the dataset
  bool all_pass = true;
  std::uint64_t clamp_probability_events = 0;
  std::uint64_t clamp_rate_events = 0;
  std::string quadrature_map_doc = kFNlosQuadratureMapDoc;
};

// Pairs analytic and Monte Carlo rows per (metric, mode, condition, rho) and
// applies |analytic - mc| <= max(3*SE, 1e-4), the acceptance rule used throughout.
inline CompareReport compare_report(const SweepDataset& ds) {
  using Key = std::tuple<std::string, std::string, std::string>;
  struct PointPair {
    std::optional<double> analytic;
    std::optional<double> mc;
    double se = 0.0;
  };
  std::map<Key, std::map<double, PointPair>> groups;
  CompareReport report;
  for (const auto& r : ds.rows) {
    if (std::isnan(r.value)) {
      ++report.error_rows;
      continue;
    }
    auto& point = groups[{r.metric_id, r.mode, r.condition}][r.rho_db];
    if (r.engine == "analytic") {
      point.analytic = r.value;
    } else if (r.engine == "mc") {
      point.mc = r.value;
      point.se = std::isnan(r.std_error) ? 0.0 : r.std_error;
    }
  }
  for (const auto& [key, points] : groups) {
    MetricComparison mc;
    mc.metric_id = std::get<0>(key);
    mc.mode = std::get<1>(key);
    mc.condition = std::get<2>(key);
    for (const auto& [rho, pt] : points) {
      if (!pt.analytic || !pt.mc) continue;
      ++mc.pairs;
      const double diff = std::fabs(*pt.analytic - *pt.mc);
      if (diff >= mc.max_abs_diff) {
        mc.max_abs_diff = diff;
        mc.worst_rho_db = rho;
      }
      if (pt.se > 0.0) {
        mc.max_se_ratio = std::max(mc.max_se_ratio, diff / pt.se);
      }
      if (!(diff <= std::max(3.0 * pt.se, 1e-4))) {
        mc.pass = false;
        mc.failed_rho_db.push_back(rho);
      }
    }
    if (mc.pairs == 0) continue;
    report.total_pairs += mc.pairs;
    report.all_pass = report.all_pass && mc.pass;
    report.metrics.push_back(std::move(mc));
  }
  const auto& counters = clamp_counters();
  report.clamp_probability_events = counters.probability.load();
  report.clamp_rate_events = counters.rate.load();
  return report;
}

inline std::string format_report(const CompareReport& report) {
  std::ostringstream out;
  if (report.total_pairs == 0) {
    out << "warning: no comparable (analytic, mc) pairs in the dataset\n";
    return out.str();
  }
  out << "engine comparison: |analytic - mc| <= max(3*SE, 1e-4)\n";
  out << "quadrature: " << report.quadrature_map_doc << "\n";
  out << "clamp events: probability=" << report.clamp_probability_events
      << " rate=" << report.clamp_rate_events << "\n";
  if (report.error_rows > 0) {
    out << "row-level error records skipped: " << report.error_rows << "\n";
  }
  for (const auto& m : report.metrics) {
    out << (m.pass ? "PASS " : "FAIL ") << m.metric_id << " [" << m.mode << "/"
        << m.condition << "] pairs=" << m.pairs
        << " max|diff|=" << detail::fmt_g17(m.max_abs_diff)
        << " max|diff|/SE=" << detail::fmt_g17(m.max_se_ratio)
        << " worst at rho_db=" << detail::fmt_g17(m.worst_rho_db);
    if (!m.pass) {
      out << " failed rho_db:";
      for (double rho : m.failed_rho_db) out << ' ' << detail::fmt_g17(rho);
    }
    out << "\n";
  }
  out << (report.all_pass ? "overall: PASS" : "overall: FAIL") << " ("
      << report.metrics.size() << " metrics, " << report.total_pairs << " pairs)\n";
  return out.str();
}

// ------------------------------------------------------------------------------------
// Figure presets
// ------------------------------------------------------------------------------------

struct FigurePreset {
  std::string id;
  std::string description;
  SweepSpec spec;
};

namespace detail {

// Short labels for metric-id family suffixes (full precision lives in the rows).
inline std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

inline std::string omega_suffix(double omega) {
  return ":omega_i=" + fmt_label(omega);
}

inline ConfigPatch omega_patch(double omega) {
  ConfigPatch p;
  p.omega_i = omega;
  return p;
}

inline ConfigPatch radius_patch(double r_d) {
  ConfigPatch p;
  p.r_d_m = r_d;
  return p;
}

inline ConfigPatch antennas_patch(int k) {
  ConfigPatch p;
  p.num_antennas = k;
  // the per-antenna power budget scales inversely with the antenna count,
  // normalized to the 10-antenna baseline
  p.rho_shift_db = 10.0 * std::log10(10.0 / static_cast<double>(k));
  return p;
}

}  // namespace detail

inline const std::vector<double>& default_omega_i_list() {
  static const std::vector<double> values = {0.001, 0.01, 0.1};
  return values;
}

// Curve families behind the published figures. `omega_i_list` feeds the
// residual-interference families of fig2 and fig5 (default {0.001, 0.01, 0.1}).
inline FigurePreset figure_preset(
    std::string_view id, const std::vector<double>& omega_i_list = default_omega_i_list()) {
  FigurePreset p;
  p.id = std::string(id);
  SweepSpec& s = p.spec;
  auto add = [&](std::string metric_id, SicMode mode, Condition cond, Engine engine,
                 ConfigPatch patch = {}) {
    s.metrics.push_back({std::move(metric_id), mode, cond, engine, std::move(patch)});
  };
  const auto isic = SicMode::kIsic;
  const auto nisic = SicMode::kNisic;
  const auto los = Condition::kLos;
  const auto nlos = Condition::kNlos;

  if (id == "fig2") {
    p.description = "blockage probability versus rho: both SIC modes, both far-link "
                    "conditions, residual-interference floors, orthogonal baseline";
    add("blockage-n", nisic, los, Engine::kBoth);
    add("blockage-n", isic, los, Engine::kBoth);
    add("blockage-f", isic, los, Engine::kBoth);
    add("blockage-f", isic, nlos, Engine::kBoth);
    for (double w : omega_i_list) {
      add("asym-blockage-n" + detail::omega_suffix(w), nisic, los, Engine::kAnalytic,
          detail::omega_patch(w));
    }
    add("asym-blockage-f", isic, nlos, Engine::kAnalytic);
    add("oma-blockage-n", isic, los, Engine::kMc);
    add("oma-blockage-f", isic, los, Engine::kMc);
    add("oma-blockage-f", isic, nlos, Engine::kMc);
  } else if (id == "fig3" || id == "fig4") {
    const bool radius = id == "fig3";
    p.description = radius
        ? "blockage probability versus rho for deployment radii 10/20/30 m"
        : "blockage probability versus rho for antenna counts 5/10/20 "
          "(per-antenna power scales inversely with the count)";
    auto family = [&](const std::string& suffix, const ConfigPatch& patch) {
      add("blockage-n" + suffix, isic, los, Engine::kBoth, patch);
      add("blockage-n" + suffix, nisic, los, Engine::kBoth, patch);
      add("blockage-f" + suffix, isic, nlos, Engine::kBoth, patch);
    };
    if (radius) {
      for (double r : {10.0, 20.0, 30.0}) {
        family(":r_d=" + detail::fmt_label(r), detail::radius_patch(r));
      }
    } else {
      for (int k : {5, 10, 20}) {
        family(":k=" + std::to_string(k), detail::antennas_patch(k));
      }
    }
  } else if (id == "fig5") {
    p.description = "ergodic rates versus rho: both SIC modes, both far-link "
                    "conditions, high-SNR asymptotes, orthogonal baseline";
    add("rate-n", isic, los, Engine::kBoth);
    for (double w : omega_i_list) {
      add("rate-n" + detail::omega_suffix(w), nisic, los, Engine::kBoth,
          detail::omega_patch(w));
    }
    add("rate-f", isic, los, Engine::kBoth);
    add("rate-f", isic, nlos, Engine::kBoth);
    add("rate-n-upper", isic, los, Engine::kAnalytic);
    add("asym-rate-f", isic, los, Engine::kAnalytic);
    add("asym-rate-f", isic, nlos, Engine::kAnalytic);
    add("oma-rate-n", isic, los, Engine::kMc);
    add("oma-rate-f", isic, los, Engine::kMc);
    add("oma-rate-f", isic, nlos, Engine::kMc);
  } else if (id == "fig6" || id == "fig7") {
    const bool radius = id == "fig6";
    p.description = radius
        ? "ergodic rates versus rho for deployment radii 10/20/30 m"
        : "ergodic rates versus rho for antenna counts 5/10/20 "
          "(per-antenna power scales inversely with the count)";
    auto family = [&](const std::string& suffix, const ConfigPatch& patch) {
      add("rate-n" + suffix, isic, los, Engine::kBoth, patch);
      add("rate-f" + suffix, isic, los, Engine::kBoth, patch);
      add("rate-f" + suffix, isic, nlos, Engine::kBoth, patch);
    };
    if (radius) {
      for (double r : {10.0, 20.0, 30.0}) {
        family(":r_d=" + detail::fmt_label(r), detail::radius_patch(r));
      }
    } else {
      for (int k : {5, 10, 20}) {
        family(":k=" + std::to_string(k), detail::antennas_patch(k));
      }
    }
  } else if (id == "fig8" || id == "fig9") {
    const bool delay_constrained = id == "fig8";
    const std::string metric = delay_constrained ? "throughput-dl" : "throughput-dt";
    p.description = (delay_constrained
                         ? std::string("fixed-rate (delay-constrained)")
                         : std::string("ergodic (latency-tolerant)")) +
                    " throughput versus rho for deployment radii 10/20/30 m";
    for (double r : {10.0, 20.0, 30.0}) {
      const std::string suffix = ":r_d=" + detail::fmt_label(r);
      add(metric + suffix, isic, los, Engine::kBoth, detail::radius_patch(r));
      add(metric + suffix, nisic, los, Engine::kBoth, detail::radius_patch(r));
    }
  } else {
    throw argument_error("unknown figure preset '" + std::string(id) +
                         "' (expected fig2..fig9)");
  }
  return p;
}

}  // namespace passnoma
