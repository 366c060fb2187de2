#include "qconv/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qconv/io.hpp"
#include "qconv/nogo.hpp"
#include "qconv/postselect.hpp"
#include "qconv/qsim.hpp"
#include "qconv/rng.hpp"
#include "qconv/spectral.hpp"

namespace qconv::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_probability(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Collects named pass/fail checks; a failed check makes the run exit 1.
struct Checks {
  ordered_json list = ordered_json::array();
  std::vector<std::string> violated;

  void add(const std::string& name, bool pass, double observed,
           double threshold) {
    ordered_json c;
    c["name"] = name;
    c["pass"] = pass;
    c["observed"] = observed;
    c["threshold"] = threshold;
    list.push_back(std::move(c));
    if (!pass) violated.push_back(name);
  }

  void add_flag(const std::string& name, bool pass) {
    ordered_json c;
    c["name"] = name;
    c["pass"] = pass;
    list.push_back(std::move(c));
    if (!pass) violated.push_back(name);
  }

  bool ok() const { return violated.empty(); }
};

// Appends checks and wall time, optionally mirrors the report to a file,
// prints it, and turns failed checks into exit code 1.
int finish(ordered_json& report, const Checks& checks,
           std::chrono::steady_clock::time_point t0,
           const std::string& report_path, std::ostream& out) {
  report["checks"] = checks.list;
  if (!checks.ok()) report["violated"] = checks.violated;
  const auto elapsed = std::chrono::steady_clock::now() - t0;
  report["wall_time_ms"] =
      std::chrono::duration<double, std::milli>(elapsed).count();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw InvalidInput("cannot write file: " + report_path);
    f << report.dump(2) << '\n';
  }
  out << report.dump(2) << '\n';
  return checks.ok() ? kExitOk : kExitViolation;
}

// The report goes to --output only when the command has no other artifact
// and the format is json.
std::string report_path_for(const RunConfig& cfg) {
  return cfg.format == "json" ? cfg.output : std::string{};
}

double pinned_tol(const RunConfig& cfg, double fallback) {
  if (cfg.tol < 0.0) throw InvalidInput("tol must be positive");
  return cfg.tol > 0.0 ? cfg.tol : fallback;
}

// ---- conv / corr ------------------------------------------------------

int run_convolution(const RunConfig& cfg, bool correlation, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.inputs.size() != 2) {
    throw InvalidInput("need exactly two --input sequence files");
  }
  const Sequence a = io::read_sequence(cfg.inputs[0]);
  const Sequence b = io::read_sequence(cfg.inputs[1]);
  if (a.size() != b.size()) {
    throw InvalidInput("input sequences must have equal length");
  }
  if (!is_power_of_two(a.size())) {
    throw InvalidInput("input length must be a power of two");
  }
  const double tol = pinned_tol(cfg, 1e-8);

  const Sequence direct = correlation ? spectral::correlate_direct(a, b)
                                      : spectral::convolve_direct(a, b);
  const Sequence fast = correlation ? spectral::correlate_fast(a, b)
                                    : spectral::convolve_fast(a, b);
  const double dev = max_abs_diff(direct, fast);

  ordered_json report;
  report["construction"] = correlation ? "classical-fft-correlation-algorithm"
                                       : "classical-fft-convolution-algorithm";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["length"] = a.size();
  report["tolerances"] = {{"fast_vs_direct", tol}};
  report["max_abs_deviation"] = dev;
  if (!cfg.output.empty()) {
    io::write_sequence(cfg.output, direct);
    report["output"] = cfg.output;
  }

  Checks checks;
  checks.add("fast-equals-direct", dev <= tol, dev, tol);
  return finish(report, checks, t0, "", out);  // sequence artifact written above
}

// ---- qft-check ---------------------------------------------------------

int run_qft_check(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.n < 1 || cfg.n > 10) {
    throw InvalidInput("qft-check: --n must be in [1, 10]");
  }
  const double bridge_tol = cfg.tol > 0.0 ? cfg.tol : 1e-10;
  const double circuit_tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;

  Rng rng(cfg.seed);
  double max_bridge = 0.0;
  double max_ibridge = 0.0;
  double max_inverse = 0.0;
  double max_circuit = 0.0;
  bool counts_ok = true;
  for (int n = 1; n <= cfg.n; ++n) {
    const qsim::UnitaryMap qft = qsim::qft_dense(n);
    const qsim::UnitaryMap iqft = qsim::iqft_dense(n);
    for (int t = 0; t < 5; ++t) {
      const qsim::QuantumState s = qsim::random_state(n, rng);
      max_bridge = std::max(
          max_bridge, max_abs_diff(qsim::apply(qft, s).amplitudes(),
                                   spectral::dft(s.amplitudes())));
      max_ibridge = std::max(
          max_ibridge, max_abs_diff(qsim::apply(iqft, s).amplitudes(),
                                    spectral::idft(s.amplitudes())));
    }
    max_inverse = std::max(
        max_inverse, deviation_from_identity(
                         multiply(qft.matrix(), iqft.matrix())));
    const qsim::QftCircuit circuit = qsim::qft_circuit(n);
    max_circuit = std::max(
        max_circuit,
        max_abs_diff(qsim::circuit_matrix(circuit), qft.matrix()));
    const std::size_t expected = static_cast<std::size_t>(n) * (n + 1) / 2 +
                                 static_cast<std::size_t>(n) / 2;
    counts_ok = counts_ok && circuit.gates.size() == expected;
  }

  ordered_json report;
  report["construction"] = "qft-coefficient-transform-and-circuit";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["max_n"] = cfg.n;
  report["tolerances"] = {{"bridge", bridge_tol}, {"circuit", circuit_tol}};
  report["max_bridge_deviation"] = max_bridge;
  report["max_inverse_bridge_deviation"] = max_ibridge;
  report["max_inverse_identity_deviation"] = max_inverse;
  report["max_circuit_deviation"] = max_circuit;

  Checks checks;
  checks.add("qft-matches-dft", max_bridge <= bridge_tol, max_bridge,
             bridge_tol);
  checks.add("iqft-matches-idft", max_ibridge <= bridge_tol, max_ibridge,
             bridge_tol);
  checks.add("qft-iqft-identity", max_inverse <= bridge_tol, max_inverse,
             bridge_tol);
  checks.add("circuit-matches-dense", max_circuit <= circuit_tol, max_circuit,
             circuit_tol);
  checks.add_flag("gate-count-formula", counts_ok);
  return finish(report, checks, t0, report_path_for(cfg), out);
}

// ---- reduction ----------------------------------------------------------

int run_reduction(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.n < 1 || cfg.n > 8) {
    throw InvalidInput("reduction: --n must be in [1, 8]");
  }
  if (cfg.trials < 1) {
    throw InvalidInput("reduction: --trials must be positive");
  }
  const double tol = pinned_tol(cfg, 1e-8);

  const nogo::ProductOracle conv = nogo::classical_convolution_oracle();
  const nogo::ProductOracle corr = nogo::classical_correlation_oracle();
  Rng rng(cfg.seed);
  double max_conv = 0.0;
  double max_corr = 0.0;
  for (long t = 0; t < cfg.trials; ++t) {
    const qsim::QuantumState a = qsim::random_state(cfg.n, rng);
    const qsim::QuantumState b = qsim::random_state(cfg.n, rng);
    max_conv = std::max(
        max_conv,
        max_abs_diff(
            nogo::reduce_convolution(conv, a, b).amplitudes(),
            nogo::target_product(a, b, false).first_register.amplitudes()));
    max_corr = std::max(
        max_corr,
        max_abs_diff(
            nogo::reduce_correlation(corr, a, b).amplitudes(),
            nogo::target_product(a, b, true).first_register.amplitudes()));
  }

  ordered_json report;
  report["construction"] = "qft-conjugation-reduction-identity";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["n"] = cfg.n;
  report["trials"] = cfg.trials;
  report["tolerances"] = {{"identity", tol}};
  report["max_convolution_deviation"] = max_conv;
  report["max_correlation_deviation"] = max_corr;

  Checks checks;
  checks.add("convolution-reduction-identity", max_conv <= tol, max_conv, tol);
  checks.add("correlation-reduction-identity", max_corr <= tol, max_corr, tol);
  return finish(report, checks, t0, report_path_for(cfg), out);
}

// ---- nogo-analytic -------------------------------------------------------

int run_nogo_analytic(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.samples < 1) {
    throw InvalidInput("nogo-analytic: --samples must be positive");
  }
  const double tol = pinned_tol(cfg, 1e-9);
  const double expected_offset = std::sqrt(3.0) / 2.0;

  Rng rng(cfg.seed);
  double max_offset_dev = 0.0;
  bool all_contradictions = true;
  for (int s = 0; s < cfg.samples; ++s) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 32);
    const int n = 2 << (rng.next_u64() % 6);  // 2..64
    const double sign1 = (rng.next_u64() & 1) ? 1.0 : -1.0;
    const double sign2 = (rng.next_u64() & 1) ? 1.0 : -1.0;
    const double c2 = sign2 / std::sqrt(static_cast<double>(m) * n);
    const double c1 = sign1 * std::abs(c2);
    const nogo::AnalyticReport rep =
        nogo::contradiction_check(c1, c2, m, n, tol);
    max_offset_dev =
        std::max(max_offset_dev,
                 std::abs(std::abs(rep.lhs_values.at(0.5) - 1.0) -
                          expected_offset));
    all_contradictions = all_contradictions && rep.contradiction;
  }

  ordered_json report;
  report["construction"] = "epsilon-family-normalization-contradiction";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["samples"] = cfg.samples;
  report["tolerances"] = {{"midpoint_offset", tol}};
  report["expected_midpoint_offset"] = expected_offset;
  report["max_midpoint_offset_deviation"] = max_offset_dev;

  Checks checks;
  checks.add("constraint-surface-midpoint-offset", max_offset_dev <= tol,
             max_offset_dev, tol);
  checks.add_flag("contradiction-flag-on-surface", all_contradictions);
  return finish(report, checks, t0, report_path_for(cfg), out);
}

// ---- nogo-search -----------------------------------------------------------

nogo::ProbeSet load_probe_set(const RunConfig& cfg) {
  if (cfg.probe_config.empty()) {
    if (cfg.probe_set != "standard-v1") {
      throw InvalidInput("unknown probe set '" + cfg.probe_set +
                         "' (no --probe-config given)");
    }
    return nogo::standard_probe_set();
  }
  std::ifstream f(cfg.probe_config);
  if (!f) throw InvalidInput("cannot open probe config: " + cfg.probe_config);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("probe config: ") + e.what());
  }
  if (!j.contains(cfg.probe_set)) {
    throw InvalidInput("probe config has no set named '" + cfg.probe_set + "'");
  }
  const nlohmann::json& spec = j[cfg.probe_set];
  if (!spec.contains("epsilons") || !spec["epsilons"].is_array() ||
      !spec.contains("theta_count") || !spec.contains("phi_count")) {
    throw InvalidInput("probe config: need epsilons, theta_count, phi_count");
  }
  std::vector<double> epsilons;
  for (const auto& e : spec["epsilons"]) epsilons.push_back(e.get<double>());
  return nogo::make_probe_set(cfg.probe_set, epsilons,
                              spec["theta_count"].get<int>(),
                              spec["phi_count"].get<int>());
}

int run_nogo_search(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const nogo::ProbeSet probes = load_probe_set(cfg);

  nogo::SearchConfig sc;
  sc.reg_dim = static_cast<int>(probes.probes.front().a.dim());
  sc.ancilla_dim = cfg.ancilla_dim;
  sc.restarts = cfg.restarts;
  sc.budget = cfg.budget;
  sc.seed = cfg.seed;
  const nogo::SearchResult result = nogo::search_best_candidate(sc, probes);

  // well below any plateau the standard probes admit; 0 would
  // contradict the impossibility result
  const double floor_tol = pinned_tol(cfg, 1e-3);

  ordered_json report;
  report["construction"] = "linear-candidate-residual-search";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["N"] = sc.reg_dim;
  report["M"] = sc.ancilla_dim;
  report["seed"] = cfg.seed;
  report["restarts"] = cfg.restarts;
  report["budget"] = cfg.budget;
  report["probe_set_id"] = probes.id;
  report["tolerances"] = {{"residual_floor", floor_tol}};
  report["best_residual"] = result.worst_residual;
  report["per_probe_residuals"] = result.per_probe;
  report["best_restart"] = result.best_restart;

  Checks checks;
  checks.add("residual-floor-positive", result.worst_residual > floor_tol,
             result.worst_residual, floor_tol);
  return finish(report, checks, t0, report_path_for(cfg), out);
}

// ---- postselect-scan ---------------------------------------------------

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse qubit range '" + text + "'");
  }
}

int run_postselect_scan(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [n_min, n_max] = parse_range(cfg.n_range.empty()
                                              ? std::to_string(cfg.n)
                                              : cfg.n_range);
  postselect::Family family;
  if (cfg.family == "uniform") {
    family = postselect::Family::Uniform;
  } else if (cfg.family == "random" || cfg.family == "seeded-random") {
    family = postselect::Family::SeededRandom;
  } else {
    throw InvalidInput("unknown family '" + cfg.family + "'");
  }
  if (cfg.trials < 1) {
    throw InvalidInput("postselect-scan: --trials must be positive");
  }

  const std::vector<postselect::ScanRow> rows =
      postselect::scan(n_min, n_max, family, cfg.trials, cfg.seed);

  bool closed_form_ok = true;
  double max_sigma_ratio = 0.0;
  for (const postselect::ScanRow& row : rows) {
    if (family == postselect::Family::Uniform) {
      const double expect =
          1.0 / static_cast<double>(std::size_t{1} << row.n);
      closed_form_ok = closed_form_ok && row.analytic_p == expect;
    }
    const double sigma = std::sqrt(row.analytic_p * (1.0 - row.analytic_p) /
                                   static_cast<double>(row.trials));
    const double dev = std::abs(row.empirical_p - row.analytic_p);
    if (sigma > 0.0) {
      max_sigma_ratio = std::max(max_sigma_ratio, dev / sigma);
    } else if (dev > 0.0) {
      max_sigma_ratio = std::max(max_sigma_ratio, 1e9);
    }
  }

  std::string csv = "n,N,analytic_p,empirical_p,trials,seed\n";
  for (const postselect::ScanRow& row : rows) {
    csv += std::to_string(row.n) + "," +
           std::to_string(std::size_t{1} << row.n) + "," +
           format_probability(row.analytic_p) + "," +
           format_probability(row.empirical_p) + "," +
           std::to_string(row.trials) + "," + std::to_string(row.seed) + "\n";
  }

  ordered_json report;
  report["construction"] = "diagonal-postselection-success-scan";
  report["version"] = kVersion;
  report["command"] = cfg.command;
  report["seed"] = cfg.seed;
  report["family"] = cfg.family;
  report["n_min"] = n_min;
  report["n_max"] = n_max;
  report["trials"] = cfg.trials;
  report["tolerances"] = {{"empirical_band_sigmas", 3.0}};
  ordered_json jrows = ordered_json::array();
  for (const postselect::ScanRow& row : rows) {
    ordered_json r;
    r["n"] = row.n;
    r["N"] = std::size_t{1} << row.n;
    r["analytic_p"] = row.analytic_p;
    r["empirical_p"] = row.empirical_p;
    r["trials"] = row.trials;
    r["seed"] = row.seed;
    jrows.push_back(std::move(r));
  }
  report["rows"] = std::move(jrows);
  report["max_sigma_ratio"] = max_sigma_ratio;

  if (!cfg.output.empty() && cfg.format == "csv") {
    std::ofstream f(cfg.output);
    if (!f) throw InvalidInput("cannot write file: " + cfg.output);
    f << csv;
    report["output"] = cfg.output;
  }

  Checks checks;
  if (family == postselect::Family::Uniform) {
    checks.add_flag("analytic-closed-form", closed_form_ok);
  }
  checks.add("empirical-within-3sigma", max_sigma_ratio <= 3.0,
             max_sigma_ratio, 3.0);
  return finish(report, checks, t0, report_path_for(cfg), out);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "conv") return run_convolution(cfg, false, out);
    if (cfg.command == "corr") return run_convolution(cfg, true, out);
    if (cfg.command == "qft-check") return run_qft_check(cfg, out);
    if (cfg.command == "reduction") return run_reduction(cfg, out);
    if (cfg.command == "nogo-analytic") return run_nogo_analytic(cfg, out);
    if (cfg.command == "nogo-search") return run_nogo_search(cfg, out);
    if (cfg.command == "postselect-scan") return run_postselect_scan(cfg, out);
    throw InvalidInput("unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

namespace {

// Applies a flat JSON config file onto the defaults. Flags given on the
// command line override these afterwards; environment variables are
// never consulted.
void apply_config_file(const std::string& path, RunConfig& cfg,
                       std::set<std::string>& keys) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open config file: " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("config file: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("config file: expected an object");
  for (const auto& [key, value] : j.items()) {
    keys.insert(key);
    try {
      if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "n") {
        if (value.is_string()) {
          cfg.n_range = value.get<std::string>();
        } else {
          cfg.n = value.get<int>();
          cfg.n_range = std::to_string(cfg.n);
        }
      } else if (key == "tol") {
        cfg.tol = value.get<double>();
      } else if (key == "trials") {
        cfg.trials = value.get<long>();
      } else if (key == "restarts") {
        cfg.restarts = value.get<int>();
      } else if (key == "budget") {
        cfg.budget = value.get<int>();
      } else if (key == "ancilla_dim" || key == "m") {
        cfg.ancilla_dim = value.get<int>();
      } else if (key == "samples") {
        cfg.samples = value.get<int>();
      } else if (key == "family") {
        cfg.family = value.get<std::string>();
      } else if (key == "probe_set") {
        cfg.probe_set = value.get<std::string>();
      } else if (key == "probe_config") {
        cfg.probe_config = value.get<std::string>();
      } else if (key == "format") {
        cfg.format = value.get<std::string>();
      } else if (key == "output") {
        cfg.output = value.get<std::string>();
      } else if (key == "inputs") {
        cfg.inputs = value.get<std::vector<std::string>>();
      } else {
        throw InvalidInput("config file: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput("config file: bad value for '" + key + "': " +
                         e.what());
    }
  }
}

}  // namespace

int main_entry(int argc, char** argv) {
  // the config file is applied before parsing so that flags override it
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      config_path = arg.substr(9);
    }
  }

  RunConfig cfg;
  std::set<std::string> config_keys;
  if (!config_path.empty()) {
    try {
      apply_config_file(config_path, cfg, config_keys);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitBadInput;
    }
  }

  CLI::App app{"spectral toolkit: classical FFT convolution/correlation, a "
               "dense quantum simulator, and the impossibility experiments "
               "for componentwise products of state coefficients"};
  app.require_subcommand(1);

  std::string config_sink;
  const auto add_common = [&](CLI::App* sub) -> CLI::Option* {
    sub->add_option("--seed", cfg.seed, "rng seed (always echoed in reports)");
    sub->add_option("--tol", cfg.tol, "override the pinned tolerance");
    sub->add_option("--output", cfg.output, "artifact path");
    CLI::Option* fmt = sub->add_option("--format", cfg.format,
                                       "artifact format")
                           ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--config", config_sink,
                    "JSON config file; flags override it");
    return fmt;
  };

  CLI::App* conv = app.add_subcommand(
      "conv", "convolve two sequence files, assert fast == direct");
  conv->add_option("--input", cfg.inputs, "sequence file (give twice)");
  add_common(conv);

  CLI::App* corr = app.add_subcommand(
      "corr", "correlate two sequence files, assert fast == direct");
  corr->add_option("--input", cfg.inputs, "sequence file (give twice)");
  add_common(corr);

  CLI::App* qft = app.add_subcommand(
      "qft-check", "dense QFT vs dft, circuit vs dense, gate counts");
  CLI::Option* qft_n = qft->add_option("--n", cfg.n, "max register qubits");
  add_common(qft);

  CLI::App* reduction = app.add_subcommand(
      "reduction", "QFT o P o (IQFT x IQFT) against the product target");
  reduction->add_option("--n", cfg.n, "register qubits");
  CLI::Option* red_trials =
      reduction->add_option("--trials", cfg.trials, "random input pairs");
  add_common(reduction);

  CLI::App* analytic = app.add_subcommand(
      "nogo-analytic", "normalization contradiction on the constraint surface");
  analytic->add_option("--samples", cfg.samples, "surface samples");
  add_common(analytic);

  CLI::App* search = app.add_subcommand(
      "nogo-search", "best-fit linear candidate over a probe set");
  search->add_option("--m,--ancilla-dim", cfg.ancilla_dim, "ancilla dimension");
  search->add_option("--restarts", cfg.restarts, "independent restarts");
  search->add_option("--budget", cfg.budget, "descent iterations per restart");
  search->add_option("--probe-set", cfg.probe_set, "probe set id");
  search->add_option("--probe-config", cfg.probe_config,
                     "probe set definitions (JSON)");
  add_common(search);

  CLI::App* scan = app.add_subcommand(
      "postselect-scan", "diagonal post-selection success probabilities");
  scan->add_option("--family", cfg.family, "uniform | random");
  scan->add_option("--n", cfg.n_range, "qubit range, e.g. 1..10");
  CLI::Option* scan_trials =
      scan->add_option("--trials", cfg.trials, "attempts per row");
  CLI::Option* scan_format = add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  cfg.command = app.get_subcommands().front()->get_name();

  // per-command defaults when neither flag nor config file set them
  if (cfg.command == "qft-check" && qft_n->count() == 0 &&
      config_keys.count("n") == 0) {
    cfg.n = 8;
  }
  if (cfg.command == "reduction" && red_trials->count() == 0 &&
      config_keys.count("trials") == 0) {
    cfg.trials = 100;
  }
  if (cfg.command == "postselect-scan") {
    if (scan_trials->count() == 0 && config_keys.count("trials") == 0) {
      cfg.trials = 10000;
    }
    if (cfg.n_range.empty()) cfg.n_range = "1..10";
    if (scan_format->count() == 0 && config_keys.count("format") == 0) {
      cfg.format = "csv";
    }
  }

  return run(cfg, std::cout, std::cerr);
}

}  // namespace qconv::cli
