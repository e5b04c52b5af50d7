// Copyright 2026 The entwit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// entwit: build small multi-qubit states, evaluate Bell-combination and
// fidelity entanglement witnesses, scan interference signals, analyze
// bundled experiment records, and re-run the full reference-value audit.
//
// Exit codes: 0 success, 2 invalid input, 1 internal error or failed audit.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "entwit/basis.hpp"
#include "entwit/bell.hpp"
#include "entwit/experiments.hpp"
#include "entwit/record_io.hpp"
#include "entwit/report_io.hpp"
#include "entwit/reproduce.hpp"
#include "entwit/scan_io.hpp"
#include "entwit/settings_io.hpp"
#include "entwit/spin.hpp"
#include "entwit/state.hpp"
#include "entwit/state_io.hpp"
#include "entwit/witness.hpp"

namespace {

using namespace entwit;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt(const MeasuredValue& m) {
  return fmt(m.value) + " +- " + fmt(m.sigma);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

// ---------------------------------------------------------------------------
// Shared option bundles

struct StateChoice {
  std::string state_file;
  std::string preset;
  int n = 0;
  double alpha = -1.0;

  void add_options(CLI::App* cmd, bool required) {
    auto* file = cmd->add_option("--state", state_file,
                                 "Path to a state file produced by 'entwit state'");
    auto* preset_opt =
        cmd->add_option("--preset", preset, "Built-in state constructor")
            ->check(CLI::IsMember({"ghz", "psi-b", "singlet-triplet", "rho-mix",
                                   "w-state"}));
    cmd->add_option("--n", n, "Party count (ghz preset)");
    cmd->add_option("--alpha", alpha, "Mixing weight in [0, 1] (w-state preset)");
    file->excludes(preset_opt);
    preset_opt->excludes(file);
    if (required) {
      // Exactly one source; validated again in resolve() for a clear message.
      cmd->callback([this]() {
        if (state_file.empty() && preset.empty()) {
          throw CLI::ValidationError("one of --state or --preset is required");
        }
      });
    }
  }

  QuantumState resolve() const {
    if (!state_file.empty()) return read_state_file(state_file);
    if (preset == "ghz") {
      if (n == 0) throw std::invalid_argument("preset ghz requires --n");
      return ghz(n);
    }
    if (preset == "psi-b") return psi_b();
    if (preset == "singlet-triplet") return singlet_triplet_mix();
    if (preset == "rho-mix") return rho_mix();
    if (preset == "w-state") {
      if (alpha < 0.0) {
        throw std::invalid_argument("preset w-state requires --alpha in [0, 1]");
      }
      return build_w_state(alpha);
    }
    throw std::invalid_argument("one of --state or --preset is required");
  }
};

// ---------------------------------------------------------------------------
// Subcommand handlers

int run_state(const StateChoice& choice, const std::string& out) {
  const QuantumState state = choice.resolve();
  if (out.empty()) {
    std::cout << state_to_json(state) << '\n';
  } else {
    write_state_file(out, state);
    std::cout << "wrote " << out << '\n';
  }
  return 0;
}

int run_expect(const StateChoice& choice, const std::string& settings_file,
               bool mermin, const std::string& sackett, bool bell_diff,
               double phi) {
  const QuantumState state = choice.resolve();
  int modes = 0;
  modes += settings_file.empty() ? 0 : 1;
  modes += mermin ? 1 : 0;
  modes += sackett.empty() ? 0 : 1;
  modes += bell_diff ? 1 : 0;
  if (modes != 1) {
    throw std::invalid_argument(
        "choose exactly one of --settings, --mermin, --sackett, --bell-diff");
  }
  if (!settings_file.empty()) {
    const PartySettings settings = read_settings_file(settings_file);
    const double e = expectation(state, klyshko_operator(settings).matrix);
    std::cout << "E = " << fmt(e) << "\n|E| = " << fmt(std::abs(e)) << '\n';
    return 0;
  }
  if (mermin) {
    const double e = expectation(state, mermin_operator().matrix);
    std::cout << "E = " << fmt(e) << "\n|E| = " << fmt(std::abs(e)) << '\n';
    return 0;
  }
  if (!sackett.empty()) {
    const int sign = sackett == "plus" ? +1 : -1;
    const double e = expectation(state, sackett_observable(sign, phi));
    std::cout << "E = " << fmt(e) << '\n';
    return 0;
  }
  const double e = expectation(state, bell_signal_difference_observable(phi));
  std::cout << "E = " << fmt(e) << '\n';
  return 0;
}

std::string local_realism_text(const WitnessVerdict& v) {
  switch (v.local_realism) {
    case ThresholdStatus::above: return "local realism violated";
    case ThresholdStatus::straddling: return "local realism: inconclusive";
    case ThresholdStatus::below: return "no local-realism violation";
  }
  return "";
}

std::string n_partite_text(const WitnessVerdict& v) {
  const std::string label = std::to_string(v.n_parties) + "-particle witness: ";
  switch (v.n_partite) {
    case ThresholdStatus::above: return label + "entanglement witnessed";
    case ThresholdStatus::straddling: return label + "inconclusive";
    case ThresholdStatus::below: return label + "not witnessed";
  }
  return "";
}

void print_verdict(const WitnessVerdict& v) {
  std::cout << "tested |E| = " << fmt(v.tested_value) << '\n';
  std::cout << "thresholds: local realist " << fmt(v.thresholds.local_realist)
            << ", biseparable " << fmt(v.thresholds.biseparable)
            << ", quantum max " << fmt(v.thresholds.quantum_max) << '\n';
  std::cout << "classification: " << to_string(v.classification) << '\n';
  std::cout << local_realism_text(v) << "; " << n_partite_text(v) << '\n';
}

int run_witness_a(const std::string& state_file, const std::string& settings_file,
                  bool have_data, double data, double sigma, int n,
                  const std::string& json_out) {
  WitnessVerdict verdict;
  if (have_data == !state_file.empty()) {
    throw std::invalid_argument(
        "witness a needs exactly one of --state or --data");
  }
  if (have_data) {
    if (n == 0) throw std::invalid_argument("witness a --data requires --n");
    verdict = condition_a_from_data(MeasuredValue(std::abs(data), sigma), n);
  } else {
    if (settings_file.empty()) {
      throw std::invalid_argument("witness a --state requires --settings");
    }
    verdict = condition_a(read_state_file(state_file),
                          read_settings_file(settings_file));
  }
  print_verdict(verdict);
  if (!json_out.empty()) {
    write_text_file(json_out, verdict_to_json(verdict));
  }
  return 0;
}

int run_witness_b(const StateChoice& choice, const std::string& target_spec,
                  const std::string& json_out) {
  const QuantumState state = choice.resolve();
  QuantumState target = [&]() -> QuantumState {
    if (target_spec == "ghz") return ghz(state.n_parties());
    if (target_spec == "psi-b") return psi_b();
    return read_state_file(target_spec);
  }();
  const double f = fidelity(state, target);
  const bool met = condition_b(state, target);
  std::cout << "fidelity = " << fmt(f) << '\n';
  std::cout << "threshold 0.5: "
            << (met ? std::to_string(state.n_parties()) +
                          "-particle entanglement witnessed"
                    : "not witnessed")
            << '\n';
  if (!json_out.empty()) {
    FidelityReport report;
    // Report the exact overlap decomposition used by the witness.
    const int n = state.n_parties();
    const BasisIndex up{1};
    const BasisIndex down{basis_dim(n)};
    report.p_first = MeasuredValue(population(state, up), 0.0);
    report.p_second = MeasuredValue(population(state, down), 0.0);
    report.re_offdiag =
        MeasuredValue(matrix_element(state, up, down).real(), 0.0);
    report.fidelity = MeasuredValue(f, 0.0);
    report.condition_b_met = met;
    write_text_file(json_out, fidelity_report_to_json(report));
  }
  return 0;
}

int run_scan(const StateChoice& choice, const std::string& observable, int grid,
             const std::string& out) {
  if (grid < 8) throw std::invalid_argument("--grid must be at least 8");
  const QuantumState state = choice.resolve();
  std::vector<ScanPoint> points;
  points.reserve(static_cast<size_t>(grid));
  std::vector<std::pair<double, double>> samples;
  samples.reserve(static_cast<size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / grid;
    double value = 0.0;
    if (observable == "sackett-plus") {
      value = expectation(state, sackett_observable(+1, phi));
    } else if (observable == "sackett-minus") {
      value = expectation(state, sackett_observable(-1, phi));
    } else {
      value = expectation(state, bell_signal_difference_observable(phi));
    }
    points.push_back({phi, value});
    samples.emplace_back(phi, value);
  }
  write_scan_file(out, points);
  for (int f : {1, 3}) {
    const Harmonic h = harmonic_extract(samples, f);
    std::cout << "f=" << f << " amplitude=" << fmt(h.amplitude)
              << " phase=" << fmt(h.phase) << '\n';
  }
  std::cout << "wrote " << out << '\n';
  return 0;
}

ExperimentRecord resolve_record(const std::string& spec) {
  // Bare bundled names resolve through ENTWIT_DATA_DIR when set; anything
  // that looks like a path is read directly.
  const bool is_path =
      spec.find('/') != std::string::npos ||
      (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json");
  if (is_path) {
    if (!std::filesystem::exists(spec)) {
      throw std::invalid_argument("no record file '" + spec + "'");
    }
    return read_record_file(spec);
  }
  const char* dir = std::getenv("ENTWIT_DATA_DIR");
  if (dir != nullptr && *dir != '\0') {
    const std::filesystem::path path =
        std::filesystem::path(dir) / (spec + ".json");
    if (!std::filesystem::exists(path)) {
      throw std::invalid_argument("no record file '" + path.string() +
                                  "' under ENTWIT_DATA_DIR");
    }
    return read_record_file(path);
  }
  return bundled_record(spec);
}

void print_worst_case(const WorstCaseReport& r) {
  std::cout << "  mixture fractions: alpha " << fmt(r.alpha) << ", beta "
            << fmt(r.beta) << ", gamma " << fmt(r.gamma) << '\n';
  std::cout << "  maximal spurious amplitude w = " << fmt(r.w) << '\n';
  std::cout << "  corrected 2*Re rho_72 = " << fmt(r.two_re_offdiag) << '\n';
  std::cout << "  corrected Re rho_72 = " << fmt(r.re_offdiag) << '\n';
  std::cout << "  corrected fidelity = " << fmt(r.corrected_fidelity) << '\n';
  for (const std::string& note : r.notes) std::cout << "  note: " << note << '\n';
}

int run_analyze(const std::string& record_spec, bool w_fit, bool rho_mix_demo,
                const std::string& json_out) {
  const int modes = (record_spec.empty() ? 0 : 1) + (w_fit ? 1 : 0) +
                    (rho_mix_demo ? 1 : 0);
  if (modes != 1) {
    throw std::invalid_argument(
        "choose exactly one of --record, --w-fit, --rho-mix");
  }

  std::string json_text;
  if (w_fit) {
    const WFitReport fit = fit_w_state();
    std::cout << "fitted weight alpha = " << fmt(fit.alpha) << '\n';
    for (const auto& [id, predicted] : fit.predicted) {
      std::cout << "  " << id << ": predicted " << fmt(predicted);
      if (fit.targets.contains(id)) {
        std::cout << ", target " << fmt(fit.targets.at(id)) << ", residual "
                  << fmt(fit.residuals.at(id));
      }
      std::cout << '\n';
    }
    for (const std::string& note : fit.notes) std::cout << "note: " << note << '\n';
    json_text = to_json(fit);
  } else if (rho_mix_demo) {
    const ContaminationDemo demo = demonstrate_rho_mix();
    std::cout << "populations: P(uud) = " << fmt(demo.p_first)
              << ", P(ddu) = " << fmt(demo.p_second) << '\n';
    std::cout << "difference-signal amplitude = " << fmt(demo.amplitude) << '\n';
    std::cout << "implied fidelity = " << fmt(demo.implied_fidelity) << '\n';
    std::cout << "true fidelity = " << fmt(demo.true_fidelity) << '\n';
    std::cout << "|<uud| rho |ddu>| = " << fmt(demo.offdiag_abs) << '\n';
    json_text = to_json(demo);
  } else {
    const ExperimentRecord record = resolve_record(record_spec);
    if (record.mermin_value.has_value()) {
      const BellMeasurementAnalysis analysis = analyze_pan(record);
      std::cout << "record: " << record.name << '\n';
      std::cout << "measured Bell combination |E| = "
                << fmt(analysis.verdict.tested_value) << '\n';
      print_verdict(analysis.verdict);
      std::cout << "inferred |Re rho_18| = " << fmt(analysis.inferred_re_offdiag)
                << '\n';
      std::cout << "hypothetical fidelity at populations "
                << fmt(analysis.assumed_population) << ": "
                << fmt(analysis.hypothetical_fidelity.fidelity) << '\n';
      json_text = to_json(analysis);
    } else if (record.populations.has_value() &&
               record.signal_amplitude.has_value()) {
      const AmplitudeFidelityAnalysis analysis = analyze_rauschenbeutel(record);
      std::cout << "record: " << record.name << '\n';
      std::cout << "naive fidelity (P2 + P7 + A)/2 = "
                << fmt(analysis.naive_fidelity)
                << (analysis.naive_condition_b_met ? " (above 1/2)"
                                                   : " (not above 1/2)")
                << '\n';
      std::cout << "published claim carried for comparison: "
                << fmt(analysis.claimed_fidelity) << '\n';
      std::cout << "worst-case correction:\n";
      print_worst_case(analysis.worst_case);
      std::cout << (analysis.condition_b_unmet
                        ? "fidelity witness unmet in the worst case"
                        : "fidelity witness not excluded in the worst case")
                << '\n';
      for (const std::string& note : analysis.notes) {
        std::cout << "note: " << note << '\n';
      }
      json_text = to_json(analysis);
    } else {
      throw std::invalid_argument(
          "record '" + record.name +
          "' has neither a Bell-combination value nor populations plus "
          "amplitude; nothing to analyze");
    }
  }
  if (!json_out.empty()) write_text_file(json_out, json_text);
  return 0;
}

int run_reproduce(const std::string& out_dir, const std::string& filter) {
  const ReproductionReport report = run_reproduction(filter);
  if (report.checks.empty()) {
    throw std::invalid_argument("filter '" + filter + "' matches no checks");
  }
  for (const ReproductionCheck& c : report.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.id
              << ": computed=" << fmt(c.computed_value)
              << " reference=" << fmt(c.reference_value)
              << " tolerance=" << fmt(c.tolerance) << " (" << c.comparison
              << ")\n";
  }
  std::cout << (report.all_pass ? "all checks passed" : "CHECKS FAILED") << " ("
            << report.checks.size() << " run)\n";

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path path =
      std::filesystem::path(out_dir) / "reproduction.json";
  write_text_file(path.string(), reproduction_to_json(report));
  std::cout << "wrote " << path.string() << '\n';
  return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "entwit: multi-qubit entanglement witness toolkit (Bell-combination "
      "thresholds, preparation-fidelity witnesses, interference scans, "
      "experiment-record analyses)"};
  app.require_subcommand(1);

  // --- state ---------------------------------------------------------------
  auto* state_cmd =
      app.add_subcommand("state", "Construct a built-in state and write it out");
  StateChoice state_choice;
  std::string state_out;
  state_cmd->add_option("--preset", state_choice.preset, "Built-in state")
      ->required()
      ->check(CLI::IsMember(
          {"ghz", "psi-b", "singlet-triplet", "rho-mix", "w-state"}));
  state_cmd->add_option("--n", state_choice.n, "Party count (ghz)");
  state_cmd->add_option("--alpha", state_choice.alpha, "Mixing weight (w-state)");
  state_cmd->add_option("--out", state_out, "Output file (stdout when omitted)");

  // --- expect --------------------------------------------------------------
  auto* expect_cmd = app.add_subcommand(
      "expect", "Expectation value of a Bell combination or scan observable");
  StateChoice expect_choice;
  expect_choice.add_options(expect_cmd, true);
  std::string expect_settings;
  bool expect_mermin = false;
  std::string expect_sackett;
  bool expect_bell_diff = false;
  double expect_phi = 0.0;
  expect_cmd->add_option("--settings", expect_settings,
                         "Settings file: recursive Bell combination");
  expect_cmd->add_flag("--mermin", expect_mermin, "x/y Bell combination");
  expect_cmd->add_option("--sackett", expect_sackett, "Parity scan observable")
      ->check(CLI::IsMember({"plus", "minus"}));
  expect_cmd->add_flag("--bell-diff", expect_bell_diff,
                       "Difference interference signal");
  expect_cmd->add_option("--phi", expect_phi, "Analyzer phase (radians)");

  // --- witness -------------------------------------------------------------
  auto* witness_cmd =
      app.add_subcommand("witness", "Entanglement witness verdicts");
  std::string witness_kind;
  witness_cmd->add_option("kind", witness_kind, "a: Bell threshold; b: fidelity")
      ->required()
      ->check(CLI::IsMember({"a", "b"}));
  std::string witness_state;
  std::string witness_settings;
  std::string witness_target = "ghz";
  double witness_data = 0.0;
  double witness_sigma = 0.0;
  int witness_n = 0;
  std::string witness_json;
  auto* data_opt = witness_cmd->add_option(
      "--data", witness_data, "Measured Bell-combination magnitude (kind a)");
  witness_cmd->add_option("--sigma", witness_sigma, "One-sigma uncertainty");
  witness_cmd->add_option("--n", witness_n, "Party count for --data");
  witness_cmd->add_option("--state", witness_state, "State file");
  witness_cmd->add_option("--settings", witness_settings,
                          "Settings file (kind a with --state)");
  witness_cmd->add_option("--target", witness_target,
                          "ghz, psi-b, or a pure-state file (kind b)");
  witness_cmd->add_option("--json", witness_json, "Also write the verdict JSON");

  // --- scan ----------------------------------------------------------------
  auto* scan_cmd = app.add_subcommand(
      "scan", "Tabulate an observable over a uniform analyzer-phase grid");
  StateChoice scan_choice;
  scan_choice.add_options(scan_cmd, true);
  std::string scan_observable;
  int scan_grid = 16;
  std::string scan_out;
  scan_cmd->add_option("--observable", scan_observable, "What to scan")
      ->required()
      ->check(CLI::IsMember({"sackett-plus", "sackett-minus", "bell-diff"}));
  scan_cmd->add_option("--grid", scan_grid, "Grid size (at least 8)");
  scan_cmd->add_option("--out", scan_out, "CSV output path")->required();

  // --- analyze ---------------------------------------------------------------
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Analyze an experiment record, fit the two-particle model, "
                 "or run the counterfeit-mixture demonstration");
  std::string analyze_record;
  bool analyze_w_fit = false;
  bool analyze_rho_mix = false;
  std::string analyze_json;
  analyze_cmd->add_option("--record", analyze_record,
                          "Bundled record name (pan, rauschenbeutel) or a path");
  analyze_cmd->add_flag("--w-fit", analyze_w_fit,
                        "Fit the two-particle model weight");
  analyze_cmd->add_flag("--rho-mix", analyze_rho_mix,
                        "Counterfeit-mixture demonstration");
  analyze_cmd->add_option("--json", analyze_json, "Also write the report JSON");

  // --- reproduce -------------------------------------------------------------
  auto* reproduce_cmd = app.add_subcommand(
      "reproduce", "Recompute every reference quantity and audit it");
  std::string reproduce_out = ".";
  std::string reproduce_filter;
  reproduce_cmd->add_option("--out", reproduce_out,
                            "Directory for reproduction.json");
  reproduce_cmd->add_option("--filter", reproduce_filter,
                            "Only run checks whose id or group contains this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (state_cmd->parsed()) return run_state(state_choice, state_out);
    if (expect_cmd->parsed()) {
      return run_expect(expect_choice, expect_settings, expect_mermin,
                        expect_sackett, expect_bell_diff, expect_phi);
    }
    if (witness_cmd->parsed()) {
      if (witness_kind == "a") {
        return run_witness_a(witness_state, witness_settings,
                             data_opt->count() > 0, witness_data, witness_sigma,
                             witness_n, witness_json);
      }
      StateChoice b_choice;
      b_choice.state_file = witness_state;
      return run_witness_b(b_choice, witness_target, witness_json);
    }
    if (scan_cmd->parsed()) {
      return run_scan(scan_choice, scan_observable, scan_grid, scan_out);
    }
    if (analyze_cmd->parsed()) {
      return run_analyze(analyze_record, analyze_w_fit, analyze_rho_mix,
                         analyze_json);
    }
    if (reproduce_cmd->parsed()) {
      return run_reproduce(reproduce_out, reproduce_filter);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
