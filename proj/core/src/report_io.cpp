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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "entwit/report_io.hpp"

namespace entwit {

using nlohmann::json;

namespace {

json measured_to_json(const MeasuredValue& m) {
  return json{{"value", m.value}, {"sigma", m.sigma}};
}

MeasuredValue measured_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("value") || !j.contains("sigma") ||
      !j["value"].is_number() || !j["sigma"].is_number()) {
    throw std::invalid_argument(where + " must be {\"value\": num, \"sigma\": num}");
  }
  return MeasuredValue(j["value"].get<double>(), j["sigma"].get<double>());
}

const json& require(const json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument("report json: missing field '" + key + "'");
  }
  return j[key];
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report json: parse error: ") + e.what());
  }
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::no_violation: return "no_violation";
    case Classification::local_realism_violated: return "local_realism_violated";
    case Classification::n_partite_witnessed: return "n_partite_witnessed";
    case Classification::inconclusive: return "inconclusive";
  }
  throw std::logic_error("unreachable classification");
}

std::string to_string(ThresholdStatus s) {
  switch (s) {
    case ThresholdStatus::below: return "below";
    case ThresholdStatus::above: return "above";
    case ThresholdStatus::straddling: return "straddling";
  }
  throw std::logic_error("unreachable threshold status");
}

Classification classification_from_string(const std::string& s) {
  if (s == "no_violation") return Classification::no_violation;
  if (s == "local_realism_violated") return Classification::local_realism_violated;
  if (s == "n_partite_witnessed") return Classification::n_partite_witnessed;
  if (s == "inconclusive") return Classification::inconclusive;
  throw std::invalid_argument("unknown classification '" + s + "'");
}

ThresholdStatus threshold_status_from_string(const std::string& s) {
  if (s == "below") return ThresholdStatus::below;
  if (s == "above") return ThresholdStatus::above;
  if (s == "straddling") return ThresholdStatus::straddling;
  throw std::invalid_argument("unknown threshold status '" + s + "'");
}

std::string verdict_to_json(const WitnessVerdict& verdict) {
  json j;
  j["n_parties"] = verdict.n_parties;
  j["tested_value"] = measured_to_json(verdict.tested_value);
  j["thresholds"] = json{{"local_realist", verdict.thresholds.local_realist},
                         {"biseparable", verdict.thresholds.biseparable},
                         {"quantum_max", verdict.thresholds.quantum_max}};
  j["local_realism"] = to_string(verdict.local_realism);
  j["n_partite"] = to_string(verdict.n_partite);
  j["classification"] = to_string(verdict.classification);
  return j.dump(2);
}

WitnessVerdict verdict_from_json(const std::string& text) {
  const json j = parse(text);
  WitnessVerdict v;
  const json& n = require(j, "n_parties");
  if (!n.is_number_integer()) {
    throw std::invalid_argument("report json: n_parties must be an integer");
  }
  v.n_parties = n.get<int>();
  v.tested_value = measured_from_json(require(j, "tested_value"), "tested_value");
  const json& t = require(j, "thresholds");
  auto threshold = [&t](const char* key) {
    const json& field = require(t, key);
    if (!field.is_number()) {
      throw std::invalid_argument(std::string("report json: thresholds.") + key +
                                  " must be a number");
    }
    return field.get<double>();
  };
  v.thresholds.local_realist = threshold("local_realist");
  v.thresholds.biseparable = threshold("biseparable");
  v.thresholds.quantum_max = threshold("quantum_max");
  v.local_realism =
      threshold_status_from_string(require(j, "local_realism").get<std::string>());
  v.n_partite = threshold_status_from_string(require(j, "n_partite").get<std::string>());
  v.classification =
      classification_from_string(require(j, "classification").get<std::string>());
  return v;
}

std::string fidelity_report_to_json(const FidelityReport& report) {
  json j;
  j["p_first"] = measured_to_json(report.p_first);
  j["p_second"] = measured_to_json(report.p_second);
  j["re_offdiag"] = measured_to_json(report.re_offdiag);
  j["fidelity"] = measured_to_json(report.fidelity);
  j["condition_b_met"] = report.condition_b_met;
  return j.dump(2);
}

FidelityReport fidelity_report_from_json(const std::string& text) {
  const json j = parse(text);
  FidelityReport r;
  r.p_first = measured_from_json(require(j, "p_first"), "p_first");
  r.p_second = measured_from_json(require(j, "p_second"), "p_second");
  r.re_offdiag = measured_from_json(require(j, "re_offdiag"), "re_offdiag");
  r.fidelity = measured_from_json(require(j, "fidelity"), "fidelity");
  const json& flag = require(j, "condition_b_met");
  if (!flag.is_boolean()) {
    throw std::invalid_argument("report json: condition_b_met must be a boolean");
  }
  r.condition_b_met = flag.get<bool>();
  return r;
}

void write_verdict_file(const std::filesystem::path& path, const WitnessVerdict& v) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << verdict_to_json(v) << '\n';
}

WitnessVerdict read_verdict_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return verdict_from_json(buf.str());
}

}  // namespace entwit
