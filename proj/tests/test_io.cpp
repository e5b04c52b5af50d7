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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "entwit/experiments.hpp"
#include "entwit/random_states.hpp"
#include "entwit/record_io.hpp"
#include "entwit/report_io.hpp"
#include "entwit/scan_io.hpp"
#include "entwit/settings_io.hpp"
#include "entwit/state.hpp"
#include "entwit/state_io.hpp"
#include "entwit/witness.hpp"

using namespace entwit;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "entwit_io_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("state json round-trips pure and density states byte-for-byte") {
  for (const QuantumState& original :
       {ghz(3), psi_b(), singlet_triplet_mix(), build_w_state(0.375)}) {
    const std::string text = state_to_json(original);
    QuantumState back = state_from_json(text);
    CHECK(back.n_parties() == original.n_parties());
    CHECK(back.is_pure() == original.is_pure());
    CHECK(back.rho().max_abs_diff(original.rho()) < 1e-15);
    // Canonical form: parsing and re-serializing changes nothing.
    CHECK(state_to_json(back) == text);
  }
}

TEST_CASE("state files survive a disk round-trip") {
  const fs::path path = scratch_dir() / "state_roundtrip.json";
  write_state_file(path.string(), ghz(4));
  QuantumState back = read_state_file(path.string());
  CHECK(back.n_parties() == 4);
  CHECK(back.rho().max_abs_diff(ghz(4).rho()) < 1e-15);
}

TEST_CASE("state json rejects invariant violations by name") {
  CHECK_THROWS_AS(state_from_json("not json at all"), std::invalid_argument);
  CHECK_THROWS_AS(state_from_json("[1, 2, 3]"), std::invalid_argument);

  nlohmann::json j = nlohmann::json::parse(state_to_json(ghz(3)));
  j["ket"][0][0] = 1.1;  // breaks unit norm and the ket/rho consistency
  CHECK_THROWS_WITH_AS(state_from_json(j.dump(2)),
                       doctest::Contains("norm"), std::invalid_argument);

  nlohmann::json d = nlohmann::json::parse(state_to_json(singlet_triplet_mix()));
  d["rho"][0][0][0] = 0.9;  // trace blows up
  CHECK_THROWS_AS(state_from_json(d.dump(2)), std::invalid_argument);
}

TEST_CASE("settings json round-trips directions byte-for-byte") {
  std::mt19937_64 rng(401);
  PartySettings s = random_settings(3, rng);
  const std::string text = settings_to_json(s);
  PartySettings back = settings_from_json(text);
  REQUIRE(back.n() == 3);
  for (int p = 0; p < 3; ++p) {
    CHECK(back.parties[p].a.x == doctest::Approx(s.parties[p].a.x).epsilon(1e-15));
    CHECK(back.parties[p].a_prime.z ==
          doctest::Approx(s.parties[p].a_prime.z).epsilon(1e-15));
  }
  CHECK(settings_to_json(back) == text);
}

TEST_CASE("settings accept planar angles and reject them without a plane") {
  const std::string planar = R"({
    "plane": "xy",
    "parties": [
      {"a": 0.0, "a_prime": 1.5707963267948966},
      {"a": [0.0, 0.0, 1.0], "a_prime": 0.7853981633974483},
      {"a": -0.7853981633974483, "a_prime": 0.7853981633974483}
    ]
  })";
  PartySettings s = settings_from_json(planar);
  CHECK(s.parties[0].a.x == doctest::Approx(1.0));
  CHECK(s.parties[0].a_prime.y == doctest::Approx(1.0));
  CHECK(s.parties[1].a.z == doctest::Approx(1.0));

  const std::string planeless = R"({
    "plane": null,
    "parties": [
      {"a": 0.0, "a_prime": 1.0},
      {"a": 0.0, "a_prime": 1.0},
      {"a": 0.0, "a_prime": 1.0}
    ]
  })";
  CHECK_THROWS_AS(settings_from_json(planeless), std::invalid_argument);

  const std::string lopsided = R"({
    "plane": "xy",
    "parties": [{"a": [1.0, 1.0, 0.0], "a_prime": 0.0}]
  })";
  CHECK_THROWS_AS(settings_from_json(lopsided), std::invalid_argument);
}

TEST_CASE("record json round-trips the bundled records byte-for-byte") {
  for (const std::string& name : bundled_record_names()) {
    ExperimentRecord record = bundled_record(name);
    const std::string text = record_to_json(record);
    ExperimentRecord back = record_from_json(text);
    CHECK(back.name == record.name);
    CHECK(back.populations.has_value() == record.populations.has_value());
    CHECK(back.signal_amplitude.has_value() == record.signal_amplitude.has_value());
    CHECK(back.mermin_value.has_value() == record.mermin_value.has_value());
    if (record.mermin_value) {
      CHECK(back.mermin_value->value == record.mermin_value->value);
      CHECK(back.mermin_value->sigma == record.mermin_value->sigma);
    }
    CHECK(record_to_json(back) == text);
  }
}

TEST_CASE("record json names the offending field on errors") {
  nlohmann::json good =
      nlohmann::json::parse(record_to_json(bundled_record("rauschenbeutel")));

  nlohmann::json missing = good;
  missing.erase("mermin_value");
  CHECK_THROWS_WITH_AS(record_from_json(missing.dump(2)),
                       doctest::Contains("mermin_value"), std::invalid_argument);

  nlohmann::json short_table = good;
  short_table["populations"].erase(7);
  CHECK_THROWS_WITH_AS(record_from_json(short_table.dump(2)),
                       doctest::Contains("populations"), std::invalid_argument);

  nlohmann::json bad_sigma = good;
  bad_sigma["signal_amplitude"]["sigma"] = -0.01;
  CHECK_THROWS_WITH_AS(record_from_json(bad_sigma.dump(2)),
                       doctest::Contains("sigma"), std::invalid_argument);

  nlohmann::json bad_value = good;
  bad_value["populations"][2]["value"] = "big";
  CHECK_THROWS_WITH_AS(record_from_json(bad_value.dump(2)),
                       doctest::Contains("populations[2]"), std::invalid_argument);

  // A table entry far outside [0, 1] fails the physics validation, not parsing.
  nlohmann::json wild = good;
  wild["populations"][2]["value"] = 1.4;
  CHECK_THROWS_AS(record_from_json(wild.dump(2)), std::invalid_argument);

  // A record with every measurement field null has nothing to analyze.
  nlohmann::json hollow = good;
  hollow["populations"] = nullptr;
  hollow["signal_amplitude"] = nullptr;
  hollow["mermin_value"] = nullptr;
  hollow["correlations"] = nullptr;
  CHECK_THROWS_AS(record_from_json(hollow.dump(2)), std::invalid_argument);
}

TEST_CASE("bundled data files agree exactly with the built-in records") {
  const fs::path data_dir = ENTWIT_REPO_DATA_DIR;
  for (const std::string& name : bundled_record_names()) {
    const fs::path file = data_dir / (name + ".json");
    REQUIRE(fs::exists(file));
    CHECK(slurp(file) == record_to_json(bundled_record(name)) + "\n");
  }
}

TEST_CASE("scan csv round-trips within print precision") {
  std::vector<ScanPoint> points;
  for (int k = 0; k < 16; ++k) {
    points.push_back({2.0 * 3.141592653589793 * k / 16,
                      std::cos(3.0 * 2.0 * 3.141592653589793 * k / 16)});
  }
  const std::string text = scan_to_csv(points);
  CHECK(text.substr(0, 10) == "phi,value\n");
  std::vector<ScanPoint> back = scan_from_csv(text);
  REQUIRE(back.size() == points.size());
  for (size_t k = 0; k < points.size(); ++k) {
    CHECK(back[k].phi == doctest::Approx(points[k].phi).epsilon(1e-11));
    CHECK(back[k].value == doctest::Approx(points[k].value).epsilon(1e-11));
  }

  const fs::path path = scratch_dir() / "scan.csv";
  write_scan_file(path, points);
  CHECK(read_scan_file(path).size() == points.size());
}

TEST_CASE("scan csv rejects malformed input with line numbers") {
  CHECK_THROWS_WITH_AS(scan_from_csv("value,phi\n0,1\n"),
                       doctest::Contains("header"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(scan_from_csv("phi,value\n0.1,0.2,0.3\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(scan_from_csv("phi,value\n0.1,zebra\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_AS(scan_from_csv("phi,value\n0.1,nan\n"), std::invalid_argument);
  CHECK_THROWS_AS(scan_from_csv("phi,value\n0.1,inf\n"), std::invalid_argument);
  CHECK_THROWS_AS(scan_from_csv(""), std::invalid_argument);
}

TEST_CASE("verdict json mirrors every field and re-dumps identically") {
  WitnessVerdict v = condition_a_from_data(MeasuredValue(2.83, 0.09), 3);
  const std::string text = verdict_to_json(v);
  WitnessVerdict back = verdict_from_json(text);
  CHECK(back.n_parties == v.n_parties);
  CHECK(back.tested_value.value == v.tested_value.value);
  CHECK(back.tested_value.sigma == v.tested_value.sigma);
  CHECK(back.thresholds.biseparable == v.thresholds.biseparable);
  CHECK(back.local_realism == v.local_realism);
  CHECK(back.n_partite == v.n_partite);
  CHECK(back.classification == v.classification);
  CHECK(verdict_to_json(back) == text);

  const fs::path path = scratch_dir() / "verdict.json";
  write_verdict_file(path, v);
  CHECK(verdict_to_json(read_verdict_file(path)) == text);
}

TEST_CASE("classification and status strings invert cleanly") {
  for (Classification c :
       {Classification::no_violation, Classification::local_realism_violated,
        Classification::n_partite_witnessed, Classification::inconclusive}) {
    CHECK(classification_from_string(to_string(c)) == c);
  }
  for (ThresholdStatus s : {ThresholdStatus::below, ThresholdStatus::above,
                            ThresholdStatus::straddling}) {
    CHECK(threshold_status_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(classification_from_string("definitely_entangled"),
                  std::invalid_argument);
  CHECK_THROWS_AS(threshold_status_from_string("sideways"), std::invalid_argument);
}

TEST_CASE("fidelity report json round-trips") {
  FidelityReport r = fidelity_from_components(MeasuredValue(0.22, 0.01),
                                              MeasuredValue(0.36, 0.01),
                                              MeasuredValue(0.14, 0.02));
  const std::string text = fidelity_report_to_json(r);
  FidelityReport back = fidelity_report_from_json(text);
  CHECK(back.fidelity.value == r.fidelity.value);
  CHECK(back.fidelity.sigma == r.fidelity.sigma);
  CHECK(back.condition_b_met == r.condition_b_met);
  CHECK(fidelity_report_to_json(back) == text);
}

TEST_CASE("analysis reports serialize to canonical json") {
  const std::vector<std::string> texts = {
      to_json(fit_w_state()),
      to_json(demonstrate_rho_mix()),
      to_json(analyze_pan(bundled_record("pan"))),
      to_json(analyze_rauschenbeutel(bundled_record("rauschenbeutel"))),
  };
  for (const std::string& text : texts) {
    nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j.dump(2) == text);
  }
}
