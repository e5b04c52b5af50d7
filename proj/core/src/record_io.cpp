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

#include "entwit/record_io.hpp"

namespace entwit {

using nlohmann::json;

namespace {

MeasuredValue measured_from(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("value") || !j.contains("sigma")) {
    throw std::invalid_argument("record json: " + path +
                                " must be {\"value\": num, \"sigma\": num}");
  }
  if (!j["value"].is_number()) {
    throw std::invalid_argument("record json: " + path + ".value must be a number");
  }
  if (!j["sigma"].is_number()) {
    throw std::invalid_argument("record json: " + path + ".sigma must be a number");
  }
  const double sigma = j["sigma"].get<double>();
  if (sigma < 0.0) {
    throw std::invalid_argument("record json: " + path + ".sigma must be nonnegative");
  }
  return MeasuredValue(j["value"].get<double>(), sigma);
}

json measured_to(const MeasuredValue& m) {
  return json{{"value", m.value}, {"sigma", m.sigma}};
}

}  // namespace

ExperimentRecord record_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("record json: parse error: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::invalid_argument("record json: document must be an object");
  }
  for (const char* field :
       {"name", "populations", "signal_amplitude", "mermin_value", "correlations"}) {
    if (!j.contains(field)) {
      throw std::invalid_argument(std::string("record json: missing field '") +
                                  field + "'");
    }
  }
  if (!j["name"].is_string()) {
    throw std::invalid_argument("record json: name must be a string");
  }

  ExperimentRecord record;
  record.name = j["name"].get<std::string>();

  const json& populations = j["populations"];
  if (!populations.is_null()) {
    if (!populations.is_array() || populations.size() != 8) {
      throw std::invalid_argument(
          "record json: populations must be null or an array of 8 entries");
    }
    PopulationTable table;
    for (size_t i = 0; i < 8; ++i) {
      table.values[i] = measured_from(populations[i],
                                      "populations[" + std::to_string(i) + "]");
    }
    record.populations = table;
  }

  const json& amplitude = j["signal_amplitude"];
  if (!amplitude.is_null()) {
    record.signal_amplitude = measured_from(amplitude, "signal_amplitude");
  }

  const json& mermin = j["mermin_value"];
  if (!mermin.is_null()) {
    record.mermin_value = measured_from(mermin, "mermin_value");
  }

  const json& correlations = j["correlations"];
  if (!correlations.is_null()) {
    if (!correlations.is_array()) {
      throw std::invalid_argument("record json: correlations must be null or an array");
    }
    for (size_t i = 0; i < correlations.size(); ++i) {
      const json& entry = correlations[i];
      const std::string path = "correlations[" + std::to_string(i) + "]";
      if (!entry.is_object() || !entry.contains("setting") ||
          !entry["setting"].is_string()) {
        throw std::invalid_argument("record json: " + path +
                                    ".setting must be a string");
      }
      record.correlations.push_back(
          {entry["setting"].get<std::string>(), measured_from(entry, path)});
    }
  }

  record.validate();
  return record;
}

std::string record_to_json(const ExperimentRecord& record) {
  json j;
  j["name"] = record.name;
  if (record.populations.has_value()) {
    json populations = json::array();
    for (const MeasuredValue& v : record.populations->values) {
      populations.push_back(measured_to(v));
    }
    j["populations"] = populations;
  } else {
    j["populations"] = nullptr;
  }
  j["signal_amplitude"] = record.signal_amplitude.has_value()
                              ? measured_to(*record.signal_amplitude)
                              : json(nullptr);
  j["mermin_value"] = record.mermin_value.has_value()
                          ? measured_to(*record.mermin_value)
                          : json(nullptr);
  if (record.correlations.empty()) {
    j["correlations"] = nullptr;
  } else {
    json correlations = json::array();
    for (const CorrelationEntry& c : record.correlations) {
      json entry = measured_to(c.value);
      entry["setting"] = c.setting;
      correlations.push_back(entry);
    }
    j["correlations"] = correlations;
  }
  return j.dump(2);
}

ExperimentRecord read_record_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return record_from_json(buf.str());
}

void write_record_file(const std::filesystem::path& path,
                       const ExperimentRecord& record) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << record_to_json(record) << '\n';
}

std::vector<std::string> bundled_record_names() { return {"pan", "rauschenbeutel"}; }

ExperimentRecord bundled_record(const std::string& name) {
  if (name == "pan") {
    ExperimentRecord record;
    record.name = "pan";
    record.mermin_value = MeasuredValue(2.83, 0.09);
    return record;
  }
  if (name == "rauschenbeutel") {
    ExperimentRecord record;
    record.name = "rauschenbeutel";
    PopulationTable table;
    const double values[8] = {0.10, 0.22, 0.06, 0.04, 0.10, 0.09, 0.36, 0.03};
    for (size_t i = 0; i < 8; ++i) {
      table.values[i] = MeasuredValue(values[i], 0.01);
    }
    record.populations = table;
    record.signal_amplitude = MeasuredValue(0.28, 0.04);
    return record;
  }
  throw std::invalid_argument("no bundled record named '" + name + "'");
}

}  // namespace entwit
