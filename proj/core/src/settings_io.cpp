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

#include "entwit/settings_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entwit {

namespace {

using nlohmann::json;

SpinDirection direction_from_json(const json& j, const std::optional<Plane>& plane,
                                  const std::string& where) {
  if (j.is_number()) {
    if (!plane.has_value()) {
      throw std::invalid_argument("settings file: " + where +
                                  " is an angle but no plane is set");
    }
    const double angle = j.get<double>();
    return *plane == Plane::xy ? SpinDirection::from_xy_angle(angle)
                               : SpinDirection::from_xz_angle(angle);
  }
  if (j.is_array() && j.size() == 3 && j[0].is_number() && j[1].is_number() &&
      j[2].is_number()) {
    try {
      return SpinDirection(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("settings file: " + where + ": " + e.what());
    }
  }
  throw std::invalid_argument("settings file: " + where +
                              " must be a [x, y, z] vector or an in-plane angle");
}

}  // namespace

std::string settings_to_json(const PartySettings& settings) {
  json j;
  j["plane"] = nullptr;
  json parties = json::array();
  for (const PartySetting& p : settings.parties) {
    json entry;
    entry["a"] = json::array({p.a.x, p.a.y, p.a.z});
    entry["a_prime"] = json::array({p.a_prime.x, p.a_prime.y, p.a_prime.z});
    parties.push_back(entry);
  }
  j["parties"] = parties;
  return j.dump(2);
}

PartySettings settings_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("settings file: JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("plane") || !j.contains("parties")) {
    throw std::invalid_argument("settings file: need object with \"plane\" and \"parties\"");
  }
  std::optional<Plane> plane;
  if (j["plane"].is_string()) {
    const std::string p = j["plane"].get<std::string>();
    if (p == "xy") {
      plane = Plane::xy;
    } else if (p == "xz") {
      plane = Plane::xz;
    } else {
      throw std::invalid_argument("settings file: plane must be \"xy\", \"xz\" or null");
    }
  } else if (!j["plane"].is_null()) {
    throw std::invalid_argument("settings file: plane must be \"xy\", \"xz\" or null");
  }

  if (!j["parties"].is_array() || j["parties"].empty()) {
    throw std::invalid_argument("settings file: parties must be a nonempty array");
  }
  PartySettings out;
  int idx = 0;
  for (const json& entry : j["parties"]) {
    if (!entry.is_object() || !entry.contains("a") || !entry.contains("a_prime")) {
      throw std::invalid_argument("settings file: parties[" + std::to_string(idx) +
                                  "] must carry \"a\" and \"a_prime\"");
    }
    const std::string where = "parties[" + std::to_string(idx) + "]";
    out.parties.push_back({direction_from_json(entry["a"], plane, where + ".a"),
                           direction_from_json(entry["a_prime"], plane, where + ".a_prime")});
    ++idx;
  }
  return out;
}

void write_settings_file(const std::string& path, const PartySettings& settings) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << settings_to_json(settings) << '\n';
}

PartySettings read_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open settings file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return settings_from_json(buf.str());
}

}  // namespace entwit
