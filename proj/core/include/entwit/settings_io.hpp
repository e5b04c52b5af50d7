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

#pragma once

#include <string>

#include "entwit/bell.hpp"

namespace entwit {

/**
 * Settings file format (JSON object):
 *   plane   : "xy" | "xz" | null
 *   parties : array of { "a": <direction>, "a_prime": <direction> }
 *
 * A direction is either a [x, y, z] unit vector, or — only when plane is
 * set — a plain number, read as the angle in radians from the x axis within
 * that plane. Vectors and angles may be mixed per party.
 */
std::string settings_to_json(const PartySettings& settings);
PartySettings settings_from_json(const std::string& text);

void write_settings_file(const std::string& path, const PartySettings& settings);
PartySettings read_settings_file(const std::string& path);

}  // namespace entwit
