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

#ifndef ENTWIT_RECORD_IO_HPP_
#define ENTWIT_RECORD_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "entwit/experiments.hpp"

namespace entwit {

/**
 * Parses an experiment record document:
 *   {"name": str,
 *    "populations": [{"value": x, "sigma": s} x 8] | null,
 *    "signal_amplitude": {"value", "sigma"} | null,
 *    "mermin_value": {"value", "sigma"} | null,
 *    "correlations": [{"setting": str, "value", "sigma"}] | null}
 * Schema violations raise std::invalid_argument naming the field path;
 * the parsed record is validated (populations included) before return.
 */
ExperimentRecord record_from_json(const std::string& text);
std::string record_to_json(const ExperimentRecord& record);

ExperimentRecord read_record_file(const std::filesystem::path& path);
void write_record_file(const std::filesystem::path& path,
                       const ExperimentRecord& record);

/** Names of the records shipped with the library. */
std::vector<std::string> bundled_record_names();

/**
 * Returns a shipped record by name ("pan": the three-photon Bell-value
 * measurement; "rauschenbeutel": the populations-plus-amplitude cavity-QED
 * measurement). Throws std::invalid_argument for unknown names.
 */
ExperimentRecord bundled_record(const std::string& name);

}  // namespace entwit

#endif  // ENTWIT_RECORD_IO_HPP_
