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

#ifndef ENTWIT_REPORT_IO_HPP_
#define ENTWIT_REPORT_IO_HPP_

#include <filesystem>
#include <string>

#include "entwit/witness.hpp"

namespace entwit {

/** Stable text names used in JSON and CLI output. */
std::string to_string(Classification c);
std::string to_string(ThresholdStatus s);
Classification classification_from_string(const std::string& s);
ThresholdStatus threshold_status_from_string(const std::string& s);

/**
 * Witness verdict as a JSON document: n_parties, tested_value
 * ({value, sigma}), all three thresholds spelled out, per-threshold status
 * and the overall classification. Serialization is canonical (sorted keys,
 * two-space indent), so serialize(parse(serialize(x))) is byte-identical.
 */
std::string verdict_to_json(const WitnessVerdict& verdict);
WitnessVerdict verdict_from_json(const std::string& text);

/** Fidelity report as JSON: the three inputs, the fidelity, and the flag. */
std::string fidelity_report_to_json(const FidelityReport& report);
FidelityReport fidelity_report_from_json(const std::string& text);

void write_verdict_file(const std::filesystem::path& path, const WitnessVerdict& v);
WitnessVerdict read_verdict_file(const std::filesystem::path& path);

}  // namespace entwit

#endif  // ENTWIT_REPORT_IO_HPP_
