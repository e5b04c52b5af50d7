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

#ifndef ENTWIT_SCAN_IO_HPP_
#define ENTWIT_SCAN_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace entwit {

/** One sample of an interference scan: observable value at analyzer phase phi. */
struct ScanPoint {
  double phi = 0.0;
  double value = 0.0;
};

/** Renders points as CSV with a "phi,value" header row; 12 significant digits. */
std::string scan_to_csv(const std::vector<ScanPoint>& points);

/**
 * Parses CSV produced by scan_to_csv (or hand-written in the same shape).
 * The header row must read "phi,value"; every following non-empty line must
 * hold exactly two finite numbers. Throws std::invalid_argument naming the
 * offending line on malformed input.
 */
std::vector<ScanPoint> scan_from_csv(const std::string& text);

void write_scan_file(const std::filesystem::path& path,
                     const std::vector<ScanPoint>& points);
std::vector<ScanPoint> read_scan_file(const std::filesystem::path& path);

}  // namespace entwit

#endif  // ENTWIT_SCAN_IO_HPP_
