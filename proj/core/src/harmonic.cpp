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

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "entwit/scan_io.hpp"

namespace entwit {

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string strip(const std::string& s) {
  size_t begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  size_t end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& field, int line_number) {
  const std::string text = strip(field);
  if (text.empty()) {
    throw std::invalid_argument("scan csv: empty field on line " +
                                std::to_string(line_number));
  }
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("scan csv: '" + text +
                                "' on line " + std::to_string(line_number) +
                                " is not a finite number");
  }
  return v;
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanPoint>& points) {
  std::string out = "phi,value\n";
  for (const ScanPoint& p : points) {
    out += format_number(p.phi);
    out += ',';
    out += format_number(p.value);
    out += '\n';
  }
  return out;
}

std::vector<ScanPoint> scan_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  bool saw_header = false;
  std::vector<ScanPoint> points;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string t = strip(line);
    if (t.empty()) continue;
    if (!saw_header) {
      if (t != "phi,value") {
        throw std::invalid_argument(
            "scan csv: line " + std::to_string(line_number) +
            " must be the header 'phi,value', got '" + t + "'");
      }
      saw_header = true;
      continue;
    }
    const size_t comma = t.find(',');
    if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
      throw std::invalid_argument("scan csv: line " + std::to_string(line_number) +
                                  " must hold exactly two comma-separated fields");
    }
    ScanPoint p;
    p.phi = parse_number(t.substr(0, comma), line_number);
    p.value = parse_number(t.substr(comma + 1), line_number);
    points.push_back(p);
  }
  if (!saw_header) {
    throw std::invalid_argument("scan csv: missing 'phi,value' header");
  }
  return points;
}

void write_scan_file(const std::filesystem::path& path,
                     const std::vector<ScanPoint>& points) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << scan_to_csv(points);
  if (!out) {
    throw std::runtime_error("failed while writing '" + path.string() + "'");
  }
}

std::vector<ScanPoint> read_scan_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scan_from_csv(buffer.str());
}

}  // namespace entwit
