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

#include "entwit/state_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entwit {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("state file: " + where + " must be a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

std::string state_to_json(const QuantumState& state) {
  json j;
  j["n_parties"] = state.n_parties();
  j["kind"] = state.is_pure() ? "pure" : "density";
  if (state.is_pure()) {
    json ket = json::array();
    for (const Complex& a : *state.ket()) ket.push_back(complex_to_json(a));
    j["ket"] = ket;
  } else {
    j["ket"] = nullptr;
  }
  json rho = json::array();
  for (int r = 0; r < state.rho().dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < state.rho().dim(); ++c) {
      row.push_back(complex_to_json(state.rho().at(r, c)));
    }
    rho.push_back(row);
  }
  j["rho"] = rho;
  return j.dump(2);
}

QuantumState state_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("state file: JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("state file: top level must be an object");
  for (const char* key : {"n_parties", "kind", "ket", "rho"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("state file: missing field \"") + key + "\"");
    }
  }
  if (!j["n_parties"].is_number_integer()) {
    throw std::invalid_argument("state file: n_parties must be an integer");
  }
  const int n = j["n_parties"].get<int>();
  const int dim = basis_dim(n);

  const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
  if (kind != "pure" && kind != "density") {
    throw std::invalid_argument("state file: kind must be \"pure\" or \"density\"");
  }

  if (!j["rho"].is_array() || j["rho"].size() != static_cast<size_t>(dim)) {
    throw std::invalid_argument("state file: rho must be an array of " +
                                std::to_string(dim) + " rows");
  }
  ComplexMatrix rho(dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = j["rho"][static_cast<size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<size_t>(dim)) {
      throw std::invalid_argument("state file: rho row " + std::to_string(r) +
                                  " must have " + std::to_string(dim) + " entries");
    }
    for (int c = 0; c < dim; ++c) {
      rho.at(r, c) = complex_from_json(row[static_cast<size_t>(c)],
                                       "rho[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }

  if (kind == "pure") {
    if (!j["ket"].is_array() || j["ket"].size() != static_cast<size_t>(dim)) {
      throw std::invalid_argument("state file: pure state needs a ket with " +
                                  std::to_string(dim) + " amplitudes");
    }
    std::vector<Complex> ket(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      ket[static_cast<size_t>(i)] = complex_from_json(j["ket"][static_cast<size_t>(i)],
                                                      "ket[" + std::to_string(i) + "]");
    }
    QuantumState state = QuantumState::pure(n, std::move(ket));
    if (state.rho().max_abs_diff(rho) > 1e-9) {
      throw std::invalid_argument("state file: rho is not the outer product of ket "
                                  "(pure-state consistency violated)");
    }
    return state;
  }

  if (!j["ket"].is_null()) {
    throw std::invalid_argument("state file: density state must carry ket = null");
  }
  return QuantumState::density(n, std::move(rho));
}

void write_state_file(const std::string& path, const QuantumState& state) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open for writing: " + path);
  out << state_to_json(state) << '\n';
}

QuantumState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return state_from_json(buf.str());
}

}  // namespace entwit
