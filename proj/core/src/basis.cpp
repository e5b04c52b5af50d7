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

#include "entwit/basis.hpp"

#include <stdexcept>

namespace entwit {

int basis_dim(int n_parties) {
  if (n_parties < 1 || n_parties > 6) {
    throw std::invalid_argument("basis_dim: party count must be in [1, 6], got " +
                                std::to_string(n_parties));
  }
  return 1 << n_parties;
}

int basis_offset(BasisIndex index, int n_parties) {
  const int dim = basis_dim(n_parties);
  if (index.label < 1 || index.label > dim) {
    throw std::invalid_argument("basis_offset: label " + std::to_string(index.label) +
                                " out of range [1, " + std::to_string(dim) + "]");
  }
  return index.label - 1;
}

std::vector<int> basis_bits(BasisIndex index, int n_parties) {
  const int offset = basis_offset(index, n_parties);
  std::vector<int> bits(static_cast<size_t>(n_parties));
  for (int p = 0; p < n_parties; ++p) {
    bits[static_cast<size_t>(p)] = (offset >> (n_parties - 1 - p)) & 1;
  }
  return bits;
}

BasisIndex basis_from_bits(const std::vector<int>& bits) {
  if (bits.empty() || bits.size() > 6) {
    throw std::invalid_argument("basis_from_bits: need between 1 and 6 party bits");
  }
  int offset = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("basis_from_bits: bits must be 0 (up) or 1 (down)");
    }
    offset = (offset << 1) | b;
  }
  return BasisIndex{offset + 1};
}

std::string basis_text(BasisIndex index, int n_parties) {
  std::string out;
  for (int b : basis_bits(index, n_parties)) out.push_back(b == 0 ? 'u' : 'd');
  return out;
}

}  // namespace entwit
