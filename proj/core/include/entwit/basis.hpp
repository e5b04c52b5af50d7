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
#include <vector>

namespace entwit {

/**
 * One-based label for a computational-basis state of n spin-1/2 parties.
 *
 * Conventions, used consistently everywhere:
 *  - party 1 owns the most significant bit;
 *  - spin-up is bit 0, spin-down is bit 1;
 *  - labels run 1 .. 2^n, so for three parties label 1 is up-up-up,
 *    label 2 is up-up-down, label 7 is down-down-up, label 8 is
 *    down-down-down.
 */
struct BasisIndex {
  int label = 1;
};

/** Number of basis states for n parties (2^n); validates 1 <= n <= 6. */
int basis_dim(int n_parties);

/** Zero-based row/column offset for a label; throws if out of range. */
int basis_offset(BasisIndex index, int n_parties);

/** Per-party bits (0 = up, 1 = down), party 1 first. */
std::vector<int> basis_bits(BasisIndex index, int n_parties);

/** Label from per-party bits, party 1 first. */
BasisIndex basis_from_bits(const std::vector<int>& bits);

/** Compact text form, e.g. "uud" for up-up-down. */
std::string basis_text(BasisIndex index, int n_parties);

}  // namespace entwit
