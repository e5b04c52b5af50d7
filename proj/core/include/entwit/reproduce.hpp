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

#ifndef ENTWIT_REPRODUCE_HPP_
#define ENTWIT_REPRODUCE_HPP_

#include <string>
#include <vector>

namespace entwit {

/**
 * One audited quantity: the computed value is compared against the
 * reference using `comparison` ("abs": |computed - reference| <= tolerance;
 * "upper_bound": computed <= reference + tolerance; "lower_bound":
 * computed >= reference - tolerance).
 */
struct ReproductionCheck {
  std::string id;
  std::string group;
  std::string description;
  std::string comparison;
  double reference_value = 0.0;
  double computed_value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ReproductionReport {
  std::vector<ReproductionCheck> checks;
  bool all_pass = true;
};

/**
 * Recomputes the full set of reference quantities — exact Bell values,
 * operator identities, threshold bound sweeps, the experiment analyses,
 * the two-particle-model fit, the worst-case contamination chain, the
 * counterfeit-mixture demonstration, harmonic extraction, and the planar
 * expectation laws — and checks each against its reference. `filter` keeps
 * only checks whose id or group contains the substring (empty keeps all).
 * Randomized sweeps use fixed per-check seeds, so results are stable under
 * any filter.
 */
ReproductionReport run_reproduction(const std::string& filter = "");

/** Canonical JSON rendering (sorted keys, 2-space indent). */
std::string reproduction_to_json(const ReproductionReport& report);

}  // namespace entwit

#endif  // ENTWIT_REPRODUCE_HPP_
