// Copyright 2026 The Authors.
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

#ifndef FAIRDIV_ALGORITHMS_H_
#define FAIRDIV_ALGORITHMS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/shares.h"

namespace fairdiv {

// Everything a solver run produces, sufficient to replay and audit it.
struct SolveReport {
  std::string fairness;  // "mms" or "pmms"
  PartialAllocation allocation;
  std::vector<int> agent_values;
  int welfare = 0;
  // The shares the run guaranteed: mu_i(n, all goods) per agent for the MMS
  // solver; mu_i(2, A_i union A_j) per checked pair for the PMMS solver.
  SharesTable shares;
  std::int64_t growth_steps = 0;    // building the welfare-maximal start
  std::int64_t augmentations = 0;   // MMS rebalancing path augmentations
  std::int64_t transfers = 0;       // PMMS single-good transfers
  // MMS: total shortfall sum over deficient agents of (mu_i - v_i(A_i)),
  // recorded before the loop and after every augmentation; drops by exactly
  // one per augmentation.
  std::vector<int> deficit_trace;
  // PMMS: sum of squared bundle values, recorded before the loop and after
  // every transfer; strictly decreasing.
  std::vector<std::int64_t> potential_trace;
};

// Computes a complete MMS allocation: every agent i ends with
// v_i(A_i) >= mu_i(n, all goods), and total welfare equals the maximum over
// all allocations. Starts from a welfare-maximal partial allocation and
// moves goods toward deficient agents along shortest exchange-graph paths
// (at most n*m of them), then hands leftovers to agent 0. Requires matroid
// rank valuations (CapabilityError otherwise).
SolveReport SolveMms(const Instance& inst);

// Computes a partial PMMS allocation: for every ordered agent pair (i, j),
// v_i(A_i) >= mu_i(2, A_i union A_j). Starts from a welfare-maximal partial
// allocation and repeatedly moves one absorbable good from j to i while some
// pair falls short (at most m^2 moves). The result stays partial and keeps
// maximum welfare. Requires matroid rank valuations.
SolveReport SolvePmms(const Instance& inst);

// Total value of an allocation, sum of v_i(A_i). Bundles must be pairwise
// disjoint (ContractViolation otherwise).
int SocialWelfare(const Instance& inst, const PartialAllocation& alloc);

}  // namespace fairdiv

#endif  // FAIRDIV_ALGORITHMS_H_
