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

#ifndef FAIRDIV_ORACLES_H_
#define FAIRDIV_ORACLES_H_

#include <functional>
#include <optional>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/subset.h"
#include "fairdiv/valuation.h"

// Exhaustive reference implementations. Everything here is deliberately
// plain enumeration against the raw value oracles, sharing no code with the
// polynomial-time paths it is used to check, and is the ground truth the
// test suites compare against.

namespace fairdiv {

struct WelfareResult {
  int welfare = 0;
  // First welfare-maximizing complete allocation of the scanned goods, in
  // lexicographic labeling order (good labels agent by agent, lowest good
  // most significant).
  PartialAllocation witness;
};

// Maximum total value over all complete allocations of the goods in S.
// Caps: |S| <= 10 (size cap, env-overridable), agents <= 4.
WelfareResult ExhaustiveMaxWelfare(const Instance& inst, Subset s);

struct ConvolutionResult {
  int rank = 0;
  // First minimizer T of |S \ T| + sum_i v_i(T) in ascending enumeration
  // order over subsets of S.
  Subset minimizer;
};

// Union-matroid rank of S for the named agents, via the min-convolution
// formula min over T of |S \ T| + sum_i v_i(T). Cap: |S| <= 16.
ConvolutionResult ConvolutionRank(const Instance& inst, Subset s,
                                  const std::vector<int>& agents);

// Exact maximin share: the best over all ordered partitions of S into k
// possibly-empty parts of the minimum part value. Enumerates set partitions
// once each (parts of a single valuation are interchangeable). Caps:
// |S| <= 12 (env-overridable), k <= 4.
int ExhaustiveMms(const Valuation& v, int k, Subset s);

// Scans all n^m complete allocations in lexicographic labeling order and
// returns the first one satisfying `accept`, if any. Cap: n^m <= 1e6.
std::optional<PartialAllocation> ExhaustiveAllocationScan(
    const Instance& inst,
    const std::function<bool(const PartialAllocation&)>& accept);

}  // namespace fairdiv

#endif  // FAIRDIV_ORACLES_H_
