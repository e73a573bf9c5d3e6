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

#ifndef FAIRDIV_ALLOCATION_H_
#define FAIRDIV_ALLOCATION_H_

#include <memory>
#include <vector>

#include "fairdiv/subset.h"
#include "fairdiv/valuation.h"

namespace fairdiv {

// Pairwise-disjoint bundles of goods, one per agent; goods left out of every
// bundle are unassigned. Value type: augmentation steps return new copies.
struct PartialAllocation {
  int num_goods = 0;
  std::vector<Subset> bundles;
  // Set by producers whose bundles are all independent in the respective
  // agents' matroids (welfare-maximal partial allocations have this; a
  // completed allocation may not).
  bool bundles_independent = false;

  PartialAllocation() = default;
  PartialAllocation(int goods, int agents)
      : num_goods(goods), bundles(agents) {}

  int num_agents() const { return static_cast<int>(bundles.size()); }

  Subset Assigned() const {
    Subset all;
    for (Subset b : bundles) all = all | b;
    return all;
  }

  Subset Unassigned() const { return Subset::All(num_goods) - Assigned(); }

  // Agent holding g, or -1 when unassigned.
  int OwnerOf(int g) const {
    for (int i = 0; i < num_agents(); ++i) {
      if (bundles[i].Contains(g)) return i;
    }
    return -1;
  }

  bool Disjoint() const {
    Subset seen;
    for (Subset b : bundles) {
      if (seen.Intersects(b)) return false;
      seen = seen | b;
    }
    return true;
  }

  friend bool operator==(const PartialAllocation& a,
                         const PartialAllocation& b) {
    return a.num_goods == b.num_goods && a.bundles == b.bundles;
  }
};

// A fair-division instance: m goods and one valuation per agent.
struct Instance {
  int num_goods = 0;
  std::vector<std::shared_ptr<const Valuation>> valuations;

  int num_agents() const { return static_cast<int>(valuations.size()); }

  const Valuation& valuation(int agent) const { return *valuations[agent]; }

  // Whether every agent's valuation is a matroid rank function (the class
  // the polynomial-time solvers require).
  bool AllMatroidRank() const {
    for (const auto& v : valuations) {
      if (dynamic_cast<const MatroidRankValuation*>(v.get()) == nullptr) {
        return false;
      }
    }
    return true;
  }

  // The agent's valuation as a matroid rank function; CapabilityError when
  // it is not one.
  const MatroidRankValuation& RankValuation(int agent) const;

  // Total value-oracle queries across all agents.
  std::int64_t TotalQueryCount() const;
  void ResetQueryCounts() const;
};

}  // namespace fairdiv

#endif  // FAIRDIV_ALLOCATION_H_
