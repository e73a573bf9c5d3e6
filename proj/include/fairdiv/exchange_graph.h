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

#ifndef FAIRDIV_EXCHANGE_GRAPH_H_
#define FAIRDIV_EXCHANGE_GRAPH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/subset.h"
#include "fairdiv/valuation.h"

namespace fairdiv {

// Directed graph on goods describing single-element exchanges: an edge
// (g, g') with g held by agent i and g' outside bundle A_i exists when
// A_i - g + g' stays independent for i. Unassigned goods have no outgoing
// edges.
struct ExchangeGraph {
  int num_goods = 0;
  // adjacency[g] lists successors of g in ascending order.
  std::vector<std::vector<int>> adjacency;
  // owner[g] is the agent holding g, or -1.
  std::vector<int> owner;
};

// A path (g1, ..., gt) in the exchange graph used to rebalance bundles.
// source_agent is the agent i with g1 in F_i(A_i) that gains g1;
// target_agent is the agent giving up gt, or -1 for growth steps where gt
// was unassigned.
struct AugmentingPath {
  std::vector<int> goods;
  int source_agent = -1;
  int target_agent = -1;

  bool IsGrowth() const { return target_agent < 0; }
};

// Non-owning list of the agents' matroids, in agent order.
using MatroidList = std::vector<const MatroidRankValuation*>;

// Builds the exchange graph of `alloc` restricted to the goods in `ground`.
// Issues O(|ground|^2) rank queries.
ExchangeGraph BuildExchangeGraph(const MatroidList& matroids,
                                 const PartialAllocation& alloc,
                                 Subset ground);

// Instance-level convenience wrapper over the full ground set.
ExchangeGraph BuildExchangeGraph(const Instance& inst,
                                 const PartialAllocation& alloc);

// Shortest directed path from any source to any target, as the ordered list
// of goods visited. Deterministic: breadth-first search seeded with sources
// in ascending order, neighbors expanded in ascending order, stopping at the
// first target dequeued. When sources and targets intersect, the path is the
// single lowest-index shared good. The returned path touches targets only at
// its last vertex. Empty result when no path exists.
std::optional<std::vector<int>> ShortestPath(const ExchangeGraph& graph,
                                             Subset sources, Subset targets);

// Applies a transfer path: every bundle swaps along the path edges leaving
// it (A_k <- A_k symmetric-difference P), the source agent additionally
// gains g1, and the target agent loses gt. The source agent's bundle grows
// by one good, the target agent's shrinks by one, and all other bundle sizes
// are unchanged. Re-checks independence and disjointness by rank queries and
// throws InternalInvariantError on any violation.
PartialAllocation AugmentTransfer(const MatroidList& matroids,
                                  const PartialAllocation& alloc,
                                  const AugmentingPath& path);

// Applies a growth path, whose last good is unassigned: like a transfer
// except no bundle shrinks, so the number of assigned goods rises by one.
PartialAllocation AugmentGrowth(const MatroidList& matroids,
                                const PartialAllocation& alloc,
                                const AugmentingPath& path);

// A partial allocation of the goods in `ground` maximizing total value
// (equivalently total bundle size; all bundles stay independent), computed
// by repeated shortest-path growth augmentation. Deterministic. When
// `growth_steps` is non-null it receives the number of augmentations.
PartialAllocation MaxWelfareBundles(const MatroidList& matroids, int num_goods,
                                    Subset ground,
                                    std::int64_t* growth_steps = nullptr);

// Welfare-maximizing partial allocation of the whole instance. Requires all
// valuations to be matroid ranks (CapabilityError otherwise).
PartialAllocation MaxWelfareAllocation(const Instance& inst,
                                       std::int64_t* growth_steps = nullptr);

// Rank of S in the union of the named agents' matroids: the largest total
// size of disjoint bundles (one per agent, each independent) inside S.
// Agents must be distinct and in range.
int UnionRank(const Instance& inst, Subset s, const std::vector<int>& agents);

struct KFoldUnionResult {
  int rank = 0;
  // k disjoint independent witness parts covering a maximum independent set
  // of the k-fold union, in the deterministic order the algorithm built.
  std::vector<Subset> parts;
};

// Rank of S in the union of k copies of the one matroid, with the witness
// parts. k >= 1.
KFoldUnionResult KFoldUnionRank(const MatroidRankValuation& v, int k,
                                Subset s);

// The agents' matroids of a rank-valued instance (CapabilityError when some
// agent's valuation is not a matroid rank).
MatroidList RankMatroids(const Instance& inst);

}  // namespace fairdiv

#endif  // FAIRDIV_EXCHANGE_GRAPH_H_
