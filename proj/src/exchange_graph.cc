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

#include "fairdiv/exchange_graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "fairdiv/errors.h"
#include "fairdiv/matroid_ops.h"

namespace fairdiv {

namespace {

void CheckAllocationShape(const MatroidList& matroids,
                          const PartialAllocation& alloc, Subset ground) {
  if (alloc.num_agents() != static_cast<int>(matroids.size())) {
    throw ArgumentError("allocation has " + std::to_string(alloc.num_agents()) +
                        " bundles for " + std::to_string(matroids.size()) +
                        " matroids");
  }
  if (!alloc.Disjoint()) {
    throw ContractViolation("bundles must be pairwise disjoint");
  }
  for (int i = 0; i < alloc.num_agents(); ++i) {
    if (!alloc.bundles[i].SubsetOf(ground)) {
      throw ArgumentError("bundle " + std::to_string(i) +
                          " leaves the ground set " + ground.ToString());
    }
    if (!IsIndependent(*matroids[i], alloc.bundles[i])) {
      throw ContractViolation("bundle " + alloc.bundles[i].ToString() +
                              " of agent " + std::to_string(i) +
                              " is not independent");
    }
  }
}

// Goods outside A_i (within ground) that extend agent i's bundle.
Subset FreeGoodsWithin(const MatroidRankValuation& v, Subset bundle,
                       Subset ground) {
  Subset free;
  int base = bundle.Count();
  for (int g : ground - bundle) {
    if (v.value(bundle.Plus(g)) == base + 1) free = free.Plus(g);
  }
  return free;
}

// A_k symmetric-difference P: for every path edge leaving A_k, drop its tail
// and pick up its head.
Subset SwapAlongPath(Subset bundle, const std::vector<int>& path) {
  Subset result = bundle;
  for (std::size_t step = 0; step + 1 < path.size(); ++step) {
    if (bundle.Contains(path[step])) {
      result = result.Minus(path[step]).Plus(path[step + 1]);
    }
  }
  return result;
}

void CheckPathShape(const PartialAllocation& alloc,
                    const AugmentingPath& path) {
  if (path.goods.empty()) throw ArgumentError("augmenting path is empty");
  Subset seen;
  for (int g : path.goods) {
    if (g < 0 || g >= alloc.num_goods) {
      throw ArgumentError("path good " + std::to_string(g) + " out of range");
    }
    if (seen.Contains(g)) {
      throw ArgumentError("path repeats good " + std::to_string(g));
    }
    seen = seen.Plus(g);
  }
  if (path.source_agent < 0 || path.source_agent >= alloc.num_agents()) {
    throw ArgumentError("path source agent out of range");
  }
}

PartialAllocation ApplyPath(const MatroidList& matroids,
                            const PartialAllocation& alloc,
                            const AugmentingPath& path) {
  CheckPathShape(alloc, path);
  const int i = path.source_agent;
  const int first = path.goods.front();
  const int last = path.goods.back();

  if (alloc.bundles[i].Contains(first)) {
    throw ContractViolation("path must start outside the source bundle");
  }
  if (Marginal(*matroids[i], alloc.bundles[i], first) != 1) {
    throw ContractViolation("path start " + std::to_string(first) +
                            " does not extend the source bundle");
  }
  // Every consecutive pair must be an exchange edge of the holder's bundle.
  for (std::size_t step = 0; step + 1 < path.goods.size(); ++step) {
    int g = path.goods[step];
    int next = path.goods[step + 1];
    int holder = alloc.OwnerOf(g);
    if (holder < 0) {
      throw ContractViolation("path good " + std::to_string(g) +
                              " is unassigned but has an outgoing step");
    }
    Subset swapped = alloc.bundles[holder].Minus(g).Plus(next);
    if (alloc.bundles[holder].Contains(next) ||
        !IsIndependent(*matroids[holder], swapped)) {
      throw ContractViolation("path step (" + std::to_string(g) + ", " +
                              std::to_string(next) +
                              ") is not an exchange edge");
    }
  }

  PartialAllocation next = alloc;
  for (int k = 0; k < alloc.num_agents(); ++k) {
    next.bundles[k] = SwapAlongPath(alloc.bundles[k], path.goods);
  }
  next.bundles[i] = next.bundles[i].Plus(first);
  if (!path.IsGrowth()) {
    const int j = path.target_agent;
    if (j < 0 || j >= alloc.num_agents() || !alloc.bundles[j].Contains(last)) {
      throw ArgumentError("transfer path must end inside the target bundle");
    }
    next.bundles[j] = next.bundles[j].Minus(last);
  } else if (alloc.OwnerOf(last) >= 0) {
    throw ContractViolation("growth path must end at an unassigned good");
  }
  next.bundles_independent = true;

  // The swap lemma guarantees all of the following; recheck with rank
  // queries and fail hard if the implementation ever breaks it.
  Subset seen;
  for (int k = 0; k < next.num_agents(); ++k) {
    if (seen.Intersects(next.bundles[k])) {
      throw InternalInvariantError("augmentation produced overlapping bundles");
    }
    seen = seen | next.bundles[k];
    if (!IsIndependent(*matroids[k], next.bundles[k])) {
      throw InternalInvariantError("augmentation broke independence of agent " +
                                   std::to_string(k) + "'s bundle " +
                                   next.bundles[k].ToString());
    }
    int before = alloc.bundles[k].Count();
    int after = next.bundles[k].Count();
    int expected = before + (k == i ? 1 : 0) -
                   (!path.IsGrowth() && k == path.target_agent ? 1 : 0);
    if (after != expected) {
      throw InternalInvariantError("augmentation changed bundle " +
                                   std::to_string(k) + " size " +
                                   std::to_string(before) + " -> " +
                                   std::to_string(after));
    }
  }
  return next;
}

}  // namespace

ExchangeGraph BuildExchangeGraph(const MatroidList& matroids,
                                 const PartialAllocation& alloc,
                                 Subset ground) {
  CheckAllocationShape(matroids, alloc, ground);
  ExchangeGraph graph;
  graph.num_goods = alloc.num_goods;
  graph.adjacency.resize(alloc.num_goods);
  graph.owner.assign(alloc.num_goods, -1);
  for (int i = 0; i < alloc.num_agents(); ++i) {
    const Subset bundle = alloc.bundles[i];
    for (int g : bundle) {
      graph.owner[g] = i;
      Subset removed = bundle.Minus(g);
      for (int h : ground - bundle) {
        if (IsIndependent(*matroids[i], removed.Plus(h))) {
          graph.adjacency[g].push_back(h);
        }
      }
    }
  }
  return graph;
}

ExchangeGraph BuildExchangeGraph(const Instance& inst,
                                 const PartialAllocation& alloc) {
  return BuildExchangeGraph(RankMatroids(inst), alloc,
                            Subset::All(inst.num_goods));
}

std::optional<std::vector<int>> ShortestPath(const ExchangeGraph& graph,
                                             Subset sources, Subset targets) {
  if (sources.Intersects(targets)) {
    return std::vector<int>{(sources & targets).Min()};
  }
  std::vector<int> parent(graph.num_goods, -1);
  std::vector<bool> visited(graph.num_goods, false);
  std::deque<int> queue;
  for (int g : sources) {
    visited[g] = true;
    queue.push_back(g);
  }
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (int h : graph.adjacency[g]) {
      if (visited[h]) continue;
      visited[h] = true;
      parent[h] = g;
      if (targets.Contains(h)) {
        std::vector<int> path;
        for (int v = h; v >= 0; v = parent[v]) path.push_back(v);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(h);
    }
  }
  return std::nullopt;
}

PartialAllocation AugmentTransfer(const MatroidList& matroids,
                                  const PartialAllocation& alloc,
                                  const AugmentingPath& path) {
  if (path.IsGrowth()) {
    throw ArgumentError("transfer path needs a target agent");
  }
  return ApplyPath(matroids, alloc, path);
}

PartialAllocation AugmentGrowth(const MatroidList& matroids,
                                const PartialAllocation& alloc,
                                const AugmentingPath& path) {
  if (!path.IsGrowth()) {
    throw ArgumentError("growth path must not name a target agent");
  }
  return ApplyPath(matroids, alloc, path);
}

PartialAllocation MaxWelfareBundles(const MatroidList& matroids, int num_goods,
                                    Subset ground, std::int64_t* growth_steps) {
  const int n = static_cast<int>(matroids.size());
  PartialAllocation alloc(num_goods, n);
  alloc.bundles_independent = true;
  std::int64_t steps = 0;
  while (true) {
    Subset sources;
    std::vector<Subset> free(n);
    for (int i = 0; i < n; ++i) {
      free[i] = FreeGoodsWithin(*matroids[i], alloc.bundles[i], ground);
      sources = sources | free[i];
    }
    Subset targets = ground - alloc.Assigned();
    ExchangeGraph graph = BuildExchangeGraph(matroids, alloc, ground);
    auto path_goods = ShortestPath(graph, sources, targets);
    if (!path_goods.has_value()) break;

    AugmentingPath path;
    path.goods = *path_goods;
    for (int i = 0; i < n; ++i) {
      if (free[i].Contains(path.goods.front())) {
        path.source_agent = i;
        break;
      }
    }
    alloc = AugmentGrowth(matroids, alloc, path);
    ++steps;
    if (steps > num_goods) {
      throw InternalInvariantError("growth augmentations exceeded the number "
                                   "of goods");
    }
  }
  if (growth_steps != nullptr) *growth_steps = steps;
  return alloc;
}

MatroidList RankMatroids(const Instance& inst) {
  MatroidList matroids;
  matroids.reserve(inst.num_agents());
  for (int i = 0; i < inst.num_agents(); ++i) {
    matroids.push_back(&inst.RankValuation(i));
  }
  return matroids;
}

PartialAllocation MaxWelfareAllocation(const Instance& inst,
                                       std::int64_t* growth_steps) {
  return MaxWelfareBundles(RankMatroids(inst), inst.num_goods,
                           Subset::All(inst.num_goods), growth_steps);
}

int UnionRank(const Instance& inst, Subset s, const std::vector<int>& agents) {
  if (!s.SubsetOf(Subset::All(inst.num_goods))) {
    throw ArgumentError("subset " + s.ToString() + " leaves the ground set");
  }
  MatroidList matroids;
  Subset chosen;
  for (int agent : agents) {
    if (agent < 0 || agent >= inst.num_agents()) {
      throw ArgumentError("agent " + std::to_string(agent) + " out of range");
    }
    if (chosen.Contains(agent)) {
      throw ArgumentError("agent " + std::to_string(agent) + " listed twice");
    }
    chosen = chosen.Plus(agent);
    matroids.push_back(&inst.RankValuation(agent));
  }
  PartialAllocation best = MaxWelfareBundles(matroids, inst.num_goods, s);
  return best.Assigned().Count();
}

KFoldUnionResult KFoldUnionRank(const MatroidRankValuation& v, int k,
                                Subset s) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  MatroidList copies(k, &v);
  PartialAllocation best = MaxWelfareBundles(copies, v.num_goods(), s);
  KFoldUnionResult result;
  result.parts = best.bundles;
  result.rank = best.Assigned().Count();
  return result;
}

}  // namespace fairdiv
