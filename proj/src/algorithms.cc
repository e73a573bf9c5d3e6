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

#include "fairdiv/algorithms.h"

#include <map>
#include <string>
#include <utility>

#include "fairdiv/errors.h"
#include "fairdiv/exchange_graph.h"
#include "fairdiv/matroid_ops.h"

namespace fairdiv {

int SocialWelfare(const Instance& inst, const PartialAllocation& alloc) {
  if (alloc.num_agents() != inst.num_agents() ||
      alloc.num_goods != inst.num_goods) {
    throw ArgumentError("allocation shape does not match the instance");
  }
  if (!alloc.Disjoint()) {
    throw ContractViolation("bundles must be pairwise disjoint");
  }
  int total = 0;
  for (int i = 0; i < inst.num_agents(); ++i) {
    total += inst.valuation(i).value(alloc.bundles[i]);
  }
  return total;
}

SolveReport SolveMms(const Instance& inst) {
  const MatroidList matroids = RankMatroids(inst);
  const int n = inst.num_agents();
  const int m = inst.num_goods;
  const Subset all = Subset::All(m);

  SolveReport report;
  report.fairness = "mms";
  PartialAllocation alloc =
      MaxWelfareBundles(matroids, m, all, &report.growth_steps);
  const int max_welfare = alloc.Assigned().Count();

  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) {
    MmsResult share = MmsFast(*matroids[i], n, all);
    mu[i] = share.mu;
    report.shares.Put(SharesTable::Entry{i, n, all, share.mu, share.parts});
  }

  // Agents below / above their share. Bundle values equal bundle sizes
  // while every bundle is independent, which augmentation preserves.
  std::vector<int> value(n);
  Subset below, above;
  for (int i = 0; i < n; ++i) {
    value[i] = alloc.bundles[i].Count();
    if (value[i] < mu[i]) below = below.Plus(i);
    if (value[i] > mu[i]) above = above.Plus(i);
  }

  auto deficit = [&] {
    int total = 0;
    for (int i : below) total += mu[i] - value[i];
    return total;
  };
  report.deficit_trace.push_back(deficit());

  const std::int64_t step_limit = static_cast<std::int64_t>(n) * m;
  while (!below.Empty()) {
    const int i = below.Min();
    Subset sources = FreeGoods(*matroids[i], alloc.bundles[i]);
    Subset targets;
    for (int j : above) targets = targets | alloc.bundles[j];

    ExchangeGraph graph = BuildExchangeGraph(matroids, alloc, all);
    auto goods = ShortestPath(graph, sources, targets);
    if (!goods.has_value()) {
      throw InternalInvariantError(
          "no exchange path from a deficient agent to a surplus bundle; the "
          "share computation guarantees one exists");
    }
    AugmentingPath path;
    path.goods = *goods;
    path.source_agent = i;
    path.target_agent = alloc.OwnerOf(goods->back());
    if (!above.Contains(path.target_agent)) {
      throw InternalInvariantError("transfer path ended at agent " +
                                   std::to_string(path.target_agent) +
                                   " which holds no surplus");
    }
    alloc = AugmentTransfer(matroids, alloc, path);

    // Only the two endpoint agents change value; refresh their buckets.
    for (int touched : {i, path.target_agent}) {
      value[touched] = alloc.bundles[touched].Count();
      below = value[touched] < mu[touched] ? below.Plus(touched)
                                           : below.Minus(touched);
      above = value[touched] > mu[touched] ? above.Plus(touched)
                                           : above.Minus(touched);
    }
    report.deficit_trace.push_back(deficit());

    if (alloc.Assigned().Count() != max_welfare) {
      throw InternalInvariantError("a transfer changed total welfare");
    }
    if (++report.augmentations > step_limit) {
      throw InternalInvariantError("augmentation count exceeded n*m");
    }
  }

  // Every agent now meets the share; park the unassigned goods with agent 0.
  // Monotonicity keeps everyone's guarantee and welfare cannot move: it was
  // already the maximum over all allocations.
  alloc.bundles[0] = alloc.bundles[0] | alloc.Unassigned();
  alloc.bundles_independent =
      IsIndependent(*matroids[0], alloc.bundles[0]);

  report.allocation = alloc;
  for (int i = 0; i < n; ++i) {
    report.agent_values.push_back(inst.valuation(i).value(alloc.bundles[i]));
    report.welfare += report.agent_values.back();
  }
  if (report.welfare != max_welfare) {
    throw InternalInvariantError("completion changed total welfare");
  }
  return report;
}

SolveReport SolvePmms(const Instance& inst) {
  const MatroidList matroids = RankMatroids(inst);
  const int n = inst.num_agents();
  const int m = inst.num_goods;

  SolveReport report;
  report.fairness = "pmms";
  PartialAllocation alloc =
      MaxWelfareBundles(matroids, m, Subset::All(m), &report.growth_steps);
  const int max_welfare = alloc.Assigned().Count();

  // mu_i(2, union) is stable under the memo key (agent, union) because the
  // union of the pair's bundles is invariant under transfers inside the pair.
  std::map<std::pair<int, std::uint64_t>, MmsResult> mu_memo;
  auto pair_share = [&](int i, Subset pair_union) -> const MmsResult& {
    auto key = std::make_pair(i, pair_union.bits());
    auto it = mu_memo.find(key);
    if (it == mu_memo.end()) {
      it = mu_memo.emplace(key, MmsFast(*matroids[i], 2, pair_union)).first;
    }
    return it->second;
  };

  auto potential = [&] {
    std::int64_t total = 0;
    for (const Subset& bundle : alloc.bundles) {
      std::int64_t v = bundle.Count();
      total += v * v;
    }
    return total;
  };
  report.potential_trace.push_back(potential());

  const std::int64_t transfer_limit = static_cast<std::int64_t>(m) * m;
  bool violated = true;
  while (violated) {
    violated = false;
    for (int i = 0; i < n && !violated; ++i) {
      for (int j = 0; j < n && !violated; ++j) {
        if (i == j) continue;
        const Subset pair_union = alloc.bundles[i] | alloc.bundles[j];
        const MmsResult& share = pair_share(i, pair_union);
        if (alloc.bundles[i].Count() >= share.mu) continue;
        violated = true;
        report.shares.Put(SharesTable::Entry{i, 2, pair_union, share.mu,
                                             share.parts});

        // A deficient pair forces a size gap of at least two, and some good
        // of the larger bundle must extend the smaller one.
        if (alloc.bundles[i].Count() + 2 > alloc.bundles[j].Count()) {
          throw InternalInvariantError(
              "pairwise deficit without a two-good size gap");
        }
        int moved = -1;
        for (int g : alloc.bundles[j]) {
          if (Marginal(*matroids[i], alloc.bundles[i], g) == 1) {
            moved = g;
            break;
          }
        }
        if (moved < 0) {
          throw InternalInvariantError(
              "no good of the larger bundle extends the deficient one");
        }
        alloc.bundles[j] = alloc.bundles[j].Minus(moved);
        alloc.bundles[i] = alloc.bundles[i].Plus(moved);
        for (int agent : {i, j}) {
          if (!IsIndependent(*matroids[agent], alloc.bundles[agent])) {
            throw InternalInvariantError("transfer broke independence");
          }
        }

        std::int64_t now = potential();
        if (now >= report.potential_trace.back()) {
          throw InternalInvariantError("transfer did not lower the potential");
        }
        report.potential_trace.push_back(now);
        if (alloc.Assigned().Count() != max_welfare) {
          throw InternalInvariantError("a transfer changed total welfare");
        }
        if (++report.transfers > transfer_limit) {
          throw InternalInvariantError("transfer count exceeded m^2");
        }
      }
    }
  }

  // Record the final per-pair guarantees for the report.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Subset pair_union = alloc.bundles[i] | alloc.bundles[j];
      const MmsResult& share = pair_share(i, pair_union);
      report.shares.Put(
          SharesTable::Entry{i, 2, pair_union, share.mu, share.parts});
    }
  }

  report.allocation = alloc;
  for (int i = 0; i < n; ++i) {
    report.agent_values.push_back(inst.valuation(i).value(alloc.bundles[i]));
    report.welfare += report.agent_values.back();
  }
  return report;
}

}  // namespace fairdiv
