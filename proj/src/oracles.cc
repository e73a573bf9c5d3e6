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

#include "fairdiv/oracles.h"

#include <string>

#include "fairdiv/errors.h"
#include "fairdiv/matroid_ops.h"

namespace fairdiv {

namespace {

// Walks all assignments of `goods` to labels 0..num_labels-1 in lexicographic
// order (first good most significant) and calls visit(labels) for each.
// visit returns true to stop early.
bool ForEachLabeling(const std::vector<int>& goods, int num_labels,
                     std::vector<int>& labels,
                     const std::function<bool(const std::vector<int>&)>& visit,
                     std::size_t depth = 0) {
  if (depth == goods.size()) return visit(labels);
  for (int label = 0; label < num_labels; ++label) {
    labels[depth] = label;
    if (ForEachLabeling(goods, num_labels, labels, visit, depth + 1)) {
      return true;
    }
  }
  return false;
}

PartialAllocation FromLabels(const Instance& inst,
                             const std::vector<int>& goods,
                             const std::vector<int>& labels) {
  PartialAllocation alloc(inst.num_goods, inst.num_agents());
  for (std::size_t idx = 0; idx < goods.size(); ++idx) {
    alloc.bundles[labels[idx]] = alloc.bundles[labels[idx]].Plus(goods[idx]);
  }
  return alloc;
}

}  // namespace

WelfareResult ExhaustiveMaxWelfare(const Instance& inst, Subset s) {
  RequireBruteSize("ExhaustiveMaxWelfare", s.Count(),
                   kExhaustiveWelfareMaxGoods);
  if (inst.num_agents() > kExhaustiveWelfareMaxAgents) {
    throw CapabilityError("ExhaustiveMaxWelfare handles at most " +
                          std::to_string(kExhaustiveWelfareMaxAgents) +
                          " agents");
  }
  if (!s.SubsetOf(Subset::All(inst.num_goods))) {
    throw ArgumentError("subset " + s.ToString() + " leaves the ground set");
  }
  const std::vector<int> goods = s.ToIndices();
  std::vector<int> labels(goods.size());
  WelfareResult best;
  best.welfare = -1;
  ForEachLabeling(goods, inst.num_agents(), labels,
                  [&](const std::vector<int>& assignment) {
                    PartialAllocation alloc = FromLabels(inst, goods, assignment);
                    int welfare = 0;
                    for (int i = 0; i < inst.num_agents(); ++i) {
                      welfare += inst.valuation(i).value(alloc.bundles[i]);
                    }
                    if (welfare > best.welfare) {
                      best.welfare = welfare;
                      best.witness = alloc;
                    }
                    return false;
                  });
  return best;
}

ConvolutionResult ConvolutionRank(const Instance& inst, Subset s,
                                  const std::vector<int>& agents) {
  RequireBruteSize("ConvolutionRank", s.Count(), kConvolutionMaxGoods);
  if (!s.SubsetOf(Subset::All(inst.num_goods))) {
    throw ArgumentError("subset " + s.ToString() + " leaves the ground set");
  }
  for (int agent : agents) {
    if (agent < 0 || agent >= inst.num_agents()) {
      throw ArgumentError("agent " + std::to_string(agent) + " out of range");
    }
  }
  const std::vector<int> elements = s.ToIndices();
  const std::uint64_t combinations = std::uint64_t{1} << elements.size();
  ConvolutionResult best;
  best.rank = -1;
  for (std::uint64_t x = 0; x < combinations; ++x) {
    Subset t;
    for (std::size_t bit = 0; bit < elements.size(); ++bit) {
      if ((x >> bit) & 1) t = t.Plus(elements[bit]);
    }
    int bound = (s - t).Count();
    for (int agent : agents) bound += inst.valuation(agent).value(t);
    if (best.rank < 0 || bound < best.rank) {
      best.rank = bound;
      best.minimizer = t;
    }
  }
  return best;
}

namespace {

// Enumerates partitions of `elements` into exactly `parts` nonempty blocks
// via restricted-growth strings, tracking the running minimum block value.
int BestMinPartValue(const Valuation& v, const std::vector<int>& elements,
                     int parts) {
  std::vector<int> assignment(elements.size());
  std::vector<Subset> blocks(parts);
  int best = -1;

  std::function<void(std::size_t, int)> recurse = [&](std::size_t depth,
                                                      int used) {
    if (depth == elements.size()) {
      if (used != parts) return;
      int worst = -1;
      for (const Subset& block : blocks) {
        int value = v.value(block);
        if (worst < 0 || value < worst) worst = value;
      }
      if (worst > best) best = worst;
      return;
    }
    // Not enough goods left to populate the remaining empty blocks.
    if (parts - used > static_cast<int>(elements.size() - depth)) return;
    int limit = used < parts ? used + 1 : parts;
    for (int label = 0; label < limit; ++label) {
      blocks[label] = blocks[label].Plus(elements[depth]);
      recurse(depth + 1, label == used ? used + 1 : used);
      blocks[label] = blocks[label].Minus(elements[depth]);
    }
  };
  recurse(0, 0);
  return best;
}

}  // namespace

int ExhaustiveMms(const Valuation& v, int k, Subset s) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  RequireBruteSize("ExhaustiveMms", s.Count(), kMmsBruteMaxGoods);
  if (k > kMmsBruteMaxParts) {
    throw CapabilityError("ExhaustiveMms handles at most " +
                          std::to_string(kMmsBruteMaxParts) + " parts");
  }
  if (!s.SubsetOf(Subset::All(v.num_goods()))) {
    throw ArgumentError("subset " + s.ToString() + " leaves the ground set");
  }
  // With fewer goods than parts some part is empty, pinning the minimum to
  // v(empty) = 0; likewise any partition using fewer than k nonempty parts
  // never beats one using all k, so scanning exactly-k partitions suffices.
  if (s.Count() < k) return 0;
  return BestMinPartValue(v, s.ToIndices(), k);
}

std::optional<PartialAllocation> ExhaustiveAllocationScan(
    const Instance& inst,
    const std::function<bool(const PartialAllocation&)>& accept) {
  const int n = inst.num_agents();
  const int m = inst.num_goods;
  std::int64_t labelings = 1;
  for (int g = 0; g < m; ++g) {
    labelings *= n;
    if (labelings > kAllocationScanMaxLabelings) {
      throw CapabilityError("ExhaustiveAllocationScan handles at most " +
                            std::to_string(kAllocationScanMaxLabelings) +
                            " labelings");
    }
  }
  std::vector<int> goods(m);
  for (int g = 0; g < m; ++g) goods[g] = g;
  std::vector<int> labels(m);
  std::optional<PartialAllocation> found;
  ForEachLabeling(goods, n, labels, [&](const std::vector<int>& assignment) {
    PartialAllocation alloc = FromLabels(inst, goods, assignment);
    if (accept(alloc)) {
      found = alloc;
      return true;
    }
    return false;
  });
  return found;
}

}  // namespace fairdiv
