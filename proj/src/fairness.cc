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

#include "fairdiv/fairness.h"

#include <string>

#include "fairdiv/errors.h"
#include "fairdiv/matroid_ops.h"
#include "fairdiv/oracles.h"

namespace fairdiv {

namespace {

void CheckShape(const Instance& inst, const PartialAllocation& alloc) {
  if (alloc.num_agents() != inst.num_agents() ||
      alloc.num_goods != inst.num_goods) {
    throw ArgumentError("allocation shape does not match the instance");
  }
  if (!alloc.Disjoint()) {
    throw ContractViolation("bundles must be pairwise disjoint");
  }
}

}  // namespace

Rational MakeRational(long long num, long long den) {
  if (num < 1 || den < 1 || num > den) {
    throw ArgumentError("alpha must be a fraction in (0, 1], got " +
                        std::to_string(num) + "/" + std::to_string(den));
  }
  return Rational{num, den};
}

FairnessVerdict IsEnvyFree(const Instance& inst,
                           const PartialAllocation& alloc) {
  CheckShape(inst, alloc);
  FairnessVerdict verdict;
  verdict.property = "ef";
  for (int i = 0; i < inst.num_agents(); ++i) {
    const int own = inst.valuation(i).value(alloc.bundles[i]);
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j) continue;
      const int others = inst.valuation(i).value(alloc.bundles[j]);
      if (own < others) {
        verdict.holds = false;
        verdict.witness_agent = i;
        verdict.witness_counterpart = j;
        verdict.witness_value = own;
        verdict.witness_bound = others;
        verdict.detail = "agent " + std::to_string(i) + " values bundle " +
                         alloc.bundles[j].ToString() + " of agent " +
                         std::to_string(j) + " at " + std::to_string(others) +
                         " but own bundle at " + std::to_string(own);
        return verdict;
      }
    }
  }
  return verdict;
}

FairnessVerdict IsEf1(const Instance& inst, const PartialAllocation& alloc) {
  CheckShape(inst, alloc);
  FairnessVerdict verdict;
  verdict.property = "ef1";
  for (int i = 0; i < inst.num_agents(); ++i) {
    const int own = inst.valuation(i).value(alloc.bundles[i]);
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j || alloc.bundles[j].Empty()) continue;
      int best_after_removal = -1;
      for (int g : alloc.bundles[j]) {
        const int reduced = inst.valuation(i).value(alloc.bundles[j].Minus(g));
        if (best_after_removal < 0 || reduced < best_after_removal) {
          best_after_removal = reduced;
        }
      }
      if (own < best_after_removal) {
        verdict.holds = false;
        verdict.witness_agent = i;
        verdict.witness_counterpart = j;
        verdict.witness_value = own;
        verdict.witness_bound = best_after_removal;
        verdict.detail = "agent " + std::to_string(i) + " still envies " +
                         std::to_string(j) + " after removing any one good (" +
                         std::to_string(own) + " < " +
                         std::to_string(best_after_removal) + ")";
        return verdict;
      }
    }
  }
  return verdict;
}

FairnessVerdict IsMms(const Instance& inst, const PartialAllocation& alloc,
                      Rational alpha, const SharesTable& shares) {
  CheckShape(inst, alloc);
  const Subset all = Subset::All(inst.num_goods);
  FairnessVerdict verdict;
  verdict.property = "mms";
  for (int i = 0; i < inst.num_agents(); ++i) {
    const SharesTable::Entry* entry =
        shares.Find(i, inst.num_agents(), all);
    if (entry == nullptr) {
      throw ArgumentError("shares table is missing mu(" +
                          std::to_string(inst.num_agents()) +
                          ", all goods) for agent " + std::to_string(i));
    }
    const int own = inst.valuation(i).value(alloc.bundles[i]);
    if (!alpha.AtLeastScaled(own, entry->mu)) {
      verdict.holds = false;
      verdict.witness_agent = i;
      verdict.witness_value = own;
      verdict.witness_bound = entry->mu;
      verdict.detail = "agent " + std::to_string(i) + " has value " +
                       std::to_string(own) + " < " + alpha.ToString() +
                       " * share " + std::to_string(entry->mu);
      return verdict;
    }
  }
  return verdict;
}

FairnessVerdict IsPmms(const Instance& inst, const PartialAllocation& alloc,
                       Rational alpha) {
  CheckShape(inst, alloc);
  FairnessVerdict verdict;
  verdict.property = "pmms";
  for (int i = 0; i < inst.num_agents(); ++i) {
    const int own = inst.valuation(i).value(alloc.bundles[i]);
    for (int j = 0; j < inst.num_agents(); ++j) {
      if (i == j) continue;
      const Subset pair_union = alloc.bundles[i] | alloc.bundles[j];
      int mu;
      const auto* rank =
          dynamic_cast<const MatroidRankValuation*>(&inst.valuation(i));
      if (rank != nullptr) {
        mu = MmsFast(*rank, 2, pair_union).mu;
      } else if (pair_union.Count() <= BruteSizeCap(kMmsBruteMaxGoods)) {
        mu = MmsBrute(inst.valuation(i), 2, pair_union);
      } else {
        throw CapabilityError(
            "pairwise share of agent " + std::to_string(i) +
            " needs either a matroid rank valuation or a pair union within "
            "the exhaustive cap");
      }
      if (!alpha.AtLeastScaled(own, mu)) {
        verdict.holds = false;
        verdict.witness_agent = i;
        verdict.witness_counterpart = j;
        verdict.witness_value = own;
        verdict.witness_bound = mu;
        verdict.detail = "agent " + std::to_string(i) + " has value " +
                         std::to_string(own) + " < " + alpha.ToString() +
                         " * pairwise share " + std::to_string(mu) +
                         " against agent " + std::to_string(j);
        return verdict;
      }
    }
  }
  return verdict;
}

FairnessVerdict CertifyNoMmsAllocation(const Instance& inst) {
  const int n = inst.num_agents();
  const int m = inst.num_goods;
  RequireBruteSize("CertifyNoMmsAllocation", m, kCertifyMaxGoods);
  if (n > kCertifyMaxAgents) {
    throw CapabilityError("CertifyNoMmsAllocation handles at most " +
                          std::to_string(kCertifyMaxAgents) + " agents");
  }

  const Subset all = Subset::All(m);
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = ExhaustiveMms(inst.valuation(i), n, all);

  auto satisfies = [&](const PartialAllocation& alloc) {
    for (int i = 0; i < n; ++i) {
      if (inst.valuation(i).value(alloc.bundles[i]) < mu[i]) return false;
    }
    return true;
  };
  std::optional<PartialAllocation> found =
      ExhaustiveAllocationScan(inst, satisfies);

  FairnessVerdict verdict;
  verdict.property = "no-mms-allocation";
  if (found.has_value()) {
    verdict.holds = false;
    verdict.witness_allocation = *found;
    verdict.detail = "a complete allocation meets every exhaustive share";
  } else {
    verdict.detail =
        "no complete allocation gives every agent her exhaustive share";
  }
  return verdict;
}

}  // namespace fairdiv
