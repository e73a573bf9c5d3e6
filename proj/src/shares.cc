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

#include "fairdiv/shares.h"

#include <string>

#include "fairdiv/errors.h"
#include "fairdiv/exchange_graph.h"
#include "fairdiv/matroid_ops.h"
#include "fairdiv/oracles.h"

namespace fairdiv {

MmsResult MmsFast(const MatroidRankValuation& v, int k, Subset s) {
  if (k < 1) throw ArgumentError("k must be >= 1");
  if (!s.SubsetOf(Subset::All(v.num_goods()))) {
    throw ArgumentError("subset " + s.ToString() + " leaves the ground set");
  }

  KFoldUnionResult fold = KFoldUnionRank(v, k, s);
  std::vector<Subset> parts = fold.parts;

  // Rebalance: while some part is at least two goods larger than another,
  // the augmentation property yields a good of the largest part that the
  // smallest can absorb while staying independent. Each move strictly
  // lowers the sum of squared sizes, so this stops within m^2 moves.
  const std::int64_t move_limit =
      static_cast<std::int64_t>(v.num_goods()) * v.num_goods() + 1;
  std::int64_t moves = 0;
  while (true) {
    int largest = 0;
    int smallest = 0;
    for (int t = 1; t < k; ++t) {
      if (parts[t].Count() > parts[largest].Count()) largest = t;
      if (parts[t].Count() < parts[smallest].Count()) smallest = t;
    }
    if (parts[smallest].Count() + 2 > parts[largest].Count()) break;

    int moved = -1;
    for (int g : parts[largest]) {
      if (Marginal(v, parts[smallest], g) == 1) {
        moved = g;
        break;
      }
    }
    if (moved < 0) {
      throw InternalInvariantError(
          "no good of the largest part extends the smallest; augmentation "
          "property violated for " + parts[largest].ToString() + " vs " +
          parts[smallest].ToString());
    }
    parts[largest] = parts[largest].Minus(moved);
    parts[smallest] = parts[smallest].Plus(moved);
    if (++moves > move_limit) {
      throw InternalInvariantError("rebalancing exceeded the move budget");
    }
  }

  MmsResult result;
  result.parts = parts;
  result.mu = parts[0].Count();
  for (const Subset& part : parts) {
    if (part.Count() < result.mu) result.mu = part.Count();
  }
  return result;
}

int MmsBrute(const Valuation& v, int k, Subset s) {
  return ExhaustiveMms(v, k, s);
}

SharesTable SharesForInstance(const Instance& inst, int k, Subset s) {
  SharesTable table;
  for (int i = 0; i < inst.num_agents(); ++i) {
    MmsResult result = MmsFast(inst.RankValuation(i), k, s);
    table.Put(SharesTable::Entry{i, k, s, result.mu, result.parts});
  }
  return table;
}

}  // namespace fairdiv
