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

#ifndef FAIRDIV_SHARES_H_
#define FAIRDIV_SHARES_H_

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/subset.h"
#include "fairdiv/valuation.h"

namespace fairdiv {

// The maximin share mu(k, S) of one valuation: the best achievable minimum
// part value over partitions of S into k (possibly empty) parts.
struct MmsResult {
  int mu = 0;
  // A partition of a subset of S into k parts witnessing the value: each
  // part is independent and the smallest has size mu.
  std::vector<Subset> parts;
};

// Memo of computed shares, keyed by (agent, parts k, subset).
class SharesTable {
 public:
  struct Entry {
    int agent = 0;
    int k = 1;
    Subset subset;
    int mu = 0;
    std::vector<Subset> witness;
  };

  void Put(Entry entry) {
    entries_[Key(entry.agent, entry.k, entry.subset)] = std::move(entry);
  }

  const Entry* Find(int agent, int k, Subset subset) const {
    auto it = entries_.find(Key(agent, k, subset));
    return it == entries_.end() ? nullptr : &it->second;
  }

  // Entries in deterministic (agent, k, subset) order.
  std::vector<const Entry*> All() const {
    std::vector<const Entry*> out;
    out.reserve(entries_.size());
    for (const auto& [key, entry] : entries_) out.push_back(&entry);
    return out;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  static std::tuple<int, int, std::uint64_t> Key(int agent, int k, Subset s) {
    return {agent, k, s.bits()};
  }

  std::map<std::tuple<int, int, std::uint64_t>, Entry> entries_;
};

// Exact mu(k, S) for a matroid rank valuation, polynomial time: take a
// maximum independent set of the k-fold union of the matroid with its
// witness parts, then rebalance by moving single goods from the largest part
// to the smallest until sizes differ by at most one. The minimum part size
// is the share.
MmsResult MmsFast(const MatroidRankValuation& v, int k, Subset s);

// Exact mu(k, S) for any valuation by exhaustive partition enumeration.
// Caps: |S| <= 12 (env-overridable), k <= 4.
int MmsBrute(const Valuation& v, int k, Subset s);

// MmsFast for every agent of a rank-valued instance over subset S, collected
// into a table keyed (agent, k, S).
SharesTable SharesForInstance(const Instance& inst, int k, Subset s);

}  // namespace fairdiv

#endif  // FAIRDIV_SHARES_H_
