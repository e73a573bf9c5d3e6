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

#include "fairdiv/valuation.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "fairdiv/matroid_ops.h"

namespace fairdiv {

PartitionMatroid::PartitionMatroid(int num_goods,
                                   std::vector<std::vector<int>> blocks,
                                   std::vector<int> caps)
    : MatroidRankValuation(num_goods),
      blocks_(std::move(blocks)),
      caps_(std::move(caps)) {
  if (blocks_.size() != caps_.size()) {
    throw ArgumentError("partition matroid needs one cap per block");
  }
  Subset seen;
  for (const auto& block : blocks_) {
    if (block.empty()) throw ArgumentError("partition block must be nonempty");
    Subset mask;
    for (int g : block) {
      if (g < 0 || g >= num_goods) {
        throw ArgumentError("partition block good " + std::to_string(g) +
                            " out of range");
      }
      if (seen.Contains(g)) {
        throw ArgumentError("good " + std::to_string(g) +
                            " appears in two partition blocks");
      }
      seen = seen.Plus(g);
      mask = mask.Plus(g);
    }
    block_masks_.push_back(mask);
  }
  if (seen != Subset::All(num_goods)) {
    throw ArgumentError("partition blocks must cover every good; missing " +
                        (Subset::All(num_goods) - seen).ToString());
  }
  for (int cap : caps_) {
    if (cap < 0) throw ArgumentError("partition cap must be >= 0");
  }
}

GraphicMatroid::GraphicMatroid(int num_goods, int num_vertices,
                               std::vector<std::pair<int, int>> edges)
    : MatroidRankValuation(num_goods),
      num_vertices_(num_vertices),
      edges_(std::move(edges)) {
  if (num_vertices < 1) throw ArgumentError("graph needs >= 1 vertex");
  if (static_cast<int>(edges_.size()) != num_goods) {
    throw ArgumentError("graphic matroid needs one edge per good");
  }
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw ArgumentError("edge endpoint out of range");
    }
  }
}

namespace {

// Minimal union-find over vertex ids; path compression only, no ranks.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false when x and y were already connected.
  bool Join(int x, int y) {
    x = Find(x);
    y = Find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int GraphicMatroid::ComputeValue(Subset s) const {
  UnionFind forest(num_vertices_);
  int rank = 0;
  for (int g : s) {
    if (forest.Join(edges_[g].first, edges_[g].second)) ++rank;
  }
  return rank;
}

TransversalMatroid::TransversalMatroid(int num_goods, int num_slots,
                                       std::vector<std::vector<int>> adjacency)
    : MatroidRankValuation(num_goods),
      num_slots_(num_slots),
      adjacency_(std::move(adjacency)) {
  if (num_slots < 0) throw ArgumentError("slot count must be >= 0");
  if (static_cast<int>(adjacency_.size()) != num_goods) {
    throw ArgumentError("transversal matroid needs one adjacency row per good");
  }
  for (auto& row : adjacency_) {
    for (int slot : row) {
      if (slot < 0 || slot >= num_slots) {
        throw ArgumentError("adjacency slot out of range");
      }
    }
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

bool TransversalMatroid::TryMatch(int good, Subset s,
                                  std::vector<int>& slot_owner,
                                  std::vector<bool>& visited) const {
  for (int slot : adjacency_[good]) {
    if (visited[slot]) continue;
    visited[slot] = true;
    if (slot_owner[slot] < 0 || TryMatch(slot_owner[slot], s, slot_owner, visited)) {
      slot_owner[slot] = good;
      return true;
    }
  }
  return false;
}

int TransversalMatroid::ComputeValue(Subset s) const {
  std::vector<int> slot_owner(num_slots_, -1);
  int matched = 0;
  for (int g : s) {
    std::vector<bool> visited(num_slots_, false);
    if (TryMatch(g, s, slot_owner, visited)) ++matched;
  }
  return matched;
}

LinearMatroidGf2::LinearMatroidGf2(int num_goods, int num_rows,
                                   std::vector<std::vector<int>> columns)
    : MatroidRankValuation(num_goods),
      num_rows_(num_rows),
      columns_(std::move(columns)) {
  if (num_rows < 1 || num_rows > 64) {
    throw ArgumentError("row count must be in [1, 64]");
  }
  if (static_cast<int>(columns_.size()) != num_goods) {
    throw ArgumentError("linear matroid needs one column per good");
  }
  for (auto& column : columns_) {
    std::uint64_t bits = 0;
    for (int row : column) {
      if (row < 0 || row >= num_rows) {
        throw ArgumentError("column row index out of range");
      }
      bits |= std::uint64_t{1} << row;
    }
    std::sort(column.begin(), column.end());
    column.erase(std::unique(column.begin(), column.end()), column.end());
    column_bits_.push_back(bits);
  }
}

int LinearMatroidGf2::ComputeValue(Subset s) const {
  std::vector<std::uint64_t> pivots;
  for (int g : s) {
    std::uint64_t column = column_bits_[g];
    for (std::uint64_t pivot : pivots) {
      std::uint64_t reduced = column ^ pivot;
      if (reduced < column) column = reduced;
    }
    if (column != 0) pivots.push_back(column);
  }
  return static_cast<int>(pivots.size());
}

ExplicitMatroid::ExplicitMatroid(int num_goods,
                                 const std::vector<std::vector<int>>& family,
                                 bool validate)
    : MatroidRankValuation(num_goods) {
  if (family.empty()) {
    throw ArgumentError("explicit family must contain at least one set");
  }
  std::vector<Subset> sets;
  for (const auto& members : family) {
    Subset s = Subset::FromIndices(members);
    if (!s.SubsetOf(Subset::All(num_goods))) {
      throw ArgumentError("explicit family set " + s.ToString() +
                          " has a good out of range");
    }
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end(),
            [](Subset a, Subset b) { return a.Count() > b.Count(); });
  for (Subset s : sets) {
    bool dominated = false;
    for (Subset kept : maximal_sets_) {
      if (s.SubsetOf(kept)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal_sets_.push_back(s);
  }
  std::sort(maximal_sets_.begin(), maximal_sets_.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  if (validate) {
    AxiomReport report = CheckMatroidAxioms(*this);
    if (!report.ok) {
      throw ArgumentError("explicit family violates the " +
                          report.failed_axiom + " axiom; witness " +
                          report.witness_a.ToString() + " vs " +
                          report.witness_b.ToString());
    }
  }
}

std::vector<std::vector<int>> ExplicitMatroid::MaximalSets() const {
  std::vector<std::vector<int>> out;
  for (Subset s : maximal_sets_) out.push_back(s.ToIndices());
  return out;
}

BinaryXosValuation::BinaryXosValuation(
    int num_goods, const std::vector<std::vector<int>>& family)
    : Valuation(num_goods) {
  if (family.empty()) {
    throw ArgumentError("binary XOS family must contain at least one set");
  }
  for (const auto& members : family) {
    Subset s = Subset::FromIndices(members);
    if (!s.SubsetOf(Subset::All(num_goods))) {
      throw ArgumentError("binary XOS set " + s.ToString() +
                          " has a good out of range");
    }
    family_.push_back(s);
  }
  std::sort(family_.begin(), family_.end(),
            [](Subset a, Subset b) { return a.bits() < b.bits(); });
  family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
}

std::vector<std::vector<int>> BinaryXosValuation::Family() const {
  std::vector<std::vector<int>> out;
  for (Subset s : family_) out.push_back(s.ToIndices());
  return out;
}

WeightedRankValuation::WeightedRankValuation(
    std::shared_ptr<const MatroidRankValuation> matroid,
    std::vector<int> weights)
    : Valuation(matroid ? matroid->num_goods() : 1),
      matroid_(std::move(matroid)),
      weights_(std::move(weights)) {
  if (!matroid_) throw ArgumentError("weighted rank needs a matroid");
  if (static_cast<int>(weights_.size()) != num_goods()) {
    throw ArgumentError("weighted rank needs one weight per good");
  }
  for (int w : weights_) {
    if (w < 0) throw ArgumentError("weights must be >= 0");
  }
  greedy_order_.resize(num_goods());
  std::iota(greedy_order_.begin(), greedy_order_.end(), 0);
  std::stable_sort(greedy_order_.begin(), greedy_order_.end(),
                   [this](int a, int b) { return weights_[a] > weights_[b]; });
}

int WeightedRankValuation::ComputeValue(Subset s) const {
  // Matroid greedy: scan goods by descending weight (ascending index on
  // ties), keep a good when it extends the independent set built so far.
  Subset picked;
  int total = 0;
  for (int g : greedy_order_) {
    if (!s.Contains(g)) continue;
    Subset candidate = picked.Plus(g);
    if (matroid_->value(candidate) == candidate.Count()) {
      picked = candidate;
      total += weights_[g];
    }
  }
  return total;
}

}  // namespace fairdiv
