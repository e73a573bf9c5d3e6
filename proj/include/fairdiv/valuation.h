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

#ifndef FAIRDIV_VALUATION_H_
#define FAIRDIV_VALUATION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fairdiv/errors.h"
#include "fairdiv/subset.h"

namespace fairdiv {

// A set function over goods {0, ..., m-1} with v(empty) = 0, answered through
// a counted value oracle. Valuations are immutable after construction;
// concurrent value() calls are safe.
//
// Results are memoized per subset. The cache never changes answers; it only
// affects how many times ComputeValue runs. query_count() reports raw logical
// queries by default; call set_count_only_misses(true) to report cache misses
// instead.
class Valuation {
 public:
  virtual ~Valuation() = default;

  int num_goods() const { return num_goods_; }

  int value(Subset s) const {
    CheckRange(s);
    queries_.fetch_add(1, std::memory_order_relaxed);
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      auto it = cache_.find(s.bits());
      if (it != cache_.end()) return it->second;
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    int result = ComputeValue(s);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(s.bits(), result);
    return result;
  }

  std::int64_t query_count() const {
    return count_only_misses_ ? misses_.load() : queries_.load();
  }
  void ResetQueryCount() const {
    queries_.store(0);
    misses_.store(0);
  }
  void set_count_only_misses(bool flag) { count_only_misses_ = flag; }

 protected:
  explicit Valuation(int num_goods) : num_goods_(num_goods) {
    if (num_goods < 1 || num_goods > Subset::kMaxGoods) {
      throw ArgumentError("num_goods must be in [1, " +
                          std::to_string(Subset::kMaxGoods) + "], got " +
                          std::to_string(num_goods));
    }
  }

  virtual int ComputeValue(Subset s) const = 0;

  void CheckRange(Subset s) const {
    if (!s.SubsetOf(Subset::All(num_goods_))) {
      throw ArgumentError("subset " + s.ToString() +
                          " has a good outside the ground set of size " +
                          std::to_string(num_goods_));
    }
  }

 private:
  int num_goods_;
  bool count_only_misses_ = false;
  mutable std::atomic<std::int64_t> queries_{0};
  mutable std::atomic<std::int64_t> misses_{0};
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, int> cache_;
};

// A valuation that is the rank function of a matroid: v(S) is the size of the
// largest independent subset of S. Subclasses must answer ComputeValue with a
// genuine matroid rank; ValidateMatroidAxioms() can check that exhaustively
// on small ground sets.
class MatroidRankValuation : public Valuation {
 protected:
  using Valuation::Valuation;
};

// Rank is |S| capped at a constant k.
class UniformMatroid : public MatroidRankValuation {
 public:
  UniformMatroid(int num_goods, int k)
      : MatroidRankValuation(num_goods), k_(k) {
    if (k < 0) throw ArgumentError("uniform matroid needs k >= 0");
  }

  int k() const { return k_; }

 protected:
  int ComputeValue(Subset s) const override {
    int n = s.Count();
    return n < k_ ? n : k_;
  }

 private:
  int k_;
};

// Goods are split into disjoint blocks covering the ground set; a set is
// independent when it holds at most cap[b] goods of each block b.
class PartitionMatroid : public MatroidRankValuation {
 public:
  PartitionMatroid(int num_goods, std::vector<std::vector<int>> blocks,
                   std::vector<int> caps);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& caps() const { return caps_; }

 protected:
  int ComputeValue(Subset s) const override {
    int total = 0;
    for (std::size_t b = 0; b < block_masks_.size(); ++b) {
      int in_block = (s & block_masks_[b]).Count();
      total += in_block < caps_[b] ? in_block : caps_[b];
    }
    return total;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> caps_;
  std::vector<Subset> block_masks_;
};

// Goods are edges of an undirected multigraph; rank of an edge set is the
// size of a spanning forest it contains.
class GraphicMatroid : public MatroidRankValuation {
 public:
  GraphicMatroid(int num_goods, int num_vertices,
                 std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 protected:
  int ComputeValue(Subset s) const override;

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Goods are left vertices of a bipartite graph against a set of slots; rank
// of a good set is the size of a maximum matching into the slots.
class TransversalMatroid : public MatroidRankValuation {
 public:
  TransversalMatroid(int num_goods, int num_slots,
                     std::vector<std::vector<int>> adjacency);

  int num_slots() const { return num_slots_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

 protected:
  int ComputeValue(Subset s) const override;

 private:
  bool TryMatch(int good, Subset s, std::vector<int>& slot_owner,
                std::vector<bool>& visited) const;

  int num_slots_;
  std::vector<std::vector<int>> adjacency_;
};

// Goods are column vectors over GF(2); rank of a set is its linear rank.
class LinearMatroidGf2 : public MatroidRankValuation {
 public:
  // columns[g] lists the rows where column g has a 1 bit; rows < num_rows.
  LinearMatroidGf2(int num_goods, int num_rows,
                   std::vector<std::vector<int>> columns);

  int num_rows() const { return num_rows_; }
  const std::vector<std::vector<int>>& columns() const { return columns_; }

 protected:
  int ComputeValue(Subset s) const override;

 private:
  int num_rows_;
  std::vector<std::vector<int>> columns_;
  std::vector<std::uint64_t> column_bits_;
};

// An independence family given extensionally. Only the maximal sets of the
// (downward closure of the) given family are stored; rank is answered as the
// largest intersection with a stored maximal set, which equals the matroid
// rank whenever the family satisfies the matroid axioms. Validation of the
// axioms is opt-in at construction.
class ExplicitMatroid : public MatroidRankValuation {
 public:
  ExplicitMatroid(int num_goods, const std::vector<std::vector<int>>& family,
                  bool validate = false);

  // Maximal independent sets, each sorted, in ascending mask order.
  std::vector<std::vector<int>> MaximalSets() const;

 protected:
  int ComputeValue(Subset s) const override {
    int best = 0;
    for (Subset max_set : maximal_sets_) {
      int size = (s & max_set).Count();
      if (size > best) best = size;
    }
    return best;
  }

 private:
  std::vector<Subset> maximal_sets_;
};

// Binary XOS valuation: v(S) = max over family member X of |S intersect X|.
// Not a matroid rank in general.
class BinaryXosValuation : public Valuation {
 public:
  BinaryXosValuation(int num_goods, const std::vector<std::vector<int>>& family);

  std::vector<std::vector<int>> Family() const;

 protected:
  int ComputeValue(Subset s) const override {
    int best = 0;
    for (Subset x : family_) {
      int size = (s & x).Count();
      if (size > best) best = size;
    }
    return best;
  }

 private:
  std::vector<Subset> family_;
};

// v(S) = maximum total weight of an independent subset of S in an underlying
// matroid. Computed by the matroid greedy (descending weight, ascending index
// on ties), which is exact for matroids. Not itself a rank function unless
// all weights are one.
class WeightedRankValuation : public Valuation {
 public:
  WeightedRankValuation(std::shared_ptr<const MatroidRankValuation> matroid,
                        std::vector<int> weights);

  const MatroidRankValuation& matroid() const { return *matroid_; }
  std::shared_ptr<const MatroidRankValuation> matroid_ptr() const {
    return matroid_;
  }
  const std::vector<int>& weights() const { return weights_; }

 protected:
  int ComputeValue(Subset s) const override;

 private:
  std::shared_ptr<const MatroidRankValuation> matroid_;
  std::vector<int> weights_;
  std::vector<int> greedy_order_;
};

}  // namespace fairdiv

#endif  // FAIRDIV_VALUATION_H_
