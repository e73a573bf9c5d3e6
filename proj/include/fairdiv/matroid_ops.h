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

#ifndef FAIRDIV_MATROID_OPS_H_
#define FAIRDIV_MATROID_OPS_H_

#include <cstdint>
#include <string>

#include "fairdiv/subset.h"

namespace fairdiv {

class Valuation;
class MatroidRankValuation;

// Size caps for the exhaustive routines. Each can be overridden by setting
// the environment variable MATROID_FAIRDIV_MAX_BRUTE to an integer, which
// replaces every per-op size cap below (structural caps such as the number
// of parts or agents stay fixed).
inline constexpr int kAxiomCheckMaxGoods = 14;
inline constexpr int kMmsBruteMaxGoods = 12;
inline constexpr int kMmsBruteMaxParts = 4;
inline constexpr int kExhaustiveWelfareMaxGoods = 10;
inline constexpr int kExhaustiveWelfareMaxAgents = 4;
inline constexpr int kConvolutionMaxGoods = 16;
inline constexpr int kCertifyMaxGoods = 10;
inline constexpr int kCertifyMaxAgents = 3;
inline constexpr std::int64_t kAllocationScanMaxLabelings = 1000000;

// The effective size cap for a brute-force routine: the environment override
// when MATROID_FAIRDIV_MAX_BRUTE is set, otherwise default_cap.
int BruteSizeCap(int default_cap);

// Throws CapabilityError naming `op` when size exceeds the effective cap.
void RequireBruteSize(const std::string& op, int size, int default_cap);

// Rank of S, i.e. v(S). Range-checked.
int Rank(const MatroidRankValuation& v, Subset s);

// Whether S itself is independent: rank(S) == |S|.
bool IsIndependent(const MatroidRankValuation& v, Subset s);

// Goods outside A whose addition keeps A independent. Precondition: A is
// independent (ContractViolation otherwise).
Subset FreeGoods(const MatroidRankValuation& v, Subset a);

// An inclusion-maximal independent subset of S, built greedily in ascending
// good order. Its size equals rank(S).
Subset MaxIndependentSubset(const MatroidRankValuation& v, Subset s);

// v(S + g) - v(S). Throws ArgumentError when g is already in S or out of
// range.
int Marginal(const Valuation& v, Subset s, int g);

// Raw count of value-oracle queries made against v so far.
std::int64_t ValueQueryCount(const Valuation& v);

struct AxiomReport {
  bool ok = true;
  // "nonempty", "hereditary", or "augmentation" when !ok.
  std::string failed_axiom;
  // For hereditary failures: witness_a independent, witness_b = witness_a - g
  // dependent. For augmentation failures: |witness_a| < |witness_b|, both
  // independent, and no good of witness_b \ witness_a extends witness_a.
  Subset witness_a;
  Subset witness_b;
};

// Exhaustively checks that the independence family induced by v (the sets S
// with v(S) == |S|) is a matroid: nonempty, hereditary, and satisfying the
// augmentation property. Capability error beyond the size cap (default 14
// goods).
AxiomReport CheckMatroidAxioms(const MatroidRankValuation& v);

inline bool ValidateMatroidAxioms(const MatroidRankValuation& v) {
  return CheckMatroidAxioms(v).ok;
}

}  // namespace fairdiv

#endif  // FAIRDIV_MATROID_OPS_H_
