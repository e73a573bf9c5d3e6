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

#ifndef FAIRDIV_FAIRNESS_H_
#define FAIRDIV_FAIRNESS_H_

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/allocation.h"
#include "fairdiv/shares.h"
#include "fairdiv/subset.h"

namespace fairdiv {

// An exact fraction p/q in (0, 1], compared by cross-multiplication so no
// floating point enters any fairness decision.
struct Rational {
  long long num = 1;
  long long den = 1;

  static Rational One() { return {1, 1}; }

  // Whether value >= (num/den) * share.
  bool AtLeastScaled(long long value, long long share) const {
    return value * den >= num * share;
  }

  std::string ToString() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Validates p/q in (0, 1]; ArgumentError otherwise.
Rational MakeRational(long long num, long long den);

// Outcome of a fairness predicate. A failing verdict always carries a
// machine-checkable witness: the violating agent (and counterpart where the
// property is pairwise), the share or value bound that was missed, and for
// existence certificates the satisfying allocation.
struct FairnessVerdict {
  std::string property;
  bool holds = true;
  int witness_agent = -1;
  int witness_counterpart = -1;
  // The right-hand side the witness agent failed to reach: the counterpart's
  // bundle value for envy properties, the (unscaled) share for share-based
  // properties.
  int witness_bound = -1;
  // The witness agent's own value at the time of the violation.
  int witness_value = -1;
  std::optional<PartialAllocation> witness_allocation;
  std::string detail;
};

// Envy-freeness: v_i(A_i) >= v_i(A_j) for all i != j.
FairnessVerdict IsEnvyFree(const Instance& inst,
                           const PartialAllocation& alloc);

// Envy-freeness up to one good: for all i != j with A_j nonempty, some good
// g of A_j has v_i(A_i) >= v_i(A_j - g). Empty bundles never violate.
FairnessVerdict IsEf1(const Instance& inst, const PartialAllocation& alloc);

// alpha-MMS: v_i(A_i) >= alpha * mu_i(n, all goods) for every agent, with
// the shares read from `shares` (entries keyed (i, n, all goods);
// ArgumentError when one is missing).
FairnessVerdict IsMms(const Instance& inst, const PartialAllocation& alloc,
                      Rational alpha, const SharesTable& shares);

// alpha-PMMS: v_i(A_i) >= alpha * mu_i(2, A_i union A_j) for every ordered
// pair. Pair shares are computed on demand: the polynomial path for matroid
// rank valuations, exhaustive enumeration when the pair union is small
// enough, CapabilityError when neither applies.
FairnessVerdict IsPmms(const Instance& inst, const PartialAllocation& alloc,
                       Rational alpha);

// Decides whether the instance admits any complete MMS allocation by
// scanning all n^m complete allocations against exhaustively computed
// shares. holds = true certifies nonexistence; otherwise the first
// satisfying allocation is returned as the witness. Caps: n <= 3, m <= 10
// (size cap env-overridable).
FairnessVerdict CertifyNoMmsAllocation(const Instance& inst);

}  // namespace fairdiv

#endif  // FAIRDIV_FAIRNESS_H_
