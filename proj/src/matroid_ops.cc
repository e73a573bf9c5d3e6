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

#include "fairdiv/matroid_ops.h"

#include <cstdlib>
#include <vector>

#include "fairdiv/errors.h"
#include "fairdiv/valuation.h"

namespace fairdiv {

int BruteSizeCap(int default_cap) {
  const char* text = std::getenv("MATROID_FAIRDIV_MAX_BRUTE");
  if (text == nullptr || *text == '\0') return default_cap;
  char* end = nullptr;
  long parsed = std::strtol(text, &end, 10);
  if (end == text || *end != '\0' || parsed < 1) {
    throw ArgumentError(
        "MATROID_FAIRDIV_MAX_BRUTE must be a positive integer, got \"" +
        std::string(text) + "\"");
  }
  return static_cast<int>(parsed);
}

void RequireBruteSize(const std::string& op, int size, int default_cap) {
  int cap = BruteSizeCap(default_cap);
  if (size > cap) {
    throw CapabilityError(op + " handles at most " + std::to_string(cap) +
                          " goods (got " + std::to_string(size) +
                          "); set MATROID_FAIRDIV_MAX_BRUTE to raise the cap");
  }
}

int Rank(const MatroidRankValuation& v, Subset s) { return v.value(s); }

bool IsIndependent(const MatroidRankValuation& v, Subset s) {
  return v.value(s) == s.Count();
}

Subset FreeGoods(const MatroidRankValuation& v, Subset a) {
  if (!IsIndependent(v, a)) {
    throw ContractViolation("FreeGoods needs an independent set, got " +
                            a.ToString() + " with rank " +
                            std::to_string(v.value(a)));
  }
  Subset free;
  int base = a.Count();
  for (int g : Subset::All(v.num_goods()) - a) {
    if (v.value(a.Plus(g)) == base + 1) free = free.Plus(g);
  }
  return free;
}

Subset MaxIndependentSubset(const MatroidRankValuation& v, Subset s) {
  v.value(s);  // range check via the oracle
  Subset picked;
  for (int g : s) {
    Subset candidate = picked.Plus(g);
    if (v.value(candidate) == candidate.Count()) picked = candidate;
  }
  return picked;
}

int Marginal(const Valuation& v, Subset s, int g) {
  if (g < 0 || g >= v.num_goods()) {
    throw ArgumentError("good " + std::to_string(g) + " out of range");
  }
  if (s.Contains(g)) {
    throw ArgumentError("good " + std::to_string(g) + " is already in " +
                        s.ToString());
  }
  return v.value(s.Plus(g)) - v.value(s);
}

std::int64_t ValueQueryCount(const Valuation& v) { return v.query_count(); }

AxiomReport CheckMatroidAxioms(const MatroidRankValuation& v) {
  const int m = v.num_goods();
  RequireBruteSize("CheckMatroidAxioms", m, kAxiomCheckMaxGoods);
  const std::uint64_t subsets = std::uint64_t{1} << m;

  std::vector<char> indep(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    Subset s = Subset::FromBits(mask);
    indep[mask] = v.value(s) == s.Count();
  }

  AxiomReport report;
  if (!indep[0]) {
    report.ok = false;
    report.failed_axiom = "nonempty";
    return report;
  }

  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    if (!indep[mask]) continue;
    for (int g : Subset::FromBits(mask)) {
      std::uint64_t smaller = mask & ~(std::uint64_t{1} << g);
      if (!indep[smaller]) {
        report.ok = false;
        report.failed_axiom = "hereditary";
        report.witness_a = Subset::FromBits(mask);
        report.witness_b = Subset::FromBits(smaller);
        return report;
      }
    }
  }

  // Size of the largest independent subset of each set, with one maximizer
  // remembered, filled by dynamic programming over subsets.
  std::vector<int> best_size(subsets);
  std::vector<std::uint64_t> best_set(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    if (indep[mask]) {
      best_size[mask] = Subset::FromBits(mask).Count();
      best_set[mask] = mask;
      continue;
    }
    int best = 0;
    std::uint64_t arg = 0;
    for (int g : Subset::FromBits(mask)) {
      std::uint64_t smaller = mask & ~(std::uint64_t{1} << g);
      if (best_size[smaller] > best) {
        best = best_size[smaller];
        arg = best_set[smaller];
      }
    }
    best_size[mask] = best;
    best_set[mask] = arg;
  }

  // Given the hereditary property, the augmentation property is equivalent
  // to: within every set S, all maximal independent subsets of S have the
  // same size. A short maximal subset J of S together with a largest
  // independent subset I of S is a direct augmentation witness, since every
  // good of I \ J lies in S \ J and none of S \ J extends J.
  for (std::uint64_t outer = 0; outer < subsets; ++outer) {
    Subset s = Subset::FromBits(outer);
    int target = best_size[outer];
    std::uint64_t sub = outer;
    while (true) {
      if (indep[sub] && best_size[sub] != target) {
        // `sub` is shorter than the maximum; check maximality within S.
        bool maximal = true;
        for (int g : s - Subset::FromBits(sub)) {
          if (indep[sub | (std::uint64_t{1} << g)]) {
            maximal = false;
            break;
          }
        }
        if (maximal) {
          report.ok = false;
          report.failed_axiom = "augmentation";
          report.witness_a = Subset::FromBits(sub);
          report.witness_b = Subset::FromBits(best_set[outer]);
          return report;
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & outer;
    }
  }

  return report;
}

}  // namespace fairdiv
