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

#include "fairdiv/allocation.h"

#include <string>

#include "fairdiv/errors.h"

namespace fairdiv {

const MatroidRankValuation& Instance::RankValuation(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw ArgumentError("agent " + std::to_string(agent) + " out of range");
  }
  const auto* rank =
      dynamic_cast<const MatroidRankValuation*>(valuations[agent].get());
  if (rank == nullptr) {
    throw CapabilityError(
        "agent " + std::to_string(agent) +
        " has a non-rank valuation; this operation needs matroid ranks");
  }
  return *rank;
}

std::int64_t Instance::TotalQueryCount() const {
  std::int64_t total = 0;
  for (const auto& v : valuations) total += v->query_count();
  return total;
}

void Instance::ResetQueryCounts() const {
  for (const auto& v : valuations) v->ResetQueryCount();
}

}  // namespace fairdiv
