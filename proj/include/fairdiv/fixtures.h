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

#ifndef FAIRDIV_FIXTURES_H_
#define FAIRDIV_FIXTURES_H_

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/allocation.h"

namespace fairdiv {

// A named instance with documented fairness behavior, used across the test
// suites and shipped as JSON files under fixtures/.
struct Fixture {
  std::string name;
  Instance instance;
  // For ef1-not-pmms: the allocation that is envy-free yet not PMMS.
  std::optional<PartialAllocation> reference_allocation;
};

// The three builtin fixtures, in stable order:
//  - "xos-4": two binary XOS agents on four goods; both exhaustive shares
//    are 2 but no allocation reaches welfare 4, so no MMS allocation exists.
//  - "wrank-4": two weighted-rank agents on four goods; both exhaustive
//    shares are 3 but they cannot be met simultaneously.
//  - "ef1-not-pmms": a partition-matroid agent and a free agent on six
//    goods, with a reference allocation ({4,5}, {0,1,2,3}) that is envy-free
//    (hence EF1) but not PMMS, since mu_0(2, all) = 3.
std::vector<Fixture> BuiltinFixtures();

// The named fixture; ArgumentError for unknown names.
Fixture BuiltinFixture(const std::string& name);

}  // namespace fairdiv

#endif  // FAIRDIV_FIXTURES_H_
