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

#include "fairdiv/fixtures.h"

#include <memory>

#include "fairdiv/errors.h"
#include "fairdiv/valuation.h"

namespace fairdiv {

namespace {

Fixture MakeXos4() {
  Fixture fixture;
  fixture.name = "xos-4";
  fixture.instance.num_goods = 4;
  fixture.instance.valuations = {
      std::make_shared<BinaryXosValuation>(
          4, std::vector<std::vector<int>>{{0, 1}, {2, 3}}),
      std::make_shared<BinaryXosValuation>(
          4, std::vector<std::vector<int>>{{0, 2}, {1, 3}}),
  };
  return fixture;
}

Fixture MakeWrank4() {
  // Both matroids keep all singletons and four of the six pairs; the two
  // heavy goods (weight 2) can never be separated from each other by both
  // agents at once, which is what kills every candidate MMS allocation.
  Fixture fixture;
  fixture.name = "wrank-4";
  fixture.instance.num_goods = 4;
  const std::vector<int> weights = {2, 2, 1, 1};
  auto matroid_a = std::make_shared<ExplicitMatroid>(
      4, std::vector<std::vector<int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  auto matroid_b = std::make_shared<ExplicitMatroid>(
      4, std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  fixture.instance.valuations = {
      std::make_shared<WeightedRankValuation>(matroid_a, weights),
      std::make_shared<WeightedRankValuation>(matroid_b, weights),
  };
  return fixture;
}

Fixture MakeEf1NotPmms() {
  Fixture fixture;
  fixture.name = "ef1-not-pmms";
  fixture.instance.num_goods = 6;
  fixture.instance.valuations = {
      std::make_shared<PartitionMatroid>(
          6, std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}},
          std::vector<int>{1, 1, 2}),
      std::make_shared<UniformMatroid>(6, 6),
  };
  PartialAllocation reference(6, 2);
  reference.bundles[0] = Subset::Of({4, 5});
  reference.bundles[1] = Subset::Of({0, 1, 2, 3});
  reference.bundles_independent = true;
  fixture.reference_allocation = reference;
  return fixture;
}

}  // namespace

std::vector<Fixture> BuiltinFixtures() {
  return {MakeXos4(), MakeWrank4(), MakeEf1NotPmms()};
}

Fixture BuiltinFixture(const std::string& name) {
  for (Fixture& fixture : BuiltinFixtures()) {
    if (fixture.name == name) return std::move(fixture);
  }
  throw ArgumentError("unknown fixture \"" + name +
                      "\"; available: xos-4, wrank-4, ef1-not-pmms");
}

}  // namespace fairdiv
