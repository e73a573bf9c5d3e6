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

#ifndef FAIRDIV_INSTANCE_IO_H_
#define FAIRDIV_INSTANCE_IO_H_

#include <cstdint>
#include <string>

#include "fairdiv/allocation.h"

namespace fairdiv {

// splitmix64: the reference 64-bit mixer. State advances by the golden-gamma
// constant and each output is a finalized hash of the state:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// All generated instances are a pure function of the seed through this
// generator, identical across platforms and runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound) by modulo; the tiny bias is irrelevant
  // here, determinism is what matters. bound >= 1.
  int Below(int bound) { return static_cast<int>(Next() % bound); }

 private:
  std::uint64_t state_;
};

// Knobs for the instance generator. Unset knobs (-1) get seed-derived
// defaults.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  // One of: uniform, partition, graphic, transversal, linear-gf2, explicit,
  // binary-xos, weighted-rank.
  std::string family;
  int num_agents = 1;
  int num_goods = 1;
  int blocks = -1;    // partition: number of blocks
  int vertices = -1;  // graphic: number of vertices
  int slots = -1;     // transversal: number of slots
  int dim = -1;       // linear-gf2: number of rows
  int sets = -1;      // binary-xos: family size
};

// Deterministically generates an instance where every agent's valuation is
// drawn from the one named family. Rank families always satisfy the matroid
// axioms by construction.
Instance Generate(const GeneratorConfig& config);

// Parses an instance document:
//   {"schema": 1, "m": <int>, "agents": [<valuation>, ...]}
// where each valuation is one of
//   {"kind": "uniform", "k": <int>}
//   {"kind": "partition", "blocks": [[...], ...], "caps": [...]}
//   {"kind": "graphic", "vertices": <int>, "edges": [[u, v], ...]}
//   {"kind": "transversal", "slots": <int>, "adjacency": [[...], ...]}
//   {"kind": "linear-gf2", "rows": <int>, "columns": [[...], ...]}
//   {"kind": "explicit", "independent": [[...], ...]}
//   {"kind": "binary-xos", "family": [[...], ...]}
//   {"kind": "weighted-rank", "matroid": <valuation>, "weights": [...]}
// Malformed documents raise ParseError; out-of-range indices and
// inconsistent shapes raise ParseError naming the field. With
// validate_axioms, every rank valuation is exhaustively checked and a
// failure names the broken axiom with a witness pair.
Instance ParseInstance(const std::string& text, bool validate_axioms = false);

// Canonical serialization: fixed key order, member lists sorted ascending.
// Parsing a serialized instance and serializing again is byte-identical.
std::string SerializeInstance(const Instance& inst);

// Parses {"schema": 1, "m": <int>, "bundles": [[...], ...]}; bundles must be
// disjoint and in range. expected_goods / expected_agents (-1 skips) guard
// against mixing files from different instances.
PartialAllocation ParseAllocation(const std::string& text,
                                  int expected_goods = -1,
                                  int expected_agents = -1);

std::string SerializeAllocation(const PartialAllocation& alloc);

}  // namespace fairdiv

#endif  // FAIRDIV_INSTANCE_IO_H_
