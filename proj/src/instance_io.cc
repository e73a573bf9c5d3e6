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

#include "fairdiv/instance_io.h"

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "json.hpp"

#include "fairdiv/errors.h"
#include "fairdiv/matroid_ops.h"

namespace fairdiv {

namespace {

using Json = nlohmann::ordered_json;

int GetInt(const Json& node, const std::string& field, int lo, int hi) {
  if (!node.contains(field)) {
    throw ParseError("missing field \"" + field + "\"");
  }
  const Json& value = node.at(field);
  if (!value.is_number_integer()) {
    throw ParseError("field \"" + field + "\" must be an integer");
  }
  long long parsed = value.get<long long>();
  if (parsed < lo || parsed > hi) {
    throw ParseError("field \"" + field + "\" must be in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) +
                     "], got " + std::to_string(parsed));
  }
  return static_cast<int>(parsed);
}

std::vector<int> GetIntList(const Json& node, const std::string& field,
                            int lo, int hi) {
  if (!node.is_array()) {
    throw ParseError("field \"" + field + "\" must be a list");
  }
  std::vector<int> out;
  for (const Json& value : node) {
    if (!value.is_number_integer()) {
      throw ParseError("field \"" + field + "\" must hold integers");
    }
    long long parsed = value.get<long long>();
    if (parsed < lo || parsed > hi) {
      throw ParseError("entry " + std::to_string(parsed) + " of \"" + field +
                       "\" out of range [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    out.push_back(static_cast<int>(parsed));
  }
  return out;
}

std::vector<std::vector<int>> GetListOfLists(const Json& node,
                                             const std::string& field, int lo,
                                             int hi) {
  if (!node.contains(field) || !node.at(field).is_array()) {
    throw ParseError("field \"" + field + "\" must be a list of lists");
  }
  std::vector<std::vector<int>> out;
  for (const Json& row : node.at(field)) {
    out.push_back(GetIntList(row, field, lo, hi));
  }
  return out;
}

std::shared_ptr<const Valuation> ParseValuation(const Json& node, int m);

std::shared_ptr<const MatroidRankValuation> ParseRankValuation(
    const Json& node, int m) {
  auto valuation = ParseValuation(node, m);
  auto rank =
      std::dynamic_pointer_cast<const MatroidRankValuation>(valuation);
  if (rank == nullptr) {
    throw ParseError("field \"matroid\" must name a matroid rank family");
  }
  return rank;
}

std::shared_ptr<const Valuation> ParseValuation(const Json& node, int m) {
  if (!node.is_object() || !node.contains("kind") ||
      !node.at("kind").is_string()) {
    throw ParseError("valuation must be an object with a \"kind\" string");
  }
  const std::string kind = node.at("kind").get<std::string>();
  try {
    if (kind == "uniform") {
      return std::make_shared<UniformMatroid>(m, GetInt(node, "k", 0, m));
    }
    if (kind == "partition") {
      auto blocks = GetListOfLists(node, "blocks", 0, m - 1);
      if (!node.contains("caps")) throw ParseError("missing field \"caps\"");
      auto caps = GetIntList(node.at("caps"), "caps", 0, m);
      return std::make_shared<PartitionMatroid>(m, blocks, caps);
    }
    if (kind == "graphic") {
      int vertices = GetInt(node, "vertices", 1, 1 << 20);
      auto rows = GetListOfLists(node, "edges", 0, vertices - 1);
      std::vector<std::pair<int, int>> edges;
      for (const auto& row : rows) {
        if (row.size() != 2) {
          throw ParseError("each edge must be a pair [u, v]");
        }
        edges.emplace_back(row[0], row[1]);
      }
      return std::make_shared<GraphicMatroid>(m, vertices, edges);
    }
    if (kind == "transversal") {
      int slots = GetInt(node, "slots", 0, 1 << 20);
      auto adjacency = GetListOfLists(node, "adjacency", 0,
                                      slots > 0 ? slots - 1 : 0);
      return std::make_shared<TransversalMatroid>(m, slots, adjacency);
    }
    if (kind == "linear-gf2") {
      int rows = GetInt(node, "rows", 1, 64);
      auto columns = GetListOfLists(node, "columns", 0, rows - 1);
      return std::make_shared<LinearMatroidGf2>(m, rows, columns);
    }
    if (kind == "explicit") {
      auto family = GetListOfLists(node, "independent", 0, m - 1);
      return std::make_shared<ExplicitMatroid>(m, family);
    }
    if (kind == "binary-xos") {
      auto family = GetListOfLists(node, "family", 0, m - 1);
      return std::make_shared<BinaryXosValuation>(m, family);
    }
    if (kind == "weighted-rank") {
      if (!node.contains("matroid")) {
        throw ParseError("missing field \"matroid\"");
      }
      auto matroid = ParseRankValuation(node.at("matroid"), m);
      if (!node.contains("weights")) {
        throw ParseError("missing field \"weights\"");
      }
      auto weights = GetIntList(node.at("weights"), "weights", 0, 1 << 20);
      return std::make_shared<WeightedRankValuation>(matroid, weights);
    }
  } catch (const ArgumentError& error) {
    throw ParseError(std::string("invalid \"") + kind +
                     "\" valuation: " + error.what());
  }
  throw ParseError("unknown valuation kind \"" + kind + "\"");
}

Json DumpValuation(const Valuation& valuation) {
  Json node;
  if (const auto* v = dynamic_cast<const UniformMatroid*>(&valuation)) {
    node["kind"] = "uniform";
    node["k"] = v->k();
    return node;
  }
  if (const auto* v = dynamic_cast<const PartitionMatroid*>(&valuation)) {
    node["kind"] = "partition";
    // Caps travel with their block through the sort.
    std::vector<std::pair<std::vector<int>, int>> paired;
    for (std::size_t b = 0; b < v->blocks().size(); ++b) {
      auto block = v->blocks()[b];
      std::sort(block.begin(), block.end());
      paired.emplace_back(std::move(block), v->caps()[b]);
    }
    std::sort(paired.begin(), paired.end());
    Json blocks = Json::array();
    Json caps = Json::array();
    for (auto& [block, cap] : paired) {
      blocks.push_back(block);
      caps.push_back(cap);
    }
    node["blocks"] = std::move(blocks);
    node["caps"] = std::move(caps);
    return node;
  }
  if (const auto* v = dynamic_cast<const GraphicMatroid*>(&valuation)) {
    node["kind"] = "graphic";
    node["vertices"] = v->num_vertices();
    Json edges = Json::array();
    for (auto [u, w] : v->edges()) edges.push_back({u, w});
    node["edges"] = std::move(edges);
    return node;
  }
  if (const auto* v = dynamic_cast<const TransversalMatroid*>(&valuation)) {
    node["kind"] = "transversal";
    node["slots"] = v->num_slots();
    node["adjacency"] = Json(v->adjacency());
    return node;
  }
  if (const auto* v = dynamic_cast<const LinearMatroidGf2*>(&valuation)) {
    node["kind"] = "linear-gf2";
    node["rows"] = v->num_rows();
    node["columns"] = Json(v->columns());
    return node;
  }
  if (const auto* v = dynamic_cast<const ExplicitMatroid*>(&valuation)) {
    node["kind"] = "explicit";
    node["independent"] = Json(v->MaximalSets());
    return node;
  }
  if (const auto* v = dynamic_cast<const BinaryXosValuation*>(&valuation)) {
    node["kind"] = "binary-xos";
    node["family"] = Json(v->Family());
    return node;
  }
  if (const auto* v = dynamic_cast<const WeightedRankValuation*>(&valuation)) {
    node["kind"] = "weighted-rank";
    node["matroid"] = DumpValuation(v->matroid());
    node["weights"] = Json(v->weights());
    return node;
  }
  throw ArgumentError("valuation class has no serialization");
}

}  // namespace

Instance ParseInstance(const std::string& text, bool validate_axioms) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  int schema = GetInt(doc, "schema", 1, 1);
  (void)schema;
  int m = GetInt(doc, "m", 1, Subset::kMaxGoods);
  if (!doc.contains("agents") || !doc.at("agents").is_array() ||
      doc.at("agents").empty()) {
    throw ParseError("field \"agents\" must be a nonempty list");
  }
  Instance inst;
  inst.num_goods = m;
  for (const Json& node : doc.at("agents")) {
    inst.valuations.push_back(ParseValuation(node, m));
  }
  if (validate_axioms) {
    for (int i = 0; i < inst.num_agents(); ++i) {
      const auto* rank = dynamic_cast<const MatroidRankValuation*>(
          inst.valuations[i].get());
      if (rank == nullptr) continue;
      AxiomReport report = CheckMatroidAxioms(*rank);
      if (!report.ok) {
        throw ParseError("agent " + std::to_string(i) + " violates the " +
                         report.failed_axiom + " axiom; witness " +
                         report.witness_a.ToString() + " vs " +
                         report.witness_b.ToString());
      }
    }
  }
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  Json doc;
  doc["schema"] = 1;
  doc["m"] = inst.num_goods;
  Json agents = Json::array();
  for (const auto& valuation : inst.valuations) {
    agents.push_back(DumpValuation(*valuation));
  }
  doc["agents"] = std::move(agents);
  return doc.dump(2) + "\n";
}

PartialAllocation ParseAllocation(const std::string& text, int expected_goods,
                                  int expected_agents) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  if (!doc.is_object()) throw ParseError("allocation must be a JSON object");
  GetInt(doc, "schema", 1, 1);
  int m = GetInt(doc, "m", 1, Subset::kMaxGoods);
  if (expected_goods >= 0 && m != expected_goods) {
    throw ParseError("allocation is over " + std::to_string(m) +
                     " goods but the instance has " +
                     std::to_string(expected_goods));
  }
  auto bundles = GetListOfLists(doc, "bundles", 0, m - 1);
  if (expected_agents >= 0 &&
      static_cast<int>(bundles.size()) != expected_agents) {
    throw ParseError("allocation has " + std::to_string(bundles.size()) +
                     " bundles but the instance has " +
                     std::to_string(expected_agents) + " agents");
  }
  PartialAllocation alloc(m, static_cast<int>(bundles.size()));
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    alloc.bundles[i] = Subset::FromIndices(bundles[i]);
    if (alloc.bundles[i].Count() != static_cast<int>(bundles[i].size())) {
      throw ParseError("bundle " + std::to_string(i) + " repeats a good");
    }
  }
  if (!alloc.Disjoint()) {
    throw ParseError("bundles must be pairwise disjoint");
  }
  return alloc;
}

std::string SerializeAllocation(const PartialAllocation& alloc) {
  Json doc;
  doc["schema"] = 1;
  doc["m"] = alloc.num_goods;
  Json bundles = Json::array();
  for (Subset bundle : alloc.bundles) bundles.push_back(bundle.ToIndices());
  doc["bundles"] = std::move(bundles);
  return doc.dump(2) + "\n";
}

namespace {

// Distinct sorted sample of `count` values from [0, bound).
std::vector<int> SampleDistinct(SplitMix64& rng, int count, int bound) {
  std::vector<int> pool(bound);
  for (int i = 0; i < bound; ++i) pool[i] = i;
  // Fisher-Yates from the back, then keep the tail.
  for (int i = bound - 1; i > 0; --i) {
    std::swap(pool[i], pool[rng.Below(i + 1)]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::shared_ptr<const MatroidRankValuation> GenerateRank(
    const std::string& family, SplitMix64& rng, int m,
    const GeneratorConfig& config) {
  if (family == "uniform") {
    return std::make_shared<UniformMatroid>(m, 1 + rng.Below(m));
  }
  if (family == "partition") {
    int blocks = config.blocks > 0 ? config.blocks
                                   : 1 + rng.Below(std::min(m, 4));
    if (blocks > m) {
      throw ArgumentError("more partition blocks than goods");
    }
    // Shuffle the goods, cut the sequence into `blocks` nonempty runs.
    std::vector<int> order(m);
    for (int g = 0; g < m; ++g) order[g] = g;
    for (int i = m - 1; i > 0; --i) {
      std::swap(order[i], order[rng.Below(i + 1)]);
    }
    std::vector<int> cuts = blocks > 1
                                ? SampleDistinct(rng, blocks - 1, m - 1)
                                : std::vector<int>{};
    std::vector<std::vector<int>> block_lists;
    std::vector<int> caps;
    int start = 0;
    for (int b = 0; b < blocks; ++b) {
      int stop = b + 1 < blocks ? cuts[b] + 1 : m;
      std::vector<int> block(order.begin() + start, order.begin() + stop);
      caps.push_back(1 + rng.Below(static_cast<int>(block.size())));
      block_lists.push_back(std::move(block));
      start = stop;
    }
    return std::make_shared<PartitionMatroid>(m, block_lists, caps);
  }
  if (family == "graphic") {
    int vertices = config.vertices > 0 ? config.vertices
                                       : 2 + rng.Below(std::max(1, m / 2) + 1);
    std::vector<std::pair<int, int>> edges;
    for (int g = 0; g < m; ++g) {
      int u = rng.Below(vertices);
      int v = vertices > 1 ? rng.Below(vertices - 1) : 0;
      if (vertices > 1 && v >= u) ++v;
      edges.emplace_back(u, v);
    }
    return std::make_shared<GraphicMatroid>(m, vertices, edges);
  }
  if (family == "transversal") {
    int slots = config.slots > 0 ? config.slots : 1 + rng.Below(m);
    std::vector<std::vector<int>> adjacency(m);
    for (int g = 0; g < m; ++g) {
      for (int slot = 0; slot < slots; ++slot) {
        if (rng.Next() & 1) adjacency[g].push_back(slot);
      }
    }
    return std::make_shared<TransversalMatroid>(m, slots, adjacency);
  }
  if (family == "linear-gf2") {
    int rows = config.dim > 0 ? config.dim : 1 + rng.Below(std::min(m, 8));
    std::vector<std::vector<int>> columns(m);
    for (int g = 0; g < m; ++g) {
      for (int row = 0; row < rows; ++row) {
        if (rng.Next() & 1) columns[g].push_back(row);
      }
    }
    return std::make_shared<LinearMatroidGf2>(m, rows, columns);
  }
  if (family == "explicit") {
    // Materialize a partition matroid extensionally: its maximal independent
    // sets, found by scanning all subsets, become the stored family.
    if (m > 12) {
      throw ArgumentError("explicit generation handles at most 12 goods");
    }
    auto base = GenerateRank("partition", rng, m, config);
    std::vector<std::vector<int>> independent;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      Subset s = Subset::FromBits(mask);
      if (base->value(s) == s.Count()) independent.push_back(s.ToIndices());
    }
    return std::make_shared<ExplicitMatroid>(m, independent);
  }
  throw ArgumentError("unknown rank family \"" + family + "\"");
}

}  // namespace

Instance Generate(const GeneratorConfig& config) {
  if (config.num_goods < 1 || config.num_goods > Subset::kMaxGoods) {
    throw ArgumentError("generator needs 1..64 goods");
  }
  if (config.num_agents < 1) throw ArgumentError("generator needs >= 1 agent");
  SplitMix64 rng(config.seed);
  Instance inst;
  inst.num_goods = config.num_goods;
  const int m = config.num_goods;
  for (int agent = 0; agent < config.num_agents; ++agent) {
    if (config.family == "binary-xos") {
      int sets = config.sets > 0 ? config.sets : 1 + rng.Below(3);
      std::vector<std::vector<int>> family;
      for (int f = 0; f < sets; ++f) {
        int size = 1 + rng.Below(m);
        family.push_back(SampleDistinct(rng, size, m));
      }
      inst.valuations.push_back(
          std::make_shared<BinaryXosValuation>(m, family));
    } else if (config.family == "weighted-rank") {
      auto matroid = GenerateRank("partition", rng, m, config);
      std::vector<int> weights(m);
      for (int g = 0; g < m; ++g) weights[g] = 1 + rng.Below(3);
      inst.valuations.push_back(
          std::make_shared<WeightedRankValuation>(matroid, weights));
    } else {
      inst.valuations.push_back(GenerateRank(config.family, rng, m, config));
    }
  }
  return inst;
}

}  // namespace fairdiv
