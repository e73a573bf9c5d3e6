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

#include "fairdiv/report_io.h"

namespace fairdiv {

namespace {

using Json = nlohmann::ordered_json;

Json SubsetJson(Subset s) { return Json(s.ToIndices()); }

}  // namespace

Json AllocationJson(const PartialAllocation& alloc) {
  Json node;
  node["schema"] = 1;
  node["m"] = alloc.num_goods;
  Json bundles = Json::array();
  for (Subset b : alloc.bundles) bundles.push_back(SubsetJson(b));
  node["bundles"] = bundles;
  return node;
}

Json SharesTableJson(const SharesTable& shares) {
  Json list = Json::array();
  for (const SharesTable::Entry* entry : shares.All()) {
    Json node;
    node["agent"] = entry->agent;
    node["k"] = entry->k;
    node["subset"] = SubsetJson(entry->subset);
    node["mu"] = entry->mu;
    Json witness = Json::array();
    for (Subset part : entry->witness) witness.push_back(SubsetJson(part));
    node["witness"] = witness;
    list.push_back(node);
  }
  return list;
}

Json SolveReportJson(const Instance& inst, const SolveReport& report) {
  Json node;
  node["schema"] = 1;
  node["fairness"] = report.fairness;
  node["agents"] = inst.num_agents();
  node["goods"] = inst.num_goods;
  node["allocation"] = AllocationJson(report.allocation);
  node["agent_values"] = Json(report.agent_values);
  node["welfare"] = report.welfare;
  node["shares"] = SharesTableJson(report.shares);
  node["growth_steps"] = report.growth_steps;
  node["augmentations"] = report.augmentations;
  node["transfers"] = report.transfers;
  node["deficit_trace"] = Json(report.deficit_trace);
  node["potential_trace"] = Json(report.potential_trace);
  return node;
}

Json CheckVerdictJson(const FairnessVerdict& verdict, Rational alpha) {
  Json node;
  node["schema"] = 1;
  node["property"] = verdict.property;
  node["alpha"] = alpha.ToString();
  node["holds"] = verdict.holds;
  node["witness_agent"] = verdict.witness_agent;
  node["witness_counterpart"] = verdict.witness_counterpart;
  node["witness_bound"] = verdict.witness_bound;
  node["witness_value"] = verdict.witness_value;
  node["detail"] = verdict.detail;
  return node;
}

Json CertifyVerdictJson(const FairnessVerdict& verdict) {
  Json node;
  node["schema"] = 1;
  node["property"] = verdict.property;
  node["certified"] = verdict.holds;
  if (verdict.witness_allocation.has_value()) {
    node["witness_allocation"] = AllocationJson(*verdict.witness_allocation);
  } else {
    node["witness_allocation"] = nullptr;
  }
  node["detail"] = verdict.detail;
  return node;
}

}  // namespace fairdiv
