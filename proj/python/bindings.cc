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

// Python extension module. Every function speaks JSON strings using the
// same document shapes as the command-line reports; the fairdiv package
// wraps them with dict conversion.

#include <pybind11/pybind11.h>

#include <string>

#include "fairdiv/algorithms.h"
#include "fairdiv/errors.h"
#include "fairdiv/fairness.h"
#include "fairdiv/instance_io.h"
#include "fairdiv/report_io.h"
#include "fairdiv/shares.h"
#include "fairdiv/valuation.h"

namespace py = pybind11;

namespace {

using namespace fairdiv;

std::string Solve(const std::string& instance_json,
                  const std::string& fairness) {
  Instance inst = ParseInstance(instance_json);
  SolveReport report;
  if (fairness == "mms") {
    report = SolveMms(inst);
  } else if (fairness == "pmms") {
    report = SolvePmms(inst);
  } else {
    throw ArgumentError("fairness must be \"mms\" or \"pmms\", got \"" +
                        fairness + "\"");
  }
  return SolveReportJson(inst, report).dump();
}

std::string Shares(const std::string& instance_json, int k) {
  Instance inst = ParseInstance(instance_json);
  const Subset all = Subset::All(inst.num_goods);
  SharesTable table;
  for (int i = 0; i < inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    const auto* rank = dynamic_cast<const MatroidRankValuation*>(&v);
    if (rank != nullptr) {
      MmsResult fast = MmsFast(*rank, k, all);
      table.Put({i, k, all, fast.mu, fast.parts});
    } else {
      table.Put({i, k, all, MmsBrute(v, k, all), {}});
    }
  }
  nlohmann::ordered_json node;
  node["schema"] = 1;
  node["k"] = k;
  node["goods"] = inst.num_goods;
  node["shares"] = SharesTableJson(table);
  return node.dump();
}

std::string Check(const std::string& instance_json,
                  const std::string& allocation_json,
                  const std::string& property, long long alpha_num,
                  long long alpha_den) {
  Instance inst = ParseInstance(instance_json);
  PartialAllocation alloc =
      ParseAllocation(allocation_json, inst.num_goods, inst.num_agents());
  Rational alpha = MakeRational(alpha_num, alpha_den);

  FairnessVerdict verdict;
  if (property == "ef") {
    verdict = IsEnvyFree(inst, alloc);
  } else if (property == "ef1") {
    verdict = IsEf1(inst, alloc);
  } else if (property == "mms") {
    const Subset all = Subset::All(inst.num_goods);
    const int n = inst.num_agents();
    SharesTable shares;
    if (inst.AllMatroidRank()) {
      shares = SharesForInstance(inst, n, all);
    } else {
      for (int i = 0; i < n; ++i) {
        shares.Put({i, n, all, MmsBrute(inst.valuation(i), n, all), {}});
      }
    }
    verdict = IsMms(inst, alloc, alpha, shares);
  } else if (property == "pmms") {
    verdict = IsPmms(inst, alloc, alpha);
  } else {
    throw ArgumentError(
        "property must be one of ef, ef1, mms, pmms; got \"" + property +
        "\"");
  }
  return CheckVerdictJson(verdict, alpha).dump();
}

std::string CertifyNoMms(const std::string& instance_json) {
  Instance inst = ParseInstance(instance_json);
  return CertifyVerdictJson(CertifyNoMmsAllocation(inst)).dump();
}

std::string GenerateInstance(std::uint64_t seed, const std::string& family,
                             int agents, int goods, int blocks, int vertices,
                             int slots, int dim, int sets) {
  GeneratorConfig config;
  config.seed = seed;
  config.family = family;
  config.num_agents = agents;
  config.num_goods = goods;
  config.blocks = blocks;
  config.vertices = vertices;
  config.slots = slots;
  config.dim = dim;
  config.sets = sets;
  return SerializeInstance(Generate(config));
}

std::string ValidateInstance(const std::string& instance_json) {
  return SerializeInstance(ParseInstance(instance_json,
                                         /*validate_axioms=*/true));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fair division under matroid-rank valuations";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<CapabilityError>(m, "CapabilityError");
  py::register_exception<VerificationError>(m, "VerificationError");
  py::register_exception<ContractViolation>(m, "ContractViolation");

  m.def("solve", &Solve, py::arg("instance_json"), py::arg("fairness"),
        "Solve for an allocation meeting the named fairness notion; "
        "returns the full report as a JSON string.");
  m.def("shares", &Shares, py::arg("instance_json"), py::arg("k"),
        "Per-agent maximin shares over all goods split into k parts, as a "
        "JSON string.");
  m.def("check", &Check, py::arg("instance_json"), py::arg("allocation_json"),
        py::arg("property"), py::arg("alpha_num") = 1,
        py::arg("alpha_den") = 1,
        "Verdict of a fairness property (ef, ef1, mms, pmms) at scale "
        "alpha_num/alpha_den, as a JSON string.");
  m.def("certify_no_mms", &CertifyNoMms, py::arg("instance_json"),
        "Certificate that no allocation meets every agent's full share, or "
        "a refuting allocation, as a JSON string.");
  m.def("generate", &GenerateInstance, py::arg("seed"), py::arg("family"),
        py::arg("agents"), py::arg("goods"), py::arg("blocks") = -1,
        py::arg("vertices") = -1, py::arg("slots") = -1, py::arg("dim") = -1,
        py::arg("sets") = -1,
        "Deterministic seeded instance from the named family, as a JSON "
        "string.");
  m.def("validate", &ValidateInstance, py::arg("instance_json"),
        "Parse with exhaustive axiom checking and return the canonical "
        "serialization.");
}
