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

#ifndef FAIRDIV_REPORT_IO_H_
#define FAIRDIV_REPORT_IO_H_

#include "fairdiv/algorithms.h"
#include "fairdiv/allocation.h"
#include "fairdiv/fairness.h"
#include "fairdiv/shares.h"
#include "json.hpp"

namespace fairdiv {

// JSON shapes shared by the command-line reports and the python module.
// Keys are emitted in a fixed order and all good lists ascend, so equal
// inputs serialize byte-identically.

nlohmann::ordered_json AllocationJson(const PartialAllocation& alloc);

nlohmann::ordered_json SharesTableJson(const SharesTable& shares);

// Every field of the report: allocation, per-agent values, welfare, shares,
// and the iteration counters and traces.
nlohmann::ordered_json SolveReportJson(const Instance& inst,
                                       const SolveReport& report);

// Verdict of a fairness predicate evaluated at a scale factor.
nlohmann::ordered_json CheckVerdictJson(const FairnessVerdict& verdict,
                                        Rational alpha);

// Verdict of the nonexistence certifier (holds = certified; otherwise the
// witness allocation refutes it).
nlohmann::ordered_json CertifyVerdictJson(const FairnessVerdict& verdict);

}  // namespace fairdiv

#endif  // FAIRDIV_REPORT_IO_H_
