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

// Command-line front end. Subcommands: solve, shares, check, certify-no-mms,
// gen, validate. Exit codes: 0 success, 1 usage/parse/contract error,
// 2 capability error (instance outside what an operation supports),
// 3 verification mismatch (a brute-force oracle disagreed with a result).
// All reports are deterministic: agents ascending, goods ascending, fixed
// key order in JSON.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fairdiv/algorithms.h"
#include "fairdiv/errors.h"
#include "fairdiv/exchange_graph.h"
#include "fairdiv/fairness.h"
#include "fairdiv/instance_io.h"
#include "fairdiv/matroid_ops.h"
#include "fairdiv/oracles.h"
#include "fairdiv/report_io.h"
#include "fairdiv/shares.h"
#include "fairdiv/valuation.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace fairdiv;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadInstance(const std::string& path, bool validate) {
  return ParseInstance(ReadFile(path), validate);
}

void PrintSharesText(const SharesTable& shares, std::ostream& out) {
  for (const SharesTable::Entry* entry : shares.All()) {
    out << "share agent " << entry->agent << " k " << entry->k << " over "
        << entry->subset.ToString() << ": " << entry->mu << "\n";
  }
}

// One brute-force cross-check outcome, printed in both report styles.
struct VerifyLine {
  std::string name;
  std::string status;  // "ok" or "skipped"
  std::string detail;
};

void FailVerification(const std::string& name, long long expected,
                      long long actual) {
  throw VerificationError("oracle mismatch on " + name + ": expected " +
                          std::to_string(expected) + ", got " +
                          std::to_string(actual));
}

// Re-derives the solver's guarantees with the exhaustive oracles wherever
// the instance is inside the brute-force caps. Mismatch throws; over-cap
// checks are reported as skipped.
std::vector<VerifyLine> VerifySolve(const Instance& inst,
                                    const SolveReport& report) {
  std::vector<VerifyLine> lines;
  const int n = inst.num_agents();
  const int m = inst.num_goods;

  if (m <= BruteSizeCap(kExhaustiveWelfareMaxGoods) &&
      n <= kExhaustiveWelfareMaxAgents) {
    WelfareResult best = ExhaustiveMaxWelfare(inst, Subset::All(m));
    if (best.welfare != report.welfare) {
      FailVerification("welfare", best.welfare, report.welfare);
    }
    lines.push_back({"welfare", "ok", std::to_string(best.welfare)});
  } else {
    lines.push_back({"welfare", "skipped", "instance above brute caps"});
  }

  for (const SharesTable::Entry* entry : report.shares.All()) {
    const std::string name = "share agent " + std::to_string(entry->agent) +
                             " k " + std::to_string(entry->k) + " over " +
                             entry->subset.ToString();
    if (entry->subset.Count() <= BruteSizeCap(kMmsBruteMaxGoods) &&
        entry->k <= kMmsBruteMaxParts) {
      int brute =
          ExhaustiveMms(inst.valuation(entry->agent), entry->k, entry->subset);
      if (brute != entry->mu) FailVerification(name, brute, entry->mu);
      if (report.agent_values[entry->agent] < entry->mu) {
        FailVerification("value of agent " + std::to_string(entry->agent),
                         entry->mu, report.agent_values[entry->agent]);
      }
      lines.push_back({name, "ok", std::to_string(brute)});
    } else {
      lines.push_back({name, "skipped", "subset above brute caps"});
    }
  }
  return lines;
}

void PrintVerifyText(const std::vector<VerifyLine>& lines, std::ostream& out) {
  for (const VerifyLine& line : lines) {
    out << "verify " << line.name << ": " << line.status << " (" << line.detail
        << ")\n";
  }
}

Json VerifyJson(const std::vector<VerifyLine>& lines) {
  Json list = Json::array();
  for (const VerifyLine& line : lines) {
    Json node;
    node["name"] = line.name;
    node["status"] = line.status;
    node["detail"] = line.detail;
    list.push_back(node);
  }
  return list;
}

int RunSolve(const std::string& input, const std::string& fairness,
             bool verify, bool json, bool validate) {
  Instance inst = LoadInstance(input, validate);
  SolveReport report =
      fairness == "mms" ? SolveMms(inst) : SolvePmms(inst);
  std::vector<VerifyLine> verify_lines;
  if (verify) verify_lines = VerifySolve(inst, report);

  if (json) {
    Json node = SolveReportJson(inst, report);
    if (verify) node["verify"] = VerifyJson(verify_lines);
    std::cout << node.dump(2) << "\n";
    return 0;
  }

  std::cout << "fairness: " << report.fairness << "\n";
  std::cout << "agents: " << inst.num_agents() << "\n";
  std::cout << "goods: " << inst.num_goods << "\n";
  for (int i = 0; i < inst.num_agents(); ++i) {
    std::cout << "bundle " << i << ": "
              << report.allocation.bundles[i].ToString() << "\n";
    std::cout << "value " << i << ": " << report.agent_values[i] << "\n";
  }
  std::cout << "welfare: " << report.welfare << "\n";
  PrintSharesText(report.shares, std::cout);
  std::cout << "growth steps: " << report.growth_steps << "\n";
  if (report.fairness == "mms") {
    std::cout << "augmentations: " << report.augmentations << "\n";
    std::cout << "deficit trace:";
    for (int d : report.deficit_trace) std::cout << " " << d;
    std::cout << "\n";
  } else {
    std::cout << "transfers: " << report.transfers << "\n";
    std::cout << "potential trace:";
    for (std::int64_t p : report.potential_trace) std::cout << " " << p;
    std::cout << "\n";
  }
  PrintVerifyText(verify_lines, std::cout);
  return 0;
}

int RunShares(const std::string& input, int k, bool json, bool validate) {
  Instance inst = LoadInstance(input, validate);
  const Subset all = Subset::All(inst.num_goods);

  SharesTable table;
  std::vector<std::string> methods;
  for (int i = 0; i < inst.num_agents(); ++i) {
    const Valuation& v = inst.valuation(i);
    const auto* rank = dynamic_cast<const MatroidRankValuation*>(&v);
    const bool brute_ok = all.Count() <= BruteSizeCap(kMmsBruteMaxGoods) &&
                          k <= kMmsBruteMaxParts;
    if (rank != nullptr) {
      MmsResult fast = MmsFast(*rank, k, all);
      if (brute_ok) {
        int brute = MmsBrute(v, k, all);
        if (brute != fast.mu) {
          FailVerification("share of agent " + std::to_string(i), brute,
                           fast.mu);
        }
        methods.push_back("fast, cross-checked");
      } else {
        methods.push_back("fast");
      }
      table.Put({i, k, all, fast.mu, fast.parts});
    } else if (brute_ok) {
      table.Put({i, k, all, MmsBrute(v, k, all), {}});
      methods.push_back("brute");
    } else {
      throw CapabilityError(
          "agent " + std::to_string(i) +
          " has a non-rank valuation and the instance is above brute caps");
    }
  }

  if (json) {
    Json node;
    node["schema"] = 1;
    node["k"] = k;
    node["goods"] = inst.num_goods;
    node["shares"] = SharesTableJson(table);
    Json method_list = Json::array();
    for (const std::string& method : methods) method_list.push_back(method);
    node["methods"] = method_list;
    std::cout << node.dump(2) << "\n";
    return 0;
  }

  std::cout << "k: " << k << "\n";
  for (int i = 0; i < inst.num_agents(); ++i) {
    const SharesTable::Entry* entry = table.Find(i, k, all);
    std::cout << "agent " << i << ": mu " << entry->mu << " (" << methods[i]
              << ")\n";
  }
  return 0;
}

Rational ParseAlpha(const std::string& text) {
  const std::size_t slash = text.find('/');
  const std::string num_text =
      slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_text =
      slash == std::string::npos ? "1" : text.substr(slash + 1);
  long long num = 0;
  long long den = 1;
  try {
    std::size_t num_end = 0;
    std::size_t den_end = 0;
    num = std::stoll(num_text, &num_end);
    den = std::stoll(den_text, &den_end);
    if (num_end != num_text.size() || den_end != den_text.size()) {
      throw std::invalid_argument("trailing characters");
    }
  } catch (const std::logic_error&) {
    throw ArgumentError("alpha must be an integer or P/Q fraction, got \"" +
                        text + "\"");
  }
  // Range validation happens here so its message (not the format message)
  // reaches the user.
  return MakeRational(num, den);
}

// Shares table for the mms property: polynomial for rank valuations,
// exhaustive for the rest while the instance stays under the caps.
SharesTable SharesForCheck(const Instance& inst) {
  const Subset all = Subset::All(inst.num_goods);
  const int n = inst.num_agents();
  if (inst.AllMatroidRank()) return SharesForInstance(inst, n, all);
  SharesTable table;
  for (int i = 0; i < n; ++i) {
    table.Put({i, n, all, MmsBrute(inst.valuation(i), n, all), {}});
  }
  return table;
}

int RunCheck(const std::string& input, const std::string& allocation_path,
             const std::string& property, const std::string& alpha_text,
             bool json, bool validate) {
  Instance inst = LoadInstance(input, validate);
  PartialAllocation alloc = ParseAllocation(
      ReadFile(allocation_path), inst.num_goods, inst.num_agents());
  Rational alpha = ParseAlpha(alpha_text);

  FairnessVerdict verdict;
  if (property == "ef") {
    verdict = IsEnvyFree(inst, alloc);
  } else if (property == "ef1") {
    verdict = IsEf1(inst, alloc);
  } else if (property == "mms") {
    verdict = IsMms(inst, alloc, alpha, SharesForCheck(inst));
  } else {
    verdict = IsPmms(inst, alloc, alpha);
  }

  if (json) {
    std::cout << CheckVerdictJson(verdict, alpha).dump(2) << "\n";
    return 0;
  }

  std::cout << "property: " << verdict.property << "\n";
  std::cout << "alpha: " << alpha.ToString() << "\n";
  std::cout << "holds: " << (verdict.holds ? "true" : "false") << "\n";
  if (!verdict.holds) {
    std::cout << "witness agent: " << verdict.witness_agent << "\n";
    if (verdict.witness_counterpart >= 0) {
      std::cout << "witness counterpart: " << verdict.witness_counterpart
                << "\n";
    }
    std::cout << "witness bound: " << verdict.witness_bound << "\n";
    std::cout << "witness value: " << verdict.witness_value << "\n";
  }
  if (!verdict.detail.empty()) {
    std::cout << "detail: " << verdict.detail << "\n";
  }
  return 0;
}

int RunCertify(const std::string& input, bool json, bool validate) {
  Instance inst = LoadInstance(input, validate);
  FairnessVerdict verdict = CertifyNoMmsAllocation(inst);

  if (json) {
    std::cout << CertifyVerdictJson(verdict).dump(2) << "\n";
    return 0;
  }

  if (verdict.holds) {
    std::cout << "no-mms-allocation: certified\n";
  } else {
    std::cout << "no-mms-allocation: refuted\n";
    std::cout << "witness bundles:";
    for (Subset b : verdict.witness_allocation->bundles) {
      std::cout << " " << b.ToString();
    }
    std::cout << "\n";
  }
  if (!verdict.detail.empty()) {
    std::cout << "detail: " << verdict.detail << "\n";
  }
  return 0;
}

int RunGen(const GeneratorConfig& config, const std::string& out_path) {
  std::string text = SerializeInstance(Generate(config));
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write file: " + out_path);
  out << text;
  return 0;
}

int RunValidate(const std::string& input) {
  Instance inst = LoadInstance(input, /*validate=*/true);
  std::cout << "ok: agents " << inst.num_agents() << ", goods "
            << inst.num_goods << ", all rank valuations "
            << (inst.AllMatroidRank() ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fair division of indivisible goods under matroid-rank valuations"};
  app.require_subcommand(1);

  std::string input;
  std::string allocation_path;
  std::string fairness;
  std::string property;
  std::string alpha = "1/1";
  std::string out_path;
  bool verify = false;
  bool json = false;
  bool validate = false;
  int k = 0;
  GeneratorConfig config;

  CLI::App* solve =
      app.add_subcommand("solve", "compute a fair max-welfare allocation");
  solve->add_option("--input", input, "instance file")->required();
  solve->add_option("--fairness", fairness, "mms or pmms")
      ->required()
      ->check(CLI::IsMember({"mms", "pmms"}));
  solve->add_flag("--verify", verify,
                  "re-derive the guarantees with brute-force oracles");
  solve->add_flag("--json", json, "machine-readable report");
  solve->add_flag("--validate", validate, "axiom-check rank valuations");

  CLI::App* shares =
      app.add_subcommand("shares", "compute per-agent maximin shares");
  shares->add_option("--input", input, "instance file")->required();
  shares->add_option("--k", k, "number of parts")
      ->required()
      ->check(CLI::PositiveNumber);
  shares->add_flag("--json", json, "machine-readable report");
  shares->add_flag("--validate", validate, "axiom-check rank valuations");

  CLI::App* check =
      app.add_subcommand("check", "test a fairness property of an allocation");
  check->add_option("--input", input, "instance file")->required();
  check->add_option("--allocation", allocation_path, "allocation file")
      ->required();
  check->add_option("--property", property, "ef, ef1, mms, or pmms")
      ->required()
      ->check(CLI::IsMember({"ef", "ef1", "mms", "pmms"}));
  check->add_option("--alpha", alpha, "approximation factor P/Q (default 1/1)");
  check->add_flag("--json", json, "machine-readable report");
  check->add_flag("--validate", validate, "axiom-check rank valuations");

  CLI::App* certify = app.add_subcommand(
      "certify-no-mms", "certify that no full-MMS allocation exists");
  certify->add_option("--input", input, "instance file")->required();
  certify->add_flag("--json", json, "machine-readable report");
  certify->add_flag("--validate", validate, "axiom-check rank valuations");

  CLI::App* gen =
      app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--seed", config.seed, "64-bit seed")->required();
  gen->add_option("--family", config.family,
                  "uniform, partition, graphic, transversal, linear-gf2, "
                  "explicit, binary-xos, or weighted-rank")
      ->required();
  gen->add_option("--agents", config.num_agents, "number of agents")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--goods", config.num_goods, "number of goods")
      ->required()
      ->check(CLI::PositiveNumber);
  gen->add_option("--blocks", config.blocks, "partition: number of blocks");
  gen->add_option("--vertices", config.vertices, "graphic: vertex count");
  gen->add_option("--slots", config.slots, "transversal: slot count");
  gen->add_option("--dim", config.dim, "linear-gf2: row count");
  gen->add_option("--sets", config.sets, "binary-xos: family size");
  gen->add_option("--out", out_path, "write to a file instead of stdout");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "parse and axiom-check an instance file");
  validate_cmd->add_option("--input", input, "instance file")->required();

  try {
    app.parse(argc, argv);
    if (solve->parsed()) return RunSolve(input, fairness, verify, json, validate);
    if (shares->parsed()) return RunShares(input, k, json, validate);
    if (check->parsed()) {
      return RunCheck(input, allocation_path, property, alpha, json, validate);
    }
    if (certify->parsed()) return RunCertify(input, json, validate);
    if (gen->parsed()) return RunGen(config, out_path);
    return RunValidate(input);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForAllHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 1;
  } catch (const VerificationError& error) {
    std::cerr << "verification error: " << error.what() << "\n";
    return 3;
  } catch (const CapabilityError& error) {
    std::cerr << "capability error: " << error.what() << "\n";
    return 2;
  } catch (const ParseError& error) {
    std::cerr << "parse error: " << error.what() << "\n";
    return 1;
  } catch (const ArgumentError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const ContractViolation& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
