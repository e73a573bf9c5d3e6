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

// Acceptance gate: nine end-to-end guarantees, one [PASS]/[FAIL] line each.
// Exits 0 only when every line passes. Usage:
//   fairdiv_acceptance --cli PATH_TO_CLI --fixtures FIXTURES_DIR

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/algorithms.h"
#include "fairdiv/errors.h"
#include "fairdiv/exchange_graph.h"
#include "fairdiv/fairness.h"
#include "fairdiv/instance_io.h"
#include "fairdiv/oracles.h"
#include "fairdiv/shares.h"
#include "fairdiv/subset.h"
#include "test_util.h"

namespace {

using namespace fairdiv;
using fairdiv_test::RankFamilies;
using fairdiv_test::SeededInstance;

std::string g_cli;
std::string g_fixtures;

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance LoadFixture(const std::string& name) {
  return ParseInstance(ReadFile(g_fixtures + "/" + name + ".json"));
}

std::vector<int> AllAgents(int n) {
  std::vector<int> agents(n);
  std::iota(agents.begin(), agents.end(), 0);
  return agents;
}

// ---------------------------------------------------------------------------
// 1. The graph-based union rank, the min-convolution rank, and exhaustive
//    welfare maximization agree exactly on every seeded rank instance.

std::string RankAgreement() {
  auto start = std::chrono::steady_clock::now();
  int instances = 0;
  for (const std::string& family : RankFamilies()) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 4; m <= 8; m += 2) {
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
          Instance inst = SeededInstance(seed, n, m, family);
          Subset all = Subset::All(m);
          int union_rank = UnionRank(inst, all, AllAgents(n));
          int convolution_rank = ConvolutionRank(inst, all, AllAgents(n)).rank;
          int exhaustive = ExhaustiveMaxWelfare(inst, all).welfare;
          if (union_rank != convolution_rank || union_rank != exhaustive) {
            return "family " + family + " seed " + std::to_string(seed) +
                   " n " + std::to_string(n) + " m " + std::to_string(m) +
                   ": union " + std::to_string(union_rank) + ", convolution " +
                   std::to_string(convolution_rank) + ", exhaustive " +
                   std::to_string(exhaustive);
          }
          ++instances;
        }
      }
    }
  }
  if (instances < 200) {
    return "only " + std::to_string(instances) + " instances swept";
  }
  double elapsed = SecondsSince(start);
  if (elapsed >= 60.0) {
    return "sweep took " + std::to_string(elapsed) + "s, budget is 60s";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Shared sweep for criteria 2, 3, and 7: every rank family, n in {2,3,4},
// m in {6,8}, six seeds each -> 216 instances.

template <typename Visit>
std::string SweepInstances(Visit visit) {
  int instances = 0;
  for (const std::string& family : RankFamilies()) {
    for (int n = 2; n <= 4; ++n) {
      for (int m = 6; m <= 8; m += 2) {
        for (std::uint64_t seed = 10; seed <= 15; ++seed) {
          Instance inst = SeededInstance(seed, n, m, family);
          std::string context = "family " + family + " seed " +
                                std::to_string(seed) + " n " +
                                std::to_string(n) + " m " + std::to_string(m);
          std::string error = visit(inst, context);
          if (!error.empty()) return context + ": " + error;
          ++instances;
        }
      }
    }
  }
  if (instances < 200) {
    return "only " + std::to_string(instances) + " instances swept";
  }
  return "";
}

// ---------------------------------------------------------------------------
// 2. The MMS solver matches the exhaustive welfare optimum and gives every
//    agent her exhaustively computed share, within the augmentation budget.

std::string MmsSolverCorrectness() {
  return SweepInstances([](const Instance& inst, const std::string&) {
    const int n = inst.num_agents();
    const int m = inst.num_goods;
    const Subset all = Subset::All(m);
    SolveReport report = SolveMms(inst);
    int exhaustive = ExhaustiveMaxWelfare(inst, all).welfare;
    if (report.welfare != exhaustive) {
      return "welfare " + std::to_string(report.welfare) + " != exhaustive " +
             std::to_string(exhaustive);
    }
    for (int i = 0; i < n; ++i) {
      int share = ExhaustiveMms(inst.valuation(i), n, all);
      if (report.agent_values[i] < share) {
        return "agent " + std::to_string(i) + " value " +
               std::to_string(report.agent_values[i]) + " < share " +
               std::to_string(share);
      }
    }
    if (report.augmentations > static_cast<std::int64_t>(n) * m) {
      return "augmentations " + std::to_string(report.augmentations) +
             " exceed n*m = " + std::to_string(n * m);
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------
// 3. The PMMS solver matches the exhaustive welfare optimum and gives every
//    agent her exhaustive pairwise share against every other agent, within
//    the transfer budget and with strictly decreasing potential.

std::vector<std::pair<Instance, SolveReport>>& PmmsOutputs() {
  static std::vector<std::pair<Instance, SolveReport>> outputs;
  return outputs;
}

std::string PmmsSolverCorrectness() {
  PmmsOutputs().clear();
  return SweepInstances([](const Instance& inst, const std::string&) {
    const int n = inst.num_agents();
    const int m = inst.num_goods;
    const Subset all = Subset::All(m);
    SolveReport report = SolvePmms(inst);
    PmmsOutputs().emplace_back(inst, report);
    int exhaustive = ExhaustiveMaxWelfare(inst, all).welfare;
    if (report.welfare != exhaustive) {
      return "welfare " + std::to_string(report.welfare) + " != exhaustive " +
             std::to_string(exhaustive);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Subset pool = report.allocation.bundles[i] |
                      report.allocation.bundles[j];
        int share = ExhaustiveMms(inst.valuation(i), 2, pool);
        if (report.agent_values[i] < share) {
          return "agent " + std::to_string(i) + " value " +
                 std::to_string(report.agent_values[i]) +
                 " < pairwise share " + std::to_string(share) + " against " +
                 std::to_string(j);
        }
      }
    }
    if (report.transfers > static_cast<std::int64_t>(m) * m) {
      return "transfers " + std::to_string(report.transfers) +
             " exceed m^2 = " + std::to_string(m * m);
    }
    for (std::size_t t = 1; t < report.potential_trace.size(); ++t) {
      if (report.potential_trace[t] >= report.potential_trace[t - 1]) {
        return "potential did not strictly decrease at transfer " +
               std::to_string(t);
      }
    }
    return std::string();
  });
}

// ---------------------------------------------------------------------------
// 4. The polynomial share computation equals exhaustive partition
//    enumeration on hundreds of (valuation, k, subset) triples, and k copies
//    of the share never exceed the k-fold union rank.

std::string FastSharesEqualBrute() {
  const std::vector<Subset> masks = {
      Subset::All(10), Subset::Of({0, 2, 4, 6, 8}), Subset::Of({0, 1, 2, 3, 4}),
      Subset::Of({3, 4, 5, 6, 7, 8, 9})};
  int triples = 0;
  for (const std::string& family : RankFamilies()) {
    for (std::uint64_t seed = 20; seed <= 23; ++seed) {
      Instance inst = SeededInstance(seed, 2, 10, family);
      for (int agent = 0; agent < 2; ++agent) {
        const MatroidRankValuation& rank = inst.RankValuation(agent);
        for (Subset mask : masks) {
          for (int k = 1; k <= 3; ++k) {
            MmsResult fast = MmsFast(rank, k, mask);
            int brute = MmsBrute(inst.valuation(agent), k, mask);
            std::string context = "family " + family + " seed " +
                                  std::to_string(seed) + " agent " +
                                  std::to_string(agent) + " k " +
                                  std::to_string(k) + " over " +
                                  mask.ToString();
            if (fast.mu != brute) {
              return context + ": fast " + std::to_string(fast.mu) +
                     " != brute " + std::to_string(brute);
            }
            int kfold = KFoldUnionRank(rank, k, mask).rank;
            if (k * fast.mu > kfold) {
              return context + ": k*mu " + std::to_string(k * fast.mu) +
                     " exceeds k-fold union rank " + std::to_string(kfold);
            }
            ++triples;
          }
        }
      }
    }
  }
  if (triples < 500) {
    return "only " + std::to_string(triples) + " triples checked";
  }
  return "";
}

// ---------------------------------------------------------------------------
// 5. Both four-good fixtures are certified to admit no allocation meeting
//    every exhaustive share, with the documented share values, in under a
//    second.

std::string NonexistenceFixtures() {
  auto start = std::chrono::steady_clock::now();

  Instance xos = LoadFixture("xos-4");
  for (int i = 0; i < 2; ++i) {
    int share = ExhaustiveMms(xos.valuation(i), 2, Subset::All(4));
    if (share != 2) {
      return "xos-4 agent " + std::to_string(i) + " share " +
             std::to_string(share) + " != 2";
    }
  }
  if (!CertifyNoMmsAllocation(xos).holds) {
    return "xos-4 was not certified";
  }
  int xos_welfare = ExhaustiveMaxWelfare(xos, Subset::All(4)).welfare;
  if (xos_welfare != 3) {
    return "xos-4 optimum welfare " + std::to_string(xos_welfare) + " != 3";
  }

  Instance wrank = LoadFixture("wrank-4");
  for (int i = 0; i < 2; ++i) {
    int share = ExhaustiveMms(wrank.valuation(i), 2, Subset::All(4));
    if (share != 3) {
      return "wrank-4 agent " + std::to_string(i) + " share " +
             std::to_string(share) + " != 3";
    }
  }
  if (!CertifyNoMmsAllocation(wrank).holds) {
    return "wrank-4 was not certified";
  }

  double elapsed = SecondsSince(start);
  if (elapsed >= 1.0) {
    return "took " + std::to_string(elapsed) + "s, budget is 1s";
  }
  return "";
}

// ---------------------------------------------------------------------------
// 6. The six-good fixture's reference allocation is envy-free and EF1 yet
//    fails exact PMMS with the documented witness, and both solvers reach
//    welfare 6 with every agent at value >= 3.

std::string SixGoodFixtureVerdicts() {
  Instance inst = LoadFixture("ef1-not-pmms");
  PartialAllocation reference = ParseAllocation(
      ReadFile(g_fixtures + "/ef1-not-pmms-reference-allocation.json"),
      inst.num_goods, inst.num_agents());

  if (!IsEnvyFree(inst, reference).holds) return "reference is not envy-free";
  if (!IsEf1(inst, reference).holds) return "reference is not EF1";
  FairnessVerdict pmms = IsPmms(inst, reference, Rational::One());
  if (pmms.holds) return "reference unexpectedly satisfies PMMS";
  if (pmms.witness_agent != 0) {
    return "PMMS witness agent " + std::to_string(pmms.witness_agent) +
           " != 0";
  }
  if (pmms.witness_bound != 3) {
    return "PMMS witness share " + std::to_string(pmms.witness_bound) +
           " != 3";
  }

  for (SolveReport report : {SolveMms(inst), SolvePmms(inst)}) {
    if (report.welfare != 6) {
      return report.fairness + " welfare " + std::to_string(report.welfare) +
             " != 6";
    }
    for (int i = 0; i < inst.num_agents(); ++i) {
      if (report.agent_values[i] < 3) {
        return report.fairness + " agent " + std::to_string(i) + " value " +
               std::to_string(report.agent_values[i]) + " < 3";
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 7. Every PMMS output from the sweep is EF1 and 1/(2n-1)-MMS against
//    exhaustive shares; on fresh small instances the shares of any agent
//    subset sum to at most that subset's union rank.

std::string ImplicationProperties() {
  if (PmmsOutputs().empty()) return "no PMMS outputs were collected";
  for (const auto& [inst, report] : PmmsOutputs()) {
    const int n = inst.num_agents();
    const Subset all = Subset::All(inst.num_goods);
    if (!IsEf1(inst, report.allocation).holds) {
      return "a PMMS output is not EF1 (n " + std::to_string(n) + ", m " +
             std::to_string(inst.num_goods) + ")";
    }
    SharesTable brute;
    for (int i = 0; i < n; ++i) {
      brute.Put({i, n, all, ExhaustiveMms(inst.valuation(i), n, all), {}});
    }
    if (!IsMms(inst, report.allocation, MakeRational(1, 2 * n - 1), brute)
             .holds) {
      return "a PMMS output is not 1/" + std::to_string(2 * n - 1) +
             "-MMS (n " + std::to_string(n) + ", m " +
             std::to_string(inst.num_goods) + ")";
    }
  }

  for (const std::string& family : RankFamilies()) {
    for (std::uint64_t seed = 30; seed <= 32; ++seed) {
      for (int m = 6; m <= 8; m += 2) {
        Instance inst = SeededInstance(seed, 3, m, family);
        const Subset all = Subset::All(m);
        for (int subset_bits = 1; subset_bits < 8; ++subset_bits) {
          std::vector<int> members;
          for (int i = 0; i < 3; ++i) {
            if (subset_bits & (1 << i)) members.push_back(i);
          }
          int share_sum = 0;
          for (int i : members) {
            share_sum += MmsBrute(inst.valuation(i),
                                  static_cast<int>(members.size()), all);
          }
          int bound = UnionRank(inst, all, members);
          if (share_sum > bound) {
            return "family " + family + " seed " + std::to_string(seed) +
                   " m " + std::to_string(m) + ": share sum " +
                   std::to_string(share_sum) + " exceeds union rank " +
                   std::to_string(bound);
          }
        }
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 8. Two runs of any CLI command produce byte-identical stdout and the same
//    exit code, and the documented exit-code examples hold.

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult RunCommand(const std::string& command) {
  CommandResult result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.output.append(buffer, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string CliDeterminism() {
  const std::string ef1 = g_fixtures + "/ef1-not-pmms.json";
  const std::string reference =
      g_fixtures + "/ef1-not-pmms-reference-allocation.json";
  const std::string xos = g_fixtures + "/xos-4.json";
  const std::string wrank = g_fixtures + "/wrank-4.json";
  const std::string one_agent = "acceptance-one-agent.json";

  CommandResult gen = RunCommand(g_cli +
                                 " gen --seed 1 --family uniform --agents 1 "
                                 "--goods 3 --out " +
                                 one_agent);
  if (gen.exit_code != 0) return "gen --out failed";

  // command, expected exit code (-1 = only require both runs to agree)
  const std::vector<std::pair<std::string, int>> commands = {
      {"solve --fairness mms --input " + ef1 + " --verify", 0},
      {"solve --fairness mms --input " + ef1 + " --json", 0},
      {"solve --fairness pmms --input " + ef1, 0},
      {"solve --fairness mms --input " + xos, 2},
      {"solve --fairness pmms --input " + one_agent, 0},
      {"shares --k 2 --input " + ef1, 0},
      {"shares --k 2 --input " + xos, 0},
      {"check --property pmms --input " + ef1 + " --allocation " + reference,
       0},
      {"check --property ef1 --input " + ef1 + " --allocation " + reference +
           " --json",
       0},
      {"certify-no-mms --input " + xos, 0},
      {"certify-no-mms --input " + wrank + " --json", 0},
      {"gen --seed 42 --family transversal --agents 2 --goods 7", 0},
      {"validate --input " + ef1, 0},
  };

  for (const auto& [args, expected] : commands) {
    CommandResult first = RunCommand(g_cli + " " + args);
    CommandResult second = RunCommand(g_cli + " " + args);
    if (first.output != second.output || first.exit_code != second.exit_code) {
      return "two runs of \"" + args + "\" differ";
    }
    if (expected >= 0 && first.exit_code != expected) {
      return "\"" + args + "\" exited " + std::to_string(first.exit_code) +
             ", expected " + std::to_string(expected);
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// 9. The MMS solver's value-oracle usage on (n=4, m=8) instances stays below
//    the frozen regression bound for every family, evidence that no hidden
//    exhaustive search runs.

std::string QueryBudget() {
  constexpr std::int64_t kBudget = 4096;  // measured max 2796 across families
  for (const std::string& family : RankFamilies()) {
    Instance inst = SeededInstance(2026, 4, 8, family);
    inst.ResetQueryCounts();
    SolveMms(inst);
    std::int64_t queries = inst.TotalQueryCount();
    if (queries > kBudget) {
      return "family " + family + " used " + std::to_string(queries) +
             " queries, budget " + std::to_string(kBudget);
    }
  }
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--cli") {
      g_cli = argv[i + 1];
    } else if (flag == "--fixtures") {
      g_fixtures = argv[i + 1];
    } else {
      std::cerr << "unknown flag: " << flag << "\n";
      return 2;
    }
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::cerr << "usage: fairdiv_acceptance --cli PATH --fixtures DIR\n";
    return 2;
  }

  const std::vector<std::pair<std::string, std::string (*)()>> criteria = {
      {"union, convolution, and exhaustive welfare agree", RankAgreement},
      {"mms solver is welfare-optimal and meets every share",
       MmsSolverCorrectness},
      {"pmms solver is welfare-optimal and meets every pairwise share",
       PmmsSolverCorrectness},
      {"fast shares equal brute shares under the k-fold bound",
       FastSharesEqualBrute},
      {"nonexistence certified on both four-good fixtures",
       NonexistenceFixtures},
      {"six-good fixture verdicts and solver guarantees",
       SixGoodFixtureVerdicts},
      {"pmms outputs are ef1 and fractionally mms; share sums bounded",
       ImplicationProperties},
      {"cli reports are deterministic with documented exit codes",
       CliDeterminism},
      {"mms solver stays within the frozen query budget", QueryBudget},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string error;
    try {
      error = criteria[i].second();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    if (error.empty()) {
      std::cout << "[PASS] " << i + 1 << " " << criteria[i].first << "\n";
    } else {
      std::cout << "[FAIL] " << i + 1 << " " << criteria[i].first << ": "
                << error << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
