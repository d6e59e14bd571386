// Copyright 2026 The sumprod-lab Authors.
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

// sumprod-lab: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/gauss.hpp"
#include "sumprod/report_io.hpp"
#include "sumprod/setops.hpp"
#include "sumprod/subgroup.hpp"
#include "sumprod/sweep.hpp"
#include "sumprod/verify.hpp"

namespace {

using nlohmann::json;
using namespace sumprod;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct FieldArgs {
  std::uint64_t p = 0;
  int m = 1;
};

void AddFieldOptions(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "Characteristic")->required();
  cmd->add_option("--m", args.m, "Extension degree")->default_val(1);
}

void PrintJson(const json& j) { std::cout << j.dump(2) << "\n"; }

int FieldInfo(const FieldArgs& fa, bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  if (as_json) {
    PrintJson(ToJson(*f));
    return kExitOk;
  }
  std::cout << "q = " << f->order() << " (p = " << f->characteristic()
            << ", m = " << f->degree() << ")\nmodulus (a_0..a_m):";
  for (auto c : f->modulus()) std::cout << ' ' << c;
  std::cout << "\ngenerator: " << f->generator().code << "\n";
  return kExitOk;
}

int Prodset(const FieldArgs& fa, const std::string& a_text,
            const std::string& b_text, bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  const ESet a = ESet::Parse(f, a_text);
  const ESet b = ESet::Parse(f, b_text);
  const ESet ab = ProductSet(a, b);
  if (as_json) {
    PrintJson({{"A", a.size()},
               {"B", b.size()},
               {"size", ab.size()},
               {"elements", std::vector<std::uint32_t>(ab.codes().begin(),
                                                       ab.codes().end())}});
  } else {
    std::cout << "|AB| = " << ab.size() << "\n" << ab.ToString() << "\n";
  }
  return kExitOk;
}

int EnergyCmd(const FieldArgs& fa, const std::string& a_text,
              const std::string& b_text, const std::string& kind_text,
              bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  const ESet a = ESet::Parse(f, a_text);
  const ESet b = b_text.empty() ? a : ESet::Parse(f, b_text);
  const EnergyKind kind = kind_text == "add" ? EnergyKind::kAdditive
                                             : EnergyKind::kMultiplicative;
  const EnergyReport r = Energy(a, b, kind);
  if (as_json) {
    PrintJson(ToJson(r));
  } else {
    std::cout << EnergyKindName(kind) << " energy = " << r.value
              << " (support " << r.support_size << ")\n";
  }
  return kExitOk;
}

int SubgroupCmd(const FieldArgs& fa, std::uint64_t order, std::uint64_t nth,
                bool check, bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  const SubgroupInfo g = nth ? NthPowers(f, nth) : SubgroupOfOrder(f, order);
  std::vector<ConditionReport> n_rows, field_rows;
  if (check) {
    field_rows = FieldIntersectionCondition(g);
    if (g.n && (f->order() - 1) % *g.n == 0) n_rows = NCondition(f, *g.n);
  }
  if (as_json) {
    json j = ToJson(g);
    if (check) {
      json fr = json::array(), nr = json::array();
      for (const auto& r : field_rows) fr.push_back(ToJson(r));
      for (const auto& r : n_rows) nr.push_back(ToJson(r));
      j["field_intersection"] = fr;
      j["n_condition"] = nr;
    }
    PrintJson(j);
    return kExitOk;
  }
  if (!check) {
    std::cout << "order " << g.order << ": " << g.elements.ToString() << "\n";
    return kExitOk;
  }
  std::cout << "condition," << ConditionCsvHeader() << "\n";
  for (const auto& r : field_rows) {
    std::cout << "field_intersection," << ConditionCsvRow(*f, g.n, r) << "\n";
  }
  for (const auto& r : n_rows) {
    std::cout << "n_condition," << ConditionCsvRow(*f, g.n, r) << "\n";
  }
  return kExitOk;
}

int GaussCmd(const FieldArgs& fa, std::uint64_t n, std::uint64_t a,
             bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  const GaussReport r = BoundsReport(f, n, f->FromCode(a));
  if (as_json) {
    PrintJson(ToJson(r));
  } else {
    std::cout << GaussCsvHeader() << "\n" << GaussCsvRow(*f, r) << "\n";
  }
  return kExitOk;
}

int CountCmd(const FieldArgs& fa, std::uint64_t g_order, std::uint64_t h_order,
             std::uint64_t d, bool as_json) {
  const FieldPtr f = Field::Make(fa.p, fa.m);
  const ESet g = SubgroupOfOrder(f, g_order).elements;
  const ESet h = SubgroupOfOrder(f, h_order).elements;
  const SolutionCount r = CountSolutions(g, h, f->FromCode(d));
  if (as_json) {
    PrintJson({{"count", r.count},
               {"corollary_ratio", r.corollary_ratio},
               {"exponent", r.exponent}});
  } else {
    std::cout << "solutions: " << r.count << "\ncorollary ratio (exponent "
              << r.exponent << "): " << r.corollary_ratio << "\n";
  }
  return kExitOk;
}

int SweepCmd(const std::string& path, unsigned threads) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "cannot read config '" << path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  SweepConfig cfg = ParseSweepConfig(buf.str());
  if (threads) cfg.threads = threads;
  const SweepStats stats = CmdSweep(cfg);
  std::cout << "wrote " << stats.rows << " rows to " << cfg.output << " ("
            << stats.audited << " audited against the oracle)\n";
  std::ifstream fit(cfg.output + ".fit.csv");
  std::cout << fit.rdbuf();
  return kExitOk;
}

int VerifyCmd(const std::string& suite_name, std::uint64_t max_q) {
  const auto suite = ParseSuite(suite_name);
  if (!suite) {
    std::cerr << "unknown suite '" << suite_name << "'\n";
    return kExitUsage;
  }
  VerifyOptions opt;
  opt.max_q = max_q;
  bool ok = true;
  for (const CheckLine& line : RunSuite(*suite, opt)) {
    std::cout << (line.passed ? "PASS " : "FAIL ") << line.suite << "/"
              << line.name << " evaluations=" << line.evaluations;
    if (!line.passed) std::cout << " : " << line.detail;
    std::cout << "\n";
    ok = ok && line.passed;
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumprod-lab: exact sum-product experiments over finite fields"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print single-shot results as JSON");

  FieldArgs fa;
  auto* field = app.add_subcommand("field", "Field information");
  field->require_subcommand(1);
  auto* info = field->add_subcommand("info", "Modulus and generator");
  AddFieldOptions(info, fa);
  info->add_flag("--json", as_json);

  std::string a_text, b_text, kind = "add";
  auto* prodset = app.add_subcommand("prodset", "Product set AB");
  AddFieldOptions(prodset, fa);
  prodset->add_option("--a", a_text, "Set literal, e.g. 1,2,4")->required();
  prodset->add_option("--b", b_text, "Set literal")->required();
  prodset->add_flag("--json", as_json);

  auto* energy = app.add_subcommand("energy", "Additive or multiplicative energy");
  AddFieldOptions(energy, fa);
  energy->add_option("--a", a_text)->required();
  energy->add_option("--b", b_text);
  energy->add_option("--kind", kind)
      ->check(CLI::IsMember({"add", "mult"}))
      ->default_val("add");
  energy->add_flag("--json", as_json);

  std::uint64_t order = 0, nth = 0;
  bool check = false;
  auto* subgroup = app.add_subcommand("subgroup", "Multiplicative subgroup");
  AddFieldOptions(subgroup, fa);
  auto* order_opt = subgroup->add_option("--order", order, "Subgroup order");
  auto* nth_opt = subgroup->add_option("--nth", nth, "Group of n-th powers");
  order_opt->excludes(nth_opt);
  subgroup->add_flag("--check-conditions", check,
                     "Report subfield conditions as CSV");
  subgroup->add_flag("--json", as_json);

  std::uint64_t n = 0, a_code = 0;
  auto* gauss = app.add_subcommand("gauss", "Gauss sum with bounds");
  AddFieldOptions(gauss, fa);
  gauss->add_option("--n", n)->required();
  gauss->add_option("--a", a_code)->required();
  gauss->add_flag("--json", as_json);

  std::uint64_t g_order = 0, h_order = 0, d_code = 0;
  auto* count = app.add_subcommand("count", "Solutions of g - h = d");
  AddFieldOptions(count, fa);
  count->add_option("--g-order", g_order)->required();
  count->add_option("--h-order", h_order)->required();
  count->add_option("--d", d_code)->required();
  count->add_flag("--json", as_json);

  std::string config_path;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Reproducible growth sweep");
  sweep->add_option("--config", config_path, "JSON config")->required();
  sweep->add_option("--threads", threads, "Override config thread count");

  std::string suite_name;
  std::uint64_t max_q = 4096;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite_name,
                     "all|identities|bounds|oracle|gauss|subfields")
      ->required();
  verify->add_option("--max-q", max_q)->default_val(4096);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*info) return FieldInfo(fa, as_json);
    if (*prodset) return Prodset(fa, a_text, b_text, as_json);
    if (*energy) return EnergyCmd(fa, a_text, b_text, kind, as_json);
    if (*subgroup) {
      if (!*order_opt && !*nth_opt) {
        std::cerr << "subgroup: one of --order or --nth is required\n";
        return kExitUsage;
      }
      return SubgroupCmd(fa, order, nth, check, as_json);
    }
    if (*gauss) return GaussCmd(fa, n, a_code, as_json);
    if (*count) return CountCmd(fa, g_order, h_order, d_code, as_json);
    if (*sweep) return SweepCmd(config_path, threads);
    if (*verify) return VerifyCmd(suite_name, max_q);
  } catch (const Error& e) {
    std::cerr << "error (" << ErrcName(e.code()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
