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

#include "sumprod/report_io.hpp"

#include <cstdio>

namespace sumprod {
namespace {

using json = nlohmann::json;

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string FieldPrefix(const Field& f) {
  return std::to_string(f.order()) + ',' + std::to_string(f.characteristic()) +
         ',' + std::to_string(f.degree());
}

}  // namespace

json ToJson(const Field& f) {
  return {{"p", f.characteristic()},
          {"m", f.degree()},
          {"q", f.order()},
          {"modulus", f.modulus()},
          {"generator", f.generator().code}};
}

json ToJson(const EnergyReport& r) {
  json hist = json::array();
  for (const auto& [z, count] : r.histogram) hist.push_back({z, count});
  return {{"kind", EnergyKindName(r.kind)},
          {"value", r.value},
          {"support", r.support_size},
          {"histogram", hist}};
}

json ToJson(const ChainReport& r) {
  json ineq = json::array();
  for (const InequalityRecord& rec : r.inequalities) {
    ineq.push_back(
        {{"name", rec.name}, {"lhs", rec.lhs}, {"rhs", rec.rhs}, {"holds", rec.holds}});
  }
  json ratios = {{"energy_lb", r.energy_lb_ratio},
                 {"K14L12", r.growth.ratio_k14_l12}};
  if (r.rnrs) {
    ratios["rnrs"] = r.rnrs->ratio;
    ratios["rnrs_hypothesis_ok"] = r.rnrs->hypothesis_ok;
  }
  return {{"K", r.growth.k.value()},
          {"L", r.growth.l.value()},
          {"A", r.growth.a_size},
          {"AB", r.growth.ab_size},
          {"ApC", r.growth.apc_size},
          {"energy_AB", r.ab_energy},
          {"ratios", ratios},
          {"inequalities", ineq}};
}

json ToJson(const GaussReport& r) {
  return {{"n", r.n},
          {"a", r.a.code},
          {"re", r.value.real()},
          {"im", r.value.imag()},
          {"abs", r.abs},
          {"weil", r.weil},
          {"konyagin", r.konyagin},
          {"paper_bound", r.paper_bound},
          {"subgroup_sum", {r.subgroup_sum.real(), r.subgroup_sum.imag()}},
          {"subgroup_energy", r.subgroup_energy},
          {"nontrivial_threshold", r.nontrivial_threshold},
          {"below_threshold", r.below_threshold},
          {"ratio_weil", r.ratio_weil},
          {"ratio_paper", r.ratio_paper}};
}

json ToJson(const ConditionReport& r) {
  return {{"nu", r.nu},
          {"lhs", r.lhs},
          {"rhs", r.rhs},
          {"ratio", r.ratio},
          {"pass", r.pass_at_constant_one}};
}

json ToJson(const SubgroupInfo& g) {
  json j = {{"order", g.order},
            {"elements", std::vector<std::uint32_t>(g.elements.codes().begin(),
                                                    g.elements.codes().end())},
            {"generator_power", g.generator_power.code}};
  j["n"] = g.n ? json(*g.n) : json(nullptr);
  return j;
}

std::string ConditionCsvHeader() { return "q,p,m,n,nu,lhs,rhs,ratio,pass"; }

std::string ConditionCsvRow(const Field& f, std::optional<std::uint64_t> n,
                            const ConditionReport& r) {
  return FieldPrefix(f) + ',' + (n ? std::to_string(*n) : std::string()) +
         ',' + std::to_string(r.nu) + ',' + std::to_string(r.lhs) + ',' +
         Num(r.rhs) + ',' + Num(r.ratio) + ',' +
         (r.pass_at_constant_one ? "true" : "false");
}

std::string GaussCsvHeader() {
  return "q,p,m,n,a,re,im,abs,weil,konyagin,paper_bound,ratio_weil,ratio_paper";
}

std::string GaussCsvRow(const Field& f, const GaussReport& r) {
  return FieldPrefix(f) + ',' + std::to_string(r.n) + ',' +
         std::to_string(r.a.code) + ',' + Num(r.value.real()) + ',' +
         Num(r.value.imag()) + ',' + Num(r.abs) + ',' + Num(r.weil) + ',' +
         Num(r.konyagin) + ',' + Num(r.paper_bound) + ',' + Num(r.ratio_weil) +
         ',' + Num(r.ratio_paper);
}

}  // namespace sumprod
