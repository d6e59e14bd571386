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

#ifndef SUMPROD_REPORT_IO_HPP_
#define SUMPROD_REPORT_IO_HPP_

#include <optional>
#include <string>

#include "json.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/gauss.hpp"
#include "sumprod/subgroup.hpp"

// Stable JSON and CSV encodings of the report types.
namespace sumprod {

nlohmann::json ToJson(const Field& field);
nlohmann::json ToJson(const EnergyReport& report);
nlohmann::json ToJson(const ChainReport& report);
nlohmann::json ToJson(const GaussReport& report);
nlohmann::json ToJson(const ConditionReport& report);
nlohmann::json ToJson(const SubgroupInfo& info);

// Columns: q,p,m,n,nu,lhs,rhs,ratio,pass. n is blank when absent.
std::string ConditionCsvHeader();
std::string ConditionCsvRow(const Field& field, std::optional<std::uint64_t> n,
                            const ConditionReport& report);

// Columns: q,p,m,n,a,re,im,abs,weil,konyagin,paper_bound,ratio_weil,
// ratio_paper.
std::string GaussCsvHeader();
std::string GaussCsvRow(const Field& field, const GaussReport& report);

}  // namespace sumprod

#endif  // SUMPROD_REPORT_IO_HPP_
