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

#include "sumprod/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "json.hpp"
#include "sumprod/energy.hpp"
#include "sumprod/oracle.hpp"
#include "sumprod/rng.hpp"
#include "sumprod/setops.hpp"

namespace sumprod {
namespace {

using json = nlohmann::json;

[[noreturn]] void ConfigError(const std::string& what) {
  Fail(Errc::kConfig, "sweep config: " + what);
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

Preset ParsePreset(const std::string& name) {
  if (name == "same") return Preset::kSame;
  if (name == "a-a1") return Preset::kAA1;
  if (name == "aa-a1a1") return Preset::kAAA1A1;
  ConfigError("unknown preset '" + name + "'");
}

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

struct Task {
  std::size_t field_index;
  std::uint64_t size;
  std::uint64_t trial;
  bool audit;
};

ResultRow RunTask(const SweepConfig& cfg, const FieldPtr& field,
                  const Task& task) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t q = field->order();
  const ESet a =
      GenerateFamily(field, cfg.family, task.size, cfg.seed, task.trial, 0);
  const ESet shifted = Shift(a, field->One());
  ESet b = a, c = a;
  if (cfg.preset == Preset::kAA1) b = shifted;
  if (cfg.preset == Preset::kAAA1A1) c = shifted;
  if (cfg.b_family) {
    b = GenerateFamily(field, *cfg.b_family, task.size, cfg.seed, task.trial, 1);
  }
  if (cfg.c_family) {
    c = GenerateFamily(field, *cfg.c_family, task.size, cfg.seed, task.trial, 2);
  }

  Elem d;
  if (cfg.fixed_d) {
    d = field->FromCode(*cfg.fixed_d);
    if (d.code == 0) ConfigError("d_policy must be nonzero");
  } else {
    Rng rng(cfg.seed, Mix64(task.trial) ^ Mix64(q) ^ 0xd);
    d = Elem{static_cast<std::uint32_t>(rng.Between(1, q - 1))};
  }

  const GrowthRatios g = ComputeGrowth(a, b, c, d);
  if (task.audit) {
    const auto ab = oracle::ProductSetBrute(a, b);
    const auto apc = oracle::ProductSetBrute(Shift(a, d), c);
    if (ab.size() != g.ab_size || apc.size() != g.apc_size) {
      throw CheckFailure("sweep audit: K or L differs from the oracle");
    }
  }

  ResultRow row;
  row.p = field->characteristic();
  row.m = field->degree();
  row.q = q;
  row.family = cfg.family;
  row.size = a.size();
  row.requested_size = task.size;
  row.trial = task.trial;
  row.seed = cfg.seed;
  row.d = d.code;
  row.k = g.k.value();
  row.l = g.l.value();
  row.max_kl = std::max(row.k, row.l);
  row.measured_exponent =
      row.size >= 2 ? std::log(row.max_kl * static_cast<double>(row.size)) /
                          std::log(static_cast<double>(row.size))
                    : 0.0;
  row.ratio_k14_l12 = g.ratio_k14_l12;
  if (field->degree() == 1) {
    row.hypothesis_ok = row.size * row.size <= row.p;
  } else {
    row.hypothesis_ok =
        CosetScan(ProductSet(a, b), 0.5, ThresholdBase::kSubfieldSize).pass;
  }
  if (cfg.timing) {
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  }
  return row;
}

}  // namespace

SweepConfig ParseSweepConfig(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) ConfigError("top level must be an object");
  static const std::set<std::string> kKeys = {
      "fields", "family",   "sizes",    "trials",  "seed",   "d_policy",
      "outputs", "preset",  "b_family", "c_family", "threads", "timing"};
  for (const auto& [key, _] : j.items()) {
    if (!kKeys.contains(key)) ConfigError("unknown key '" + key + "'");
  }
  for (const char* key : {"fields", "family", "sizes", "seed", "outputs"}) {
    if (!j.contains(key)) ConfigError(std::string("missing key '") + key + "'");
  }

  SweepConfig cfg;
  const json& fields = j["fields"];
  if (!fields.is_array() || fields.empty()) {
    ConfigError("'fields' must be a nonempty array");
  }
  for (const json& f : fields) {
    std::uint64_t p = 0;
    int m = 0;
    if (f.is_array() && f.size() == 2 && f[0].is_number_unsigned() &&
        f[1].is_number_integer()) {
      p = f[0].get<std::uint64_t>();
      m = f[1].get<int>();
    } else if (f.is_object() && f.contains("p") && f.contains("m")) {
      p = Get<std::uint64_t>(f, "p");
      m = Get<int>(f, "m");
    } else {
      ConfigError("each field must be [p, m] or {\"p\": P, \"m\": M}");
    }
    cfg.fields.emplace_back(p, m);
  }
  cfg.family = ParseFamily(Get<std::string>(j, "family"));
  cfg.sizes = Get<std::vector<std::uint64_t>>(j, "sizes");
  if (cfg.sizes.empty()) ConfigError("'sizes' must be nonempty");
  if (j.contains("trials")) cfg.trials = Get<std::uint64_t>(j, "trials");
  if (cfg.trials < 1) ConfigError("'trials' must be at least 1");
  cfg.seed = Get<std::uint64_t>(j, "seed");
  if (j.contains("d_policy")) {
    const json& d = j["d_policy"];
    if (d.is_string() && d.get<std::string>() == "random_nonzero") {
      cfg.fixed_d.reset();
    } else if (d.is_number_unsigned() && d.get<std::uint64_t>() != 0) {
      cfg.fixed_d = d.get<std::uint64_t>();
    } else {
      ConfigError("'d_policy' must be a nonzero code or \"random_nonzero\"");
    }
  }
  cfg.output = Get<std::string>(j, "outputs");
  if (j.contains("preset")) cfg.preset = ParsePreset(Get<std::string>(j, "preset"));
  if (j.contains("b_family")) {
    cfg.b_family = ParseFamily(Get<std::string>(j, "b_family"));
  }
  if (j.contains("c_family")) {
    cfg.c_family = ParseFamily(Get<std::string>(j, "c_family"));
  }
  if (j.contains("threads")) cfg.threads = Get<unsigned>(j, "threads");
  if (cfg.threads < 1) ConfigError("'threads' must be at least 1");
  if (j.contains("timing")) cfg.timing = Get<bool>(j, "timing");
  return cfg;
}

std::vector<ResultRow> RunSweep(const SweepConfig& cfg, SweepStats* stats) {
  std::vector<FieldPtr> fields;
  for (const auto& [p, m] : cfg.fields) {
    fields.push_back(Field::Make(p, m));
    if (cfg.fixed_d && *cfg.fixed_d >= fields.back()->order()) {
      ConfigError("d_policy code outside F_" +
                  std::to_string(fields.back()->order()));
    }
  }
  std::vector<Task> tasks;
  for (std::size_t fi = 0; fi < fields.size(); ++fi) {
    for (std::uint64_t size : cfg.sizes) {
      for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t id = tasks.size();
        const bool audit = id == 0 || Mix64(cfg.seed ^ Mix64(id)) % 100 == 0;
        tasks.push_back({fi, size, trial, audit});
      }
    }
  }

  std::vector<ResultRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = RunTask(cfg, fields[tasks[i].field_index], tasks[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(cfg.threads, tasks.size()));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& x, const ResultRow& y) {
                     return std::tie(x.p, x.m, x.size, x.trial,
                                     x.requested_size) <
                            std::tie(y.p, y.m, y.size, y.trial,
                                     y.requested_size);
                   });
  if (stats) {
    stats->rows = rows.size();
    stats->audited = static_cast<std::size_t>(
        std::count_if(tasks.begin(), tasks.end(),
                      [](const Task& t) { return t.audit; }));
  }
  return rows;
}

std::string FormatSweepCsv(std::span<const ResultRow> rows) {
  std::string out = std::string(kCsvVersionLine) + "\n";
  out +=
      "p,m,q,family,size,trial,seed,d,K,L,maxKL,measured_exponent,"
      "ratio_K14L12,hypothesis_ok,runtime_ms\n";
  for (const ResultRow& r : rows) {
    out += std::to_string(r.p) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.q) + ',' + FamilyName(r.family) + ',' +
           std::to_string(r.size) + ',' + std::to_string(r.trial) + ',' +
           std::to_string(r.seed) + ',' + std::to_string(r.d) + ',' +
           Num(r.k) + ',' + Num(r.l) + ',' + Num(r.max_kl) + ',' +
           Num(r.measured_exponent) + ',' + Num(r.ratio_k14_l12) + ',' +
           (r.hypothesis_ok ? "true" : "false") + ',' + Num(r.runtime_ms) +
           '\n';
  }
  return out;
}

ExponentFit FitLine(std::span<const std::pair<double, double>> points) {
  std::set<double> xs;
  for (const auto& [x, _] : points) xs.insert(x);
  Require(xs.size() >= 2, Errc::kPrecondition,
          "exponent fit needs at least two distinct sizes");
  const double n = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = points.size();
  return fit;
}

ExponentFit FitExponent(std::span<const ResultRow> rows) {
  std::vector<std::pair<double, double>> points;
  for (const ResultRow& r : rows) {
    if (r.size < 2) continue;
    const double s = static_cast<double>(r.size);
    points.emplace_back(std::log(s), std::log(r.max_kl * s));
  }
  return FitLine(points);
}

std::string FormatFitCsv(std::span<const ResultRow> rows) {
  std::string out = std::string(kCsvVersionLine) + "\n";
  out += "scope,p,m,points,slope,intercept,target_exponent\n";
  auto distinct_sizes = [](std::span<const ResultRow> rs) {
    std::set<std::uint64_t> s;
    for (const ResultRow& r : rs) {
      if (r.size >= 2) s.insert(r.size);
    }
    return s.size();
  };
  auto target = [](int m) { return m == 1 ? 1.0 + 1.0 / 26 : 1.0 + 1.0 / 559; };
  // Rows are sorted by (p, m), so each field is one contiguous run.
  bool all_prime = true;
  for (std::size_t i = 0; i < rows.size();) {
    std::size_t j = i;
    while (j < rows.size() && rows[j].p == rows[i].p && rows[j].m == rows[i].m) {
      ++j;
    }
    const auto run = rows.subspan(i, j - i);
    all_prime = all_prime && rows[i].m == 1;
    if (distinct_sizes(run) >= 2) {
      const ExponentFit fit = FitExponent(run);
      out += "field," + std::to_string(rows[i].p) + ',' +
             std::to_string(rows[i].m) + ',' + std::to_string(fit.points) +
             ',' + Num(fit.slope) + ',' + Num(fit.intercept) + ',' +
             Num(target(rows[i].m)) + '\n';
    }
    i = j;
  }
  if (distinct_sizes(rows) >= 2) {
    const ExponentFit fit = FitExponent(rows);
    out += "all,,," + std::to_string(fit.points) + ',' + Num(fit.slope) + ',' +
           Num(fit.intercept) + ',' + Num(target(all_prime ? 1 : 2)) + '\n';
  }
  return out;
}

SweepStats CmdSweep(const SweepConfig& config) {
  SweepStats stats;
  const std::vector<ResultRow> rows = RunSweep(config, &stats);
  auto write = [](const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) Fail(Errc::kConfig, "cannot open '" + path + "' for writing");
    out << body;
    if (!out) Fail(Errc::kConfig, "write to '" + path + "' failed");
  };
  write(config.output, FormatSweepCsv(rows));
  write(config.output + ".fit.csv", FormatFitCsv(rows));
  return stats;
}

}  // namespace sumprod
