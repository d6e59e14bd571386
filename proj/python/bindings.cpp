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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sumprod/energy.hpp"
#include "sumprod/error.hpp"
#include "sumprod/field.hpp"
#include "sumprod/gauss.hpp"
#include "sumprod/setops.hpp"
#include "sumprod/subgroup.hpp"
#include "sumprod/sweep.hpp"

namespace py = pybind11;
using namespace sumprod;

namespace {

using Codes = std::vector<std::uint32_t>;
// pybind11 holders cannot be pointers to const; fields are immutable anyway.
using PyFieldPtr = std::shared_ptr<Field>;

ESet ToSet(const PyFieldPtr& f, const Codes& codes) { return ESet(f, codes); }

Codes FromSet(const ESet& s) { return {s.codes().begin(), s.codes().end()}; }

EnergyKind ParseKind(const std::string& kind) {
  if (kind == "add" || kind == "additive") return EnergyKind::kAdditive;
  if (kind == "mult" || kind == "multiplicative") {
    return EnergyKind::kMultiplicative;
  }
  throw Error(Errc::kPrecondition, "kind must be 'add' or 'mult'");
}

py::dict GaussDict(const GaussReport& r) {
  py::dict d;
  d["n"] = r.n;
  d["a"] = r.a.code;
  d["value"] = r.value;
  d["abs"] = r.abs;
  d["weil"] = r.weil;
  d["konyagin"] = r.konyagin;
  d["paper_bound"] = r.paper_bound;
  d["subgroup_sum"] = r.subgroup_sum;
  d["subgroup_energy"] = r.subgroup_energy;
  d["ratio_weil"] = r.ratio_weil;
  d["ratio_paper"] = r.ratio_paper;
  return d;
}

py::list ConditionList(const std::vector<ConditionReport>& rows) {
  py::list out;
  for (const auto& r : rows) {
    py::dict d;
    d["nu"] = r.nu;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["ratio"] = r.ratio;
    d["pass"] = r.pass_at_constant_one;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite field sum-product toolkit";

  static py::exception<CheckFailure> check_failure(m, "CheckFailure",
                                                   PyExc_AssertionError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CheckFailure& e) {
      check_failure(e.what());
    }
  });

  py::class_<Field, PyFieldPtr>(m, "Field")
      .def(py::init([](std::uint64_t p, int deg) { 
             return std::const_pointer_cast<Field>(Field::Make(p, deg));
           }),
           py::arg("p"), py::arg("m") = 1)
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("m", &Field::degree)
      .def_property_readonly("q", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("generator",
                             [](const Field& f) { return f.generator().code; })
      .def("add", [](const Field& f, std::uint32_t x, std::uint32_t y) {
        return Arith(f, ArithOp::kAdd, {x}, y).code;
      })
      .def("sub", [](const Field& f, std::uint32_t x, std::uint32_t y) {
        return Arith(f, ArithOp::kSub, {x}, y).code;
      })
      .def("mul", [](const Field& f, std::uint32_t x, std::uint32_t y) {
        return Arith(f, ArithOp::kMul, {x}, y).code;
      })
      .def("inv", [](const Field& f, std::uint32_t x) {
        return Arith(f, ArithOp::kInv, {x}).code;
      })
      .def("pow", [](const Field& f, std::uint32_t x, std::uint64_t e) {
        return Arith(f, ArithOp::kPow, {x}, e).code;
      })
      .def("trace", [](const Field& f, std::uint32_t x) {
        Require(f.IsValid({x}), Errc::kInvalidElement, "element outside field");
        return f.Trace({x}).code;
      })
      .def("order_of", [](const Field& f, std::uint32_t x) {
        Require(f.IsValid({x}) && x != 0, Errc::kInvalidElement,
                "element must be a nonzero field element");
        return f.MultiplicativeOrder({x});
      })
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.characteristic()) +
               ", m=" + std::to_string(f.degree()) + ")";
      });

  m.def("product_set", [](const PyFieldPtr& f, const Codes& a, const Codes& b) {
    return FromSet(ProductSet(ToSet(f, a), ToSet(f, b)));
  });
  m.def("sum_set", [](const PyFieldPtr& f, const Codes& a, const Codes& b) {
    return FromSet(SumSet(ToSet(f, a), ToSet(f, b)));
  });
  m.def("difference_set", [](const PyFieldPtr& f, const Codes& a, const Codes& b) {
    return FromSet(DifferenceSet(ToSet(f, a), ToSet(f, b)));
  });
  m.def(
      "energy",
      [](const PyFieldPtr& f, const Codes& a, std::optional<Codes> b,
         const std::string& kind) {
        return EnergyValue(ToSet(f, a), ToSet(f, b ? *b : a), ParseKind(kind));
      },
      py::arg("field"), py::arg("a"), py::arg("b") = py::none(),
      py::arg("kind") = "add");
  m.def("c4", [](const PyFieldPtr& f, const Codes& a_prime, const Codes& c,
                 std::uint32_t y1, std::uint32_t y2, std::uint32_t y3) {
    return C4(ToSet(f, a_prime), ToSet(f, c), {y1}, {y2}, {y3});
  });
  m.def("identity_check",
        [](const PyFieldPtr& f, std::uint32_t a1, std::uint32_t a2,
           std::uint32_t a3, std::uint32_t c, std::uint32_t b, std::uint32_t d) {
          return IdentityCheck(*f, {a1}, {a2}, {a3}, {c}, {b}, {d});
        });
  m.def("plunnecke",
        [](const PyFieldPtr& f, const Codes& y, const std::vector<Codes>& xs,
           const std::string& mode) {
          std::vector<ESet> sets;
          for (const auto& x : xs) sets.push_back(ToSet(f, x));
          const auto r = PlunneckeCheck(
              ToSet(f, y), sets,
              ParseKind(mode) == EnergyKind::kAdditive ? GroupMode::kAdditive
                                                       : GroupMode::kMultiplicative);
          return py::make_tuple(r.lhs, r.rhs);
        },
        py::arg("field"), py::arg("y"), py::arg("xs"), py::arg("mode") = "add");
  m.def("subgroup", [](const PyFieldPtr& f, std::uint64_t order) {
    return FromSet(SubgroupOfOrder(f, order).elements);
  });
  m.def("nth_powers", [](const PyFieldPtr& f, std::uint64_t n) {
    return FromSet(NthPowers(f, n).elements);
  });
  m.def("subfield", [](const PyFieldPtr& f, int nu) { return FromSet(Subfield(f, nu)); });
  m.def("count_solutions", [](const PyFieldPtr& f, const Codes& g, const Codes& h,
                              std::uint32_t d) {
    return CountSolutions(ToSet(f, g), ToSet(f, h), {d}).count;
  });
  m.def("n_condition", [](const PyFieldPtr& f, std::uint64_t n) {
    return ConditionList(NCondition(f, n));
  });
  m.def("gauss_sum", [](const PyFieldPtr& f, std::uint64_t n, std::uint32_t a) {
    Require(f->IsValid({a}), Errc::kInvalidElement, "element outside field");
    return GaussDirect(*f, n, {a});
  });
  m.def("gauss_report", [](const PyFieldPtr& f, std::uint64_t n, std::uint32_t a) {
    Require(f->IsValid({a}), Errc::kInvalidElement, "element outside field");
    return GaussDict(BoundsReport(f, n, {a}));
  });
  m.def("sweep_csv", [](const std::string& config_json, unsigned threads) {
    SweepConfig cfg = ParseSweepConfig(config_json);
    if (threads > 0) cfg.threads = threads;
    const auto rows = RunSweep(cfg);
    return FormatSweepCsv(rows);
  }, py::arg("config_json"), py::arg("threads") = 0);
}
