# Copyright 2026 The sumprod-lab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Finite field sum-product toolkit."""

from ._core import (
    CheckFailure,
    Field,
    c4,
    count_solutions,
    difference_set,
    energy,
    gauss_report,
    gauss_sum,
    identity_check,
    n_condition,
    nth_powers,
    plunnecke,
    product_set,
    subfield,
    subgroup,
    sum_set,
    sweep_csv,
)

__all__ = [
    "CheckFailure",
    "Field",
    "c4",
    "count_solutions",
    "difference_set",
    "energy",
    "gauss_report",
    "gauss_sum",
    "identity_check",
    "n_condition",
    "nth_powers",
    "plunnecke",
    "product_set",
    "subfield",
    "subgroup",
    "sum_set",
    "sweep_csv",
]
