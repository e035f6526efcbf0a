# Copyright 2026 The balcap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Balanced capacities, cores, Choquet and t-normed integrals.

Values are exact: every number crosses the boundary as fractions.Fraction.
Subsets are lists of labels.
"""

from ._core import (
    BalcapError,
    Capacity,
    balancedness_value,
    check_balanced,
    choquet,
    core_element,
    dirac,
    from_table,
    in_core,
    load_game,
    monad_mult,
    parse_game,
    pushforward,
    realize,
    repro_counterexample,
    tnorm_integral,
)

__all__ = [
    "BalcapError",
    "Capacity",
    "balancedness_value",
    "check_balanced",
    "choquet",
    "core_element",
    "dirac",
    "from_table",
    "in_core",
    "load_game",
    "monad_mult",
    "parse_game",
    "pushforward",
    "realize",
    "repro_counterexample",
    "tnorm_integral",
]
