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

import os
from fractions import Fraction

import pytest

import balcap

DATA = os.environ.get(
    "BALCAP_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data")
)
LABELS = ["1", "2", "3", "4", "5", "6"]
BLOCKS = [["1", "2", "3"], ["1", "4", "5"], ["2", "5", "6"], ["3", "4", "6"]]
TWO_THIRDS = Fraction(2, 3)


def four_block(skip=None):
    return balcap.realize(
        LABELS, [(b, TWO_THIRDS) for i, b in enumerate(BLOCKS, 1) if i != skip]
    )


def test_load_and_value():
    nu0 = balcap.load_game(os.path.join(DATA, "nu0.json"))
    assert nu0 == four_block()
    assert nu0(["1", "2", "3"]) == TWO_THIRDS
    assert nu0(["1", "2"]) == 0
    assert nu0(LABELS) == 1


def test_balancedness():
    nu0 = four_block()
    assert balcap.balancedness_value(nu0) == Fraction(4, 3)
    verdict = balcap.check_balanced(nu0)
    assert verdict["balanced"] is False
    assert verdict["certificate"]["value"] == "4/3"
    assert [i["lambda"] for i in verdict["certificate"]["items"]] == ["1/2"] * 4
    assert balcap.core_element(nu0) is None

    nu1 = four_block(skip=1)
    witness = balcap.core_element(nu1)
    assert sum(witness.values()) == 1
    assert balcap.in_core(witness, nu1)
    uniform = {x: Fraction(1, 3) if x in "456" else Fraction(0) for x in LABELS}
    assert balcap.in_core(uniform, nu1)


def test_integrals():
    nu0 = four_block()
    chi = {x: Fraction(1 if x in "123" else 0) for x in LABELS}
    assert balcap.choquet(nu0, chi) == TWO_THIRDS
    for t in ("min", "product", "lukasiewicz"):
        assert balcap.tnorm_integral(nu0, chi, t) == TWO_THIRDS
    with pytest.raises(balcap.BalcapError):
        balcap.tnorm_integral(nu0, chi, "drastic")


def test_functor_and_monad():
    nu0 = four_block()
    image = balcap.pushforward(
        nu0, ["a", "b"], {x: "a" if x in "123" else "b" for x in LABELS}
    )
    assert image(["a"]) == TWO_THIRDS
    d = balcap.dirac(["x", "y"], "y")
    assert d(["y"]) == 1 and d(["x"]) == 0
    second = [(b, TWO_THIRDS, TWO_THIRDS) for b in BLOCKS]
    assert balcap.monad_mult(LABELS, second) == nu0


def test_validation_errors():
    table = {"": 0, "a": Fraction(1, 2), "b": 0, "c": 0, "a,b": Fraction(1, 4),
             "a,c": Fraction(1, 2), "b,c": 0, "a,b,c": 1}
    with pytest.raises(balcap.BalcapError, match="NotMonotone"):
        balcap.from_table(["a", "b", "c"], table)
    table["a,b"] = Fraction(1, 2)
    assert balcap.from_table(["a", "b", "c"], table)(["a"]) == Fraction(1, 2)


def test_repro():
    report = balcap.repro_counterexample()
    assert [c["pass"] for c in report["checks"]] == [True] * 5
