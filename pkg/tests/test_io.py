import json
from fractions import Fraction

import pytest

from ordchoquet.errors import DimensionMismatch
from ordchoquet.io import (
    decimal,
    render,
    system_from_json,
    system_to_json,
    valuation_from_json,
    valuation_to_json,
    weighting_from_json,
    weighting_to_json,
)


def test_render_and_decimal():
    assert render(Fraction(3)) == "3"
    assert render(Fraction(-2, 6)) == "-1/3"
    assert decimal(Fraction(1, 3)) == "0.333333333333"


def test_system_roundtrip(eight):
    again = system_from_json(system_to_json(eight))
    assert again.masks == eight.masks


def test_valuation_keys_follow_input_order(tmp_path):
    sys = system_from_json({"ground": [1, 2], "family": [[1], [2], [1, 2]], "order": "containment"})
    v = valuation_from_json(sys, {"values": {"2": "1/2", "0": 3}})
    assert v[sys.index([1, 2])] == Fraction(1, 2)
    assert v[sys.index([1])] == 3
    assert v[sys.index([2])] == 0
    path = tmp_path / "v.json"
    path.write_text(json.dumps(valuation_to_json(v)))
    assert valuation_from_json(sys, str(path)) == v


def test_decimal_literals_parse_exactly(tmp_path):
    sys = system_from_json({"ground": ["a"], "family": [["a"]]})
    path = tmp_path / "v.json"
    path.write_text('{"values": [0.1]}')
    assert valuation_from_json(sys, str(path))[0] == Fraction(1, 10)


def test_weighting_forms():
    sys = system_from_json({"ground": ["x", "y"], "family": [["x", "y"]]})
    assert weighting_from_json(sys, {"values": {"y": 2}}) == (0, 2)
    assert weighting_from_json(sys, [1, "1/2"]) == (1, Fraction(1, 2))
    assert weighting_to_json((1, Fraction(1, 2))) == {"values": ["1", "1/2"]}
    with pytest.raises(DimensionMismatch):
        weighting_from_json(sys, [1])
