"""JSON schemas for systems, valuations and weightings.

System::

    {"ground": [labels], "family": [[labels], ...],
     "order": "trivial" | "containment" | {"pairs": [[i, j], ...]}}

``[i, j]`` means ``F_i <= F_j`` in *input* indexing.  Valuations are
``{"values": {"i": "p/q" | "0.25", ...}}`` keyed by input family index
(unlisted members are 0), or a plain list in input order.  Weightings are
``{"values": [...]}`` in ground order or ``{"values": {label: value}}``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import ChoquetError, DimensionMismatch
from .set_system import SetSystem, build
from .valuation import ZERO, Valuation, as_fraction


def render(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal(x: Fraction) -> str:
    return f"{float(x):.12g}"


def _load(source):
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            return json.load(fh, parse_float=Fraction)
    return source


def system_from_json(source) -> SetSystem:
    data = _load(source)
    try:
        ground, family = data["ground"], data["family"]
    except (KeyError, TypeError):
        raise ChoquetError("system JSON needs 'ground' and 'family'") from None
    order = data.get("order", "trivial")
    if isinstance(order, dict) and "kind" not in order:
        order = {"kind": "explicit", **order}
    return build(ground, family, order)


def system_to_json(sys: SetSystem) -> dict:
    return sys.to_dict()


def valuation_from_json(sys: SetSystem, source) -> Valuation:
    data = _load(source)
    values = data["values"] if isinstance(data, dict) and "values" in data else data
    by_input = [ZERO] * sys.m
    if isinstance(values, dict):
        for key, x in values.items():
            k = int(key)
            if not 0 <= k < sys.m:
                raise ChoquetError(f"valuation key {key} out of range")
            by_input[k] = as_fraction(x)
    else:
        if len(values) != sys.m:
            raise DimensionMismatch(f"valuation has {len(values)} entries, family has {sys.m}")
        by_input = [as_fraction(x) for x in values]
    return Valuation(sys, (by_input[sys.input_index[i]] for i in range(sys.m)))


def valuation_to_json(v: Valuation) -> dict:
    sys = v.sys
    out = {}
    for i, x in enumerate(v.values):
        out[str(sys.input_index[i])] = render(x)
    return {"values": dict(sorted(out.items(), key=lambda kv: int(kv[0])))}


def weighting_from_json(sys: SetSystem, source) -> tuple[Fraction, ...]:
    data = _load(source)
    values = data["values"] if isinstance(data, dict) and "values" in data else data
    if isinstance(values, dict):
        f = [ZERO] * sys.n
        for label, x in values.items():
            try:
                k = sys.ground.position(label)
            except ChoquetError:
                k = sys.ground.position(_maybe_int(label))
            f[k] = as_fraction(x)
        return tuple(f)
    if len(values) != sys.n:
        raise DimensionMismatch(f"weighting has {len(values)} entries, ground set has {sys.n}")
    return tuple(as_fraction(x) for x in values)


def weighting_to_json(f) -> dict:
    return {"values": [render(t) for t in f]}


def _maybe_int(label):
    try:
        return int(label)
    except (TypeError, ValueError):
        return label
