"""Discrete Choquet integrals on finite ordered set systems, computed exactly."""

from .choquet import (
    IntegralResult,
    classical_integral,
    extension_hat,
    integral,
    integral_shifted,
    lehrer_integral,
)
from .errors import ChoquetError
from .monge import certify, monge_functional
from .monge import run as monge_run
from .set_system import GroundSet, SetSystem, build, classify, maximal_in, restrict
from .valuation import Valuation, cumulative, decompose, is_belief, mobius_inverse

__version__ = "0.1.0"

__all__ = [
    "ChoquetError",
    "GroundSet",
    "IntegralResult",
    "SetSystem",
    "Valuation",
    "build",
    "certify",
    "classical_integral",
    "classify",
    "cumulative",
    "decompose",
    "extension_hat",
    "integral",
    "integral_shifted",
    "is_belief",
    "lehrer_integral",
    "maximal_in",
    "mobius_inverse",
    "monge_functional",
    "monge_run",
    "restrict",
]
