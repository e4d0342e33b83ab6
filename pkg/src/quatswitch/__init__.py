"""Exact 2x2 split-quaternion switches and the link invariants they define."""

from .field import QQ, QT, PrimeField, Rationals, RationalFunctions, Scalar, parse_field
from .quat2 import Mat2, Traceless
from .switch import Switch, fe_residual, make_noncommutative_switch, yang_baxter_check
from .solver import HyperbolicParams, classify_pair, enumerate_solutions, hyperbolic_family

__all__ = [
    "QQ", "QT", "PrimeField", "Rationals", "RationalFunctions", "Scalar", "parse_field",
    "Mat2", "Traceless", "Switch", "fe_residual", "make_noncommutative_switch",
    "yang_baxter_check", "HyperbolicParams", "classify_pair", "enumerate_solutions",
    "hyperbolic_family",
]
__version__ = "0.1.0"
