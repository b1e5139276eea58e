"""Marked order and chain polytopes in exact arithmetic.

Rational inputs may be ints, Fractions or strings like "3/2"; rational
outputs are Fractions and counts are ints.
"""

from fractions import Fraction

from . import _core
from ._core import Error, MarkedPoset, parse, run_cli

__all__ = [
    "Error", "MarkedPoset", "parse", "run_cli", "count", "enumerate_points", "ehrhart",
    "order_hrep", "chain_hrep", "phi_tilde", "psi_tilde", "verify", "gt_poset", "sp_poset",
    "bz_poset", "ffl_hrep", "weyl_dim",
]


def _strs(values):
    return [str(Fraction(v)) for v in values]


def _fracs(values):
    return [Fraction(v) for v in values]


def _system(raw):
    return {
        "variables": raw["variables"],
        "rows": [(_fracs(c), Fraction(b)) for c, b in raw["rows"]],
        "nonnegative": raw["nonnegative"],
    }


def count(poset, polytope, grid=1):
    return int(_core.count(poset, polytope, grid))


def enumerate_points(poset, polytope, grid=1):
    return [tuple(_fracs(p)) for p in _core.enumerate(poset, polytope, grid)]


def ehrhart(poset, polytope):
    """Coefficients in ascending powers of t."""
    return _fracs(_core.ehrhart(poset, polytope))


def order_hrep(poset):
    return _system(_core.order_hrep(poset))


def chain_hrep(poset):
    return _system(_core.chain_hrep(poset))


def phi_tilde(poset, x):
    return tuple(_fracs(_core.phi_tilde(poset, _strs(x))))


def psi_tilde(poset, y):
    return tuple(_fracs(_core.psi_tilde(poset, _strs(y))))


def verify(poset, grid=1):
    """List of (check, status, detail) with status PASS, FAIL or SKIP."""
    return _core.verify(poset, grid)


def gt_poset(weight):
    return _core.gt_poset(_strs(weight))


def sp_poset(weight):
    return _core.sp_poset(_strs(weight))


def bz_poset(lie_type, weight):
    return _core.bz_poset(lie_type, _strs(weight))


def ffl_hrep(weight):
    return _system(_core.ffl_hrep(_strs(weight)))


def weyl_dim(lie_type, weight):
    return int(_core.weyl_dim(lie_type, _strs(weight)))
