"""Exact non-unique-factorization invariants of numerical monoids.

The heavy lifting lives in the compiled extension ``nsgp._core``; this wrapper
re-exports it and converts exact rational results into ``fractions.Fraction``.
"""

from fractions import Fraction

from ._core import *  # noqa: F401,F403
from ._core import (
    __version__,
    elasticity_of_element as _elasticity_raw,
    gas_bounds as _gas_bounds_raw,
)


def elasticity_of_element(S, n):
    """max L(n) / min L(n) as an exact ``Fraction``."""
    return Fraction(*_elasticity_raw(S, n))


def gas_bounds(P):
    """Bound data with the rationals converted to ``Fraction``."""
    raw = _gas_bounds_raw(P)
    return {
        "B": Fraction(*raw["B"]),
        "B_minus_t": Fraction(*raw["B_minus_t"]),
        "t_minus_c": raw["t_minus_c"],
    }
