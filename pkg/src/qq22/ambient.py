"""Correlators with only ambient insertions.

These are the leaf case of the general reduction: once every primitive
insertion has been eliminated, the remaining computation closes over the
three-point data and the slot-0/slot-1/WDVV moves.  The heavy lifting lives
in the engine; this module pins the ambient-only contract (exponent vectors
over slots 0..n, plain rational values) and shares the engine's cache.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import get_engine
from .model import TAU, T


def ambient_correlator(n, index, basis=TAU, engine=None) -> Fraction:
    """Exact value of an ambient-only correlator.

    ``index`` may list exponents for slots 0..n or for the full basis; any
    primitive exponent is an error.  ``basis`` selects small-quantum (TAU)
    or cup-product (T) coordinates.
    """
    eng = engine if engine is not None else get_engine(n)
    index = tuple(int(v) for v in index)
    if len(index) == n + 1:
        index = index + (0,) * (n + 3)
    elif len(index) == 2 * n + 4:
        if any(index[n + 1 :]):
            raise ValueError("ambient correlator got primitive exponents")
    else:
        raise ValueError("index must have %d or %d entries" % (n + 1, 2 * n + 4))
    if basis == TAU:
        poly = eng.correlator_tau(index)
    elif basis == T:
        poly = eng.correlator_t(index)
    else:
        raise ValueError("basis must be %r or %r" % (TAU, T))
    if poly.degree > 0:
        raise ArithmeticError("ambient correlator depends on the unknown")
    return Fraction(poly[0]) if poly.coeffs else Fraction(0)
