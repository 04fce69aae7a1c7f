"""Backend selection for the reduction and rank kernels.

The compiled extension is used when it imports; ``GRASSGB_PURE_PYTHON=1``
forces the fallback.  ``BACKEND`` names the active choice.
"""

import os

from . import _pykernel

try:
    if os.environ.get("GRASSGB_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"
_impl = _ckernel if _ckernel is not None else _pykernel

# uint32 rows in the compiled kernel
_C_BOUND_LIMIT = 2**31


def backends():
    """Map backend name to module for every backend that is available."""
    out = {"python": _pykernel}
    if _ckernel is not None:
        out["cython"] = _ckernel
    return out


def top_reduce(terms, gens, full, bound):
    """Leading-monomial reduction of a descending term list.

    ``terms`` and each generator are lists of exponent tuples in order
    coordinates, sorted descending.  Returns ``(remainder, steps)`` with
    steps as ``(multiplier, generator_index)``; the lowest index wins when
    several leading monomials divide.  With ``full`` false, stops at the
    first irreducible leading term; otherwise moves it to the remainder
    and continues.
    """
    if bound > _C_BOUND_LIMIT:
        return _pykernel.top_reduce(terms, gens, full, bound)
    return _impl.top_reduce(terms, gens, full, bound)


def gf2_rank(rows):
    """Rank over GF(2) of integer bitmask rows."""
    return _impl.gf2_rank(rows)
