"""Dense linear-algebra oracle for graded quotients.

Nothing here uses Groebner theory: the degree-d piece of the ideal is the
span of all products m*g of the right degree, and its rank comes from
row reduction over GF(2).
"""

from __future__ import annotations

import os
from typing import Dict, List, Optional, Sequence

from . import kernel
from .errors import ResourceBudgetError
from .groebner import BettiProfile
from .poly import PolyF2, VariableSpec, monomials_of_degree

DEFAULT_MATRIX_CAP = int(os.environ.get("GRASSGB_MATRIX_CAP", 50_000_000))


def _degree_of(g: PolyF2) -> int:
    degs = g.degrees()
    if len(degs) != 1:
        raise ValueError(f"generator {g} is not homogeneous")
    return degs.pop()


def ideal_rows(gens: Sequence[PolyF2], spec: VariableSpec, d: int, index: Dict, cap: int) -> List[int]:
    """Bitmask rows spanning the degree-``d`` part of the ideal."""
    rows = []
    ncols = len(index)
    for g in gens:
        e = _degree_of(g)
        for m in monomials_of_degree(spec, d - e):
            row = 0
            for t in g.terms:
                row ^= 1 << index[tuple(a + b for a, b in zip(m, t))]
            if row:
                rows.append(row)
        if len(rows) * ncols > cap:
            raise ResourceBudgetError(f"degree {d} matrix exceeds {cap} entries")
    return rows


def quotient_dims_bruteforce(
    gens: Sequence[PolyF2],
    max_degree: int,
    spec: Optional[VariableSpec] = None,
    cap: int = DEFAULT_MATRIX_CAP,
) -> BettiProfile:
    """Per-degree dimension of the quotient by the ideal of ``gens``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if spec is None:
        spec = getattr(gens, "spec", None)
    gens = list(gens)
    if spec is None:
        if not gens:
            raise ValueError("an empty generator list needs an explicit spec")
        spec = gens[0].spec
    dims = {}
    for d in range(max_degree + 1):
        monos = monomials_of_degree(spec, d)
        index = {m: k for k, m in enumerate(monos)}
        rows = ideal_rows(gens, spec, d, index, cap)
        dims[d] = len(monos) - kernel.gf2_rank(rows)
    return BettiProfile(dims)


def in_ideal_bruteforce(p: PolyF2, gens: Sequence[PolyF2], cap: int = DEFAULT_MATRIX_CAP) -> bool:
    """Membership test, one homogeneous component at a time.

    Valid for ideals with homogeneous generators, where membership is
    decided degreewise.
    """
    spec = p.spec
    parts: Dict[int, List] = {}
    for t in p.terms:
        parts.setdefault(spec.degree(t), []).append(t)
    for d, terms in parts.items():
        monos = monomials_of_degree(spec, d)
        index = {m: k for k, m in enumerate(monos)}
        rows = ideal_rows(gens, spec, d, index, cap)
        target = 0
        for t in terms:
            target ^= 1 << index[t]
        if kernel.gf2_rank(rows + [target]) != kernel.gf2_rank(rows):
            return False
    return True
