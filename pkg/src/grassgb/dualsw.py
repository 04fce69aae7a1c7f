"""Dual Stiefel-Whitney polynomials.

``wbar(r, k)`` is the degree-r part of the inverse of 1 + w1 + ... + wk in
GF(2)[w1, ..., wk]; ``g_poly(r, k)`` is the same class with w1 set to zero,
living in GF(2)[w2, ..., wk].  Tables are filled by the recurrence and
memoized; the closed bracket-coefficient sums are kept as an independent
cross-check.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from .poly import PolyF2, VariableSpec, bracket_coeff


@lru_cache(maxsize=None)
def wbar_spec(k: int) -> VariableSpec:
    if k < 1:
        raise ValueError("k must be at least 1")
    return VariableSpec(tuple(f"w{i}" for i in range(1, k + 1)), tuple(range(1, k + 1)))


@lru_cache(maxsize=None)
def g_spec(k: int) -> VariableSpec:
    if k < 2:
        raise ValueError("k must be at least 2")
    return VariableSpec(tuple(f"w{i}" for i in range(2, k + 1)), tuple(range(2, k + 1)))


def _times_var(p: PolyF2, idx: int) -> frozenset:
    return frozenset(t[:idx] + (t[idx] + 1,) + t[idx + 1:] for t in p.terms)


class DualSWTable:
    """Write-once memo of wbar_r and g_r for one rank ``k``."""

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("k must be at least 2")
        self.k = k
        self.wspec = wbar_spec(k)
        self.gspec = g_spec(k)
        self._wbar: List[PolyF2] = [self.wspec.one()]
        self._g: List[PolyF2] = [self.gspec.one()]
        self._lock = threading.Lock()

    def g(self, r: int) -> PolyF2:
        if r < 0:
            if r < -self.k + 1:
                raise ValueError(f"g_r is defined for r >= {-self.k + 1}")
            return self.gspec.zero()
        if r >= len(self._g):
            with self._lock:
                self._extend_g(r)
        return self._g[r]

    def wbar(self, r: int) -> PolyF2:
        if r < 0:
            raise ValueError("wbar_r needs r >= 0")
        if r >= len(self._wbar):
            with self._lock:
                self._extend_wbar(r)
        return self._wbar[r]

    def _extend_g(self, r: int) -> None:
        # g_r = w2 g_{r-2} + ... + wk g_{r-k}, valid for r >= 1
        table = self._g
        while len(table) <= r:
            n = len(table)
            acc = frozenset()
            for j in range(2, self.k + 1):
                if n - j >= 0:
                    acc = acc ^ _times_var(table[n - j], j - 2)
            table.append(PolyF2._raw(acc, self.gspec))

    def _extend_wbar(self, r: int) -> None:
        table = self._wbar
        while len(table) <= r:
            n = len(table)
            acc = frozenset()
            for j in range(1, self.k + 1):
                if n - j >= 0:
                    acc = acc ^ _times_var(table[n - j], j - 1)
            table.append(PolyF2._raw(acc, self.wspec))


_TABLES: Dict[int, DualSWTable] = {}
_TABLES_LOCK = threading.Lock()


def table(k: int) -> DualSWTable:
    t = _TABLES.get(k)
    if t is None:
        with _TABLES_LOCK:
            t = _TABLES.setdefault(k, DualSWTable(k))
    return t


def wbar(r: int, k: int) -> PolyF2:
    return table(k).wbar(r)


def g_poly(r: int, k: int) -> PolyF2:
    return table(k).g(r)


def _weighted_compositions(r: int, weights: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    if not weights:
        if r == 0:
            yield ()
        return
    w = weights[0]
    for a in range(r // w + 1):
        for rest in _weighted_compositions(r - a * w, weights[1:]):
            yield (a,) + rest


def wbar_closed(r: int, k: int) -> PolyF2:
    """Sum of [a1, ..., ak] w1^a1 ... wk^ak over a1 + 2 a2 + ... + k ak = r."""
    spec = wbar_spec(k)
    return PolyF2(
        [a for a in _weighted_compositions(r, spec.weights) if bracket_coeff(a)],
        spec,
    )


def g_closed(r: int, k: int) -> PolyF2:
    """Closed formula for g_r: the w1-free part of :func:`wbar_closed`."""
    spec = g_spec(k)
    if r < 0:
        return spec.zero()
    return PolyF2(
        [a for a in _weighted_compositions(r, spec.weights) if bracket_coeff(a)],
        spec,
    )
