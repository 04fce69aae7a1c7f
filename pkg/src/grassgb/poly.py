"""Sparse multivariate polynomials over GF(2).

A polynomial is a set of exponent vectors; every coefficient is 1, so
addition is symmetric difference and products cancel in pairs.  Variables
carry positive weights, which give the cohomological grading.

    >>> spec = VariableSpec(("w2", "w3"), (2, 3))
    >>> w2, w3 = spec.gens()
    >>> str((w2 + w3) ** 2)
    'w2^2 + w3^2'
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ExponentOverflowError,
    NoLeadingMonomialError,
    SpecMismatchError,
)

Exps = Tuple[int, ...]

DEFAULT_BOUND = 2**16


@dataclass(frozen=True)
class VariableSpec:
    """Ordered variable names with their weights and an exponent bound."""

    names: Tuple[str, ...]
    weights: Tuple[int, ...]
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if any(w <= 0 for w in self.weights):
            raise ValueError("variable weights must be positive")
        if self.bound < 2:
            raise ValueError("exponent bound must be at least 2")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no variable {name!r} in {self.names}") from None

    def degree(self, exps: Exps) -> int:
        return sum(e * w for e, w in zip(exps, self.weights))

    def one(self) -> "PolyF2":
        return PolyF2([(0,) * self.nvars], self)

    def zero(self) -> "PolyF2":
        return PolyF2((), self)

    def var(self, name: str) -> "PolyF2":
        i = self.index(name)
        return PolyF2([tuple(int(j == i) for j in range(self.nvars))], self)

    def gens(self) -> Tuple["PolyF2", ...]:
        return tuple(self.var(n) for n in self.names)

    def monomial(self, **powers: int) -> "Monomial":
        exps = [0] * self.nvars
        for name, e in powers.items():
            exps[self.index(name)] = e
        return Monomial(tuple(exps), self)

    def parse(self, text: str) -> "PolyF2":
        return parse_poly(text, self)


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonomialOrder:
    """Pure lexicographic order; ``priority`` lists variable indices,
    most significant first."""

    priority: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "priority", tuple(self.priority))
        if sorted(self.priority) != list(range(len(self.priority))):
            raise ValueError(f"priority {self.priority} is not a permutation")

    @classmethod
    def lex(cls, spec: VariableSpec) -> "MonomialOrder":
        """Lex order with the first listed variable most significant."""
        return cls(tuple(range(spec.nvars)))

    @classmethod
    def from_names(cls, spec: VariableSpec, names: Sequence[str]) -> "MonomialOrder":
        """Build from variable names, most significant first."""
        return cls(tuple(spec.index(n) for n in names))

    def key(self, exps: Exps) -> Exps:
        return tuple(exps[i] for i in self.priority)

    def unkey(self, key: Exps) -> Exps:
        out = [0] * len(key)
        for pos, i in enumerate(self.priority):
            out[i] = key[pos]
        return tuple(out)


@dataclass(frozen=True)
class Monomial:
    exponents: Exps
    spec: VariableSpec

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) != self.spec.nvars:
            raise ValueError("exponent vector has the wrong length")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")
        if any(e >= self.spec.bound for e in self.exponents):
            raise ExponentOverflowError(f"exponent bound {self.spec.bound} reached")

    @property
    def degree(self) -> int:
        return self.spec.degree(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_spec(self.spec, other.spec)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.spec)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)), self.spec)

    def as_poly(self) -> "PolyF2":
        return PolyF2([self.exponents], self.spec)

    def __str__(self) -> str:
        return monomial_text(self.exponents, self.spec.names)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _check_spec(a: VariableSpec, b: VariableSpec) -> None:
    if a is not b and a != b:
        raise SpecMismatchError(f"variable lists differ: {a.names} vs {b.names}")


def monomial_text(exps: Exps, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


class PolyF2:
    """Immutable element of GF(2)[x_1, ..., x_n]."""

    __slots__ = ("terms", "spec", "_hash")

    def __init__(self, terms: Iterable[Exps], spec: VariableSpec):
        # duplicates cancel in pairs
        acc = set()
        for t in terms:
            t = tuple(t)
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
        for t in acc:
            if len(t) != spec.nvars:
                raise ValueError("exponent vector has the wrong length")
        self.terms = frozenset(acc)
        self.spec = spec
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset, spec: VariableSpec) -> "PolyF2":
        p = object.__new__(cls)
        p.terms = terms
        p.spec = spec
        p._hash = None
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Exps]:
        return iter(self.terms)

    def __contains__(self, exps) -> bool:
        if isinstance(exps, Monomial):
            exps = exps.exponents
        return tuple(exps) in self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other in (0, 1):
            return self == (self.spec.one() if other else self.spec.zero())
        if not isinstance(other, PolyF2):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.spec.names, self.terms))
        return self._hash

    def __add__(self, other: "PolyF2") -> "PolyF2":
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: "PolyF2") -> "PolyF2":
        return mul(self, other)

    def __pow__(self, e: int) -> "PolyF2":
        return power(self, e)

    def monomials(self) -> List[Monomial]:
        return [Monomial(t, self.spec) for t in self.terms]

    def degrees(self) -> set:
        return {self.spec.degree(t) for t in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self, order: Optional[MonomialOrder] = None, descending: bool = True) -> List[Exps]:
        order = order or MonomialOrder.lex(self.spec)
        return sorted(self.terms, key=order.key, reverse=descending)

    def to_text(self, order: Optional[MonomialOrder] = None, descending: bool = True) -> str:
        if not self.terms:
            return "0"
        names = self.spec.names
        return " + ".join(monomial_text(t, names) for t in self.sorted_terms(order, descending))

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"PolyF2({self.to_text()!r})"

    def recast(self, target: VariableSpec) -> "PolyF2":
        """Map into another variable list by name.

        Variables missing from ``target`` are set to zero, so terms that
        involve them are dropped; new variables get exponent zero.
        """
        src = self.spec.names
        pos = []
        for name in target.names:
            pos.append(src.index(name) if name in src else None)
        dropped = [i for i, n in enumerate(src) if n not in target.names]
        out = []
        for t in self.terms:
            if any(t[i] for i in dropped):
                continue
            out.append(tuple(t[p] if p is not None else 0 for p in pos))
        return PolyF2(out, target)

    def set_zero(self, name: str) -> "PolyF2":
        """Reduce modulo a variable (keep the same variable list)."""
        i = self.spec.index(name)
        return PolyF2._raw(frozenset(t for t in self.terms if t[i] == 0), self.spec)


def add(p: PolyF2, q: PolyF2) -> PolyF2:
    _check_spec(p.spec, q.spec)
    return PolyF2._raw(p.terms ^ q.terms, p.spec)


def mul(p: PolyF2, q: PolyF2) -> PolyF2:
    _check_spec(p.spec, q.spec)
    if not p.terms or not q.terms:
        return p.spec.zero()
    bound = p.spec.bound
    pmax = [max(col) for col in zip(*p.terms)]
    qmax = [max(col) for col in zip(*q.terms)]
    check = any(a + b >= bound for a, b in zip(pmax, qmax))
    acc = set()
    for s in p.terms:
        for t in q.terms:
            m = tuple(a + b for a, b in zip(s, t))
            if m in acc:
                acc.remove(m)
            else:
                acc.add(m)
    if check:
        for m in acc:
            if any(e >= bound for e in m):
                raise ExponentOverflowError(f"exponent bound {bound} reached in product")
    return PolyF2._raw(frozenset(acc), p.spec)


def power(p: PolyF2, e: int) -> PolyF2:
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    result = p.spec.one()
    base = p
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def frobenius(p: PolyF2, i: int = 1) -> PolyF2:
    """Termwise 2^i-th power (equals ``p ** 2**i`` in characteristic 2)."""
    s = 1 << i
    terms = [tuple(s * x for x in t) for t in p.terms]
    if any(x >= p.spec.bound for t in terms for x in t):
        raise ExponentOverflowError(f"exponent bound {p.spec.bound} reached")
    return PolyF2._raw(frozenset(terms), p.spec)


def grade(p: PolyF2) -> Dict[int, PolyF2]:
    parts: Dict[int, set] = {}
    for t in p.terms:
        parts.setdefault(p.spec.degree(t), set()).add(t)
    return {d: PolyF2._raw(frozenset(ts), p.spec) for d, ts in sorted(parts.items())}


def binom_mod2(n: int, k: int) -> int:
    """C(n, k) mod 2 by Lucas: odd iff the bits of k sit inside those of n."""
    if k < 0 or k > n:
        return 0
    return int((n - k) & k == 0)


def bracket_coeff(a: Sequence[int]) -> int:
    """Product of C(a_i + ... + a_k, a_i) mod 2 over i < k."""
    suffix = sum(a)
    for x in a[:-1]:
        if not binom_mod2(suffix, x):
            return 0
        suffix -= x
    return 1


def compare_lex(m1: Monomial, m2: Monomial, order: MonomialOrder) -> Ordering:
    _check_spec(m1.spec, m2.spec)
    k1, k2 = order.key(m1.exponents), order.key(m2.exponents)
    if k1 == k2:
        return Ordering.EQ
    return Ordering.GT if k1 > k2 else Ordering.LT


def leading_monomial(p: PolyF2, order: MonomialOrder) -> Monomial:
    if not p.terms:
        raise NoLeadingMonomialError("the zero polynomial has no leading monomial")
    return Monomial(max(p.terms, key=order.key), p.spec)


def divides(m1: Monomial, m2: Monomial) -> bool:
    _check_spec(m1.spec, m2.spec)
    return all(a <= b for a, b in zip(m1.exponents, m2.exponents))


def lcm(m1: Monomial, m2: Monomial) -> Monomial:
    _check_spec(m1.spec, m2.spec)
    return Monomial(tuple(max(a, b) for a, b in zip(m1.exponents, m2.exponents)), m1.spec)


@lru_cache(maxsize=None)
def _monomials_of_degree(weights: Tuple[int, ...], d: int) -> Tuple[Exps, ...]:
    if not weights:
        return ((),) if d == 0 else ()
    w = weights[-1]
    out = []
    for e in range(d // w + 1):
        for head in _monomials_of_degree(weights[:-1], d - e * w):
            out.append(head + (e,))
    return tuple(out)


def monomials_of_degree(spec: VariableSpec, d: int) -> Tuple[Exps, ...]:
    """All exponent vectors of weighted degree ``d``."""
    if d < 0:
        return ()
    return _monomials_of_degree(spec.weights, d)


_TERM = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$")


def parse_poly(text: str, spec: VariableSpec) -> PolyF2:
    """Parse the text form ``"w2^3 + w3^2"``; ``"0"`` and ``"1"`` allowed."""
    text = text.strip()
    if text == "0" or not text:
        return spec.zero()
    terms = []
    for raw in text.split("+"):
        raw = raw.strip()
        exps = [0] * spec.nvars
        if raw == "1":
            terms.append(tuple(exps))
            continue
        for factor in raw.split("*"):
            m = _TERM.match(factor.strip())
            if not m or m.group(1) not in spec.names:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            exps[spec.index(m.group(1))] += int(m.group(2) or 1)
        terms.append(tuple(exps))
    return PolyF2(terms, spec)
