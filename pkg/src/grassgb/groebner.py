"""S-polynomials, reduction, the Buchberger criterion and completion.

Reduction follows the leading-monomial cancellation chain: at each step
some generator's leading monomial divides the current leading monomial and
the matching monomial multiple of that generator is added.  The hot loop
lives in :mod:`grassgb.kernel`.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from . import kernel
from .errors import ResourceBudgetError, SpecMismatchError, UnboundedEnumerationError
from .poly import (
    Exps,
    Monomial,
    MonomialOrder,
    PolyF2,
    VariableSpec,
    divides,
    lcm,
    leading_monomial,
    monomial_text,
    monomials_of_degree,
)

DEFAULT_PAIR_LIMIT = 20000


def _keyed(p: PolyF2, order: MonomialOrder) -> List[Exps]:
    return sorted((order.key(t) for t in p.terms), reverse=True)


def _from_keyed(terms, order: MonomialOrder, spec: VariableSpec) -> PolyF2:
    return PolyF2._raw(frozenset(order.unkey(t) for t in terms), spec)


@dataclass(frozen=True)
class OrderedGeneratorSet:
    """Ordered list of nonzero generators together with a monomial order."""

    gens: Tuple[PolyF2, ...]
    order: MonomialOrder
    spec: Optional[VariableSpec] = None

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        spec = self.spec if self.spec is not None else (gens[0].spec if gens else None)
        if spec is None:
            raise ValueError("an empty generator set needs an explicit spec")
        object.__setattr__(self, "spec", spec)
        for g in gens:
            if g.spec != spec:
                raise SpecMismatchError("generators do not share one variable list")
            if not g:
                raise ValueError("generators must be nonzero")
        if len(self.order.priority) != spec.nvars:
            raise ValueError("order arity does not match the variable list")

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i: int) -> PolyF2:
        return self.gens[i]

    @cached_property
    def keyed(self) -> List[List[Exps]]:
        return [_keyed(g, self.order) for g in self.gens]

    def leading_monomials(self) -> List[Monomial]:
        return [leading_monomial(g, self.order) for g in self.gens]

    def with_gens(self, gens: Sequence[PolyF2]) -> "OrderedGeneratorSet":
        return OrderedGeneratorSet(tuple(gens), self.order, self.spec)


@dataclass(frozen=True)
class ReductionTrace:
    steps: Tuple[Tuple[Monomial, int], ...]
    remainder: PolyF2

    def replay(self, p: PolyF2, G: OrderedGeneratorSet) -> PolyF2:
        """Re-run the recorded steps from ``p``; checks each cancels the lead."""
        cur = p
        for m, j in self.steps:
            if not cur:
                raise ValueError("trace continues past zero")
            lead = leading_monomial(cur, G.order)
            step = m.as_poly() * G[j]
            if leading_monomial(step, G.order) != lead:
                raise ValueError(f"step ({m}, {j}) does not cancel {lead}")
            cur = cur + step
        return cur

    def steps_text(self) -> List[list]:
        return [[str(m), j] for m, j in self.steps]


def s_polynomial(f: PolyF2, g: PolyF2, order: MonomialOrder) -> PolyF2:
    lf, lg = leading_monomial(f, order), leading_monomial(g, order)
    l = lcm(lf, lg)
    return (l / lf).as_poly() * f + (l / lg).as_poly() * g


def _run(p: PolyF2, G: OrderedGeneratorSet, full: bool):
    if p.spec != G.spec:
        raise SpecMismatchError("polynomial and generators use different variables")
    rem, steps = kernel.top_reduce(_keyed(p, G.order), G.keyed, full, G.spec.bound)
    return rem, steps


def top_reduce(p: PolyF2, G: OrderedGeneratorSet) -> ReductionTrace:
    rem, steps = _run(p, G, full=False)
    order, spec = G.order, G.spec
    return ReductionTrace(
        tuple((Monomial(order.unkey(m), spec), j) for m, j in steps),
        _from_keyed(rem, order, spec),
    )


def normal_form(p: PolyF2, G: OrderedGeneratorSet) -> PolyF2:
    """Representative of ``p`` whose monomials no generator LM divides."""
    rem, _ = _run(p, G, full=True)
    return _from_keyed(rem, G.order, G.spec)


@dataclass(frozen=True)
class PairOutcome:
    i: int
    j: int
    outcome: str  # "reduced", "coprime-skip" or "nonzero-remainder"
    steps: Tuple[Tuple[Monomial, int], ...] = ()
    remainder: Optional[PolyF2] = None

    def to_dict(self) -> dict:
        d = {
            "i": self.i,
            "j": self.j,
            "outcome": self.outcome,
            "steps": [[str(m), k] for m, k in self.steps],
        }
        if self.remainder is not None and self.remainder:
            d["remainder"] = str(self.remainder)
        return d


@dataclass(frozen=True)
class GrobnerCertificate:
    pairs: Tuple[PairOutcome, ...]

    @property
    def ok(self) -> bool:
        return all(p.outcome != "nonzero-remainder" for p in self.pairs)

    def failures(self) -> List[PairOutcome]:
        return [p for p in self.pairs if p.outcome == "nonzero-remainder"]

    def to_json(self) -> List[dict]:
        return [p.to_dict() for p in self.pairs]


def _coprime(m1: Monomial, m2: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(m1.exponents, m2.exponents))


def is_groebner(G: OrderedGeneratorSet, strict: bool = False) -> Tuple[bool, GrobnerCertificate]:
    """Buchberger criterion: every S-polynomial top-reduces to zero.

    Pairs with coprime leading monomials are recorded as skipped unless
    ``strict`` is set.
    """
    lms = G.leading_monomials()
    out = []
    for i, j in itertools.combinations(range(len(G)), 2):
        if not strict and _coprime(lms[i], lms[j]):
            out.append(PairOutcome(i, j, "coprime-skip"))
            continue
        trace = top_reduce(s_polynomial(G[i], G[j], G.order), G)
        if trace.remainder:
            out.append(PairOutcome(i, j, "nonzero-remainder", trace.steps, trace.remainder))
        else:
            out.append(PairOutcome(i, j, "reduced", trace.steps))
    cert = GrobnerCertificate(tuple(out))
    return cert.ok, cert


def _pair_key(lms: List[Monomial], i: int, j: int):
    return (lcm(lms[i], lms[j]).degree, i, j)


def buchberger_complete(G: OrderedGeneratorSet, pair_limit: int = DEFAULT_PAIR_LIMIT) -> OrderedGeneratorSet:
    """Complete ``G`` to a reduced Groebner basis of the same ideal.

    Pairs are processed by ascending weighted degree of the lcm of their
    leading monomials, then by index.
    """
    order = G.order
    basis = list(G.gens)
    lms = [leading_monomial(g, order) for g in basis]
    heap = [_pair_key(lms, i, j) for i, j in itertools.combinations(range(len(basis)), 2)]
    heapq.heapify(heap)
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        processed += 1
        if processed > pair_limit:
            raise ResourceBudgetError(f"pair limit {pair_limit} exceeded")
        if _coprime(lms[i], lms[j]):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), G.with_gens(basis))
        if r:
            basis.append(r)
            lms.append(leading_monomial(r, order))
            k = len(basis) - 1
            for a in range(k):
                heapq.heappush(heap, _pair_key(lms, a, k))
    return G.with_gens(_interreduce(basis, order))


def _interreduce(basis: List[PolyF2], order: MonomialOrder) -> List[PolyF2]:
    lms = [leading_monomial(g, order) for g in basis]
    keep = []
    for i, m in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if j == i or not divides(other, m):
                continue
            # equal LMs: keep the earliest
            if other != m or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = [basis[i] for i in keep]
    out = []
    for idx, g in enumerate(minimal):
        others = [h for k, h in enumerate(minimal) if k != idx]
        lead = leading_monomial(g, order).as_poly()
        tail = g + lead
        if others and tail:
            tail = normal_form(tail, OrderedGeneratorSet(tuple(others), order, g.spec))
        out.append(lead + tail)
    return out


def standard_monomials(G: OrderedGeneratorSet, degree_cap: Optional[int] = None) -> List[Monomial]:
    """Monomials divisible by no generator LM, sorted descending.

    Without ``degree_cap`` the quotient must be finite, i.e. every variable
    has a pure power among the leading monomials.
    """
    spec, order = G.spec, G.order
    lms = [m.exponents for m in G.leading_monomials()]

    def standard(e: Exps) -> bool:
        return not any(all(a <= b for a, b in zip(lm, e)) for lm in lms)

    if degree_cap is None:
        box = []
        for v in range(spec.nvars):
            pure = [lm[v] for lm in lms if lm[v] > 0 and all(x == 0 for k, x in enumerate(lm) if k != v)]
            if not pure:
                raise UnboundedEnumerationError(
                    f"no pure power of {spec.names[v]} among leading monomials; pass degree_cap"
                )
            box.append(range(min(pure)))
        found = [e for e in itertools.product(*box) if standard(e)]
    else:
        found = [e for d in range(degree_cap + 1) for e in monomials_of_degree(spec, d) if standard(e)]
    found.sort(key=order.key, reverse=True)
    return [Monomial(e, spec) for e in found]


@dataclass(frozen=True)
class BettiProfile:
    """Dimension of each graded piece; degrees absent from ``dims`` are 0."""

    dims: Dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {int(d): int(n) for d, n in sorted(self.dims.items()) if n}
        if any(n < 0 for n in clean.values()):
            raise ValueError("dimensions must be nonnegative")
        object.__setattr__(self, "dims", clean)

    def __getitem__(self, d: int) -> int:
        return self.dims.get(d, 0)

    @property
    def total(self) -> int:
        return sum(self.dims.values())

    @property
    def top(self) -> int:
        """Highest nonzero degree, or -1 for the zero profile."""
        return max(self.dims) if self.dims else -1

    def as_tuple(self, upto: Optional[int] = None) -> Tuple[int, ...]:
        upto = self.top if upto is None else upto
        return tuple(self[d] for d in range(upto + 1))

    def to_pairs(self, upto: Optional[int] = None) -> List[List[int]]:
        upto = self.top if upto is None else upto
        return [[d, self[d]] for d in range(upto + 1)]

    def is_symmetric(self, top: int) -> bool:
        return all(self[d] == self[top - d] for d in range(top + 1)) and self.top <= top

    @classmethod
    def from_monomials(cls, monos) -> "BettiProfile":
        dims: Dict[int, int] = {}
        for m in monos:
            dims[m.degree] = dims.get(m.degree, 0) + 1
        return cls(dims)


def monomials_text(monos: Sequence[Monomial]) -> List[str]:
    return [monomial_text(m.exponents, m.spec.names) for m in monos]
