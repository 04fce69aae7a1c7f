"""Presentations of H*(G~(2^t, 4); Z/2) and the checks around them.

The ring is GF(2)[w2, w3, w4, a] with weights 2, 3, 4, 2^t - 4, ordered
lexicographically with w3 < w2 < w4 < a.  The ideal is generated by

    g_{2^t - 3 + 2^i}  (0 <= i < t),   g_{2^t},   a^2 + P a + Q,

where P, Q are polynomials in w2, w3, w4 supplied by the caller.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, NamedTuple, Optional, Tuple

from .dualsw import g_poly, g_spec
from .groebner import (
    BettiProfile,
    OrderedGeneratorSet,
    is_groebner,
    standard_monomials,
)
from .poly import (
    Monomial,
    MonomialOrder,
    PolyF2,
    VariableSpec,
    leading_monomial,
    monomials_of_degree,
    monomial_text,
)

MAX_T = 12

GFunc = Callable[[int], PolyF2]


def _check_t(t: int) -> None:
    if not isinstance(t, int) or t < 3:
        raise ValueError(f"t must be an integer >= 3, got {t!r}")
    if t > MAX_T:
        raise ValueError(f"t = {t} exceeds the supported cap {MAX_T}")


@lru_cache(maxsize=None)
def grass_spec(t: int) -> VariableSpec:
    _check_t(t)
    return VariableSpec(("w2", "w3", "w4", "a"), (2, 3, 4, 2**t - 4))


@lru_cache(maxsize=None)
def grass_order(t: int) -> MonomialOrder:
    return MonomialOrder.from_names(grass_spec(t), ("a", "w4", "w2", "w3"))


@lru_cache(maxsize=None)
def impstar_order() -> MonomialOrder:
    return MonomialOrder.from_names(g_spec(4), ("w4", "w2", "w3"))


@lru_cache(maxsize=None)
def k3_order() -> MonomialOrder:
    return MonomialOrder.from_names(g_spec(3), ("w2", "w3"))


def manifold_dim(t: int) -> int:
    """Real dimension 4(2^t - 4) of G~(2^t, 4)."""
    return 4 * 2**t - 16


def _g4(r: int) -> PolyF2:
    return g_poly(r, 4)


def groebner_indices(t: int) -> List[int]:
    """Indices 2^t - 3 + 2^i of the g's in the Groebner basis, i = 0..t-1."""
    return [2**t - 3 + 2**i for i in range(t)]


def expected_lm_exponents(t: int, i: int) -> Tuple[int, int]:
    """(w2, w3) exponents of LM(g_{2^t - 3 + 2^i})."""
    return 2 ** (t - 1) - 2**i, 2**i - 1


def check_gen_recurrence(r: int, i: int, k: int) -> bool:
    """g_r == sum_j w_j^(2^i) g_{r - j 2^i} over j = 2..k."""
    if i < 0 or r < 1 + k * (2**i - 1):
        raise ValueError(f"need i >= 0 and r >= {1 + k * (2**i - 1)}")
    spec = g_spec(k)
    acc = spec.zero()
    s = 2**i
    for j in range(2, k + 1):
        acc = acc + spec.var(f"w{j}") ** s * g_poly(r - j * s, k)
    return acc == g_poly(r, k)


def check_posl(r: int, i: int) -> bool:
    """w3^(2^i - 1) g_r^(2^i) == g_{2^i (r + 3) - 3} for k = 4."""
    if r < -3 or i < 0:
        raise ValueError("need r >= -3 and i >= 0")
    spec = g_spec(4)
    lhs = spec.var("w3") ** (2**i - 1) * g_poly(r, 4) ** (2**i)
    return lhs == g_poly(2**i * (r + 3) - 3, 4)


def check_w4free(t: int, i: int, g: GFunc = _g4) -> bool:
    """No monomial of g_{2^t - 3 + 2^i} (k = 4) involves w4."""
    if t < 3 or not 0 <= i <= t - 1:
        raise ValueError(f"need t >= 3 and 0 <= i <= t - 1, got t={t}, i={i}")
    p = g(2**t - 3 + 2**i)
    w4 = p.spec.index("w4")
    return all(m[w4] == 0 for m in p.terms)


def _admissible(poly: Optional[PolyF2], t: int, degree: int, label: str) -> PolyF2:
    spec = grass_spec(t)
    if poly is None:
        return spec.zero()
    if "a" in poly.spec.names:
        ai = poly.spec.index("a")
        if any(m[ai] for m in poly.terms):
            raise ValueError(f"{label} must not involve the variable a")
    extra = set(poly.spec.names) - set(spec.names)
    for name in extra:
        i = poly.spec.index(name)
        if any(m[i] for m in poly.terms):
            raise ValueError(f"{label} involves {name}, which is not in w2, w3, w4")
    p = poly.recast(spec)
    if p and p.degrees() != {degree}:
        raise ValueError(f"{label} must be homogeneous of degree {degree}, got degrees {sorted(p.degrees())}")
    return p


@dataclass(frozen=True)
class PresentationI:
    t: int
    P: PolyF2
    Q: PolyF2
    gens: OrderedGeneratorSet

    @property
    def quadratic(self) -> PolyF2:
        return self.gens[-1]


def quadratic_relation(t: int, P: PolyF2, Q: PolyF2) -> PolyF2:
    spec = grass_spec(t)
    a = spec.var("a")
    return a * a + P * a + Q


def build_ideal_I(t: int, P: Optional[PolyF2] = None, Q: Optional[PolyF2] = None, g: GFunc = _g4) -> PresentationI:
    """The generating set {g_{2^t-3+2^i}} + {g_{2^t}, a^2 + P a + Q}."""
    _check_t(t)
    spec = grass_spec(t)
    P = _admissible(P, t, 2**t - 4, "P")
    Q = _admissible(Q, t, 2 ** (t + 1) - 8, "Q")
    gens = [g(r).recast(spec) for r in groebner_indices(t)]
    gens.append(g(2**t).recast(spec))
    gens.append(quadratic_relation(t, P, Q))
    return PresentationI(t, P, Q, OrderedGeneratorSet(tuple(gens), grass_order(t)))


def raw_ideal_I(t: int, P: Optional[PolyF2] = None, Q: Optional[PolyF2] = None) -> OrderedGeneratorSet:
    """The defining generators g_{2^t-2}, g_{2^t-1}, g_{2^t}, a^2 + P a + Q."""
    _check_t(t)
    spec = grass_spec(t)
    P = _admissible(P, t, 2**t - 4, "P")
    Q = _admissible(Q, t, 2 ** (t + 1) - 8, "Q")
    gens = [g_poly(r, 4).recast(spec) for r in (2**t - 2, 2**t - 1, 2**t)]
    gens.append(quadratic_relation(t, P, Q))
    return OrderedGeneratorSet(tuple(gens), grass_order(t))


def t3_parameters(gamma: int) -> Tuple[PolyF2, PolyF2]:
    """P = w2^2 and Q = gamma * w2 w3^2 for t = 3."""
    if gamma not in (0, 1):
        raise ValueError("gamma must be 0 or 1")
    spec = grass_spec(3)
    w2, w3 = spec.var("w2"), spec.var("w3")
    P = w2 * w2
    Q = w2 * w3 * w3 if gamma else spec.zero()
    return P, Q


def random_homogeneous(t: int, degree: int, rng: random.Random) -> PolyF2:
    """Random element of degree ``degree`` in w2, w3, w4 inside the t-ring."""
    spec = grass_spec(t)
    ai = spec.index("a")
    monos = [m for m in monomials_of_degree(spec, degree) if m[ai] == 0]
    return PolyF2([m for m in monos if rng.random() < 0.5], spec)


def random_admissible_PQ(t: int, rng: random.Random) -> Tuple[PolyF2, PolyF2]:
    return random_homogeneous(t, 2**t - 4, rng), random_homogeneous(t, 2 ** (t + 1) - 8, rng)


class ImPStar(NamedTuple):
    raw: OrderedGeneratorSet
    groebner: OrderedGeneratorSet


def build_im_pstar_ideal(t: int, g: GFunc = _g4) -> ImPStar:
    """Ideal (g_{2^t-2}, g_{2^t-1}, g_{2^t}) in GF(2)[w2, w3, w4] and its Groebner set."""
    _check_t(t)
    order = impstar_order()
    raw = OrderedGeneratorSet(tuple(g(r) for r in (2**t - 2, 2**t - 1, 2**t)), order)
    gb = OrderedGeneratorSet(tuple(g(r) for r in groebner_indices(t) + [2**t]), order)
    return ImPStar(raw, gb)


def k3_groebner_set(t: int) -> OrderedGeneratorSet:
    """{g_{2^t-3+2^i}} for k = 3 in GF(2)[w2, w3] with w3 < w2."""
    if t < 3:
        raise ValueError("t must be >= 3")
    return OrderedGeneratorSet(tuple(g_poly(r, 3) for r in groebner_indices(t)), k3_order())


@dataclass(frozen=True)
class TSet:
    t: int
    pairs: FrozenSet[Tuple[int, int]]

    @property
    def N(self) -> int:
        return len(self.pairs)

    def __contains__(self, bc) -> bool:
        return tuple(bc) in self.pairs


def in_T(t: int, b: int, c: int) -> bool:
    return all(b < 2 ** (t - 1) - 2**i or c < 2**i - 1 for i in range(t))


def t_set(t: int) -> TSet:
    _check_t(t)
    # i = 0 bounds b, i = t-1 bounds c
    side = 2 ** (t - 1)
    return TSet(t, frozenset((b, c) for b in range(side) for c in range(side) if in_T(t, b, c)))


def additive_basis(t: int) -> List[Monomial]:
    """a^r w4^d w2^b w3^c with r < 2, d < 2^(t-2), (b, c) in T; descending."""
    spec = grass_spec(t)
    order = grass_order(t)
    T = t_set(t)
    exps = [(b, c, d, r) for r in range(2) for d in range(2 ** (t - 2)) for b, c in T.pairs]
    exps.sort(key=order.key, reverse=True)
    return [Monomial(e, spec) for e in exps]


def poincare_profile(t: int) -> BettiProfile:
    return BettiProfile.from_monomials(additive_basis(t))


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" or "fail"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class VerificationReport:
    t: int
    checks: List[CheckResult] = field(default_factory=list)
    betti: Optional[BettiProfile] = None
    basis: List[Monomial] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "checks": [c.to_dict() for c in self.checks],
            "betti": self.betti.to_pairs(manifold_dim(self.t)) if self.betti else [],
            "basis": [monomial_text(m.exponents, m.spec.names) for m in self.basis],
        }


def corrupted_g(t: int) -> Dict[int, PolyF2]:
    """Override for g_{2^t-1} with the monomial w3 w4^(2^(t-2)-1) flipped."""
    spec = g_spec(4)
    r = 2**t - 1
    bad = PolyF2([(0, 1, 2 ** (t - 2) - 1)], spec)
    return {r: g_poly(r, 4) + bad}


def verify_suite(t: int, overrides: Optional[Dict[int, PolyF2]] = None) -> VerificationReport:
    """Run the named algebraic checks for one t; failures are reported."""
    _check_t(t)
    overrides = dict(overrides or {})

    def g4(r: int) -> PolyF2:
        return overrides.get(r, g_poly(r, 4))

    report = VerificationReport(t)
    spec4 = g_spec(4)

    def run(name: str, fn: Callable[[], Tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        report.checks.append(CheckResult(name, "pass" if ok else "fail", detail))

    order = impstar_order()
    for i, r in enumerate(groebner_indices(t)):
        b, c = expected_lm_exponents(t, i)
        want = monomial_text((b, c, 0), spec4.names)

        def lm_check(r=r, want=want):
            got = str(leading_monomial(g4(r), order))
            return got == want, f"LM(g{r}) = {got}, expected {want}"

        run(f"lm-g{r}", lm_check)

    def lm_top():
        want = monomial_text((0, 0, 2 ** (t - 2)), spec4.names)
        got = str(leading_monomial(g4(2**t), order))
        return got == want, f"LM(g{2**t}) = {got}, expected {want}"

    run(f"lm-g{2**t}", lm_top)

    for k in (3, 4):
        def vanish(k=k):
            p = g4(2**t - 3) if k == 4 else g_poly(2**t - 3, 3)
            return not p, f"g{2**t - 3} (k={k}) = {p}"

        run(f"g{2**t - 3}-vanishes-k{k}", vanish)

    for i in range(t):
        def free(i=i):
            return check_w4free(t, i, g4), f"g{2**t - 3 + 2**i} = {g4(2**t - 3 + 2**i)}"

        run(f"w4-free-g{2**t - 3 + 2**i}", free)

    for r, exps in ((2**t - 2, (2 ** (t - 1) - 1, 0, 0)), (2**t - 1, (2 ** (t - 1) - 2, 1, 0))):
        def contains(r=r, exps=exps):
            return exps in g4(r), f"{monomial_text(exps, spec4.names)} in g{r}"

        run(f"g{r}-contains-{monomial_text(exps, spec4.names)}", contains)

    def mod_w4():
        bad = [r for r in range(0, 2**t + 1) if g4(r).set_zero("w4").recast(g_spec(3)) != g_poly(r, 3)]
        return not bad, f"mismatch at r = {bad}" if bad else f"g_r mod w4 equals k=3 g_r for r <= {2**t}"

    run("mod-w4-compat", mod_w4)

    def k3():
        ok, cert = is_groebner(k3_groebner_set(t))
        return ok, f"{len(cert.pairs)} pairs, {len(cert.failures())} failures"

    run("k3-groebner", k3)

    pres = build_ideal_I(t, g=g4)

    def gb_I():
        ok, cert = is_groebner(pres.gens)
        return ok, f"{len(cert.pairs)} pairs, {len(cert.failures())} failures"

    run("groebner-I", gb_I)

    def lm_I():
        got = [str(m) for m in pres.gens.leading_monomials()]
        want = [monomial_text((b, c, 0, 0), pres.gens.spec.names) for b, c in (expected_lm_exponents(t, i) for i in range(t))]
        want += [monomial_text((0, 0, 2 ** (t - 2), 0), pres.gens.spec.names), "a^2"]
        return got == want, f"leading monomials {got}"

    run("lm-I", lm_I)

    basis = additive_basis(t)
    report.basis = basis
    report.betti = BettiProfile.from_monomials(basis)
    N = t_set(t).N

    def dims():
        im = build_im_pstar_ideal(t, g=g4).groebner
        dim_im = len(standard_monomials(im))
        dim_I = len(standard_monomials(pres.gens))
        ok = 2 * dim_im == dim_I == 2 ** (t - 1) * N
        return ok, f"dim im p* = {dim_im}, dim quotient = {dim_I}, 2^(t-1) N = {2 ** (t - 1) * N}"

    run("dimension-doubling", dims)

    def basis_match():
        std = {m.exponents for m in standard_monomials(pres.gens)}
        return std == {m.exponents for m in basis}, f"{len(basis)} basis monomials"

    run("basis-equals-standard-monomials", basis_match)

    def duality():
        D = manifold_dim(t)
        return report.betti.is_symmetric(D), f"symmetric about {D}/2"

    run("poincare-duality", duality)
    return report
