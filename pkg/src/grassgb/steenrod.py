"""Steenrod squares on the t = 3 presentation with unknown coefficients.

The quotient is GF(2)[w2, w3, w4, a] modulo g6, g7, g9, g8 and

    a^2 = alpha a w4 + beta a w2^2 + gamma w2 w3^2 + delta w2^2 w4,

with Sq^1 a = epsilon w2 w3 and Sq^2 a = kappa a w2 + lambda w2 w4 + mu w3^2.
Squares of products come from the Cartan formula: the total square
Sq = Sq^0 + Sq^1 + ... is multiplicative, so Sq(m) is the product of the
generator images raised to the exponents of m.  Results are returned as
normal forms modulo the ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .cohomology import build_ideal_I, grass_spec
from .groebner import OrderedGeneratorSet, normal_form
from .poly import PolyF2, VariableSpec, binom_mod2, grade

T = 3

UNKNOWNS = ("alpha", "delta", "epsilon", "kappa", "lam", "mu")

# Sq^i(w_j) for a rank-4 bundle with w1 = 0; i = 0 and i = j are implied.
WU_TABLE = {
    ("w2", 1): "w3",
    ("w3", 1): "0",
    ("w4", 1): "0",
    ("w2", 2): "w2^2",
    ("w3", 2): "w2*w3",
    ("w4", 2): "w2*w4",
    ("w3", 3): "w3^2",
    ("w4", 3): "w3*w4",
}


@dataclass(frozen=True)
class CoefficientAssignment:
    alpha: int = 0
    beta: int = 1
    gamma: int = 0
    delta: int = 0
    epsilon: int = 0
    kappa: int = 1
    lam: int = 0
    mu: int = 0

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "delta", "epsilon", "kappa", "lam", "mu"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"{name} must be a bit")

    def to_dict(self, with_beta: bool = False) -> Dict[str, int]:
        d = {
            "alpha": self.alpha,
            "delta": self.delta,
            "epsilon": self.epsilon,
            "kappa": self.kappa,
            "lambda": self.lam,
            "mu": self.mu,
            "gamma": self.gamma,
        }
        if with_beta:
            d["beta"] = self.beta
        return d


def spec() -> VariableSpec:
    return grass_spec(T)


def presentation(assign: CoefficientAssignment) -> OrderedGeneratorSet:
    s = spec()
    P = s.parse("w4") * _bit(assign.alpha) + s.parse("w2^2") * _bit(assign.beta)
    Q = s.parse("w2*w3^2") * _bit(assign.gamma) + s.parse("w2^2*w4") * _bit(assign.delta)
    return build_ideal_I(T, P, Q).gens


def _bit(b: int) -> PolyF2:
    return spec().one() if b else spec().zero()


def wu_formula(i: int, j: int, rank: int = 4) -> PolyF2:
    """Sq^i(w_j) = sum_s C(i - j, s) w_{i-s} w_{j+s}, with w1 = 0, w_0 = 1."""
    s = spec()

    def w(n: int) -> PolyF2:
        if n == 0:
            return s.one()
        if n == 1 or n > rank:
            return s.zero()
        return s.var(f"w{n}")

    acc = s.zero()
    x = i - j
    for t in range(i + 1):
        # C(x, t) for x < 0 is (-1)^t C(t - x - 1, t)
        c = binom_mod2(x, t) if x >= 0 else binom_mod2(t - x - 1, t)
        if c:
            acc = acc + w(i - t) * w(j + t)
    return acc


@dataclass
class SqRules:
    """Images Sq^i(v) of every variable v for 0 <= i <= deg v."""

    images: Dict[str, Dict[int, PolyF2]]
    ideal: OrderedGeneratorSet

    def total(self, name: str) -> Dict[int, PolyF2]:
        return self.images[name]


def make_rules(assign: CoefficientAssignment) -> SqRules:
    s = spec()
    ideal = presentation(assign)
    images: Dict[str, Dict[int, PolyF2]] = {}
    for name, deg in zip(s.names, s.weights):
        v = s.var(name)
        images[name] = {0: v, deg: v * v}
        if name != "a":
            for i in range(1, deg):
                images[name][i] = s.parse(WU_TABLE[(name, i)])
    a = images["a"]
    a[1] = s.parse("w2*w3") * _bit(assign.epsilon)
    a[2] = (
        s.parse("w2*a") * _bit(assign.kappa)
        + s.parse("w2*w4") * _bit(assign.lam)
        + s.parse("w3^2") * _bit(assign.mu)
    )
    rules = SqRules(images, ideal)
    # Sq^3 = Sq^1 Sq^2 (Adem); only Sq^1 images are needed to evaluate it
    a[3] = sq(1, a[2], rules)
    return rules


def _total_square_monomial(exps, rules: SqRules, top: int) -> Dict[int, PolyF2]:
    """Graded pieces of Sq(m) up to degree ``top``."""
    s = spec()
    acc: Dict[int, PolyF2] = {0: s.one()}
    for name, e in zip(s.names, exps):
        pieces = rules.total(name)
        w = s.weights[s.index(name)]
        for _ in range(e):
            nxt: Dict[int, PolyF2] = {}
            for d1, p1 in acc.items():
                for i, p2 in pieces.items():
                    d = d1 + w + i
                    if d > top or not p2:
                        continue
                    prod = p1 * p2
                    nxt[d] = nxt[d] + prod if d in nxt else prod
            acc = nxt
    return acc


def sq(i: int, x: PolyF2, rules: SqRules, reduce: bool = True) -> PolyF2:
    """Sq^i(x) by the Cartan formula, as a normal form modulo the ideal."""
    s = spec()
    if x.spec != s:
        x = x.recast(s)
    if i < 0:
        raise ValueError("square index must be nonnegative")
    if not x:
        return s.zero()
    degs = x.degrees()
    if len(degs) != 1:
        raise ValueError("Sq^i is applied to homogeneous classes only")
    target = degs.pop() + i
    out = s.zero()
    for m in x.terms:
        pieces = _total_square_monomial(m, rules, target)
        if target in pieces:
            out = out + pieces[target]
    return normal_form(out, rules.ideal) if reduce else out


def nf(p: PolyF2, rules: SqRules) -> PolyF2:
    return normal_form(p, rules.ideal)


# Each constraint returns the residual; it holds iff the residual is zero.
def _sq4_on_h12(rules: SqRules) -> PolyF2:
    # v4 = 0, so Sq^4 vanishes on H^12
    return sq(4, spec().parse("w2*w3^2*a"), rules)


def _sq1_sq1(rules: SqRules) -> PolyF2:
    return sq(1, sq(1, spec().var("a"), rules), rules)


def _sq2_of_a_squared(rules: SqRules) -> PolyF2:
    a = spec().var("a")
    lhs = sq(2, nf(a * a, rules), rules)
    sq1a = sq(1, a, rules)
    return lhs + nf(sq1a * sq1a, rules)


def _adem(rules: SqRules) -> PolyF2:
    a = spec().var("a")
    return sq(2, sq(2, a, rules), rules) + sq(3, sq(1, a, rules), rules)


def _sq4_a_cubed(rules: SqRules) -> PolyF2:
    # v4 = 0 and a^3 lies in degree 12
    a = spec().var("a")
    return sq(4, a * a * a, rules)


CONSTRAINTS: Dict[str, Callable[[SqRules], PolyF2]] = {
    "sq4-on-H12-vanishes": _sq4_on_h12,
    "sq1-sq1-a-vanishes": _sq1_sq1,
    "sq2-a-squared-equals-sq1a-squared": _sq2_of_a_squared,
    "adem-sq2sq2-equals-sq3sq1": _adem,
    "sq4-a-cubed-vanishes": _sq4_a_cubed,
}


@dataclass
class ConstraintReport:
    assignment: CoefficientAssignment
    results: Dict[str, bool] = field(default_factory=dict)
    residuals: Dict[str, PolyF2] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())


def check_axioms(
    assign: CoefficientAssignment,
    gamma: Optional[int] = None,
    names: Optional[Sequence[str]] = None,
) -> ConstraintReport:
    if assign.beta != 1:
        raise ValueError("beta is fixed to 1")
    if gamma is not None:
        assign = replace(assign, gamma=gamma)
    rules = make_rules(assign)
    report = ConstraintReport(assign)
    for name in names if names is not None else CONSTRAINTS:
        res = CONSTRAINTS[name](rules)
        report.results[name] = not res
        report.residuals[name] = res
    return report


def all_assignments() -> Iterable[CoefficientAssignment]:
    for bits in itertools.product((0, 1), repeat=len(UNKNOWNS)):
        for gamma in (0, 1):
            yield CoefficientAssignment(beta=1, gamma=gamma, **dict(zip(UNKNOWNS, bits)))


def solve_coefficients(disabled: Sequence[str] = (), names: Optional[Sequence[str]] = None) -> List[CoefficientAssignment]:
    """Every assignment with beta = 1 that satisfies the enabled constraints."""
    active = [n for n in (names if names is not None else CONSTRAINTS) if n not in disabled]
    unknown = set(disabled) - set(CONSTRAINTS)
    if unknown:
        raise KeyError(f"unknown constraints {sorted(unknown)}")
    return [a for a in all_assignments() if check_axioms(a, names=active).ok]


def solver_document(survivors: Sequence[CoefficientAssignment], disabled: Sequence[str] = ()) -> dict:
    return {
        "beta": 1,
        "survivors": [s.to_dict() for s in survivors],
        "constraints": [n for n in CONSTRAINTS if n not in disabled],
    }
