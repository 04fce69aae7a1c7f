"""Seeded randomized property suites.

Used by the ``selftest`` CLI command and by the acceptance tests.  Every
suite draws its cases from ``random.Random(seed)`` so runs are repeatable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

from .cohomology import additive_basis, build_ideal_I, grass_order, grass_spec, t3_parameters
from .groebner import ReductionTrace, normal_form, s_polynomial, top_reduce
from .oracle import in_ideal_bruteforce
from .poly import (
    Monomial,
    Ordering,
    PolyF2,
    binom_mod2,
    compare_lex,
    frobenius,
    grade,
    lcm,
    leading_monomial,
)
from . import steenrod

DEFAULT_SEED = 20240917
DEFAULT_CASES = 1000


@dataclass
class SuiteResult:
    name: str
    cases: int
    failures: int
    example: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "cases": self.cases, "failures": self.failures, "example": self.example}


def random_poly(rng: random.Random, spec, max_terms: int = 5, max_exp: int = 3) -> PolyF2:
    n = rng.randint(0, max_terms)
    return PolyF2(
        [tuple(rng.randint(0, max_exp) for _ in range(spec.nvars)) for _ in range(n)],
        spec,
    )


def random_monomial(rng: random.Random, spec, max_exp: int = 4) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(spec.nvars)), spec)


def _ring_axioms(rng, spec, G):
    p, q, r = (random_poly(rng, spec) for _ in range(3))
    ok = p + q == q + p and p * q == q * p
    ok = ok and (p + q) + r == p + (q + r) and (p * q) * r == p * (q * r)
    ok = ok and p * (q + r) == p * q + p * r
    ok = ok and p + spec.zero() == p and p * spec.one() == p
    return ok, f"p={p}, q={q}, r={r}"


def _char2_frobenius(rng, spec, G):
    p, q = random_poly(rng, spec, max_exp=2), random_poly(rng, spec, max_exp=2)
    i = rng.randint(0, 6)
    ok = not (p + p) and (p + q) ** 2 == p**2 + q**2 and p ** (2**i) == frobenius(p, i)
    return ok, f"p={p}, q={q}, i={i}"


def _binomial_parity(rng, spec, G):
    n = rng.randint(0, 64)
    row = [1]
    for _ in range(n):
        row = [1] + [(row[j] + row[j + 1]) % 2 for j in range(len(row) - 1)] + [1]
    k = rng.randint(0, n + 2)
    want = row[k] if k <= n else 0
    return binom_mod2(n, k) == want, f"n={n}, k={k}"


def _lex_order(rng, spec, G):
    order = G.order
    m1, m2, m = (random_monomial(rng, spec) for _ in range(3))
    c12, c21 = compare_lex(m1, m2, order), compare_lex(m2, m1, order)
    ok = c12 == -c21 and (c12 == Ordering.EQ) == (m1 == m2)
    if c12 == Ordering.LT:
        ok = ok and compare_lex(m1 * m, m2 * m, order) == Ordering.LT
    return ok, f"m1={m1}, m2={m2}, m={m}"


def _grading(rng, spec, G):
    p = random_poly(rng, spec)
    parts = grade(p)
    total = spec.zero()
    ok = True
    for d, part in parts.items():
        ok = ok and part.degrees() == {d}
        total = total + part
    return ok and total == p, f"p={p}"


def _normal_form(rng, spec, G):
    p, q = random_poly(rng, spec), random_poly(rng, spec)
    np_, nq = normal_form(p, G), normal_form(q, G)
    lms = [m.exponents for m in G.leading_monomials()]
    standard = all(not all(a <= b for a, b in zip(lm, t)) for t in np_.terms for lm in lms)
    ok = standard and normal_form(p + q, G) == np_ + nq and normal_form(np_, G) == np_
    return ok, f"p={p}, q={q}"


def _membership(rng, spec, G):
    p = random_poly(rng, spec, max_terms=3, max_exp=3)
    diff = p + normal_form(p, G)
    ok = in_ideal_bruteforce(diff, G.gens)
    ok = ok and (not normal_form(p, G)) == in_ideal_bruteforce(p, G.gens)
    return ok, f"p={p}"


def _trace_replay(rng, spec, G):
    p = random_poly(rng, spec, max_terms=6, max_exp=4)
    trace = top_reduce(p, G)
    rem = trace.remainder
    lms = [m.exponents for m in G.leading_monomials()]
    ok = trace.replay(p, G) == rem
    if rem:
        lead = leading_monomial(rem, G.order).exponents
        ok = ok and not any(all(a <= b for a, b in zip(lm, lead)) for lm in lms)
    return ok, f"p={p}"


def _s_polynomial(rng, spec, G):
    f, g = random_poly(rng, spec), random_poly(rng, spec)
    if not f or not g:
        return True, ""
    s1, s2 = s_polynomial(f, g, G.order), s_polynomial(g, f, G.order)
    ok = s1 == s2 and not s_polynomial(f, f, G.order)
    if s1:
        l = lcm(leading_monomial(f, G.order), leading_monomial(g, G.order))
        ok = ok and compare_lex(leading_monomial(s1, G.order), l, G.order) == Ordering.LT
    return ok, f"f={f}, g={g}"


_RULES: Dict[int, steenrod.SqRules] = {}


def _rules(gamma: int) -> steenrod.SqRules:
    if gamma not in _RULES:
        _RULES[gamma] = steenrod.make_rules(steenrod.CoefficientAssignment(gamma=gamma))
    return _RULES[gamma]


def _basis_pair(rng):
    basis = additive_basis(3)
    x, y = rng.choice(basis), rng.choice(basis)
    return x.as_poly(), y.as_poly()


def _cartan(rng, spec, G):
    rules = _rules(rng.randint(0, 1))
    x, y = _basis_pair(rng)
    sq = steenrod.sq
    lhs = sq(2, x * y, rules)
    rhs = steenrod.nf(sq(2, x, rules, False) * y + sq(1, x, rules, False) * sq(1, y, rules, False) + x * sq(2, y, rules, False), rules)
    return lhs == rhs, f"x={x}, y={y}"


def _derivation(rng, spec, G):
    rules = _rules(rng.randint(0, 1))
    x, y = _basis_pair(rng)
    sq = steenrod.sq
    lhs = sq(1, x * y, rules)
    rhs = steenrod.nf(sq(1, x, rules, False) * y + x * sq(1, y, rules, False), rules)
    return lhs == rhs, f"x={x}, y={y}"


def _sq_additive_top(rng, spec, G):
    rules = _rules(rng.randint(0, 1))
    d = rng.choice([4, 5, 6, 8, 10])
    basis = [m.as_poly() for m in additive_basis(3) if m.degree == d]
    x = PolyF2([t for b in basis if rng.random() < 0.5 for t in b.terms], spec)
    y = PolyF2([t for b in basis if rng.random() < 0.5 for t in b.terms], spec)
    i = rng.randint(1, 3)
    ok = steenrod.sq(i, x + y, rules) == steenrod.sq(i, x, rules) + steenrod.sq(i, y, rules)
    ok = ok and steenrod.sq(d, x, rules) == steenrod.nf(x * x, rules)
    return ok, f"x={x}, y={y}, i={i}"


SUITES: Dict[str, Callable] = {
    "ring-axioms": _ring_axioms,
    "char2-frobenius": _char2_frobenius,
    "binomial-parity": _binomial_parity,
    "lex-total-multiplicative": _lex_order,
    "grading": _grading,
    "normal-form-linear-idempotent": _normal_form,
    "normal-form-vs-membership-oracle": _membership,
    "trace-replay": _trace_replay,
    "s-polynomial": _s_polynomial,
    "cartan-sq2": _cartan,
    "sq1-derivation": _derivation,
    "sq-additive-top-square": _sq_additive_top,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES) -> SuiteResult:
    rng = random.Random(f"{seed}:{name}")
    spec = grass_spec(3)
    G = build_ideal_I(3, *t3_parameters(0)).gens
    fn = SUITES[name]
    failures = 0
    example = ""
    for _ in range(cases):
        ok, detail = fn(rng, spec, G)
        if not ok:
            failures += 1
            example = example or detail
    return SuiteResult(name, cases, failures, example)


def run_all(seed: int = DEFAULT_SEED, cases: int = DEFAULT_CASES, names: Optional[List[str]] = None) -> List[SuiteResult]:
    return [run_suite(n, seed, cases) for n in (names or SUITES)]
