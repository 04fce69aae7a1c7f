import pytest
from hypothesis import given, settings, strategies as st

from grassgb.errors import ExponentOverflowError, NoLeadingMonomialError, SpecMismatchError
from grassgb.poly import (
    Monomial,
    MonomialOrder,
    Ordering,
    PolyF2,
    VariableSpec,
    binom_mod2,
    bracket_coeff,
    compare_lex,
    divides,
    frobenius,
    grade,
    lcm,
    leading_monomial,
    power,
)

SPEC = VariableSpec(("w2", "w3", "w4", "a"), (2, 3, 4, 4))
ORDER = MonomialOrder.from_names(SPEC, ("a", "w4", "w2", "w3"))
P = SPEC.parse

exps = st.tuples(*[st.integers(0, 4)] * 4)
polys = st.lists(exps, max_size=6).map(lambda ts: PolyF2(ts, SPEC))


def mono(text):
    (e,) = P(text).terms
    return Monomial(e, SPEC)


def test_add_examples():
    p = P("w2^3 + w3^2")
    assert p + SPEC.zero() == p
    assert not p + p
    assert p + P("w2^2*w3 + w3^2") == P("w2^3 + w2^2*w3")


def test_mul_and_power_examples():
    p = P("w2^3 + w3^2")
    assert p * SPEC.one() == p
    assert P("w2 + w3") * P("w2 + w3") == P("w2^2 + w3^2")
    assert P("w3") * p == P("w2^3*w3 + w3^3")
    assert power(p, 0) == 1
    assert P("w2 + w3") ** 2 == P("w2^2 + w3^2")
    assert P("w2") ** 4 == P("w2^4")
    with pytest.raises(ValueError):
        power(p, -1)


def test_grade_examples():
    assert grade(SPEC.zero()) == {}
    assert grade(P("w2^3 + w3^2")) == {6: P("w2^3 + w3^2")}
    assert grade(P("w2 + w3")) == {2: P("w2"), 3: P("w3")}


def test_binomials():
    assert binom_mod2(4, 2) == 0
    assert binom_mod2(7, 3) == 1
    assert all(binom_mod2(n, 0) == 1 for n in range(50))
    assert binom_mod2(3, 5) == 0


def test_bracket_coeff():
    assert all(bracket_coeff([r]) == 1 for r in range(20))
    assert bracket_coeff([1, 1]) == 0
    assert bracket_coeff([0, 0, 0, 9]) == 1


def test_order_examples():
    m = mono("w2^3")
    assert compare_lex(m, m, ORDER) == Ordering.EQ
    assert compare_lex(mono("w2^3"), mono("w2^2*w3"), ORDER) == Ordering.GT
    for b in range(6):
        for c in range(6):
            assert compare_lex(mono("w4^2"), Monomial((b, c, 0, 0), SPEC), ORDER) == Ordering.GT


def test_leading_monomial():
    assert str(leading_monomial(P("w2^3 + w3^2"), ORDER)) == "w2^3"
    assert str(leading_monomial(P("w3*a"), ORDER)) == "w3*a"
    assert str(leading_monomial(P("w2^4 + w2*w3^2 + w2^2*w4 + w4^2"), ORDER)) == "w4^2"
    with pytest.raises(NoLeadingMonomialError):
        leading_monomial(SPEC.zero(), ORDER)


def test_divides_and_lcm():
    one = Monomial((0, 0, 0, 0), SPEC)
    assert divides(one, mono("w2*w3"))
    assert not divides(mono("w2^2"), mono("w2*w3"))
    assert divides(mono("w2^2*w3"), mono("w2^3*w3^2"))
    assert lcm(mono("w2^3"), mono("w2^3")) == mono("w2^3")
    assert lcm(mono("w2^3"), mono("w2^2*w3")) == mono("w2^3*w3")
    assert lcm(mono("w4^2"), mono("a^2")) == mono("w4^2*a^2")


def test_errors():
    other = VariableSpec(("x",), (1,))
    with pytest.raises(SpecMismatchError):
        P("w2") + other.var("x")
    small = VariableSpec(("x",), (1,), bound=8)
    with pytest.raises(ExponentOverflowError):
        small.var("x") ** 8
    with pytest.raises(ValueError):
        VariableSpec(("x", "x"), (1, 1))
    with pytest.raises(ValueError):
        P("w9")


def test_text_roundtrip():
    p = P("w2^4 + w2*w3^2 + w2^2*w4 + w4^2 + a + 1")
    assert P(p.to_text(ORDER)) == p
    assert p.to_text(ORDER).startswith("a")
    assert SPEC.zero().to_text() == "0"


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=200, deadline=None)
@given(polys, polys)
def test_frobenius(p, q):
    assert (p + q) ** 2 == p**2 + q**2
    assert p**4 == frobenius(p, 2)


@settings(max_examples=300, deadline=None)
@given(exps, exps, exps)
def test_lex_total_and_multiplicative(e1, e2, e3):
    m1, m2, m = (Monomial(e, SPEC) for e in (e1, e2, e3))
    c = compare_lex(m1, m2, ORDER)
    assert c == -compare_lex(m2, m1, ORDER)
    assert compare_lex(m1 * m, m2 * m, ORDER) == c


@settings(max_examples=200, deadline=None)
@given(polys)
def test_grade_partition(p):
    parts = grade(p)
    total = SPEC.zero()
    for d, part in parts.items():
        assert part.degrees() == {d}
        total = total + part
    assert total == p


@given(st.integers(0, 200), st.integers(0, 200))
def test_lucas_matches_pascal(n, k):
    from math import comb

    assert binom_mod2(n, k) == comb(n, k) % 2
