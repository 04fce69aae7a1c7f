import random

import pytest

from grassgb import steenrod
from grassgb.cohomology import additive_basis
from grassgb.steenrod import CoefficientAssignment, check_axioms, make_rules, nf, solve_coefficients, sq

SPEC = steenrod.spec()
P = SPEC.parse


@pytest.fixture(scope="module", params=[0, 1])
def rules(request):
    return make_rules(CoefficientAssignment(gamma=request.param))


def test_wu_table_matches_formula():
    for (name, i), text in steenrod.WU_TABLE.items():
        assert steenrod.wu_formula(i, int(name[1:])) == P(text), (name, i)


def test_basic_squares(rules):
    assert sq(1, P("w2"), rules) == P("w3")
    assert sq(1, P("w2*w3"), rules) == P("w3^2")
    for i in range(1, 5):
        assert not sq(i, P("w2*w3^2"), rules), i
    assert sq(0, P("w2*w3"), rules) == P("w2*w3")
    with pytest.raises(ValueError):
        sq(1, P("w2 + w3"), rules)


def test_check_axioms_examples():
    for gamma in (0, 1):
        assert check_axioms(CoefficientAssignment(), gamma=gamma).ok
    rep = check_axioms(CoefficientAssignment(alpha=1))
    assert not rep.results["sq4-on-H12-vanishes"]
    assert rep.residuals["sq4-on-H12-vanishes"] == P("w2*w3^2*w4*a")
    rep = check_axioms(CoefficientAssignment(epsilon=1))
    assert not rep.results["sq1-sq1-a-vanishes"]
    assert rep.residuals["sq1-sq1-a-vanishes"] == P("w3^2")
    with pytest.raises(ValueError):
        check_axioms(CoefficientAssignment(beta=0))


def test_solver():
    survivors = solve_coefficients()
    assert len(survivors) == 2
    assert {s.to_dict()["gamma"] for s in survivors} == {0, 1}
    for s in survivors:
        d = s.to_dict()
        assert (d["alpha"], d["delta"], d["epsilon"], d["kappa"], d["lambda"], d["mu"]) == (0, 0, 0, 1, 0, 0)
    doc = steenrod.solver_document(survivors)
    assert doc["beta"] == 1 and doc["constraints"] == list(steenrod.CONSTRAINTS)


def test_disabling_a_constraint_loosens_the_solution():
    base = set(solve_coefficients())
    for name in steenrod.CONSTRAINTS:
        assert set(solve_coefficients(disabled=[name])) > base, name
    with pytest.raises(KeyError):
        solve_coefficients(disabled=["no-such-constraint"])


def test_constraint_order_does_not_matter():
    names = list(steenrod.CONSTRAINTS)
    rng = random.Random(5)
    base = set(solve_coefficients())
    for _ in range(3):
        rng.shuffle(names)
        assert set(solve_coefficients(names=names)) == base


def test_cartan_and_derivation(rules):
    rng = random.Random(1)
    basis = [m.as_poly() for m in additive_basis(3)]
    for _ in range(100):
        x, y = rng.choice(basis), rng.choice(basis)
        lhs = sq(2, x * y, rules)
        rhs = nf(sq(2, x, rules, False) * y + sq(1, x, rules, False) * sq(1, y, rules, False) + x * sq(2, y, rules, False), rules)
        assert lhs == rhs
        assert sq(1, x * y, rules) == nf(sq(1, x, rules, False) * y + x * sq(1, y, rules, False), rules)
        d = next(iter(x.degrees()))
        assert sq(d, x, rules) == nf(x * x, rules)
