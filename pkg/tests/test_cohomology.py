import random

import pytest

from grassgb import cohomology as coh
from grassgb.dualsw import g_poly
from grassgb.groebner import is_groebner, monomials_text, standard_monomials
from grassgb.oracle import quotient_dims_bruteforce


def test_gen_recurrence():
    assert coh.check_gen_recurrence(4, 0, 4)
    assert coh.check_gen_recurrence(13, 1, 4)
    for i in range(4):
        for r in range(1 + 4 * (2**i - 1), 61):
            assert coh.check_gen_recurrence(r, i, 4), (r, i)
    with pytest.raises(ValueError):
        coh.check_gen_recurrence(2, 1, 4)


def test_posl():
    assert all(coh.check_posl(r, 0) for r in range(-3, 30))
    assert coh.check_posl(0, 1)
    assert coh.check_posl(0, 2)
    with pytest.raises(ValueError):
        coh.check_posl(-4, 1)


def test_w4_free():
    assert coh.check_w4free(3, 0)
    assert coh.check_w4free(3, 2)
    for t in range(3, 7):
        assert all(coh.check_w4free(t, i) for i in range(t))
    with pytest.raises(ValueError):
        coh.check_w4free(3, 3)


def test_build_ideal_I():
    pres = coh.build_ideal_I(3, *coh.t3_parameters(1))
    P = pres.gens.spec.parse
    assert list(pres.gens) == [
        P("w2^3 + w3^2"),
        P("w2^2*w3"),
        P("w3^3"),
        g_poly(8, 4).recast(pres.gens.spec),
        P("a^2 + w2^2*a + w2*w3^2"),
    ]
    assert is_groebner(coh.build_ideal_I(3).gens)[0]
    with pytest.raises(ValueError):
        coh.build_ideal_I(3, P=P("a"))
    with pytest.raises(ValueError):
        coh.build_ideal_I(3, P=P("w2"))
    with pytest.raises(ValueError):
        coh.build_ideal_I(2)


def test_random_presentations_stay_groebner():
    rng = random.Random(3)
    for t in (3, 4, 5):
        for _ in range(3):
            G = coh.build_ideal_I(t, *coh.random_admissible_PQ(t, rng)).gens
            assert is_groebner(G)[0]
            assert len(standard_monomials(G)) == 2 ** (t - 1) * coh.t_set(t).N


def test_im_pstar():
    ims = coh.build_im_pstar_ideal(3)
    P = ims.raw.spec.parse
    assert set(ims.raw) == {P("w2^3 + w3^2"), P("w2^2*w3"), g_poly(8, 4)}
    assert set(ims.groebner) == set(ims.raw) | {P("w3^3")}
    assert len(standard_monomials(ims.groebner)) == 14
    assert quotient_dims_bruteforce(ims.raw, 12).total == 14
    assert len(standard_monomials(coh.build_im_pstar_ideal(4).groebner)) == 4 * coh.t_set(4).N


def test_t_set():
    T = coh.t_set(3)
    assert sorted(T.pairs) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0)]
    assert T.N == 7


def test_basis_slices():
    basis = coh.additive_basis(3)
    assert len(basis) == 28
    by = lambda d: set(monomials_text([m for m in basis if m.degree == d]))
    assert by(5) == {"w2*w3"}
    assert by(6) == {"w2*a", "w2*w4", "w3^2"}
    assert by(10) == {"w2*w4*a", "w3^2*a", "w3^2*w4"}


def test_poincare_profile():
    prof = coh.poincare_profile(3)
    assert prof.as_tuple(16) == (1, 0, 1, 1, 3, 1, 3, 2, 4, 2, 3, 1, 3, 1, 1, 0, 1)
    assert prof.total == 28
    for t in (4, 5):
        assert coh.poincare_profile(t).is_symmetric(coh.manifold_dim(t))


@pytest.mark.parametrize("t", [3, 4, 5])
def test_verify_suite_passes(t):
    report = coh.verify_suite(t)
    assert report.ok, [c.to_dict() for c in report.failures()]
    doc = report.to_json()
    assert doc["t"] == t and len(doc["basis"]) == 2 ** (t - 1) * coh.t_set(t).N


def test_verify_suite_catches_corruption():
    report = coh.verify_suite(3, coh.corrupted_g(3))
    failed = {c.name for c in report.failures()}
    assert "lm-g7" in failed
    assert not report.ok


def test_t_bounds():
    with pytest.raises(ValueError):
        coh.grass_spec(coh.MAX_T + 1)
