import threading

import pytest

from grassgb.dualsw import DualSWTable, g_closed, g_poly, g_spec, wbar, wbar_closed, wbar_spec


def test_small_values():
    s4 = g_spec(4)
    assert wbar(0, 4) == 1
    assert wbar(1, 4) == wbar_spec(4).var("w1")
    assert g_poly(3, 3) == g_spec(3).var("w3")
    assert g_poly(6, 4) == s4.parse("w2^3 + w3^2")
    assert g_poly(7, 4) == s4.parse("w2^2*w3")
    assert not g_poly(5, 4)
    assert g_poly(8, 4) == s4.parse("w2^4 + w2*w3^2 + w2^2*w4 + w4^2")


def test_negative_indices():
    for r in (-1, -2, -3):
        assert not g_poly(r, 4)
    with pytest.raises(ValueError):
        g_poly(-4, 4)
    with pytest.raises(ValueError):
        wbar(-1, 3)
    with pytest.raises(ValueError):
        DualSWTable(1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_recurrence_matches_closed_form(k):
    for r in range(41):
        assert g_poly(r, k) == g_closed(r, k)
        assert wbar(r, k) == wbar_closed(r, k)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_total_class_is_inverted(k):
    # (1 + w1 + ... + wk) * (wbar_0 + wbar_1 + ...) = 1 in degrees <= 20
    spec = wbar_spec(k)
    for n in range(1, 21):
        acc = wbar(n, k)
        for j in range(1, k + 1):
            if j <= n:
                acc = acc + spec.var(f"w{j}") * wbar(n - j, k)
        assert not acc, n


def test_homogeneity():
    for r in range(30):
        p = g_poly(r, 4)
        assert not p or p.degrees() == {r}


def test_concurrent_extension():
    table = DualSWTable(4)
    out = {}

    def work(r):
        out[r] = table.g(r)

    threads = [threading.Thread(target=work, args=(r,)) for r in range(60, 120, 5)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(out[r] == g_poly(r, 4) for r in out)
