import itertools

import pytest

from torus_kac.bruhat import parse_perm, w0_conjugate
from torus_kac.errors import Disconnected, InvalidInput
from torus_kac.exactmath import IntPoly
from torus_kac.graph import ColoredMultigraph
from torus_kac.kacsum import (
    kac_all_ones,
    kac_polynomial,
    kac_report,
    rw_polynomial,
    supernova_graph,
)
from torus_kac.quiver import MultiPartition, RootTag, build_supernova, classify_root, delta
from torus_kac.symfunc import partitions

Q = IntPoly.q()


def mp(r, *legs):
    return MultiPartition(r, legs)


def cells_by_label(mu, include_all=False):
    _, cells = kac_polynomial(mu, include_all=include_all)
    return {",".join("".join(map(str, w)) for w in c.tuple): c.rw for c in cells}


@pytest.mark.parametrize(
    "wt, expected",
    [
        (("34512",), Q**2 + 4 * Q + 7),
        (("312", "312"), Q**2 + 2 * Q + 1),
        (("123", "312"), IntPoly.const(1)),
        (("3421",), Q**2 + 3 * Q + 4),
    ],
)
def test_rw_examples(wt, expected):
    assert rw_polynomial(tuple(parse_perm(w) for w in wt)) == expected


@pytest.mark.parametrize(
    "mu, expected",
    [
        (mp(5, (2,)), Q**2 + 5 * Q + 11),
        (mp(4, (1, 1)), Q**2 + 5 * Q + 11),
        (mp(3, (1,), (1,)), Q**2 + 4 * Q + 7),
        (mp(4, (1, 1, 1)), Q**3 + 6 * Q**2 + 20 * Q + 33),
        (mp(3, (2,)), IntPoly.const(1)),
    ],
)
def test_kac_examples(mu, expected):
    poly, _ = kac_polynomial(mu)
    assert poly == expected


def test_grassmannian_cells():
    cells = cells_by_label(mp(5, (2,)), include_all=True)
    assert cells["31452"] == IntPoly.const(1)
    assert cells["34152"] == Q + 3
    assert cells["34512"] == Q**2 + 4 * Q + 7
    assert cells["34125"] == IntPoly()
    connected = cells_by_label(mp(5, (2,)))
    assert set(connected) == {"31452", "34152", "34512"}


def test_reports_respect_invariants():
    _, cells = kac_polynomial(mp(4, (1, 1, 1)), include_all=True)
    assert len(cells) == 24
    for c in cells:
        assert (c.rw == IntPoly()) == (not c.connected)
        if c.connected:
            assert c.inversion_count >= 3


def test_n_greater_than_r_rejected():
    with pytest.raises(InvalidInput):
        kac_polynomial(mp(3, (3, 1)))


def test_projective_cases_are_not_roots():
    # r = n > 1: the hub reflects to 0 and the support falls apart
    for r in (2, 3, 4):
        mu = mp(r, (r,))
        qv, v = build_supernova(mu)
        assert classify_root(qv, v).tag is RootTag.NOT_A_ROOT
        assert kac_polynomial(mu)[0] == IntPoly()
    assert kac_polynomial(mp(1, (1,)))[0] == IntPoly.const(1)


def test_report_schema():
    rep = kac_report(mp(5, (2,)))
    assert rep["kac"] == [11, 5, 1]
    assert rep["warning_outside_M"] is False
    assert {"w": ["34512"], "inv": 6, "rw": [7, 4, 1]} in rep["cells"]
    assert kac_report(mp(5, (3, 1)))["warning_outside_M"] is True


def test_threads_do_not_change_results():
    mu = mp(4, (1, 1), (2,))
    assert kac_report(mu, threads=1) == kac_report(mu, threads=3)


def test_kac_all_ones_examples():
    k32 = ColoredMultigraph(5, [(i, j) for i in (1, 2, 3) for j in (4, 5)])
    assert kac_all_ones(k32) == Q**2 + 4 * Q + 7
    assert kac_all_ones(ColoredMultigraph(2, [(1, 2)])) == IntPoly.const(1)
    assert kac_all_ones(ColoredMultigraph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])) == Q + 3
    with pytest.raises(Disconnected):
        kac_all_ones(ColoredMultigraph(3, [(1, 2)]))


@pytest.mark.parametrize("r, k", [(r, k) for r in range(1, 6) for k in (1, 2, 3)])
def test_all_ones_agreement(r, k):
    mu = MultiPartition(r, [[1]] * k)
    assert kac_all_ones(supernova_graph(mu)) == kac_polynomial(mu)[0]


def sweep(max_r=5, max_k=2):
    for r in range(1, max_r + 1):
        parts = [p for s in range(1, r + 1) for p in partitions(s)]
        for k in range(1, max_k + 1):
            for legs in itertools.combinations_with_replacement(parts, k):
                yield MultiPartition(r, legs)


def test_root_laws_on_full_sweep():
    for mu in sweep():
        qv, v = build_supernova(mu)
        cls = classify_root(qv, v)
        poly, _ = kac_polynomial(mu)
        assert all(c >= 0 for c in poly.coeffs), mu
        if cls.is_imaginary:
            assert poly.degree == delta(qv, v) + 1 and poly.leading == 1, mu
        elif cls.tag is RootTag.REAL:
            assert poly == IntPoly.const(1), mu
        else:
            assert poly == IntPoly(), mu


@pytest.mark.parametrize("mu", [mp(5, (2,)), mp(4, (1, 1)), mp(3, (1,), (1,)), mp(4, (2,), (1, 1))])
def test_conjugate_convention_gives_same_sum(mu):
    _, cells = kac_polynomial(mu, include_all=True)
    original = sorted(c.rw.coeffs for c in cells)
    conj = sorted(rw_polynomial(tuple(w0_conjugate(w) for w in c.tuple)).coeffs for c in cells)
    assert original == conj
