import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torus_kac.errors import HypothesisViolated, InvalidInput, ZeroVector
from torus_kac.quiver import (
    DimVector,
    MultiPartition,
    RootTag,
    build_supernova,
    cartan_pairing,
    classify_root,
    delta,
    in_fundamental_domain,
    in_fundamental_domain_direct,
    parse_multipartition,
    reflect,
    unit,
    vmu_in_M,
)


def mp(r, *legs):
    return MultiPartition(r, legs)


def test_parse_multipartition():
    assert parse_multipartition("r=5; mu=2") == mp(5, (2,))
    assert parse_multipartition("r=3; mu=1|1") == mp(3, (1,), (1,))
    assert parse_multipartition("r=4;mu=1,1,1") == mp(4, (1, 1, 1))
    assert str(mp(3, (2, 1), (1,))) == "r=3; mu=2,1|1"
    with pytest.raises(InvalidInput):
        parse_multipartition("r=3")


def test_partition_validation():
    assert mp(4, (2, 0)).legs[0].parts == (2,)
    with pytest.raises(InvalidInput):
        mp(4, (1, 2))
    with pytest.raises(InvalidInput):
        mp(4, ())


def test_build_supernova_star():
    qv, v = build_supernova(mp(5, (2,)))
    assert qv.leg_lengths == (0,)
    assert v[(1, 0)] == 2 and all(v[(l,)] == 1 for l in range(1, 6))
    assert len(qv.vertices) == 6


def test_build_supernova_bipartite():
    qv, v = build_supernova(mp(3, (1,), (1,)))
    assert len(qv.edge_list()) == 6
    assert set(v.values()) == {1}


def test_build_supernova_long_leg():
    qv, v = build_supernova(mp(4, (1, 1)))
    assert v[(1, 0)] == 2 and v[(1, 1)] == 1
    assert qv.multiplicity((1, 0), (1, 1)) == 1


def test_build_supernova_strict():
    with pytest.raises(InvalidInput):
        build_supernova(mp(3, (3, 1)), strict=True)


def test_cartan_and_delta():
    qv, v = build_supernova(mp(5, (2,)))
    c = (1, 0)
    assert cartan_pairing(qv, unit(c), unit(c)) == 2
    assert cartan_pairing(qv, unit(c), unit((1,))) == -1
    assert cartan_pairing(qv, v, v) == -2
    assert delta(qv, v) == 1
    assert delta(qv, unit(c)) == -1
    qv2, v2 = build_supernova(mp(3, (1,), (1,)))
    assert delta(qv2, v2) == 1


def test_reflect_examples():
    qv, v = build_supernova(mp(3, (3,)))
    assert reflect(qv, v, (1, 0))[(1, 0)] == 0
    assert reflect(qv, unit((1,)), (1,)) == -unit((1,))
    qv, v = build_supernova(mp(3, (3, 1)))
    assert v[(1, 0)] == 4
    assert reflect(qv, v, (1, 0))[(1, 0)] == 0


def test_classify_examples():
    qv, v = build_supernova(mp(5, (2,)))
    assert classify_root(qv, v).tag is RootTag.FUNDAMENTAL_IMAGINARY
    qv, v = build_supernova(mp(3, (2,)))
    assert classify_root(qv, v).tag is RootTag.REAL
    assert classify_root(qv, unit((2,))).tag is RootTag.REAL
    with pytest.raises(ZeroVector):
        classify_root(qv, DimVector())


def test_classify_oversized_leg():
    # Delta = -4 rules out a real root (real roots have Delta = -1); the
    # reflected vector (1,1,1 | 0, 1) has disconnected support.
    qv, v = build_supernova(mp(3, (3, 1)))
    assert delta(qv, v) == -4
    result = classify_root(qv, v)
    assert result.tag is RootTag.NOT_A_ROOT
    assert result.witness == ((1, 0),)


def test_fundamental_domain_examples():
    qv, v = build_supernova(mp(5, (2,)))
    assert in_fundamental_domain(qv, v)
    assert not in_fundamental_domain(qv, unit((1, 0)))
    qv, v = build_supernova(mp(3, (3, 1)))
    assert not in_fundamental_domain(qv, v)


def test_vmu_in_M_examples():
    assert vmu_in_M(mp(5, (2,)))
    assert not vmu_in_M(mp(3, (3, 1)))
    assert vmu_in_M(mp(3, (1,), (1,)))
    with pytest.raises(HypothesisViolated):
        vmu_in_M(mp(3, (1,)))


@st.composite
def quiver_and_vectors(draw):
    r = draw(st.integers(1, 4))
    lengths = tuple(draw(st.lists(st.integers(0, 2), min_size=1, max_size=3)))
    qv, _ = build_supernova(MultiPartition(r, [[1] * (s + 1) for s in lengths]))
    coords = st.integers(-3, 3)
    a = DimVector({u: draw(coords) for u in qv.vertices})
    b = DimVector({u: draw(coords) for u in qv.vertices})
    vertex = draw(st.sampled_from(qv.vertices))
    return qv, a, b, vertex


@given(quiver_and_vectors())
def test_reflection_is_isometric_involution(data):
    qv, a, b, u = data
    assert reflect(qv, reflect(qv, a, u), u) == a
    assert cartan_pairing(qv, reflect(qv, a, u), reflect(qv, b, u)) == cartan_pairing(qv, a, b)


@settings(max_examples=200)
@given(quiver_and_vectors())
def test_closed_form_domain_matches_definition(data):
    qv, a, _, _ = data
    v = DimVector({u: abs(x) for u, x in a.items()})
    if v.is_zero():
        return
    assert in_fundamental_domain(qv, v) == in_fundamental_domain_direct(qv, v)


@st.composite
def multipartitions(draw):
    r = draw(st.integers(2, 6))
    k = draw(st.integers(1, 3))
    legs = []
    for _ in range(k):
        parts = draw(st.lists(st.integers(1, r), min_size=1, max_size=3))
        legs.append(sorted(parts, reverse=True))
    return MultiPartition(r, legs)


@settings(max_examples=200)
@given(multipartitions())
def test_root_laws_on_vmu(mu):
    qv, v = build_supernova(mu)
    cls = classify_root(qv, v)
    d = delta(qv, v)
    if cls.tag is RootTag.FUNDAMENTAL_IMAGINARY:
        assert d >= 0
    if cls.tag is RootTag.REAL:
        assert d == -1
    if cls.is_imaginary:
        assert all(mu.r >= n for n in mu.sizes())
    if cls.is_root and all(v[(i, 0)] > 0 for i in range(1, mu.k + 1)):
        for i, s in enumerate(qv.leg_lengths, start=1):
            assert all(v[(i, j)] >= v[(i, j + 1)] for j in range(s))
    if not (mu.k == 1 and mu.legs[0].size == 1) and vmu_in_M(mu):
        assert cls.tag is RootTag.FUNDAMENTAL_IMAGINARY
        assert in_fundamental_domain(qv, v)
