import itertools

import pytest

from boxlat import catalog, is_isomorphic
from boxlat.box import lattice_tensor_product
from boxlat.errors import NotSimple
from boxlat.constructions import (
    alpha_iso,
    angle_image,
    cong_preserving_embedding,
    m3_angle,
    m3_of,
    n5_angle,
    n5_of,
)
from boxlat.grid import grid
from boxlat.tensor import tensor_product


def test_over_two_element_chain():
    two = catalog("chain(2)")
    assert is_isomorphic(m3_of(two).lattice, catalog("M3"))
    assert is_isomorphic(n5_of(two).lattice, catalog("N5"))


def test_membership_in_a_chain():
    c3 = catalog("chain(3)")
    M = m3_of(c3)
    assert (0, 0, 0) in M and (2, 2, 2) in M
    assert (1, 0, 0) in M and (2, 1, 1) in M
    assert (1, 1, 0) not in M  # pairwise meets differ
    N = n5_of(c3)
    assert (1, 0, 1) in N and (0, 1, 0) in N
    assert (1, 0, 0) not in N  # x must sit below z


def test_angle_contained_in_bracket():
    for name in ("chain(3)", "M3", "N5", "boolean(2)"):
        L = catalog(name)
        assert set(m3_angle(L).triples) <= set(m3_of(L).triples)
        assert set(n5_angle(L).triples) <= set(n5_of(L).triples)


def test_angle_equals_bracket_for_n5_base():
    """M3<N5> and M3[N5] coincide even though N5 is not distributive."""
    N5 = catalog("N5")
    assert set(m3_angle(N5).triples) == set(m3_of(N5).triples)


@pytest.mark.parametrize("name", ["chain(3)", "boolean(2)", "boolean(3)"])
def test_distributive_base_angle_equals_bracket(name):
    L = catalog(name)
    assert set(m3_angle(L).triples) == set(m3_of(L).triples)
    assert set(n5_angle(L).triples) == set(n5_of(L).triples)


@pytest.mark.parametrize("which,name", [("M3", "chain(3)"), ("M3", "N5"), ("M3", "M3"),
                                        ("N5", "chain(3)"), ("N5", "M3")])
def test_alpha_is_an_isomorphism(which, name):
    S, L = catalog(which), catalog(name)
    T = tensor_product(S, L)
    iso = alpha_iso(L, which, T)
    assert sorted(iso.mapping) == list(range(iso.target.lattice.n))
    g = grid(S, L)
    z = L.zero
    for x in range(L.n):
        if which == "M3":
            p, q, r = S.index("p"), S.index("q"), S.index("r")
            assert iso.image_of(g.ltensor(p, x)) == (x, z, z)
            assert iso.image_of(g.ltensor(q, x)) == (z, x, z)
            assert iso.image_of(g.ltensor(r, x)) == (z, z, x)
            assert iso.image_of(g.ltensor(S.one, x)) == (x, x, x)
        else:
            a, b, c = S.index("a"), S.index("b"), S.index("c")
            assert iso.image_of(g.ltensor(a, x)) == (x, z, x)
            assert iso.image_of(g.ltensor(b, x)) == (z, x, z)
            assert iso.image_of(g.ltensor(c, x)) == (z, z, x)


@pytest.mark.parametrize("which,name", [("M3", "chain(3)"), ("M3", "N5"), ("M3", "M3"),
                                        ("N5", "chain(3)"), ("N5", "N5")])
def test_angle_is_image_of_lattice_tensor_product(which, name):
    L = catalog(name)
    want = m3_angle(L) if which == "M3" else n5_angle(L)
    assert angle_image(L, which) == set(want.triples)
    S = catalog(which)
    assert is_isomorphic(lattice_tensor_product(S, L), want.lattice)


@pytest.mark.parametrize("s,l", [("M3", "chain(3)"), ("M3", "N5"), ("chain(2)", "N5"),
                                 ("M3", "boolean(2)")])
def test_congruence_preserving_embedding(s, l):
    r = cong_preserving_embedding(catalog(s), catalog(l))
    assert r.embedding.is_injective
    assert r.con_ltp_size == r.con_l_size
    assert r.passed


def test_embedding_needs_simple_factor():
    with pytest.raises(NotSimple):
        cong_preserving_embedding(catalog("N5"), catalog("chain(3)"))
    with pytest.raises(NotSimple):
        cong_preserving_embedding(catalog("boolean(2)"), catalog("M3"))


def test_triple_lattice_order_is_componentwise():
    M = m3_of(catalog("chain(3)"))
    L = M.lattice
    for i, j in itertools.product(range(L.n), repeat=2):
        s, t = M.triples[i], M.triples[j]
        assert L.leq(i, j) == all(x <= y for x, y in zip(s, t))
