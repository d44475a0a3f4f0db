import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxlat import catalog, dual, find_isomorphism, is_distributive, is_isomorphic
from boxlat.errors import NotAHomomorphism, NotALattice, NotAPoset, SizeCapExceeded, UnknownName
from boxlat.order import (
    FiniteLattice,
    LatticeHom,
    direct_product,
    identity,
    interval_inclusion,
    lattice_from_covers,
    permutations_of,
)

NAMES = ["chain(1)", "chain(2)", "chain(3)", "chain(5)", "boolean(2)", "boolean(3)", "M3", "N5",
         "FD(2)", "FD(3)"]


@pytest.mark.parametrize("name,size", [("chain(1)", 1), ("chain(4)", 4), ("M3", 5), ("N5", 5),
                                       ("boolean(3)", 8), ("FD(1)", 1), ("FD(2)", 4), ("FD(3)", 18)])
def test_catalog_sizes(name, size):
    assert catalog(name).n == size


def test_catalog_is_cached_and_rejects_unknown():
    assert catalog("M3") is catalog(" M3 ")
    with pytest.raises(UnknownName):
        catalog("M4")


@pytest.mark.parametrize("name", NAMES)
def test_lattice_axioms(name):
    L = catalog(name)
    m, j, r = L.meet, L.join, range(L.n)
    for x, y in itertools.product(r, repeat=2):
        assert m[x][y] == m[y][x] and j[x][y] == j[y][x]
        assert m[x][j[x][y]] == x and j[x][m[x][y]] == x
        assert L.leq(x, y) == (m[x][y] == x)
    for x, y, z in itertools.product(r, repeat=3):
        assert m[m[x][y]][z] == m[x][m[y][z]]
        assert j[j[x][y]][z] == j[x][j[y][z]]


@pytest.mark.parametrize("name", NAMES)
def test_dual_is_an_involution(name):
    L = catalog(name)
    D = dual(dual(L))
    assert D.name == L.name and D.up == L.up and D.meet == L.meet
    assert is_distributive(L) == is_distributive(dual(L))


def test_distributivity():
    assert is_distributive(catalog("chain(4)"))
    assert is_distributive(catalog("boolean(3)"))
    assert is_distributive(catalog("FD(3)"))
    assert not is_distributive(catalog("M3"))
    assert not is_distributive(catalog("N5"))


def test_n5_convention(N5):
    c, a = N5.index("c"), N5.index("a")
    assert N5.leq(c, a) and N5.join[c][N5.index("b")] == N5.one


def test_covers_and_heights(M3, N5):
    assert len(M3.covers) == 6 and M3.height == 2
    assert len(N5.covers) == 5 and N5.height == 3
    assert sorted(M3.labels[x] for x in M3.atoms) == ["p", "q", "r"]


def test_rejects_non_posets_and_non_lattices():
    with pytest.raises(NotAPoset):
        lattice_from_covers(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(NotALattice):
        lattice_from_covers(["0", "a", "b"], [("0", "a"), ("0", "b")])
    # two maximal upper bounds of a, b
    with pytest.raises(NotALattice) as exc:
        lattice_from_covers(["0", "a", "b", "c", "d", "1"],
                            [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("a", "d"),
                             ("b", "d"), ("c", "1"), ("d", "1")])
    assert set(exc.value.pair) == {"a", "b"}
    with pytest.raises(NotAPoset):
        FiniteLattice.from_leq("bad", ["x", "y"], [[1, 1], [1, 1]])


def test_size_cap_from_environment(monkeypatch):
    monkeypatch.setenv("BOXLAT_MAX_ELEMENTS", "4")
    with pytest.raises(SizeCapExceeded):
        direct_product(catalog("chain(3)"), catalog("chain(2)"))
    monkeypatch.delenv("BOXLAT_MAX_ELEMENTS")
    assert direct_product(catalog("chain(3)"), catalog("chain(2)")).n == 6


def test_isomorphisms():
    two = catalog("chain(2)")
    assert is_isomorphic(direct_product(two, two), catalog("boolean(2)"))
    assert is_isomorphic(dual(catalog("M3")), catalog("M3"))
    assert is_isomorphic(dual(catalog("N5")), catalog("N5"))
    assert not is_isomorphic(catalog("M3"), catalog("N5"))
    assert not is_isomorphic(catalog("chain(4)"), catalog("boolean(2)"))
    assert len(permutations_of(catalog("M3"))) == 6


@st.composite
def relabelled(draw):
    L = catalog(draw(st.sampled_from(["N5", "M3", "boolean(3)", "FD(3)", "chain(4)"])))
    perm = draw(st.permutations(list(range(L.n))))
    inv = {p: i for i, p in enumerate(perm)}
    leq = [[L.leq(perm[x], perm[y]) for y in range(L.n)] for x in range(L.n)]
    M = FiniteLattice.from_leq("relabelled", [L.labels[p] for p in perm], leq)
    return L, M, inv


@settings(max_examples=40, deadline=None)
@given(relabelled())
def test_isomorphism_search_finds_relabellings(case):
    L, M, _ = case
    f = find_isomorphism(L, M)
    assert f is not None
    for x, y in itertools.product(range(L.n), repeat=2):
        assert L.leq(x, y) == M.leq(f[x], f[y])


def test_homomorphisms():
    c3, two = catalog("chain(3)"), catalog("chain(2)")
    h = LatticeHom(two, c3, [0, 2])
    assert h.preserves_zero and h.preserves_one and h.is_injective
    assert h.compose(identity(c3)).map == h.map
    with pytest.raises(NotAHomomorphism):
        LatticeHom(catalog("boolean(2)"), c3, [0, 1, 1, 2])
    M3 = catalog("M3")
    with pytest.raises(NotAHomomorphism):
        LatticeHom(two, M3, [0])
    inc = interval_inclusion(M3, M3.index("p"))
    assert inc.source.n == 2 and inc.preserves_one and not inc.preserves_zero


def test_product_order():
    rng = random.Random(1)
    A, B = catalog("N5"), catalog("chain(3)")
    P = direct_product(A, B)
    for _ in range(200):
        u, v = rng.randrange(P.n), rng.randrange(P.n)
        (a, b), (c, d) = P.elements[u], P.elements[v]
        assert P.leq(u, v) == (A.leq(a, c) and B.leq(b, d))
