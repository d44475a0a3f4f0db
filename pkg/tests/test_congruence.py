import itertools

import pytest

from boxlat import catalog, is_distributive
from boxlat.congruence import (
    Congruence,
    congruence_lattice,
    congruences_by_enumeration,
    identity_congruence,
    index_of,
    is_simple,
    principal_congruence,
    restrict_congruence,
    total_congruence,
)
from boxlat.errors import NotInjective, SizeCapExceeded
from boxlat.order import LatticeHom

SMALL = ["chain(1)", "chain(2)", "chain(3)", "chain(4)", "boolean(2)", "M3", "N5", "FD(2)"]


@pytest.mark.parametrize("name", SMALL)
def test_con_matches_partition_enumeration(name):
    L = catalog(name)
    built = {c.labels for c in congruence_lattice(L).elements}
    oracle = {c.labels for c in congruences_by_enumeration(L)}
    assert built == oracle


def test_enumeration_oracle_is_capped():
    with pytest.raises(SizeCapExceeded):
        congruences_by_enumeration(catalog("boolean(3)"))


def test_principal_examples(M3):
    c3 = catalog("chain(3)")
    assert principal_congruence(M3, 1, 1) == identity_congruence(M3)
    assert principal_congruence(M3, M3.zero, M3.index("p")) == total_congruence(M3)
    assert principal_congruence(c3, 0, 1).blocks == ((0, 1), (2,))


def test_con_n5_frozen(N5):
    CL = congruence_lattice(N5)
    assert [str(c) for c in CL.elements] == [
        "0|a|b|c|1", "0|a c|b|1", "0 a c|b 1", "0 b|a c 1", "0 a b c 1"]


@pytest.mark.parametrize("name,size", [("M3", 2), ("chain(3)", 4), ("N5", 5), ("boolean(2)", 4),
                                       ("chain(1)", 1)])
def test_con_sizes(name, size):
    assert congruence_lattice(catalog(name)).n == size


@pytest.mark.parametrize("name", SMALL + ["boolean(3)", "FD(3)"])
def test_con_properties(name):
    L = catalog(name)
    CL = congruence_lattice(L)
    assert is_distributive(CL)
    for theta in CL.elements:
        assert theta.is_compatible()
    for a, b in itertools.product(range(L.n), repeat=2):
        assert principal_congruence(L, a, b) == principal_congruence(L, L.meet[a][b], L.join[a][b])
    for theta in CL.elements:
        acc = identity_congruence(L)
        for a, b in itertools.combinations(range(L.n), 2):
            if theta.related(a, b):
                acc = acc.join(principal_congruence(L, a, b))
        assert acc == theta


def test_meet_join_of_congruences(N5):
    CL = congruence_lattice(N5)
    for i, j in itertools.product(range(CL.n), repeat=2):
        x, y = CL.elements[i], CL.elements[j]
        assert index_of(CL, x.join(y)) == CL.join[i][j]
        assert index_of(CL, x.meet(y)) == CL.meet[i][j]


def test_simplicity():
    assert is_simple(catalog("M3"))
    assert is_simple(catalog("chain(2)"))
    assert not is_simple(catalog("chain(3)"))
    assert not is_simple(catalog("N5"))
    assert not is_simple(catalog("chain(1)"))


def test_restriction():
    c2, c3 = catalog("chain(2)"), catalog("chain(3)")
    emb = LatticeHom(c2, c3, [0, 1])
    theta = Congruence(c3, [0, 0, 2])
    assert restrict_congruence(theta, emb) == total_congruence(c2)
    assert restrict_congruence(identity_congruence(c3), emb) == identity_congruence(c2)
    assert restrict_congruence(total_congruence(c3), emb) == total_congruence(c2)
    with pytest.raises(NotInjective):
        restrict_congruence(theta, LatticeHom(c3, c2, [0, 0, 1]))


def test_canonical_form_and_printing(N5):
    a = Congruence(N5, [7, 7, 3, 3, 9])
    b = Congruence(N5, [0, 0, 2, 2, 4])
    assert a == b and hash(a) == hash(b)
    assert a.blocks == ((0, 1), (2, 3), (4,))
