import itertools
import random

import pytest

from boxlat import catalog, is_isomorphic
from boxlat.errors import NotComparable, SizeCapExceeded
from boxlat.grid import grid
from boxlat.tensor import (
    bi_ideal_closure,
    bottom,
    enumerate_bi_ideals,
    is_bi_ideal,
    is_capped,
    is_capped_element,
    is_sub_tensor_product,
    mixed_tensor,
    mixed_tensors,
    pure_tensor,
    sub_tensor_products,
    tensor_product,
)


def brute_force_bi_ideals(A, B):
    """Filter every superset of the bottom through the defining conditions."""
    g = grid(A, B)
    free = [k for k in range(g.size) if not g.bottom >> k & 1]
    out = set()
    for mask in range(1 << len(free)):
        bits = g.bottom
        for i, k in enumerate(free):
            if mask >> i & 1:
                bits |= 1 << k
        if is_bi_ideal(A, B, bits):
            out.add(bits)
    return out


PAIRS = [("chain(2)", "chain(2)", 2), ("M3", "M3", 50), ("M3", "N5", 41), ("N5", "N5", 43),
         ("chain(3)", "M3", 12), ("boolean(2)", "N5", 25), ("chain(3)", "chain(3)", 6)]


@pytest.mark.parametrize("a,b,size", PAIRS)
def test_bi_ideals_against_brute_force(a, b, size):
    A, B = catalog(a), catalog(b)
    found = set(enumerate_bi_ideals(A, B))
    assert len(found) == size
    assert found == brute_force_bi_ideals(A, B)


def test_tensor_unit_and_degenerate():
    two = catalog("chain(2)")
    assert is_isomorphic(tensor_product(two, two), two)
    for name in ("M3", "N5", "boolean(2)"):
        L = catalog(name)
        assert is_isomorphic(tensor_product(two, L), L)
    assert tensor_product(catalog("M3"), catalog("chain(1)")).n == 1


def test_pure_tensors(M3):
    g = grid(M3, M3)
    assert pure_tensor(M3, M3, M3.one, M3.zero) == bottom(M3, M3)
    assert pure_tensor(M3, M3, M3.one, M3.one).bits == g.full
    two = catalog("chain(2)")
    assert pure_tensor(two, two, 1, 1).bits == 0b1111


def test_closure_examples(M3):
    assert bi_ideal_closure(M3, M3, []) == bottom(M3, M3)
    for a, b in itertools.product(range(M3.n), repeat=2):
        assert bi_ideal_closure(M3, M3, [(a, b)]) == pure_tensor(M3, M3, a, b)
    p, q = M3.index("p"), M3.index("q")
    cells = [(p, q), (q, p)]
    closed = bi_ideal_closure(M3, M3, cells)
    every = brute_force_bi_ideals(M3, M3)
    g = grid(M3, M3)
    want = g.from_pairs(cells)
    least = [s for s in every if s & want == want]
    assert closed.bits == min(least, key=int.bit_count)
    assert all(closed.bits & ~s == 0 for s in least)


@pytest.mark.parametrize("a,b", [("M3", "N5"), ("N5", "chain(3)"), ("boolean(2)", "M3")])
def test_closure_is_idempotent_and_minimal(a, b):
    A, B = catalog(a), catalog(b)
    rng = random.Random(7)
    g = grid(A, B)
    every = set(enumerate_bi_ideals(A, B))
    for H in every:
        assert bi_ideal_closure(A, B, H).bits == H
    for _ in range(200):
        cells = rng.getrandbits(g.size)
        closed = bi_ideal_closure(A, B, cells).bits
        assert closed in every and cells & ~closed == 0
        assert all(closed & ~s == 0 for s in every if cells & ~s == 0)


@pytest.mark.parametrize("a,b", [("M3", "N5"), ("M3", "M3"), ("N5", "N5")])
def test_arithmetic_formulas(a, b):
    A, B = catalog(a), catalog(b)
    g = grid(A, B)
    t = g.ltensor
    for a0, a1 in itertools.product(range(A.n), repeat=2):
        for b0, b1 in itertools.product(range(B.n), repeat=2):
            assert t(a0, b0) & t(a1, b1) == t(A.meet[a0][a1], B.meet[b0][b1])
            join = bi_ideal_closure(A, B, t(a0, b0) | t(a1, b1)).bits
            assert join == (t(a0, b0) | t(a1, b1) | t(A.join[a0][a1], B.meet[b0][b1])
                            | t(A.meet[a0][a1], B.join[b0][b1]))


def test_bimorphism_identities(N5, M3):
    g = grid(M3, N5)
    for a in range(M3.n):
        assert g.ltensor(a, N5.zero) == g.bottom
        for b0, b1 in itertools.product(range(N5.n), repeat=2):
            join = bi_ideal_closure(M3, N5, g.ltensor(a, b0) | g.ltensor(a, b1)).bits
            assert join == g.ltensor(a, N5.join[b0][b1])


def test_mixed_tensors(M3, N5):
    g = grid(M3, N5)
    a0, a1 = M3.zero, M3.index("p")
    b0, b1 = N5.one, N5.index("c")
    H = mixed_tensor(M3, N5, a0, b0, a1, b1)
    assert H.bits == g.ltensor(a0, b0) | g.ltensor(a1, b1)
    assert mixed_tensor(M3, N5, a1, b1, a1, b1) == pure_tensor(M3, N5, a1, b1)
    with pytest.raises(NotComparable):
        mixed_tensor(M3, N5, M3.index("p"), N5.index("b"), M3.index("q"), N5.index("c"))
    # with a0 <= a1 and b0 <= b1 the crossed union is an intersection of boxes
    for a0, a1 in itertools.product(range(M3.n), repeat=2):
        for b0, b1 in itertools.product(range(N5.n), repeat=2):
            if M3.leq(a0, a1) and N5.leq(b0, b1):
                lhs = g.ltensor(a0, b1) | g.ltensor(a1, b0)
                rhs = g.box(a0, b0) & g.box(M3.zero, b1) & g.box(a1, N5.zero)
                assert lhs == rhs


def test_cappedness(M3):
    T = tensor_product(M3, M3)
    assert is_capped(T)
    for bits in mixed_tensors(M3, M3):
        assert is_capped_element(M3, M3, bits)
    assert all(is_capped_element(M3, M3, s) for s in enumerate_bi_ideals(M3, M3))


def test_sub_tensor_product_predicate(M3):
    T = tensor_product(M3, M3)
    assert is_sub_tensor_product(M3, M3, [e.bits for e in T.elements])
    assert not is_sub_tensor_product(M3, M3, [bottom(M3, M3).bits])
    assert not is_sub_tensor_product(M3, M3, [])


def test_sub_tensor_search():
    two, c3 = catalog("chain(2)"), catalog("chain(3)")
    found = sub_tensor_products(two, c3)
    assert len(found) == 1
    with pytest.raises(SizeCapExceeded):
        sub_tensor_products(catalog("M3"), catalog("M3"), max_free=2)
