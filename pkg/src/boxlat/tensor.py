"""Bi-ideals of A x B and the semilattice tensor product A (x) B.

For finite lattices every bi-ideal of A x B is a finite join of pure tensors,
so A (x) B is realized as the lattice of all bi-ideals ordered by inclusion.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import kernels
from .config import check_size
from .errors import NotALattice, NotComparable, SizeCapExceeded
from .grid import grid as _grid
from .order import FiniteLattice


@dataclass(frozen=True)
class BiIdeal:
    A: FiniteLattice
    B: FiniteLattice
    bits: int

    def __hash__(self):
        return hash(self.bits)

    def __eq__(self, other):
        return isinstance(other, BiIdeal) and self.bits == other.bits and \
            self.A is other.A and self.B is other.B

    def __contains__(self, pair):
        x, y = pair
        return bool(self.bits >> (x * self.B.n + y) & 1)

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    @property
    def grid(self):
        return _grid(self.A, self.B)

    def pairs(self):
        return self.grid.pairs(self.bits)

    def maximal_pairs(self):
        return self.grid.maximal(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __str__(self):
        return tensor_label(self.A, self.B, self.bits)


def tensor_label(A, B, bits, op="⊗"):
    g = _grid(A, B)
    gens = [(x, y) for x, y in g.maximal(bits) if x != A.zero and y != B.zero]
    if not gens:
        return "⊥"
    return " ∨ ".join(f"{A.labels[x]}{op}{B.labels[y]}" for x, y in sorted(gens))


def bottom(A, B):
    return BiIdeal(A, B, _grid(A, B).bottom)


def pure_tensor(A, B, a, b):
    """``{(x, y) : x <= a and y <= b}`` together with the bottom."""
    return BiIdeal(A, B, _grid(A, B).ltensor(a, b))


def is_bi_ideal(A, B, bits):
    """Direct check of the three defining conditions (no closure involved)."""
    g = _grid(A, B)
    if g.bottom & ~bits:
        return False
    members = g.pairs(bits)
    for x, y in members:
        if g.circ(x, y) & ~bits:
            return False
    nb = B.n
    cols = {}
    rows = {}
    for x, y in members:
        cols.setdefault(y, []).append(x)
        rows.setdefault(x, []).append(y)
    for y, xs in cols.items():
        for x0, x1 in itertools.combinations(xs, 2):
            if not bits >> (A.join[x0][x1] * nb + y) & 1:
                return False
    for x, ys in rows.items():
        for y0, y1 in itertools.combinations(ys, 2):
            if not bits >> (x * nb + B.join[y0][y1]) & 1:
                return False
    return True


def close_bits(A, B, bits):
    g = _grid(A, B)
    cm = kernels.close_bi_ideal(
        g.column_maxima(bits), A.leq_matrix, A.join_array, B.leq_matrix, B.join_array,
        B.zero, A.one,
    )
    return g.from_column_maxima(cm)


def bi_ideal_closure(A, B, cells):
    """Least bi-ideal containing ``cells`` (an int bitset or an iterable of pairs)."""
    bits = cells if isinstance(cells, int) else _grid(A, B).from_pairs(cells)
    return BiIdeal(A, B, close_bits(A, B, bits))


def enumerate_bi_ideals(A, B, max_elements=None):
    """All bi-ideals as bitsets, generated from the bottom by adding single cells."""
    g = _grid(A, B)
    start = g.bottom
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for h in frontier:
            missing = g.full & ~h
            while missing:
                low = missing & -missing
                missing ^= low
                k = close_bits(A, B, h | low)
                if k not in found:
                    found.add(k)
                    nxt.append(k)
                    check_size(len(found), f"tensor({A.name}, {B.name})", max_elements)
        frontier = nxt
    return sorted(found, key=lambda s: (s.bit_count(), s))


def tensor_product(A, B, max_elements=None):
    sets = enumerate_bi_ideals(A, B, max_elements)
    return FiniteLattice.from_sets(
        f"tensor({A.name}, {B.name})",
        sets,
        labels=[tensor_label(A, B, s) for s in sets],
        elements=[BiIdeal(A, B, s) for s in sets],
        max_elements=max_elements,
    )


def element_index(T, bits):
    table = T.__dict__.get("_bits_index")
    if table is None:
        table = {e.bits: i for i, e in enumerate(T.elements)}
        object.__setattr__(T, "_bits_index", table)
    return table[bits]


def _crossed(A, B, a0, b0, a1, b1):
    return (A.leq(a0, a1) and B.leq(b1, b0)) or (A.leq(a1, a0) and B.leq(b0, b1))


def mixed_tensor(A, B, a0, b0, a1, b1):
    """``(a0 (x) b0) u (a1 (x) b1)`` for crossed-comparable pairs."""
    if not _crossed(A, B, a0, b0, a1, b1):
        raise NotComparable(
            f"({A.labels[a0]},{B.labels[b0]}) and ({A.labels[a1]},{B.labels[b1]}) are not crossed"
        )
    g = _grid(A, B)
    bits = g.ltensor(a0, b0) | g.ltensor(a1, b1)
    if not is_bi_ideal(A, B, bits):
        raise AssertionError("mixed tensor failed the bi-ideal conditions")
    return BiIdeal(A, B, bits)


def mixed_tensors(A, B):
    out = set()
    for a0, a1 in itertools.product(range(A.n), repeat=2):
        for b0, b1 in itertools.product(range(B.n), repeat=2):
            if _crossed(A, B, a0, b0, a1, b1):
                out.add(mixed_tensor(A, B, a0, b0, a1, b1).bits)
    return out


def is_capped_element(A, B, bits):
    """True iff the set is the union of the pure tensors at its maximal pairs."""
    g = _grid(A, B)
    union = g.bottom
    for x, y in g.maximal(bits):
        union |= g.ltensor(x, y)
    return union == bits


def is_capped(T):
    return all(is_capped_element(e.A, e.B, e.bits) for e in T.elements)


def is_sub_tensor_product(A, B, family):
    """Conditions: bi-ideals, closed under intersection, a lattice under containment,
    and containing every mixed tensor."""
    sets = sorted({f.bits if isinstance(f, BiIdeal) else f for f in family})
    if not sets or not all(is_bi_ideal(A, B, s) for s in sets):
        return False
    members = set(sets)
    for s, t in itertools.combinations(sets, 2):
        if s & t not in members:
            return False
    try:
        FiniteLattice.from_sets("C", sets)
    except NotALattice:
        return False
    return mixed_tensors(A, B) <= members


def sub_tensor_products(A, B, max_free=16):
    """Every sub-tensor product of A and B by exhaustive search over families
    between the mixed tensors and all of A (x) B."""
    every = enumerate_bi_ideals(A, B)
    forced = mixed_tensors(A, B)
    free = [s for s in every if s not in forced]
    if len(free) > max_free:
        raise SizeCapExceeded(f"{len(free)} optional bi-ideals exceed search cap {max_free}")
    out = []
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            fam = forced | set(extra)
            if is_sub_tensor_product(A, B, fam):
                out.append(frozenset(fam))
    return out
