"""Congruences of finite lattices and the congruence lattice Con L."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .config import check_size
from .errors import NotInjective
from .order import FiniteLattice


def _canonical(labels):
    """Relabel so each element points at the least member of its block."""
    first = {}
    return tuple(first.setdefault(v, x) for x, v in enumerate(labels))


@dataclass(frozen=True, eq=False)
class Congruence:
    lattice: FiniteLattice
    labels: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", _canonical(self.labels))

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.labels == other.labels and \
            self.lattice.n == other.lattice.n

    def __hash__(self):
        return hash(self.labels)

    @property
    def blocks(self):
        out = {}
        for x, r in enumerate(self.labels):
            out.setdefault(r, []).append(x)
        return tuple(tuple(b) for b in out.values())

    def related(self, x, y):
        return self.labels[x] == self.labels[y]

    def __le__(self, other):
        lab = other.labels
        return all(lab[x] == lab[r] for x, r in enumerate(self.labels))

    def join(self, other):
        return Congruence(self.lattice, partition_join(self.labels, other.labels))

    def meet(self, other):
        seen = {}
        return Congruence(
            self.lattice,
            [seen.setdefault((a, b), x) for x, (a, b) in enumerate(zip(self.labels, other.labels))],
        )

    def is_compatible(self):
        L = self.lattice
        lab = self.labels
        for x in range(L.n):
            for y in range(x + 1, L.n):
                if lab[x] != lab[y]:
                    continue
                mx, my, jx, jy = L.meet[x], L.meet[y], L.join[x], L.join[y]
                for z in range(L.n):
                    if lab[mx[z]] != lab[my[z]] or lab[jx[z]] != lab[jy[z]]:
                        return False
        return True

    def __str__(self):
        L = self.lattice
        return "|".join(" ".join(L.labels[x] for x in b) for b in self.blocks)


def partition_join(p, q):
    n = len(p)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lab in (p, q):
        for x, r in enumerate(lab):
            a, b = find(x), find(r)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return tuple(find(x) for x in range(n))


def identity_congruence(L):
    return Congruence(L, range(L.n))


def total_congruence(L):
    return Congruence(L, [0] * L.n)


def principal_congruence(L, a, b):
    """Least congruence collapsing ``a`` and ``b``."""
    return Congruence(L, kernels.principal_congruence(L.meet_array, L.join_array, a, b))


def principal_congruences(L, pairs):
    pairs = list(pairs)
    if not pairs:
        return []
    rows = kernels.principal_congruences(L.meet_array, L.join_array, pairs)
    return [Congruence(L, r) for r in rows]


def congruence_lattice(L, max_elements=None):
    """Con L, built from the principal congruences of covering pairs by join-closure.

    Elements of the result are :class:`Congruence` objects, bottom-up by
    number of blocks (identity first).
    """
    gens = []
    seen_gen = set()
    for c in principal_congruences(L, L.covers):
        if c.labels not in seen_gen:
            seen_gen.add(c.labels)
            gens.append(c.labels)
    bottom = tuple(range(L.n))
    found = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                j = partition_join(p, g)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
                    check_size(len(found), f"Con({L.name})", max_elements)
        frontier = nxt
    parts = sorted(found, key=lambda p: (-len(set(p)), p))
    congs = [Congruence(L, p) for p in parts]
    up = []
    for c in congs:
        up.append(sum(1 << j for j, d in enumerate(congs) if c <= d))
    return FiniteLattice.from_up_sets(
        f"Con({L.name})", [str(c) for c in congs], up, elements=congs, max_elements=max_elements
    )


def index_of(con_lattice, theta):
    """Index of the congruence ``theta`` inside a lattice built by :func:`congruence_lattice`."""
    table = getattr(con_lattice, "_cong_index", None)
    if table is None:
        table = {c.labels: i for i, c in enumerate(con_lattice.elements)}
        object.__setattr__(con_lattice, "_cong_index", table)
    return table[theta.labels]


def is_simple(L):
    return L.n >= 2 and len(congruence_lattice(L)) == 2


def restrict_congruence(theta, embedding):
    """Preimage of ``theta`` along an injective homomorphism ``embedding: L -> M``."""
    if not embedding.is_injective:
        raise NotInjective("restriction needs an injective homomorphism")
    f = embedding.map
    lab = theta.labels
    seen = {}
    return Congruence(embedding.source, [seen.setdefault(lab[f[x]], x) for x in range(len(f))])


def all_partitions(n):
    """Every set partition of ``range(n)`` as a canonical label tuple (restricted growth)."""
    def rec(prefix, maxlab):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(maxlab + 2):
            yield from rec(prefix + [v], max(maxlab, v))

    for rg in rec([], -1):
        first = {}
        yield tuple(first.setdefault(v, x) for x, v in enumerate(rg))


def congruences_by_enumeration(L):
    """All congruences by filtering every partition; an oracle for ``|L| <= 7``."""
    check_size(L.n, "partition enumeration", 7)
    return [Congruence(L, p) for p in all_partitions(L.n) if Congruence(L, p).is_compatible()]
