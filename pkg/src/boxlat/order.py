"""Finite lattices as dense-index tables.

Elements are ``0..n-1``; ``labels`` is the side table of printable names and
``elements`` optionally carries the underlying mathematical objects (bi-ideals,
congruences, upper sets, triples). Order rows are Python-int bitsets: bit ``y``
of ``up[x]`` is set iff ``x <= y``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from .config import check_size
from .errors import NotAHomomorphism, NotALattice, NotAPoset, UnknownName


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    name: str
    labels: tuple
    up: tuple
    down: tuple
    meet: tuple
    join: tuple
    zero: int
    one: int
    elements: tuple | None = None
    marks: dict = field(default_factory=dict)

    @property
    def n(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"<FiniteLattice {self.name} |{self.n}|>"

    # order-theoretic queries

    def leq(self, x, y):
        return (self.up[x] >> y) & 1 == 1

    def index(self, label):
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self.name}") from None

    def meet_all(self, xs, default=None):
        acc = self.one if default is None else default
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def join_all(self, xs, default=None):
        acc = self.zero if default is None else default
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def ideal(self, x):
        return list(_bits(self.down[x]))

    def filter(self, x):
        return list(_bits(self.up[x]))

    @cached_property
    def _label_index(self):
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def leq_matrix(self):
        m = np.zeros((self.n, self.n), dtype=np.uint8)
        for x in range(self.n):
            for y in _bits(self.up[x]):
                m[x, y] = 1
        m.setflags(write=False)
        return m

    @cached_property
    def leq_rows(self):
        """``leq_rows[x][y]`` as nested lists of bools (fast Python indexing)."""
        return [list(map(bool, row)) for row in self.leq_matrix.tolist()]

    @cached_property
    def meet_array(self):
        a = np.array(self.meet, dtype=np.int32)
        a.setflags(write=False)
        return a

    @cached_property
    def join_array(self):
        a = np.array(self.join, dtype=np.int32)
        a.setflags(write=False)
        return a

    @cached_property
    def covers(self):
        """Cover pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for x in range(self.n):
            above = self.up[x] & ~(1 << x)
            for y in _bits(above):
                between = above & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out

    @cached_property
    def heights(self):
        h = [0] * self.n
        for x in sorted(range(self.n), key=lambda v: self.down[v].bit_count()):
            for y in _bits(self.down[x] & ~(1 << x)):
                h[x] = max(h[x], h[y] + 1)
        return tuple(h)

    @property
    def height(self):
        return self.heights[self.one]

    @cached_property
    def atoms(self):
        return [y for x, y in self.covers if x == self.zero]

    def describe(self, x):
        return self.labels[x]

    # constructors

    @classmethod
    def from_up_sets(cls, name, labels, up, *, elements=None, marks=None, max_elements=None):
        """Build from order bitsets, computing meet/join tables.

        ``join(x, y)`` is the element whose up-set equals ``up[x] & up[y]``;
        its absence (or a missing global bound) raises :class:`NotALattice`.
        """
        n = len(labels)
        check_size(n, name, max_elements)
        if n == 0:
            raise NotALattice(f"{name}: empty poset has no bounds")
        up = tuple(up)
        down = [0] * n
        for x in range(n):
            for y in _bits(up[x]):
                down[y] |= 1 << x
        down = tuple(down)
        full = (1 << n) - 1
        zeros = [x for x in range(n) if up[x] == full]
        ones = [x for x in range(n) if down[x] == full]
        if not zeros or not ones:
            raise NotALattice(f"{name}: no global {'0' if not zeros else '1'}")
        by_up = {u: i for i, u in enumerate(up)}
        by_down = {d: i for i, d in enumerate(down)}
        join = []
        meet = []
        for x in range(n):
            jrow = []
            mrow = []
            ux, dx = up[x], down[x]
            for y in range(n):
                j = by_up.get(ux & up[y])
                m = by_down.get(dx & down[y])
                if j is None or m is None:
                    kind = "join" if j is None else "meet"
                    raise NotALattice(
                        f"{name}: {labels[x]} and {labels[y]} have no unique {kind}",
                        pair=(labels[x], labels[y]),
                    )
                jrow.append(j)
                mrow.append(m)
            join.append(tuple(jrow))
            meet.append(tuple(mrow))
        return cls(
            name=name,
            labels=tuple(labels),
            up=up,
            down=down,
            meet=tuple(meet),
            join=tuple(join),
            zero=zeros[0],
            one=ones[0],
            elements=None if elements is None else tuple(elements),
            marks=dict(marks or {}),
        )

    @classmethod
    def from_leq(cls, name, labels, leq, **kw):
        """Build from a predicate or matrix ``leq[x][y]``; validates the partial order."""
        n = len(labels)
        get = leq if callable(leq) else (lambda x, y: bool(leq[x][y]))
        up = [0] * n
        for x in range(n):
            row = 0
            for y in range(n):
                if get(x, y):
                    row |= 1 << y
            up[x] = row
        _check_partial_order(name, labels, up)
        return cls.from_up_sets(name, labels, up, **kw)

    @classmethod
    def from_sets(cls, name, sets, labels=None, *, elements=None, **kw):
        """The family ``sets`` (int bitsets) ordered by containment."""
        sets = list(sets)
        n = len(sets)
        check_size(n, name, kw.get("max_elements"))
        if len(set(sets)) != n:
            raise ValueError(f"{name}: duplicate sets")
        up = [0] * n
        for i, s in enumerate(sets):
            row = 0
            for j, t in enumerate(sets):
                if s & ~t == 0:
                    row |= 1 << j
            up[i] = row
        if labels is None:
            labels = [f"e{i}" for i in range(n)]
        return cls.from_up_sets(
            name, labels, up, elements=sets if elements is None else elements, **kw
        )


def _check_partial_order(name, labels, up):
    n = len(up)
    for x in range(n):
        if not (up[x] >> x) & 1:
            raise NotAPoset(f"{name}: {labels[x]} is not <= itself")
        for y in _bits(up[x]):
            if y != x and (up[y] >> x) & 1:
                raise NotAPoset(f"{name}: {labels[x]} and {labels[y]} form a cycle")
            if up[y] & ~up[x]:
                raise NotAPoset(f"{name}: order is not transitive at {labels[y]}")


def lattice_from_covers(elements, covers, name="L", **kw):
    """Lattice from element labels and cover pairs ``(lower, upper)``."""
    labels = [str(e) for e in elements]
    if len(set(labels)) != len(labels):
        raise ValueError(f"{name}: duplicate element labels")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ = [[] for _ in range(n)]
    indeg = [0] * n
    for lo, hi in covers:
        i, j = index[str(lo)], index[str(hi)]
        if i == j:
            raise NotAPoset(f"{name}: self-cover at {lo}")
        succ[i].append(j)
        indeg[j] += 1
    # Kahn's algorithm; leftover vertices sit on a cycle
    order = [i for i in range(n) if indeg[i] == 0]
    k = 0
    while k < len(order):
        for j in succ[order[k]]:
            indeg[j] -= 1
            if indeg[j] == 0:
                order.append(j)
        k += 1
    if len(order) != n:
        stuck = [labels[i] for i in range(n) if indeg[i] > 0]
        raise NotAPoset(f"{name}: covers contain a cycle through {stuck}")
    up = [1 << i for i in range(n)]
    for i in reversed(order):
        for j in succ[i]:
            up[i] |= up[j]
    return FiniteLattice.from_up_sets(name, labels, up, **kw)


# --- catalog ---------------------------------------------------------------

def chain(k):
    if k < 1:
        raise UnknownName(f"chain({k}): need at least one element")
    labels = [str(i) for i in range(k)]
    return lattice_from_covers(labels, [(str(i), str(i + 1)) for i in range(k - 1)], f"chain({k})")


def m3():
    return lattice_from_covers(
        ["0", "p", "q", "r", "1"],
        [("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
        "M3",
    )


def n5():
    # c < a, b incomparable to both
    return lattice_from_covers(
        ["0", "a", "b", "c", "1"],
        [("0", "c"), ("c", "a"), ("a", "1"), ("0", "b"), ("b", "1")],
        "N5",
    )


def boolean(k):
    if k < 0 or k > 12:
        raise UnknownName(f"boolean({k}) out of range")
    n = 1 << k
    labels = ["{" + ",".join(str(i) for i in range(k) if s >> i & 1) + "}" for s in range(n)]
    up = []
    for s in range(n):
        row = 0
        for t in range(n):
            if s & ~t == 0:
                row |= 1 << t
        up.append(row)
    return FiniteLattice.from_up_sets(f"boolean({k})", labels, up)


_FAMILY = re.compile(r"^\s*(chain|boolean|FD)\s*\(\s*(\d+)\s*\)\s*$")


def catalog(name):
    """Named standard lattices: ``chain(k)``, ``M3``, ``N5``, ``boolean(k)``, ``FD(k)``.

    Results are cached, so repeated lookups return the same object.
    """
    return _catalog(name.strip().replace(" ", ""))


@lru_cache(maxsize=None)
def _catalog(key):
    if key == "M3":
        return m3()
    if key == "N5":
        return n5()
    m = _FAMILY.match(key)
    if m:
        fam, k = m.group(1), int(m.group(2))
        if fam == "chain":
            return chain(k)
        if fam == "boolean":
            return boolean(k)
        from .freedist import free_distributive

        return free_distributive(k)
    raise UnknownName(f"unknown lattice {key!r}")


# --- derived lattices ------------------------------------------------------

def dual(L):
    name = L.name[5:-1] if L.name.startswith("dual(") and L.name.endswith(")") else f"dual({L.name})"
    return FiniteLattice(
        name=name,
        labels=L.labels,
        up=L.down,
        down=L.up,
        meet=L.join,
        join=L.meet,
        zero=L.one,
        one=L.zero,
        elements=L.elements,
        marks=dict(L.marks),
    )


def direct_product(A, B, max_elements=None):
    na, nb = A.n, B.n
    check_size(na * nb, f"{A.name} x {B.name}", max_elements)
    labels = [f"({a},{b})" for a in A.labels for b in B.labels]
    up = []
    for x in range(na):
        for y in range(nb):
            row = 0
            for x2 in _bits(A.up[x]):
                for y2 in _bits(B.up[y]):
                    row |= 1 << (x2 * nb + y2)
            up.append(row)
    return FiniteLattice.from_up_sets(
        f"prod({A.name}, {B.name})",
        labels,
        up,
        elements=[(x, y) for x in range(na) for y in range(nb)],
        max_elements=max_elements,
    )


def is_distributive(L):
    """Exhaustive check of ``x ^ (y v z) == (x ^ y) v (x ^ z)``."""
    M, J = L.meet_array, L.join_array
    idx = np.arange(L.n)
    x = idx[:, None, None]
    y = idx[None, :, None]
    z = idx[None, None, :]
    return bool(np.array_equal(M[x, J[y, z]], J[M[x, y], M[x, z]]))


# --- isomorphism -----------------------------------------------------------

def _signature(L, x):
    return (
        L.heights[x],
        L.down[x].bit_count(),
        L.up[x].bit_count(),
        sum(1 for a, b in L.covers if b == x),
        sum(1 for a, b in L.covers if a == x),
    )


def find_isomorphism(L, M):
    """A bijection ``f`` (tuple, ``f[x]`` in ``M``) preserving order both ways, or None.

    Order isomorphisms between lattices preserve meet and join.
    """
    if L.n != M.n:
        return None
    sig_l = [_signature(L, x) for x in range(L.n)]
    sig_m = [_signature(M, y) for y in range(M.n)]
    if sorted(sig_l) != sorted(sig_m):
        return None
    candidates = {s: [y for y in range(M.n) if sig_m[y] == s] for s in set(sig_m)}
    order = sorted(range(L.n), key=lambda x: (len(candidates[sig_l[x]]), L.heights[x]))
    f = [-1] * L.n
    used = [False] * M.n
    lu, mu = L.up, M.up

    def consistent(x, y):
        for x2 in range(L.n):
            y2 = f[x2]
            if y2 < 0:
                continue
            if ((lu[x] >> x2) & 1) != ((mu[y] >> y2) & 1):
                return False
            if ((lu[x2] >> x) & 1) != ((mu[y2] >> y) & 1):
                return False
        return True

    def search(k):
        if k == len(order):
            return True
        x = order[k]
        for y in candidates[sig_l[x]]:
            if used[y] or not consistent(x, y):
                continue
            f[x] = y
            used[y] = True
            if search(k + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    return tuple(f) if search(0) else None


def is_isomorphic(L, M):
    return find_isomorphism(L, M) is not None


# --- homomorphisms ---------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LatticeHom:
    """A map between finite lattices, checked on construction.

    ``require`` selects which operations must be preserved; ``("meet", "join")``
    is a lattice homomorphism, ``("join",)`` a join-homomorphism.
    """

    source: FiniteLattice
    target: FiniteLattice
    map: tuple
    require: tuple = ("meet", "join")

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(v) for v in self.map))
        if len(self.map) != self.source.n:
            raise NotAHomomorphism("map length does not match source size")
        S, T, f = self.source, self.target, self.map
        for x in range(S.n):
            for y in range(x, S.n):
                if "meet" in self.require and f[S.meet[x][y]] != T.meet[f[x]][f[y]]:
                    raise NotAHomomorphism(f"meet of {S.labels[x]}, {S.labels[y]} not preserved")
                if "join" in self.require and f[S.join[x][y]] != T.join[f[x]][f[y]]:
                    raise NotAHomomorphism(f"join of {S.labels[x]}, {S.labels[y]} not preserved")

    def __call__(self, x):
        return self.map[x]

    @property
    def preserves_zero(self):
        return self.map[self.source.zero] == self.target.zero

    @property
    def preserves_one(self):
        return self.map[self.source.one] == self.target.one

    @property
    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    def compose(self, other):
        """``other`` after ``self``."""
        return LatticeHom(self.source, other.target, [other.map[v] for v in self.map],
                          tuple(r for r in self.require if r in other.require))


def identity(L):
    return LatticeHom(L, L, range(L.n))


def is_one_sensitive(f):
    # finite lattices always have units, so only the value condition remains
    return f.preserves_one


def interval_inclusion(L, b):
    """Inclusion of the filter ``[b)`` of ``L`` as a sublattice."""
    members = L.filter(b)
    sub = FiniteLattice.from_up_sets(
        f"[{L.labels[b]})",
        [L.labels[x] for x in members],
        [sum(1 << j for j, y in enumerate(members) if L.leq(x, y)) for x in members],
    )
    return LatticeHom(sub, L, members)


def permutations_of(L):
    """All automorphisms (brute force; tiny lattices only)."""
    out = []
    for perm in itertools.permutations(range(L.n)):
        if all(((L.up[x] >> y) & 1) == ((L.up[perm[x]] >> perm[y]) & 1)
               for x in range(L.n) for y in range(L.n)):
            out.append(perm)
    return out
