"""Triple lattices M3[L], N5[L], M3<L>, N5<L>, the alpha maps, and the
congruence-preserving embedding L -> S ⊠ L."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .box import lattice_tensor_product
from .congruence import congruence_lattice, index_of, is_simple, restrict_congruence
from .config import check_size
from .errors import NotBijective, NotSimple
from .grid import grid as _grid
from .order import FiniteLattice, LatticeHom, catalog
from .tensor import element_index, tensor_product

KINDS = ("M3[L]", "N5[L]", "M3<L>", "N5<L>")


def _m3_bracket(L, x, y, z):
    m = L.meet
    return m[x][y] == m[x][z] == m[y][z]


def _n5_bracket(L, x, y, z):
    return L.leq(L.meet[y][z], x) and L.leq(x, z)


def _m3_angle(L, x, y, z):
    j, m = L.join, L.meet
    xh, yh, zh = j[y][z], j[x][z], j[x][y]
    return x == m[yh][zh] and y == m[xh][zh] and z == m[xh][yh]


def _n5_angle(L, x, y, z):
    return x == L.meet[z][L.join[x][y]]


_TESTS = {"M3[L]": _m3_bracket, "N5[L]": _n5_bracket, "M3<L>": _m3_angle, "N5<L>": _n5_angle}


@dataclass(frozen=True, eq=False)
class TripleLattice:
    base: FiniteLattice
    kind: str
    triples: tuple

    def __contains__(self, t):
        return tuple(t) in self._index

    @cached_property
    def _index(self):
        return {t: i for i, t in enumerate(self.triples)}

    def index(self, t):
        return self._index[tuple(t)]

    @cached_property
    def lattice(self):
        """Componentwise order; joins are least upper bounds inside the subset."""
        L = self.base
        ts = self.triples
        up = []
        for s in ts:
            up.append(sum(1 << k for k, t in enumerate(ts)
                          if L.leq(s[0], t[0]) and L.leq(s[1], t[1]) and L.leq(s[2], t[2])))
        labels = ["<" + ",".join(L.labels[v] for v in t) + ">" for t in ts]
        name = self.kind.replace("L", L.name, 1) if self.kind.endswith("[L]") else \
            self.kind.replace("<L>", f"<{L.name}>")
        return FiniteLattice.from_up_sets(name, labels, up, elements=ts)


def _build(L, kind, max_elements=None):
    test = _TESTS[kind]
    ts = tuple(t for t in itertools.product(range(L.n), repeat=3) if test(L, *t))
    check_size(len(ts), f"{kind} over {L.name}", max_elements)
    return TripleLattice(L, kind, ts)


def m3_of(L, max_elements=None):
    return _build(L, "M3[L]", max_elements)


def n5_of(L, max_elements=None):
    return _build(L, "N5[L]", max_elements)


def m3_angle(L, max_elements=None):
    return _build(L, "M3<L>", max_elements)


def n5_angle(L, max_elements=None):
    return _build(L, "N5<L>", max_elements)


@dataclass(frozen=True, eq=False)
class AlphaIso:
    """``mapping[i]`` is the index in ``target.lattice`` of the image of tensor element ``i``."""

    source: FiniteLattice
    target: TripleLattice
    mapping: tuple

    def image_of(self, bits):
        return self.target.triples[self.mapping[element_index(self.source, bits)]]


def alpha_iso(L, which="M3", T=None):
    """The isomorphism M3 ⊗ L -> M3[L] (or N5 ⊗ L -> N5[L]) fixed on generators."""
    S = catalog(which)
    T = T or tensor_product(S, L)
    target = m3_of(L) if which == "M3" else n5_of(L)
    TL = target.lattice
    z = L.zero
    if which == "M3":
        p, q, r = S.index("p"), S.index("q"), S.index("r")
        gen = {p: lambda x: (x, z, z), q: lambda x: (z, x, z), r: lambda x: (z, z, x)}
        one_parts = (p, q)
    else:
        a, b, c = S.index("a"), S.index("b"), S.index("c")
        gen = {a: lambda x: (x, z, x), b: lambda x: (z, x, z), c: lambda x: (z, z, x)}
        one_parts = (a, b)

    def image(s, x):
        if s == S.zero or x == z:
            return TL.zero
        if s == S.one:
            return TL.join[image(one_parts[0], x)][image(one_parts[1], x)]
        return target.index(gen[s](x))

    g = _grid(S, L)
    mapping = []
    for H in T.elements:
        acc = TL.zero
        for s, x in g.pairs(H.bits):
            acc = TL.join[acc][image(s, x)]
        mapping.append(acc)
    if sorted(mapping) != list(range(TL.n)):
        raise NotBijective(f"alpha: {which} ⊗ {L.name} -> {TL.name} is not a bijection")
    for i in range(T.n):
        for j in range(T.n):
            if T.leq(i, j) != TL.leq(mapping[i], mapping[j]):
                raise NotBijective("alpha does not preserve and reflect order")
    return AlphaIso(T, target, tuple(mapping))


def angle_image(L, which="M3"):
    """Triples hit by alpha restricted to the lattice tensor product."""
    S = catalog(which)
    iso = alpha_iso(L, which)
    LT = lattice_tensor_product(S, L)
    return {iso.image_of(E.bits) for E in LT.elements}


@dataclass
class EmbeddingReport:
    S: str
    L: str
    embedding: LatticeHom
    con_ltp_size: int
    con_l_size: int
    restriction: tuple
    bijective: bool

    @property
    def passed(self):
        return self.embedding.is_injective and self.bijective


def cong_preserving_embedding(S, L):
    """Check that x -> 0_S □ x embeds L into S ⊠ L with Con(S ⊠ L) ≅ Con(L) by restriction."""
    if not is_simple(S):
        raise NotSimple(f"{S.name} is not simple")
    LT = lattice_tensor_product(S, L)
    g = _grid(S, L)
    emb = LatticeHom(L, LT, [element_index(LT, g.box(S.zero, x)) for x in range(L.n)])
    CL = congruence_lattice(LT)
    CLL = congruence_lattice(L)
    restriction = tuple(index_of(CLL, restrict_congruence(theta, emb)) for theta in CL.elements)
    bij = sorted(restriction) == list(range(CLL.n))
    return EmbeddingReport(S.name, L.name, emb, CL.n, CLL.n, restriction, bij)
