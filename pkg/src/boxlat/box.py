"""Box product A □ B, box closure, and the lattice tensor product A ⊠ B.

Elements are bitsets over the grid A x B (see :mod:`boxlat.grid`); the
bitset is the canonical identity and generator lists are witnesses only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

from .config import check_size
from .errors import (
    GeneratorOverflow,
    NotBijective,
    NotConfined,
    NotDefined,
    NotOneSensitive,
    NotZeroPreserving,
)
from .grid import grid as _grid
from .order import FiniteLattice, LatticeHom, dual, is_one_sensitive
from .tensor import element_index, tensor_label

EXPONENT_CAP = 12


@dataclass(frozen=True, eq=False)
class BoxElement:
    """An intersection of pure boxes, with the pairs ``generators`` as witness."""

    A: FiniteLattice
    B: FiniteLattice
    bits: int
    generators: tuple

    def __post_init__(self):
        g = _grid(self.A, self.B)
        if not self.generators:
            raise ValueError("a box element needs at least one generator")
        expect = reduce(lambda acc, ab: acc & g.box(*ab), self.generators, g.full)
        if expect != self.bits:
            raise ValueError("generators do not intersect to the given set")

    def __eq__(self, other):
        return isinstance(other, BoxElement) and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    def __contains__(self, pair):
        x, y = pair
        return bool(self.bits >> (x * self.B.n + y) & 1)

    def pairs(self):
        return _grid(self.A, self.B).pairs(self.bits)

    def __str__(self):
        return box_label(self.A, self.B, self.generators) + f" [{self.bits.bit_count()}]"


def box_label(A, B, generators, op="□"):
    return " ∩ ".join(f"{A.labels[a]}{op}{B.labels[b]}" for a, b in generators)


@dataclass(frozen=True, eq=False)
class BoxDotElement:
    """A finite union of pure boxes and pure circs (at least one box)."""

    A: FiniteLattice
    B: FiniteLattice
    boxes: tuple
    circs: tuple = ()

    def __post_init__(self):
        if not self.boxes:
            raise ValueError("need at least one pure box")

    @property
    def bits(self):
        g = _grid(self.A, self.B)
        out = 0
        for a, b in self.boxes:
            out |= g.box(a, b)
        for c, d in self.circs:
            out |= g.circ(c, d)
        return out


# --- pure sets -------------------------------------------------------------

def pure_box(A, B, a, b):
    return BoxElement(A, B, _grid(A, B).box(a, b), ((a, b),))


def pure_circ(A, B, a, b):
    return _grid(A, B).circ(a, b)


def pure_ltensor(A, B, a, b):
    """``a ⊠ b`` written as ``(a □ 0_B) ∩ (0_A □ b)``."""
    return BoxElement(A, B, _grid(A, B).ltensor(a, b), ((a, B.zero), (A.zero, b)))


# --- containment and closure -----------------------------------------------

def box_leq_criterion(A, B, gens, a, b):
    """Decide ``∩ a_i □ b_i ⊆ a □ b`` from lattice inequalities alone."""
    if not gens:
        raise ValueError("need at least one generator")
    if a == A.one or b == B.one:
        return True
    n = len(gens)
    av = [g[0] for g in gens]
    bv = [g[1] for g in gens]
    if not (A.leq(A.meet_all(av), a) and B.leq(B.meet_all(bv), b)):
        return False
    for r in range(1, n):
        for X in itertools.combinations(range(n), r):
            rest = [i for i in range(n) if i not in X]
            if not (A.leq(A.meet_all(av[i] for i in X), a)
                    or B.leq(B.meet_all(bv[i] for i in rest), b)):
                return False
    return True


def _join_over(L, xs, base):
    """``base ∨ x_0 ∨ ...``; an empty list gives ``base`` (the a^(∅) ∨ b = b rule)."""
    for x in xs:
        base = L.join[base][x]
    return base


def box_closure(H):
    """Least element of A □ B containing the union ``H`` of boxes and circs."""
    A, B = H.A, H.B
    g = _grid(A, B)
    abar = A.join_all(a for a, _ in H.boxes)
    bbar = B.join_all(b for _, b in H.boxes)
    n = len(H.circs)
    c = [p[0] for p in H.circs]
    d = [p[1] for p in H.circs]
    gens = []
    bits = g.full
    for mask in range(1 << n):
        u = _join_over(A, (c[j] for j in range(n) if mask >> j & 1), abar)
        v = _join_over(B, (d[j] for j in range(n) if not mask >> j & 1), bbar)
        if (u, v) not in gens:
            gens.append((u, v))
            bits &= g.box(u, v)
    return BoxElement(A, B, bits, tuple(gens))


def box_closure_oracle(A, B, bits):
    """Intersection of every pure box containing ``bits``."""
    g = _grid(A, B)
    out = g.full
    for a in range(A.n):
        for b in range(B.n):
            box = g.box(a, b)
            if bits & ~box == 0:
                out &= box
    return out


def triangle_up(A, B, bits):
    """Pairs ``(a, b)`` with ``x <= a or y <= b`` for every ``(x, y)`` in the set."""
    g = _grid(A, B)
    out = 0
    for a in range(A.n):
        row = g.row_le[a]
        for b in range(B.n):
            if bits & ~(row | g.col_le[b]) == 0:
                out |= 1 << g.cell(a, b)
    return out


def triangle_down(A, B, bits):
    """Pairs ``(a, b)`` with ``a <= x or b <= y`` for every ``(x, y)`` in the set."""
    g = _grid(A, B)
    out = 0
    for a in range(A.n):
        row = g.row_ge[a]
        for b in range(B.n):
            if bits & ~(row | g.col_ge[b]) == 0:
                out |= 1 << g.cell(a, b)
    return out


def generators_of(A, B, bits):
    """Minimal pure boxes containing ``bits``; their intersection is the box closure."""
    g = _grid(A, B)
    over = [(a, b) for a in range(A.n) for b in range(B.n) if bits & ~g.box(a, b) == 0]
    boxes = {}
    for ab in over:
        boxes.setdefault(g.box(*ab), ab)
    items = list(boxes.items())
    minimal = [ab for s, ab in items if not any(t != s and t & ~s == 0 for t, _ in items)]
    return tuple(sorted(minimal))


# --- the lattices ----------------------------------------------------------

def enumerate_box_product(A, B, max_elements=None):
    """Map bitset -> generator witness for every element of A □ B."""
    g = _grid(A, B)
    boxes = {}
    for a in range(A.n):
        for b in range(B.n):
            boxes.setdefault(g.box(a, b), (a, b))
    found = {bits: (ab,) for bits, ab in boxes.items()}
    frontier = list(found)
    box_items = list(boxes.items())
    while frontier:
        nxt = []
        for h in frontier:
            gens = found[h]
            for bits, ab in box_items:
                k = h & bits
                if k not in found:
                    found[k] = gens + (ab,)
                    nxt.append(k)
                    check_size(len(found), f"box({A.name}, {B.name})", max_elements)
        frontier = nxt
    return found


def _lattice_of(name, A, B, found, op, max_elements):
    sets = sorted(found, key=lambda s: (s.bit_count(), s))
    elements = [BoxElement(A, B, s, found[s]) for s in sets]
    if op == "□":
        labels = [box_label(A, B, found[s]) for s in sets]
    else:
        labels = [tensor_label(A, B, s, op="⊠") for s in sets]
    return FiniteLattice.from_sets(name, sets, labels=labels, elements=elements,
                                   max_elements=max_elements)


def box_product(A, B, max_elements=None):
    found = enumerate_box_product(A, B, max_elements)
    return _lattice_of(f"box({A.name}, {B.name})", A, B, found, "□", max_elements)


def is_confined(A, B, bits):
    g = _grid(A, B)
    return any(bits & ~g.ltensor(a, b) == 0 for a in range(A.n) for b in range(B.n))


def lattice_tensor_product(A, B, max_elements=None):
    """The confined elements of A □ B (an ideal, hence a lattice)."""
    if not ltp_defined(A, B).defined:
        raise NotDefined(f"ltp({A.name}, {B.name}) is not defined")
    found = enumerate_box_product(A, B, max_elements)
    confined = {s: gens for s, gens in found.items() if is_confined(A, B, s)}
    if not confined:
        raise NotDefined(f"ltp({A.name}, {B.name}) has no confined element")
    return _lattice_of(f"ltp({A.name}, {B.name})", A, B, confined, "⊠", max_elements)


# --- joins via the U/V polynomials ------------------------------------------

def sigma(m, n):
    """Fixed enumeration of the proper nonempty subsets of m (tag 0) then of n (tag 1)."""
    def proper(k):
        return [X for r in range(1, k) for X in itertools.combinations(range(k), r)]

    return [(X, 0) for X in sorted(proper(m))] + [(Y, 1) for Y in sorted(proper(n))]


def uv_pairs(A, B, a, b, c, d):
    """All ``(U_Z, V_Z)`` for ``Z`` ranging over subsets of the sigma index set."""
    m, n = len(a), len(c)
    sig = sigma(m, n)
    M, N = [], []
    for X, tag in sig:
        if tag == 0:
            M.append(A.meet_all(a[i] for i in X))
            N.append(B.meet_all(b[i] for i in range(m) if i not in X))
        else:
            M.append(A.meet_all(c[j] for j in X))
            N.append(B.meet_all(d[j] for j in range(n) if j not in X))
    base_u = A.join[A.meet_all(a)][A.meet_all(c)]
    base_v = B.join[B.meet_all(b)][B.meet_all(d)]
    K = len(sig)
    out = []
    for Z in range(1 << K):
        u = _join_over(A, (M[k] for k in range(K) if Z >> k & 1), base_u)
        v = _join_over(B, (N[k] for k in range(K) if not Z >> k & 1), base_v)
        out.append((u, v))
    return out


def box_join(H, K, exponent_cap=EXPONENT_CAP, fallback=True):
    """Join in A □ B evaluated through the U/V polynomial families."""
    A, B = H.A, H.B
    m, n = len(H.generators), len(K.generators)
    if 2 ** m + 2 ** n - 4 > exponent_cap:
        if not fallback:
            raise GeneratorOverflow(f"2^{m} + 2^{n} - 4 exceeds exponent cap {exponent_cap}")
        return _closure_of_union(H, K)
    a = [p[0] for p in H.generators]
    b = [p[1] for p in H.generators]
    c = [p[0] for p in K.generators]
    d = [p[1] for p in K.generators]
    g = _grid(A, B)
    bits = g.full
    gens = []
    for uv in uv_pairs(A, B, a, b, c, d):
        if uv not in gens:
            gens.append(uv)
            bits &= g.box(*uv)
    return BoxElement(A, B, bits, tuple(gens))


def _closure_of_union(H, K):
    A, B = H.A, H.B
    bits = box_closure_oracle(A, B, H.bits | K.bits)
    return BoxElement(A, B, bits, generators_of(A, B, bits))


# --- existence of A ⊠ B -----------------------------------------------------

@dataclass(frozen=True)
class Bounds:
    """Which bounds a (pseudo-)lattice is declared to have."""

    zero: bool = True
    one: bool = True


@dataclass(frozen=True)
class Definedness:
    defined: bool
    clauses: tuple

    def __bool__(self):
        return self.defined


def ltp_defined(A, B):
    """Whether A ⊠ B is defined, and which of the three sufficient clauses apply."""
    a = A if isinstance(A, Bounds) else Bounds()
    b = B if isinstance(B, Bounds) else Bounds()
    clauses = []
    if a.zero and b.zero:
        clauses.append("both-zero")
    if a.one and b.one:
        clauses.append("both-unit")
    if (a.zero and a.one) or (b.zero and b.one):
        clauses.append("one-bounded")
    return Definedness(bool(clauses), tuple(clauses))


# --- decompositions and maps -------------------------------------------------

def confining_pair(A, B, bits):
    g = _grid(A, B)
    for a in range(A.n):
        for b in range(B.n):
            if bits & ~g.ltensor(a, b) == 0:
                return a, b
    return None


def join_basis_decomposition(A, B, H):
    """Pairs ``(u, v)`` with ``H`` equal to the union of the ``u ⊠ v``."""
    bits = H.bits if hasattr(H, "bits") else H
    g = _grid(A, B)
    witness = confining_pair(A, B, bits)
    if witness is None or box_closure_oracle(A, B, bits) != bits:
        raise NotConfined("not an element of the lattice tensor product")
    a, b = witness
    gens = list(generators_of(A, B, bits)) + [(a, B.zero), (A.zero, b)]
    n = len(gens)
    av = [p[0] for p in gens]
    bv = [p[1] for p in gens]
    pairs = set()
    for r in range(1, n):
        for X in itertools.combinations(range(n), r):
            rest = [i for i in range(n) if i not in X]
            u = A.meet_all(av[i] for i in X)
            v = B.meet_all(bv[i] for i in rest)
            if u != A.zero and v != B.zero:
                pairs.add((u, v))
    keep = sorted(p for p in pairs
                  if not any(q != p and A.leq(p[0], q[0]) and B.leq(p[1], q[1]) for q in pairs))
    if not keep:
        keep = [(A.zero, B.zero)]
    union = g.bottom
    for u, v in keep:
        union |= g.ltensor(u, v)
    if union != bits:
        raise AssertionError("join-basis decomposition does not reproduce the element")
    return keep


@dataclass(frozen=True, eq=False)
class DualityIso:
    """``mapping[i]`` is the image in A ⊠ B of element ``i`` of A^d □ B^d."""

    source: FiniteLattice
    target: FiniteLattice
    mapping: tuple


def duality_iso(A, B, max_elements=None):
    """The order-reversing bijection A^d □ B^d -> A ⊠ B with a □^d b -> a ⊠ b."""
    Ad, Bd = dual(A), dual(B)
    P = box_product(Ad, Bd, max_elements)
    LT = lattice_tensor_product(A, B, max_elements)
    g = _grid(A, B)
    pure = {}
    for a in range(A.n):
        for b in range(B.n):
            pure[(a, b)] = element_index(LT, g.ltensor(a, b))
    mapping = []
    for E in P.elements:
        img = reduce(lambda acc, ab: LT.join[acc][pure[ab]], E.generators, LT.zero)
        alt = reduce(lambda acc, ab: LT.join[acc][pure[ab]], generators_of(Ad, Bd, E.bits), LT.zero)
        if img != alt:
            raise NotBijective("image depends on the choice of generators")
        mapping.append(img)
    if sorted(mapping) != list(range(LT.n)):
        raise NotBijective("duality map is not a bijection")
    for i in range(P.n):
        for j in range(P.n):
            if P.leq(i, j) != LT.leq(mapping[j], mapping[i]):
                raise NotBijective("duality map does not reverse order")
    return DualityIso(P, dual(LT), tuple(mapping))


def hom_box(f, g, source=None, target=None):
    """The homomorphism ∩ a_i □ b_i -> ∩ f(a_i) □ g(b_i) between box products."""
    if not (is_one_sensitive(f) and is_one_sensitive(g)):
        raise NotOneSensitive("f □ g needs {1}-sensitive homomorphisms")
    A, B, A2, B2 = f.source, g.source, f.target, g.target
    P = source or box_product(A, B)
    Q = target or box_product(A2, B2)
    g2 = _grid(A2, B2)
    fm, gm = f.map, g.map
    mapping = []
    for E in P.elements:
        imgs = []
        for gens in (E.generators, generators_of(A, B, E.bits)):
            imgs.append(reduce(lambda acc, ab: acc & g2.box(fm[ab[0]], gm[ab[1]]), gens, g2.full))
        if imgs[0] != imgs[1]:
            raise AssertionError("f □ g is not well defined on this element")
        mapping.append(element_index(Q, imgs[0]))
    h = LatticeHom(P, Q, mapping)
    if not is_one_sensitive(h):
        raise AssertionError("f □ g is not {1}-sensitive")
    return h


def hom_ltp(f, g, source=None, target=None):
    """``(f ⊠ g)(X) = ∪ f(x) ⊠ g(y)`` over ``(x, y)`` in ``X``."""
    if not (f.preserves_zero and g.preserves_zero):
        raise NotZeroPreserving("f ⊠ g needs 0-preserving homomorphisms")
    A, B, A2, B2 = f.source, g.source, f.target, g.target
    LT = source or lattice_tensor_product(A, B)
    LT2 = target or lattice_tensor_product(A2, B2)
    ga, g2 = _grid(A, B), _grid(A2, B2)
    mapping = []
    for E in LT.elements:
        img = 0
        for x, y in ga.pairs(E.bits):
            img |= g2.ltensor(f.map[x], g.map[y])
        mapping.append(element_index(LT2, img))
    return LatticeHom(LT, LT2, mapping, require=("join",))


def retraction_rho(A, B, T=None, LT=None):
    """The join-homomorphism A ⊗ B -> A ⊠ B sending a ⊗ b to a ⊠ b."""
    from .tensor import tensor_product

    T = T or tensor_product(A, B)
    LT = LT or lattice_tensor_product(A, B)
    g = _grid(A, B)
    mapping = []
    for H in T.elements:
        circs = tuple(g.maximal(H.bits))
        closed = box_closure(BoxDotElement(A, B, ((A.zero, B.zero),), circs))
        mapping.append(element_index(LT, closed.bits))
    return LatticeHom(T, LT, mapping, require=("join",))

