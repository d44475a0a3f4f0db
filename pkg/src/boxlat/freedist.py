"""Free distributive lattices F_D(n) as upper sets of the powerset of n.

Subsets of ``n`` are bitmasks; an :class:`UpperSet` is a frozenset of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArityTooLarge
from .order import FiniteLattice

MAX_ARITY = 4


@dataclass(frozen=True)
class UpperSet:
    n: int
    members: frozenset

    def __post_init__(self):
        full = (1 << self.n) - 1
        if 0 in self.members:
            raise ValueError("empty set may not belong to an element of F_D(n)")
        if full not in self.members:
            raise ValueError("the full set must belong to an element of F_D(n)")
        for x in self.members:
            for i in range(self.n):
                if (x | (1 << i)) not in self.members:
                    raise ValueError(f"not upward closed at {x:b}")

    def __contains__(self, subset):
        return subset in self.members

    def __le__(self, other):
        return self.members <= other.members

    def __str__(self):
        def fmt(x):
            return "{" + ",".join(str(i) for i in range(self.n) if x >> i & 1) + "}"

        return "{" + ",".join(fmt(x) for x in sorted(self.members, key=lambda x: (x.bit_count(), x))) + "}"


def _up_closure(n, seeds):
    out = set()
    stack = list(seeds)
    while stack:
        x = stack.pop()
        if x in out:
            continue
        out.add(x)
        for i in range(n):
            stack.append(x | (1 << i))
    return frozenset(out)


def upper_sets(n):
    """All elements of F_D(n): unions of principal filters of nonempty subsets."""
    full = (1 << n) - 1
    principal = [_up_closure(n, [x]) for x in range(1, full + 1)]
    seen = {frozenset([full])}
    frontier = list(seen)
    while frontier:
        nxt = []
        for u in frontier:
            for p in principal:
                v = u | p
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return [UpperSet(n, m) for m in sorted(seen, key=lambda m: (len(m), sorted(m)))]


def generator(n, i):
    return UpperSet(n, frozenset(x for x in range(1 << n) if x >> i & 1))


def free_distributive(n):
    """F_D(n) ordered by inclusion, with the generators recorded in ``marks``."""
    if n > MAX_ARITY:
        raise ArityTooLarge(f"F_D({n}) is too large; arity must be <= {MAX_ARITY}")
    if n < 1:
        raise ArityTooLarge("F_D(n) needs n >= 1")
    elems = upper_sets(n)
    index = {u.members: k for k, u in enumerate(elems)}
    up = []
    for u in elems:
        up.append(sum(1 << k for k, v in enumerate(elems) if u.members <= v.members))
    gens = [index[generator(n, i).members] for i in range(n)]
    return FiniteLattice.from_up_sets(
        f"FD({n})", [str(u) for u in elems], up, elements=elems, marks={"generators": gens}
    )


def c_star(c):
    """``{X : n - X not in c}``."""
    full = (1 << c.n) - 1
    return UpperSet(c.n, frozenset(x for x in range(1 << c.n) if (full & ~x) not in c.members))


def eval_P(c, args, L):
    """Meet over ``X in c`` of the join of ``args[i]`` for ``i in X``."""
    if len(args) != c.n:
        raise ValueError(f"expected {c.n} arguments, got {len(args)}")
    acc = L.one
    for x in c.members:
        j = None
        for i in range(c.n):
            if x >> i & 1:
                j = args[i] if j is None else L.join[j][args[i]]
        acc = L.meet[acc][j]
    return acc
