"""Bitset geometry of the grid A x B.

Cell ``(x, y)`` is bit ``x * |B| + y``. All subsets of the grid used by the
tensor and box modules are Python ints over this indexing.
"""

from __future__ import annotations

from functools import lru_cache

from .order import _bits


class Grid:
    def __init__(self, A, B):
        self.A, self.B = A, B
        na, nb = A.n, B.n
        self.na, self.nb = na, nb
        self.size = na * nb
        self.full = (1 << self.size) - 1
        col = [0] * nb  # all cells in column y
        for x in range(na):
            for y in range(nb):
                col[y] |= 1 << (x * nb + y)
        row = [((1 << nb) - 1) << (x * nb) for x in range(na)]
        self.row_le = [0] * na
        for a in range(na):
            for x in A.ideal(a):
                self.row_le[a] |= row[x]
        self.col_le = [0] * nb
        for b in range(nb):
            for y in B.ideal(b):
                self.col_le[b] |= col[y]
        self.row_ge = [0] * na
        for a in range(na):
            for x in A.filter(a):
                self.row_ge[a] |= row[x]
        self.col_ge = [0] * nb
        for b in range(nb):
            for y in B.filter(b):
                self.col_ge[b] |= col[y]
        self.col = col
        self.bottom = self.row_le[A.zero] | self.col_le[B.zero]
        # cells (x, y) with x <= a, indexed [a][y]
        self.col_ideal = [[self.row_le[a] & col[y] for y in range(nb)] for a in range(na)]

    def cell(self, x, y):
        return x * self.nb + y

    def coords(self, k):
        return divmod(k, self.nb)

    def pairs(self, bits):
        nb = self.nb
        return [divmod(k, nb) for k in _bits(bits)]

    def from_pairs(self, pairs):
        out = 0
        for x, y in pairs:
            out |= 1 << (x * self.nb + y)
        return out

    def circ(self, a, b):
        return self.row_le[a] & self.col_le[b]

    def box(self, a, b):
        return self.row_le[a] | self.col_le[b]

    def ltensor(self, a, b):
        return (self.row_le[a] & self.col_le[b]) | self.bottom

    def dual_box(self, a, b):
        return self.row_ge[a] | self.col_ge[b]

    def maximal(self, bits):
        """Cells of ``bits`` with no other member of ``bits`` above them."""
        out = []
        nb = self.nb
        for k in _bits(bits):
            x, y = divmod(k, nb)
            above = self.row_ge[x] & self.col_ge[y] & ~(1 << k)
            if not bits & above:
                out.append((x, y))
        return out

    def down_closure(self, bits):
        out = 0
        nb = self.nb
        for k in _bits(bits):
            x, y = divmod(k, nb)
            out |= self.row_le[x] & self.col_le[y]
        return out

    def column_maxima(self, bits):
        A, nb = self.A, self.nb
        cm = [A.zero] * nb
        jt = A.join
        for k in _bits(bits):
            x, y = divmod(k, nb)
            cm[y] = jt[cm[y]][x]
        return cm

    def from_column_maxima(self, cm):
        out = 0
        ci = self.col_ideal
        for y, a in enumerate(cm):
            out |= ci[a][y]
        return out


@lru_cache(maxsize=512)
def grid(A, B):
    return Grid(A, B)
