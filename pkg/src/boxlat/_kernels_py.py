"""Pure-Python kernels. Same signatures as the compiled ``_kernels`` module.

Tables arrive as sequences of sequences (lists or 2-D numpy arrays); results
are plain lists.
"""


def principal_congruence(meet, join, a, b):
    """Block labels of the least congruence collapsing ``a`` and ``b``.

    ``labels[x]`` is the least element index of the block containing ``x``.
    """
    n = len(meet)
    meet = [list(r) for r in meet] if not isinstance(meet, list) else meet
    join = [list(r) for r in join] if not isinstance(join, list) else join
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        if rx < ry:
            parent[ry] = rx
        else:
            parent[rx] = ry
        jx, jy, mx, my = join[x], join[y], meet[x], meet[y]
        for z in range(n):
            if jx[z] != jy[z]:
                stack.append((jx[z], jy[z]))
            if mx[z] != my[z]:
                stack.append((mx[z], my[z]))
    return [find(x) for x in range(n)]


def principal_congruences(meet, join, pairs):
    meet = [list(r) for r in meet]
    join = [list(r) for r in join]
    return [principal_congruence(meet, join, a, b) for a, b in pairs]


def close_bi_ideal(colmax, leq_a, join_a, leq_b, join_b, zero_b, one_a):
    """Least bi-ideal containing the cells encoded by ``colmax``.

    ``colmax[y]`` is the join of the A-coordinates present in column ``y``
    (0_A when the column only holds the bottom). The result uses the same
    encoding: cell (x, y) is a member iff ``x <= result[y]``.
    """
    na, nb = len(leq_a), len(leq_b)
    ja = list(colmax)
    ja[zero_b] = one_a
    changed = True
    while changed:
        changed = False
        for x in range(na):
            lx = leq_a[x]
            jb = -1
            for y in range(nb):
                if lx[ja[y]]:
                    jb = y if jb < 0 else join_b[jb][y]
            for y in range(nb):
                if leq_b[y][jb] and not lx[ja[y]]:
                    ja[y] = join_a[ja[y]][x]
                    changed = True
        # hereditary in the B direction
        for y in range(nb):
            for y2 in range(nb):
                if leq_b[y2][y] and not leq_a[ja[y]][ja[y2]]:
                    ja[y2] = join_a[ja[y2]][ja[y]]
                    changed = True
    return ja
