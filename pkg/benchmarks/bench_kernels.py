"""Compare the compiled and pure-Python kernels on the two hot loops.

    python3 benchmarks/bench_kernels.py [--repeat N]

Workloads: every principal congruence of a comparable pair in a few box
products (the inner loop of the isomorphism checks), and bi-ideal closure of
random cell sets (the inner loop of tensor-product enumeration).
"""

import argparse
import random
import timeit

from boxlat import box_product, catalog
from boxlat.grid import grid
from boxlat.kernels import backends


def congruence_workload(L):
    pairs = [(x, y) for x in range(L.n) for y in range(L.n) if L.leq(x, y) and x != y]
    return L.meet_array, L.join_array, pairs


def closure_workload(A, B, count, seed):
    g = grid(A, B)
    rng = random.Random(seed)
    cells = []
    for _ in range(count):
        bits = g.bottom
        for _ in range(3):
            bits |= 1 << rng.randrange(g.size)
        cells.append(g.column_maxima(bits))
    return cells, (A.leq_matrix, A.join_array, B.leq_matrix, B.join_array, B.zero, A.one)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    impls = backends()
    if "cython" not in impls:
        print("compiled kernels unavailable; only the Python backend is timed")

    rows = []
    for expr in ("N5□N5", "M3□N5", "boolean(2)□N5"):
        a, b = expr.split("□")
        L = box_product(catalog(a), catalog(b))
        meet, join, pairs = congruence_workload(L)
        expect = None
        for name, mod in impls.items():
            got = mod.principal_congruences(meet, join, pairs)
            got = [list(r) for r in got]
            expect = expect or got
            assert got == expect, f"{name} disagrees on {expr}"
            t = min(timeit.repeat(lambda: mod.principal_congruences(meet, join, pairs),
                                  number=1, repeat=args.repeat))
            rows.append((f"principal congruences, {expr} ({L.n} el, {len(pairs)} pairs)", name, t))

    for a, b in (("M3", "N5"), ("N5", "FD(2)"), ("boolean(3)", "N5")):
        A, B = catalog(a), catalog(b)
        cells, tables = closure_workload(A, B, 2000, args.seed)
        expect = None
        for name, mod in impls.items():
            got = [list(mod.close_bi_ideal(c, *tables)) for c in cells]
            expect = expect or got
            assert got == expect, f"{name} disagrees on {a}×{b}"
            t = min(timeit.repeat(lambda: [mod.close_bi_ideal(c, *tables) for c in cells],
                                  number=1, repeat=args.repeat))
            rows.append((f"bi-ideal closure, {a}×{b} (2000 sets)", name, t))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'backend':<8} {'seconds':>9}  speedup")
    base = {}
    for work, name, t in rows:
        if name == "python":
            base[work] = t
    for work, name, t in rows:
        print(f"{work:<{width}}  {name:<8} {t:9.4f}  {base[work] / t:6.1f}x")


if __name__ == "__main__":
    main()
