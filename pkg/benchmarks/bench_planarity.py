"""Timing comparison of the pure-Python and compiled planarity kernels.

Run:  python3 benchmarks/bench_planarity.py [repeats]

Generates planar and near-planar inputs of growing size, feeds the exact
same adjacency lists to both kernels, and reports per-kernel wall time
plus the speedup. Verifies output parity on every instance as it goes.
"""

from __future__ import annotations

import random
import sys
import time

from crossplane import _lr

try:
    from crossplane import _lr_c
except ImportError:
    _lr_c = None


def grid_adj(rows: int, cols: int) -> tuple[int, list[list[int]]]:
    n = rows * cols
    adj: list[list[int]] = [[] for _ in range(n)]
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                adj[v].append(v + 1)
                adj[v + 1].append(v)
            if r + 1 < rows:
                adj[v].append(v + cols)
                adj[v + cols].append(v)
    return n, adj


def random_maximal_planar_adj(n: int, seed: int) -> tuple[int, list[list[int]]]:
    """Triangulation grown by repeated vertex insertion into a random face."""
    rng = random.Random(seed)
    faces = [(0, 1, 2)]
    edges = {(0, 1), (0, 2), (1, 2)}
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces.pop(i)
        faces += [(a, b, v), (a, c, v), (b, c, v)]
        edges |= {(a, v), (b, v), (c, v)}
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(edges):
        adj[u].append(v)
        adj[v].append(u)
    return n, adj


def dense_random_adj(n: int, seed: int) -> tuple[int, list[list[int]]]:
    """Random graph right at the planarity edge count (mostly non-planar)."""
    rng = random.Random(seed)
    m = 3 * n - 6
    chosen = set()
    while len(chosen) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((min(u, v), max(u, v)))
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in sorted(chosen):
        adj[u].append(v)
        adj[v].append(u)
    return n, adj


def bench(kernel, cases, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for n, adj in cases:
            kernel.planar_rotation(n, adj)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    suites = {
        "grid 40x40": [grid_adj(40, 40)],
        "grid 80x80": [grid_adj(80, 80)],
        "triangulations n=500": [
            random_maximal_planar_adj(500, s) for s in range(8)
        ],
        "triangulations n=2000": [
            random_maximal_planar_adj(2000, s) for s in range(3)
        ],
        "dense random n=300": [dense_random_adj(300, s) for s in range(8)],
        "small batch n<=40": [
            random_maximal_planar_adj(random.Random(s).randint(5, 40), s)
            for s in range(300)
        ],
    }

    if _lr_c is None:
        print("compiled kernel not available; timing pure kernel only")

    width = max(len(k) for k in suites)
    header = f"{'suite':<{width}}  {'pure (s)':>10}"
    if _lr_c is not None:
        header += f"  {'cython (s)':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, cases in suites.items():
        for n, adj in cases:  # parity check while we are here
            pure = _lr.planar_rotation(n, [list(a) for a in adj])
            if _lr_c is not None:
                comp = _lr_c.planar_rotation(n, [list(a) for a in adj])
                assert pure == comp, f"kernel outputs diverge on {name}"
        t_pure = bench(_lr, cases, repeats)
        line = f"{name:<{width}}  {t_pure:>10.4f}"
        if _lr_c is not None:
            t_c = bench(_lr_c, cases, repeats)
            line += f"  {t_c:>10.4f}  {t_pure / t_c:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
