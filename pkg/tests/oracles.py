"""Independent reference implementations used only by the test suite.

Everything here is deliberately naive: exhaustive searches and textbook
formulas that are easy to audit, used to cross-check the package's real
implementations.
"""

from __future__ import annotations

import math
from itertools import combinations

from crossplane.graph import Graph

try:
    import networkx as nx
except ImportError:  # pragma: no cover
    nx = None


# ---------------------------------------------------------------------------
# conversions
# ---------------------------------------------------------------------------


def to_networkx(g: Graph):
    """crossplane Graph -> networkx MultiGraph with edge ids as keys."""
    out = nx.MultiGraph()
    out.add_nodes_from(g.vertices)
    for e in g.edges:
        out.add_edge(e.u, e.v, key=e.id)
    return out


def to_networkx_simple(g: Graph):
    out = nx.Graph()
    out.add_nodes_from(g.vertices)
    for e in g.edges:
        out.add_edge(e.u, e.v)
    return out


# ---------------------------------------------------------------------------
# planarity by exhaustive Kuratowski-subdivision search
# ---------------------------------------------------------------------------


def _simple_paths(adj, a, b, banned, limit=None):
    """All simple a-b paths avoiding `banned` as interior vertices."""
    out = []
    stack = [(a, [a])]
    while stack:
        v, path = stack.pop()
        for w in adj[v]:
            if w == b:
                out.append(path + [b])
                if limit is not None and len(out) >= limit:
                    return out
            elif w not in banned and w not in path:
                stack.append((w, path + [w]))
    return out


def _link_pairs(adj, pairs, branch, used):
    """Can the terminal pairs be joined by internally disjoint paths?"""
    if not pairs:
        return True
    a, b = pairs[0]
    banned = (branch | used) - {b}
    for path in _simple_paths(adj, a, b, banned):
        interior = set(path[1:-1])
        if interior & used:
            continue
        if _link_pairs(adj, pairs[1:], branch, used | interior):
            return True
    return False


def has_kuratowski_subdivision(g: Graph) -> bool:
    """Exhaustive search for a K5 or K3,3 subdivision. Small graphs only."""
    simple, _ = g.simplify()
    vs = sorted(simple.vertices)
    adj = {v: simple.neighbors(v) for v in vs}
    deg = {v: len(adj[v]) for v in vs}

    for branch in combinations([v for v in vs if deg[v] >= 4], 5):
        bset = set(branch)
        pairs = list(combinations(branch, 2))
        if _link_pairs(adj, pairs, bset, set()):
            return True
    candidates = [v for v in vs if deg[v] >= 3]
    for six in combinations(candidates, 6):
        rest = six[1:]
        for other_two in combinations(rest, 2):
            left = (six[0],) + other_two
            right = tuple(v for v in six if v not in left)
            bset = set(six)
            pairs = [(a, b) for a in left for b in right]
            if _link_pairs(adj, pairs, bset, set()):
                return True
    return False


def planar_by_oracle(g: Graph) -> bool:
    return not has_kuratowski_subdivision(g)


# ---------------------------------------------------------------------------
# connectivity oracles
# ---------------------------------------------------------------------------


def connectivity_by_oracle(g: Graph) -> int:
    """0, 1, 2, or 3 (meaning three or more), by exhaustive vertex cuts."""
    if not g.vertices or not g.is_connected():
        return 0
    vs = sorted(g.vertices)
    n = len(vs)
    for k in (1, 2):
        if n - k < 2:
            return 3
        for cut in combinations(vs, k):
            if not g.without_vertices(cut).is_connected():
                return k
    return 3


def two_separators_by_oracle(g: Graph) -> set[tuple[int, int]]:
    vs = sorted(g.vertices)
    out = set()
    if len(vs) < 4:
        return out
    for a, b in combinations(vs, 2):
        if not g.without_vertices((a, b)).is_connected():
            out.add((a, b))
    return out


# ---------------------------------------------------------------------------
# embedding oracles
# ---------------------------------------------------------------------------


def dual_face_count(embedding) -> int:
    """Face count of the dual embedding induced by the primal faces.

    The dual rotation at a face-vertex is the face walk itself; dual
    faces are the orbits of walk-successor-of-twin. For a 3-connected
    primal this must equal the primal vertex count.
    """
    walk_next: dict[int, int] = {}
    for walk in embedding.faces:
        k = len(walk)
        for i, d in enumerate(walk):
            walk_next[d] = walk[(i + 1) % k]
    seen: set[int] = set()
    orbits = 0
    for start in walk_next:
        if start in seen:
            continue
        orbits += 1
        d = start
        while True:
            seen.add(d)
            d = walk_next[d ^ 1]
            if d == start:
                break
    return orbits


def shortest_dual_distance(dual_adj, sources, targets) -> int:
    """BFS over faces; dual_adj[f] yields (edge_id, other_face)."""
    from collections import deque

    dist = {f: 0 for f in sources}
    q = deque(sources)
    while q:
        f = q.popleft()
        if f in targets:
            return dist[f]
        for _, h in dual_adj(f):
            if h not in dist:
                dist[h] = dist[f] + 1
                q.append(h)
    raise ValueError("targets unreachable")


def exhaustive_dual_cost(embedding, u: int, v: int) -> int:
    """Minimum edges crossed by a u-v curve, by enumerating every simple
    face sequence from a face incident to u to one incident to v.

    Exponential; keep the embedding at a dozen faces or so.
    """
    rot = embedding.rotation
    incident: dict[int, set[int]] = {}
    for i, walk in enumerate(embedding.faces):
        for d in walk:
            incident.setdefault(rot.origin(d), set()).add(i)
    starts = incident[u]
    targets = incident[v]
    adj: dict[int, list[int]] = {i: [] for i in range(len(embedding.faces))}
    for e in embedding.graph.edges:
        fa, fb = embedding.faces_of_edge(e.id)
        if fa != fb:
            adj[fa].append(fb)
            adj[fb].append(fa)

    best = math.inf

    def walk(face, seen, cost):
        nonlocal best
        if cost >= best:
            return
        if face in targets:
            best = cost
            return
        for nxt in adj[face]:
            if nxt not in seen:
                walk(nxt, seen | {nxt}, cost + 1)

    for f in starts:
        walk(f, {f}, 0)
    if best is math.inf:
        raise ValueError("endpoints in different components")
    return int(best)


# ---------------------------------------------------------------------------
# crossing number lower bounds
# ---------------------------------------------------------------------------


def euler_girth_lower_bound(n: int, m: int, girth: int) -> int:
    """cr(G) >= m - g/(g-2) * (n-2) for a simple connected graph."""
    if n < 3:
        return 0
    g = max(girth, 3)
    bound = m - (g / (g - 2)) * (n - 2)
    return max(0, math.ceil(bound - 1e-9))


def girth_of(g: Graph) -> int:
    """Length of a shortest cycle; large sentinel when acyclic."""
    from collections import deque

    if g.parallel_classes():
        return 2
    best = 10**9
    for root in sorted(g.vertices):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            v = q.popleft()
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
                elif parent[v] != w and parent[w] != v:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def min_balanced_cut_by_oracle(g: Graph, alpha: float) -> tuple[int, frozenset[int]]:
    """Minimum edge cut over all bipartitions with max side <= alpha*n.

    Exhaustive over 2^(n-1) splits; returns (cut size, one optimal A side,
    ties broken by sorted vertex tuple). Only for small graphs.
    """
    verts = sorted(g.vertices)
    n = len(verts)
    if n > 18:
        raise ValueError("oracle is exponential, keep n small")
    limit = alpha * n + 1e-9
    best: tuple[int, tuple[int, ...]] | None = None
    for mask in range(1, 1 << (n - 1)):
        a = frozenset(verts[i] for i in range(n) if mask & (1 << i))
        if max(len(a), n - len(a)) > limit:
            continue
        cut = sum(1 for e in g.edges if (e.u in a) != (e.v in a))
        key = (cut, tuple(sorted(a)))
        if best is None or key < best:
            best = key
    if best is None:
        raise ValueError("no balanced bipartition exists")
    return best[0], frozenset(best[1])
