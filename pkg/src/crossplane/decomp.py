"""SPQR trees and laminar block decompositions of 2-connected graphs.

The SPQR tree (Di Battista-Tamassia; unique per Mac Lane/Tutte, linear
time per Gutwenger-Mutzel) is built here by the simpler recursive
split-pair method: split at parallel classes and 2-separators until every
piece is a bond, a cycle, or 3-connected, then merge adjacent same-kind
pieces to canonical form. Quadratic-ish and deterministic, which is all
the pipeline needs.

A block of a 2-connected graph is an induced subgraph hanging off a
2-separator (its endpoints), excluding any endpoint-to-endpoint edges.
block_decomposition() turns the rooted SPQR tree into a laminar family of
blocks whose contracted skeletons are all 3-connected: one block per tree
node plus a chain of peeled sub-blocks per S-node. Cycle graphs get their
own direct family. Every vertex of every 2-separator ends up either a
block endpoint or a degree-2 neighbor of one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .graph import (
    ARTIFICIAL_T1,
    Edge,
    Graph,
    VertexPair,
    connectivity,
)

S_NODE = "S"
P_NODE = "P"
R_NODE = "R"


# ---------------------------------------------------------------------------
# SPQR trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpqrNode:
    """One tree node: kind plus its skeleton graph.

    Skeleton edges are either actual (ids and labels taken from the input
    graph) or virtual; virtual edge ids are fresh and listed in
    virtual_ids. Each virtual edge is paired with one virtual edge of a
    neighboring node's skeleton.
    """

    id: int
    kind: str
    skeleton: Graph
    virtual_ids: frozenset[int]

    def actual_ids(self) -> list[int]:
        return sorted(e.id for e in self.skeleton.edges if e.id not in self.virtual_ids)


class SpqrTree:
    __slots__ = ("graph", "nodes", "tree_edges", "_adj", "_pair_of")

    def __init__(
        self,
        graph: Graph,
        nodes: dict[int, SpqrNode],
        tree_edges: list[tuple[int, int, int, int]],
    ):
        self.graph = graph
        self.nodes = nodes
        # (node a, virtual id in a, node b, virtual id in b)
        self.tree_edges = tuple(tree_edges)
        adj: dict[int, list[tuple[int, int, int]]] = {nid: [] for nid in nodes}
        pair_of: dict[int, int] = {}
        for a, va, b, vb in tree_edges:
            adj[a].append((b, va, vb))
            adj[b].append((a, vb, va))
            pair_of[va] = vb
            pair_of[vb] = va
        self._adj = {nid: tuple(sorted(lst)) for nid, lst in adj.items()}
        self._pair_of = pair_of

    def neighbors(self, nid: int) -> tuple[tuple[int, int, int], ...]:
        """(other node, own virtual id, other's virtual id), sorted."""
        return self._adj[nid]

    def partner_virtual(self, virtual_id: int) -> int:
        return self._pair_of[virtual_id]

    def derived_two_separators(self) -> set[VertexPair]:
        """Separator pairs readable off the tree: virtual-edge endpoint
        pairs plus non-adjacent vertex pairs of S skeletons."""
        out: set[VertexPair] = set()
        for node in self.nodes.values():
            for e in node.skeleton.edges:
                if e.id in node.virtual_ids:
                    out.add(VertexPair(e.u, e.v))
            if node.kind == S_NODE:
                ring = cycle_order(node.skeleton)
                s = len(ring)
                if s >= 4:
                    for i in range(s):
                        for j in range(i + 2, s):
                            if i == 0 and j == s - 1:
                                continue
                            out.add(VertexPair(ring[i], ring[j]))
        return out

    def to_json_dict(self) -> dict:
        nodes = []
        for nid in sorted(self.nodes):
            node = self.nodes[nid]
            nodes.append(
                {
                    "id": nid,
                    "kind": node.kind,
                    "vertices": sorted(node.skeleton.vertices),
                    "edges": [
                        {
                            "id": e.id,
                            "u": e.u,
                            "v": e.v,
                            "virtual": e.id in node.virtual_ids,
                        }
                        for e in node.skeleton.edges
                    ],
                }
            )
        return {
            "nodes": nodes,
            "tree_edges": [
                {"a": a, "virtual_a": va, "b": b, "virtual_b": vb}
                for a, va, b, vb in self.tree_edges
            ],
        }

    def __repr__(self) -> str:
        kinds = "".join(
            self.nodes[nid].kind for nid in sorted(self.nodes)
        )
        return f"SpqrTree(nodes={kinds!r})"


def cycle_order(skeleton: Graph) -> list[int]:
    """Vertices of a cycle graph in ring order, from the smallest vertex
    toward its smaller neighbor."""
    start = min(skeleton.vertices)
    ring = [start]
    prev = None
    cur = start
    while True:
        nbrs = [w for w in skeleton.neighbors(cur) if w != prev]
        if len(nbrs) > 1 and prev is None:
            nxt = min(nbrs)
        else:
            nxt = nbrs[0]
        if nxt == start:
            break
        ring.append(nxt)
        prev, cur = cur, nxt
    return ring


# -- construction -----------------------------------------------------------


class _Part:
    """A working component during splitting: edge key -> (u, v, virtual)."""

    __slots__ = ("edges",)

    def __init__(self, edges: dict[int, tuple[int, int, bool]]):
        self.edges = edges

    def vertices(self) -> set[int]:
        vs: set[int] = set()
        for u, v, _ in self.edges.values():
            vs.add(u)
            vs.add(v)
        return vs

    def as_graph(self) -> Graph:
        return Graph(
            self.vertices(),
            [Edge(k, u, v) for k, (u, v, _) in sorted(self.edges.items())],
        )

    def kind(self) -> Optional[str]:
        """S/P/R when this part is a finished skeleton, else None."""
        vs = self.vertices()
        if len(vs) == 2:
            return P_NODE
        g = self.as_graph()
        if g.is_simple():
            if all(g.degree(v) == 2 for v in vs):
                return S_NODE
            if len(vs) > 3 and connectivity(g) == 3:
                return R_NODE
        return None


def _separation_classes(
    part: _Part, u: int, v: int
) -> tuple[list[list[int]], list[int]]:
    """Edge-key classes w.r.t. the pair: one class per component of
    part - {u, v}, plus each direct (u, v) edge as a trivial class."""
    adj: dict[int, list[tuple[int, int]]] = {}
    direct: list[int] = []
    for k, (a, b, _) in part.edges.items():
        if {a, b} == {u, v}:
            direct.append(k)
            continue
        adj.setdefault(a, []).append((b, k))
        adj.setdefault(b, []).append((a, k))
    seen: set[int] = set()
    classes: list[list[int]] = []
    for start in sorted(adj):
        if start in seen or start in (u, v):
            continue
        comp_vs = {start}
        stack = [start]
        seen.add(start)
        keys: set[int] = set()
        while stack:
            x = stack.pop()
            for y, k in adj[x]:
                keys.add(k)
                if y in (u, v) or y in seen:
                    continue
                seen.add(y)
                comp_vs.add(y)
                stack.append(y)
        classes.append(sorted(keys))
    return classes, sorted(direct)


def _find_split_pair(part: _Part) -> Optional[tuple[int, int]]:
    graph = part.as_graph()
    para = graph.parallel_classes()
    if para:
        return min(para)
    verts = sorted(graph.vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            rest = graph.without_vertices((u, v))
            if rest.num_vertices() > 1 and not rest.is_connected():
                return (u, v)
    return None


def spqr(g: Graph) -> SpqrTree:
    """The (unique) SPQR tree of a 2-connected graph with at least 3
    vertices. Virtual edge ids are allocated above the input's edge ids."""
    if g.num_vertices() < 3:
        raise ValueError("spqr requires at least 3 vertices")
    if connectivity(g) < 2:
        raise ValueError("spqr requires a 2-connected graph")

    next_virtual = [g.next_edge_id()]

    def fresh() -> int:
        vid = next_virtual[0]
        next_virtual[0] += 1
        return vid

    initial = _Part({e.id: (e.u, e.v, False) for e in g.edges})
    work = [initial]
    done: list[_Part] = []
    pairings: list[tuple[int, int]] = []

    while work:
        part = work.pop()
        if part.kind() is not None:
            done.append(part)
            continue
        pair = _find_split_pair(part)
        if pair is None:  # pragma: no cover - guarded by kind() above
            done.append(part)
            continue
        u, v = pair
        classes, direct = _separation_classes(part, u, v)
        if len(classes) == 2 and not direct:
            va, vb = fresh(), fresh()
            pairings.append((va, vb))
            for keys, vid in ((classes[0], va), (classes[1], vb)):
                edges = {k: part.edges[k] for k in keys}
                edges[vid] = (u, v, True)
                work.append(_Part(edges))
        else:
            hub: dict[int, tuple[int, int, bool]] = {
                k: part.edges[k] for k in direct
            }
            for keys in classes:
                va, vb = fresh(), fresh()
                pairings.append((va, vb))
                hub[va] = (u, v, True)
                edges = {k: part.edges[k] for k in keys}
                edges[vb] = (u, v, True)
                work.append(_Part(edges))
            work.append(_Part(hub))

    # merge adjacent same-kind parts (P-P and S-S) to canonical form
    owner: dict[int, _Part] = {}
    for part in done:
        for k, (_, _, virt) in part.edges.items():
            if virt:
                owner[k] = part
    pair_map: dict[int, int] = {}
    for a, b in pairings:
        pair_map[a] = b
        pair_map[b] = a

    changed = True
    while changed:
        changed = False
        for va, vb in list(pair_map.items()):
            if va > vb or va not in pair_map:
                continue
            pa, pb = owner.get(va), owner.get(vb)
            if pa is None or pb is None or pa is pb:
                continue
            ka, kb = pa.kind(), pb.kind()
            if ka != kb or ka == R_NODE or ka is None:
                continue
            # absorb pb into pa, dropping the paired virtual edges
            del pa.edges[va]
            del pb.edges[vb]
            del pair_map[va]
            del pair_map[vb]
            del owner[va]
            del owner[vb]
            for k, rec in pb.edges.items():
                pa.edges[k] = rec
                if rec[2]:
                    owner[k] = pa
            pb.edges = {}
            changed = True

    parts = [p for p in done if p.edges]

    # canonical node ids: sort by smallest vertex, vertex set, actual ids
    def part_key(part: _Part):
        vs = sorted(part.vertices())
        actual = sorted(k for k, rec in part.edges.items() if not rec[2])
        pairs = sorted(
            (min(u, v), max(u, v)) for u, v, _ in part.edges.values()
        )
        return (vs[0], vs, actual, pairs)

    parts.sort(key=part_key)
    keys = [
        (k[0], tuple(k[1]), tuple(k[2]), tuple(k[3]))
        for k in map(part_key, parts)
    ]
    if len(set(keys)) != len(keys):
        raise AssertionError("ambiguous skeleton ordering")

    # canonical virtual ids: renumber in node order
    vid_base = g.next_edge_id()
    remap: dict[int, int] = {}
    counter = [vid_base]
    node_of_virtual: dict[int, int] = {}
    for nid, part in enumerate(parts):
        for k in sorted(k for k, rec in part.edges.items() if rec[2]):
            remap[k] = counter[0]
            counter[0] += 1
            node_of_virtual[remap[k]] = nid

    nodes: dict[int, SpqrNode] = {}
    for nid, part in enumerate(parts):
        edges = []
        virtuals = set()
        for k, (u, v, virt) in part.edges.items():
            if virt:
                edges.append(Edge(remap[k], u, v, ARTIFICIAL_T1))
                virtuals.add(remap[k])
            else:
                edges.append(g.edge_by_id(k))
        skeleton = Graph({v for e in edges for v in (e.u, e.v)}, edges)
        kind = part.kind()
        nodes[nid] = SpqrNode(nid, kind, skeleton, frozenset(virtuals))

    tree_edges = []
    for a, b in pairings:
        if a not in remap or b not in remap:
            continue
        va, vb = remap[a], remap[b]
        na, nb = node_of_virtual[va], node_of_virtual[vb]
        if na > nb:
            na, nb, va, vb = nb, na, vb, va
        tree_edges.append((na, va, nb, vb))
    tree_edges.sort()
    return SpqrTree(g, nodes, tree_edges)


# ---------------------------------------------------------------------------
# blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Block:
    """Induced subgraph hanging off a 2-separator.

    The edge set excludes every edge joining the two endpoints. The root
    of a decomposition is the whole graph, with endpoints None. A
    degenerate two-vertex block (empty edge set) appears only in the
    cycle-graph family, where it marks the last two ring vertices as
    endpoints.
    """

    vertices: frozenset[int]
    endpoints: Optional[VertexPair]
    edge_ids: frozenset[int]

    def inner_vertices(self) -> frozenset[int]:
        if self.endpoints is None:
            return self.vertices
        return self.vertices - {self.endpoints.u, self.endpoints.v}

    def __repr__(self) -> str:
        ep = self.endpoints.as_tuple() if self.endpoints else None
        return f"Block(|V|={len(self.vertices)}, I={ep})"


def _block_of(g: Graph, vertices: Iterable[int], endpoints: VertexPair) -> Block:
    vs = frozenset(vertices)
    ids = frozenset(
        e.id
        for e in g.edges
        if e.u in vs and e.v in vs and e.pair() != endpoints.as_tuple()
    )
    return Block(vs, endpoints, ids)


class BlockDecomposition:
    """Laminar block family plus its containment tree and contracted
    skeletons. Index 0 is always the root (the whole graph)."""

    __slots__ = (
        "graph",
        "blocks",
        "parent",
        "children",
        "spqr_tree",
        "_skeletons",
        "_augmented",
        "_child_art",
        "_own_art",
    )

    def __init__(
        self,
        graph: Graph,
        blocks: list[Block],
        parent: list[Optional[int]],
        spqr_tree: Optional[SpqrTree],
    ):
        self.graph = graph
        self.blocks = tuple(blocks)
        self.parent = tuple(parent)
        kids: list[list[int]] = [[] for _ in blocks]
        for i, p in enumerate(parent):
            if p is not None:
                kids[p].append(i)
        self.children = tuple(tuple(sorted(k)) for k in kids)
        self.spqr_tree = spqr_tree
        self._build_skeletons()

    def _build_skeletons(self) -> None:
        """B-tilde per block: children contracted to artificial edges; the
        augmented variant adds an artificial edge across the endpoints."""
        art = self.graph.next_edge_id()
        if self.spqr_tree is not None:
            for node in self.spqr_tree.nodes.values():
                art = max(art, node.skeleton.next_edge_id())
        skeletons: list[Graph] = []
        augmented: list[Graph] = []
        child_art: list[dict[int, int]] = []
        own_art: list[Optional[int]] = []
        for i, b in enumerate(self.blocks):
            verts = set(b.vertices)
            drop_edges: set[int] = set()
            amap: dict[int, int] = {}
            extra: list[Edge] = []
            for c in self.children[i]:
                cb = self.blocks[c]
                verts -= set(cb.inner_vertices())
                drop_edges |= set(cb.edge_ids)
                ep = cb.endpoints
                extra.append(Edge(art, ep.u, ep.v, ARTIFICIAL_T1))
                amap[art] = c
                art += 1
            kept = [
                self.graph.edge_by_id(eid)
                for eid in sorted(b.edge_ids - drop_edges)
            ]
            tilde = Graph(verts, kept + extra)
            skeletons.append(tilde)
            child_art.append(amap)
            if b.endpoints is None:
                augmented.append(tilde)
                own_art.append(None)
            else:
                e = Edge(art, b.endpoints.u, b.endpoints.v, ARTIFICIAL_T1)
                own_art.append(art)
                art += 1
                augmented.append(tilde.with_edges([e]))
        self._skeletons = tuple(skeletons)
        self._augmented = tuple(augmented)
        self._child_art = tuple(child_art)
        self._own_art = tuple(own_art)

    def skeleton(self, block_id: int) -> Graph:
        """The block with each child replaced by an artificial edge."""
        return self._skeletons[block_id]

    def augmented_skeleton(self, block_id: int) -> Graph:
        """skeleton() plus an artificial edge joining the block endpoints
        (for the root they coincide). 3-connected by construction."""
        return self._augmented[block_id]

    def child_of_artificial(self, block_id: int) -> dict[int, int]:
        """artificial edge id in skeleton(block_id) -> child block id."""
        return self._child_art[block_id]

    def endpoint_artificial(self, block_id: int) -> Optional[int]:
        return self._own_art[block_id]

    def moved_parallel_ids(self, block_id: int) -> frozenset[int]:
        """Input edges kept in this skeleton parallel to a child's
        artificial edge: a child's endpoint edge always lives one level
        up, which may leave an S or R skeleton non-simple. Flagged here so
        callers can tell mandated parallels from malformed skeletons."""
        sk = self._skeletons[block_id]
        art_ids = set(self._child_art[block_id])
        art_pairs = {sk.edge_by_id(a).pair() for a in art_ids}
        return frozenset(
            e.id
            for e in sk.edges
            if e.id not in art_ids and e.pair() in art_pairs
        )

    def endpoint_vertices(self) -> frozenset[int]:
        out: set[int] = set()
        for b in self.blocks:
            if b.endpoints is not None:
                out |= {b.endpoints.u, b.endpoints.v}
        return frozenset(out)

    def __repr__(self) -> str:
        return f"BlockDecomposition(blocks={len(self.blocks)})"


def _is_cycle_graph(g: Graph) -> bool:
    return g.is_simple() and all(g.degree(v) == 2 for v in g.vertices)


def _cycle_family(g: Graph) -> BlockDecomposition:
    ring = cycle_order(g)
    s = len(ring)
    blocks: list[Block] = [Block(frozenset(g.vertices), None, g.edge_ids())]
    parent: list[Optional[int]] = [None]
    if s >= 4:
        # nested chain from the far end of the ring, then the two-vertex
        # stub that marks the last ring pair as endpoints
        prev = 0
        for i in range(0, s - 3):
            lo = i // 2
            hi = s - 2 - (i + 1) // 2
            ep = VertexPair(ring[lo], ring[hi])
            blocks.append(_block_of(g, ring[lo : hi + 1], ep))
            parent.append(prev)
            prev = len(blocks) - 1
        stub = Block(
            frozenset((ring[s - 2], ring[s - 1])),
            VertexPair(ring[s - 2], ring[s - 1]),
            frozenset(),
        )
        blocks.append(stub)
        parent.append(0)
    return BlockDecomposition(g, blocks, parent, None)


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Laminar block decomposition of a 2-connected graph (|V| >= 3).

    Every contracted+augmented skeleton is 3-connected, single children
    never repeat their parent's endpoints, and every vertex of every
    2-separator is a block endpoint or a degree-2 neighbor of one.
    """
    if g.num_vertices() < 3:
        raise ValueError("block decomposition requires at least 3 vertices")
    if connectivity(g) < 2:
        raise ValueError("block decomposition requires a 2-connected graph")
    if _is_cycle_graph(g):
        return _cycle_family(g)

    tree = spqr(g)
    root = min(
        nid for nid, node in tree.nodes.items() if node.kind in (P_NODE, R_NODE)
    )

    # rooted structure
    parent_node: dict[int, Optional[int]] = {root: None}
    parent_virtual: dict[int, int] = {}  # node -> its parent edge (own skeleton)
    attach_virtual: dict[int, int] = {}  # node -> paired edge in parent skeleton
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y, vx, vy in tree.neighbors(x):
            if y == parent_node.get(x):
                continue
            if y in parent_node:
                continue
            parent_node[y] = x
            parent_virtual[y] = vy
            attach_virtual[y] = vx
            order.append(y)
            stack.append(y)

    subtree_vertices: dict[int, set[int]] = {}
    for x in reversed(order):
        vs = set(tree.nodes[x].skeleton.vertices)
        for y, _, _ in tree.neighbors(x):
            if parent_node.get(y) == x:
                vs |= subtree_vertices[y]
        subtree_vertices[x] = vs

    children_nodes: dict[int, list[int]] = {nid: [] for nid in tree.nodes}
    for y, p in parent_node.items():
        if p is not None:
            children_nodes[p].append(y)

    omitted = {
        nid
        for nid in tree.nodes
        if tree.nodes[nid].kind == P_NODE
        and nid != root
        and len(children_nodes[nid]) == 1
    }

    # per S-node ring bookkeeping for the peeled chain
    s_ring: dict[int, list[int]] = {}
    s_edge_pos: dict[int, dict[int, int]] = {}  # node -> skeleton edge id -> j
    for nid, node in tree.nodes.items():
        if node.kind != S_NODE:
            continue
        pv = parent_virtual.get(nid)
        pe = node.skeleton.edge_by_id(pv)
        a1, a_s = min(pe.u, pe.v), max(pe.u, pe.v)
        ring = [a1]
        prev = a_s
        cur = a1
        while len(ring) < node.skeleton.num_vertices():
            nxt = [w for w in node.skeleton.neighbors(cur) if w != prev][0]
            ring.append(nxt)
            prev, cur = cur, nxt
        s_ring[nid] = ring
        pos: dict[int, int] = {}
        for e in node.skeleton.edges:
            if e.id == pv:
                continue
            i = ring.index(e.u)
            j = ring.index(e.v)
            pos[e.id] = min(i, j)  # edge joins ring[j], ring[j+1]
        s_edge_pos[nid] = pos

    blocks: list[Block] = [Block(frozenset(g.vertices), None, g.edge_ids())]
    parent: list[Optional[int]] = [None]
    block_of_node: dict[int, int] = {root: 0}
    peel_blocks: dict[int, list[int]] = {}  # S-node -> [B^1, B^2, ...]
    peel_span: dict[int, list[tuple[int, int]]] = {}  # S-node -> [(lo, hi)]

    def resolve_parent_block(y: int) -> int:
        """Block that directly contains B_y: the parent node's block, or
        the innermost peeled block whose path spans y's attach edge."""
        p = parent_node[y]
        a = attach_virtual[y]
        if p in omitted:
            return resolve_parent_block(p)
        base = block_of_node[p]
        if tree.nodes[p].kind != S_NODE:
            return base
        j = s_edge_pos[p][a]
        best = base
        for bid, (lo, hi) in zip(peel_blocks.get(p, ()), peel_span.get(p, ())):
            if lo <= j and j + 1 <= hi:
                best = bid
        return best

    for x in order:
        node = tree.nodes[x]
        if x != root and x not in omitted:
            pv = node.skeleton.edge_by_id(parent_virtual[x])
            ep = VertexPair(pv.u, pv.v)
            blocks.append(_block_of(g, subtree_vertices[x], ep))
            parent.append(resolve_parent_block(x))
            block_of_node[x] = len(blocks) - 1
        if node.kind == S_NODE:
            ring = s_ring[x]
            s = len(ring)
            pos = s_edge_pos[x]
            child_span: dict[int, set[int]] = {}
            for e_id, j in pos.items():
                if e_id in node.virtual_ids:
                    for y, vx, _ in tree.neighbors(x):
                        if vx == e_id:
                            child_span[j] = subtree_vertices[y]
                            break
            ids: list[int] = []
            spans: list[tuple[int, int]] = []
            prev_block = block_of_node[x]
            for i in range(1, s - 2):
                lo = i // 2  # 0-based: ring[lo] = a_{1 + floor(i/2)}
                hi = s - 1 - (i + 1) // 2
                verts: set[int] = set(ring[lo : hi + 1])
                for j in range(lo, hi):
                    if j in child_span:
                        verts |= child_span[j]
                ep = VertexPair(ring[lo], ring[hi])
                blocks.append(_block_of(g, verts, ep))
                parent.append(prev_block)
                prev_block = len(blocks) - 1
                ids.append(prev_block)
                spans.append((lo, hi))
            peel_blocks[x] = ids
            peel_span[x] = spans

    return BlockDecomposition(g, blocks, parent, tree)


# ---------------------------------------------------------------------------
# connectors
# ---------------------------------------------------------------------------


def _search_adj(
    edges: Iterable[Edge],
    banned: Iterable[int] = (),
    skip_pair: Optional[tuple[int, int]] = None,
) -> dict[int, list[int]]:
    out: dict[int, set[int]] = {}
    drop = set(banned)
    for e in edges:
        if e.u in drop or e.v in drop:
            continue
        if skip_pair is not None and e.pair() == skip_pair:
            continue
        out.setdefault(e.u, set()).add(e.v)
        out.setdefault(e.v, set()).add(e.u)
    return {v: sorted(ws) for v, ws in out.items()}


def _bfs_path(
    adj: Mapping[int, Sequence[int]],
    sources: Iterable[int],
    targets: set[int],
) -> Optional[list[int]]:
    """Shortest path from any source to any target, lowest-id ties."""
    parent: dict[int, Optional[int]] = {}
    queue: deque[int] = deque()
    for s in sorted(set(sources)):
        if s in targets:
            return [s]
        parent[s] = None
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in adj.get(x, ()):
            if y in parent:
                continue
            parent[y] = x
            if y in targets:
                path = [y]
                cur: Optional[int] = x
                while cur is not None:
                    path.append(cur)
                    cur = parent[cur]
                path.reverse()
                return path
            queue.append(y)
    return None


def _disjoint_paths(
    edge_pairs: Iterable[tuple[int, int]],
    sources: Sequence[int],
    sinks: set[int],
    want: int,
    exempt: frozenset[int] = frozenset(),
) -> list[list[int]]:
    """Up to `want` vertex-disjoint source-to-sink paths (unit vertex
    capacities, except `exempt` vertices which may carry all of them).
    Deterministic augmenting BFS with sorted tie-breaking."""
    SRC, SNK = ("s",), ("t",)
    cap: dict[tuple, int] = {}
    adj: dict[tuple, set] = {}

    def arc(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    verts: set[int] = set()
    for u, v in edge_pairs:
        verts.update((u, v))
        arc(("o", u), ("i", v), 1)
        arc(("o", v), ("i", u), 1)
    verts.update(sources)
    verts.update(sinks)
    for v in verts:
        arc(("i", v), ("o", v), want if v in exempt else 1)
    for s in sources:
        arc(SRC, ("i", s), want if s in exempt else 1)
    for t in sorted(sinks):
        arc(("o", t), SNK, 1)

    flow: dict[tuple, int] = {}
    for _ in range(want):
        prev: dict[tuple, tuple] = {SRC: SRC}
        queue: deque = deque([SRC])
        while queue and SNK not in prev:
            a = queue.popleft()
            for b in sorted(adj.get(a, ())):
                if b in prev:
                    continue
                if cap.get((a, b), 0) - flow.get((a, b), 0) > 0:
                    prev[b] = a
                    if b == SNK:
                        break
                    queue.append(b)
        if SNK not in prev:
            break
        b = SNK
        while b != SRC:
            a = prev[b]
            flow[(a, b)] = flow.get((a, b), 0) + 1
            flow[(b, a)] = flow.get((b, a), 0) - 1
            b = a

    paths: list[list[int]] = []
    for s in sorted(set(sources)):
        while flow.get((SRC, ("i", s)), 0) > 0:
            flow[(SRC, ("i", s))] -= 1
            path = [s]
            node = ("o", s)
            flow[(("i", s), node)] -= 1
            while True:
                step = None
                for b in sorted(adj.get(node, ())):
                    if flow.get((node, b), 0) > 0:
                        step = b
                        break
                assert step is not None
                flow[(node, step)] -= 1
                if step == SNK:
                    break
                path.append(step[1])
                node = ("o", step[1])
                flow[(step, node)] -= 1
            paths.append(path)
    return paths


@dataclass(frozen=True)
class BlockConnector:
    """Connector data for one block with endpoints (u, v).

    p_out runs u..v strictly outside the block; p_in runs u..x..v through
    the block interior; p0 joins the connector vertex x (inside) to the
    attachment vertex y (an inner vertex of p_out), possibly through
    vertices outside the component. The five pieces p0, p_in split at x,
    p_out split at y are internally disjoint.
    """

    block_id: int
    x: int
    y: int
    p0: tuple[int, ...]
    p_in: tuple[int, ...]
    p_out: tuple[int, ...]

    def p1_in(self) -> tuple[int, ...]:
        i = self.p_in.index(self.x)
        return self.p_in[: i + 1]

    def p2_in(self) -> tuple[int, ...]:
        i = self.p_in.index(self.x)
        return self.p_in[i:]

    def p1_out(self) -> tuple[int, ...]:
        i = self.p_out.index(self.y)
        return self.p_out[: i + 1]

    def p2_out(self) -> tuple[int, ...]:
        i = self.p_out.index(self.y)
        return self.p_out[i:]


@dataclass(frozen=True)
class ConnectorInfo:
    component: Graph
    s_x: frozenset[int]
    connectors: Mapping[int, BlockConnector]


def compute_connectors(
    g_full: Graph,
    h_component: Graph,
    decomp: BlockDecomposition,
    e_star: Iterable[int],
) -> ConnectorInfo:
    """Connector vertices and their path systems for every block of the
    decomposition of one 2-connected component of g_full minus e_star.

    g_full must be 3-connected (that is what guarantees the connector
    path p0 exists). Degenerate two-vertex blocks have no interior and
    carry no connector. Maximality of h_component within g_full minus
    e_star is the caller's responsibility.
    """
    star = frozenset(e_star)
    for eid in star:
        if not g_full.has_edge_id(eid):
            raise ValueError(f"e_star edge {eid} is not in the full graph")
    if connectivity(g_full) != 3:
        raise ValueError("full graph must be 3-connected")
    if decomp.graph != h_component:
        raise ValueError("decomposition does not match the component")
    for e in h_component.edges:
        if e.id in star or not g_full.has_edge_id(e.id):
            raise ValueError("component must avoid e_star and stay inside the full graph")
    if connectivity(h_component) < 2:
        raise ValueError("component must be 2-connected")

    hv = h_component.vertices
    s_x: set[int] = set()
    for e in g_full.edges:
        if e.id in star:
            if e.u in hv:
                s_x.add(e.u)
            if e.v in hv:
                s_x.add(e.v)
        else:
            # an untouched edge leaving the component marks a cut vertex
            if e.u in hv and e.v not in hv:
                s_x.add(e.u)
            if e.v in hv and e.u not in hv:
                s_x.add(e.v)

    blocks = decomp.blocks
    connectors: dict[int, BlockConnector] = {}
    p_out_of: dict[int, tuple[int, ...]] = {}

    for i in range(1, len(blocks)):
        b = blocks[i]
        inner = b.inner_vertices()
        if not inner:
            continue
        u, v = b.endpoints.as_tuple()
        p = decomp.parent[i]

        if p == 0:
            adj = _search_adj(h_component.edges, banned=inner, skip_pair=(u, v))
            found = _bfs_path(adj, [u], {v})
            if found is None:
                raise ValueError(f"no detour around block {i}; component not 2-connected")
            p_out = tuple(found)
        else:
            pb = blocks[p]
            pu, pv = pb.endpoints.as_tuple()
            region = [
                h_component.edge_by_id(eid)
                for eid in sorted(pb.edge_ids)
                if h_component.edge_by_id(eid).u not in inner
                and h_component.edge_by_id(eid).v not in inner
            ]
            legs = _disjoint_paths(
                [(e.u, e.v) for e in region], [u, v], {pu, pv}, want=2
            )
            if len(legs) < 2:
                raise ValueError(f"no disjoint detour legs for block {i}")
            leg_u = next(path for path in legs if path[0] == u)
            leg_v = next(path for path in legs if path[0] == v)
            mid = list(p_out_of[p])
            if leg_u[-1] != mid[0]:
                mid.reverse()
            p_out = tuple(leg_u + mid[1:] + list(reversed(leg_v))[1:])
        p_out_of[i] = p_out
        inner_out = set(p_out[1:-1])

        parent_conn = connectors.get(p)
        if parent_conn is not None and parent_conn.x in inner:
            x, y, p0 = parent_conn.x, parent_conn.y, parent_conn.p0
        else:
            adj = _search_adj(g_full.edges, banned=(u, v))
            q = _bfs_path(adj, sorted(inner), inner_out)
            if q is None:
                raise ValueError(
                    f"no connector path for block {i}; full graph not 3-connected"
                )
            x, y, p0 = q[0], q[-1], tuple(q)

        fan = _disjoint_paths(
            [(h_component.edge_by_id(eid).u, h_component.edge_by_id(eid).v)
             for eid in sorted(b.edge_ids)],
            [x],
            {u, v},
            want=2,
            exempt=frozenset((x,)),
        )
        if len(fan) < 2:
            raise ValueError(f"no interior fan for block {i}")
        to_u = next(path for path in fan if path[-1] == u)
        to_v = next(path for path in fan if path[-1] == v)
        p_in = tuple(list(reversed(to_u)) + to_v[1:])
        connectors[i] = BlockConnector(i, x, y, p0, p_in, p_out)

    return ConnectorInfo(h_component, frozenset(s_x), connectors)
