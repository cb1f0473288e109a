"""Immutable multigraph with stable edge identities.

Vertices and edges carry integer ids. Edge ids survive subgraph
extraction, which is what lets the pipeline track an edge through
planarization, decomposition, and drawing composition without a side
table. Edges carry a provenance label; everything downstream (piece
composition, drawing verification, SVG coloring) keys off these labels.

No self-loops, no directed edges, no vertex weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

# ----------------------------------------------------------------------
# Edge provenance labels
# ----------------------------------------------------------------------

ORIGINAL = "original"
ARTIFICIAL_T1 = "artificial-type1"
ARTIFICIAL_T2 = "artificial-type2"
GADGET_T1 = "gadget-type1"
GADGET_T2 = "gadget-type2"
DUMMY_SEGMENT = "dummy-crossing-segment"

EDGE_LABELS = frozenset(
    {ORIGINAL, ARTIFICIAL_T1, ARTIFICIAL_T2, GADGET_T1, GADGET_T2, DUMMY_SEGMENT}
)


@dataclass(frozen=True, slots=True)
class Edge:
    """One undirected edge. `u`/`v` keep construction order; identity is `id`."""

    id: int
    u: int
    v: int
    label: str = ORIGINAL

    def other(self, vertex: int) -> int:
        if vertex == self.u:
            return self.v
        if vertex == self.v:
            return self.u
        raise ValueError(f"vertex {vertex} is not an endpoint of edge {self.id}")

    def pair(self) -> tuple[int, int]:
        """Endpoints as a sorted tuple (unordered identity of the edge)."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def touches(self, vertex: int) -> bool:
        return vertex == self.u or vertex == self.v


@dataclass(frozen=True, slots=True)
class VertexPair:
    """Unordered pair of distinct vertices (block endpoints, separators)."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u == self.v:
            raise ValueError("VertexPair endpoints must be distinct")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    def as_tuple(self) -> tuple[int, int]:
        return (self.u, self.v)

    def __iter__(self) -> Iterator[int]:
        yield self.u
        yield self.v

    def __contains__(self, vertex: int) -> bool:
        return vertex == self.u or vertex == self.v


# ----------------------------------------------------------------------
# Graph
# ----------------------------------------------------------------------


class Graph:
    """Immutable multigraph. Treat every instance as frozen."""

    __slots__ = ("_vertices", "_edges", "_adj", "_by_id")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Edge]):
        vset = frozenset(vertices)
        elist = tuple(sorted(edges, key=lambda e: e.id))
        seen: set[int] = set()
        for e in elist:
            if e.u == e.v:
                raise ValueError(f"self-loop on vertex {e.u} (edge {e.id})")
            if e.id in seen:
                raise ValueError(f"duplicate edge id {e.id}")
            seen.add(e.id)
            if e.u not in vset or e.v not in vset:
                raise ValueError(f"edge {e.id} endpoint outside vertex set")
            if e.label not in EDGE_LABELS:
                raise ValueError(f"unknown edge label {e.label!r}")
        self._vertices = vset
        self._edges = elist
        self._adj: Optional[dict[int, tuple[Edge, ...]]] = None
        self._by_id: Optional[dict[int, Edge]] = None

    # -- construction helpers ------------------------------------------

    @classmethod
    def from_pairs(
        cls,
        pairs: Iterable[tuple[int, int]],
        extra_vertices: Iterable[int] = (),
        label: str = ORIGINAL,
    ) -> "Graph":
        """Build a graph from endpoint pairs; edge ids are 0,1,2,... in order."""
        pairs = list(pairs)
        verts = set(extra_vertices)
        for u, v in pairs:
            verts.add(u)
            verts.add(v)
        edges = [Edge(i, u, v, label) for i, (u, v) in enumerate(pairs)]
        return cls(verts, edges)

    # -- basic accessors -----------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    def num_vertices(self) -> int:
        return len(self._vertices)

    def num_edges(self) -> int:
        return len(self._edges)

    def edge_ids(self) -> frozenset[int]:
        return frozenset(e.id for e in self._edges)

    def edge_by_id(self, eid: int) -> Edge:
        if self._by_id is None:
            self._by_id = {e.id: e for e in self._edges}
        return self._by_id[eid]

    def has_edge_id(self, eid: int) -> bool:
        if self._by_id is None:
            self._by_id = {e.id: e for e in self._edges}
        return eid in self._by_id

    def adjacency(self) -> Mapping[int, tuple[Edge, ...]]:
        """vertex -> incident edges, sorted by edge id. Cached."""
        if self._adj is None:
            adj: dict[int, list[Edge]] = {v: [] for v in self._vertices}
            for e in self._edges:
                adj[e.u].append(e)
                adj[e.v].append(e)
            self._adj = {v: tuple(lst) for v, lst in adj.items()}
        return self._adj

    def degree(self, v: int) -> int:
        return len(self.adjacency()[v])

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbors, ascending."""
        return sorted({e.other(v) for e in self.adjacency()[v]})

    def edges_between(self, u: int, v: int) -> list[Edge]:
        key = (u, v) if u <= v else (v, u)
        return [e for e in self.adjacency().get(u, ()) if e.pair() == key]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edges_between(u, v))

    def parallel_classes(self) -> dict[tuple[int, int], list[Edge]]:
        """Endpoint pair -> edges with those endpoints (only classes of size >= 2)."""
        groups: dict[tuple[int, int], list[Edge]] = {}
        for e in self._edges:
            groups.setdefault(e.pair(), []).append(e)
        return {k: v for k, v in groups.items() if len(v) >= 2}

    def is_simple(self) -> bool:
        return not self.parallel_classes()

    # -- derived graphs (ids retained) ---------------------------------

    def subgraph(
        self,
        vertices: Optional[Iterable[int]] = None,
        edge_ids: Optional[Iterable[int]] = None,
    ) -> "Graph":
        """Subgraph keeping parent ids.

        With only `vertices`: the induced subgraph. With `edge_ids`: those
        edges plus their endpoints plus any listed vertices.
        """
        if vertices is None and edge_ids is None:
            return self
        if edge_ids is not None:
            wanted = set(edge_ids)
            edges = [e for e in self._edges if e.id in wanted]
            verts = set(vertices) if vertices is not None else set()
            for e in edges:
                verts.add(e.u)
                verts.add(e.v)
            return Graph(verts, edges)
        vset = set(vertices)
        edges = [e for e in self._edges if e.u in vset and e.v in vset]
        return Graph(vset, edges)

    def without_edges(self, edge_ids: Iterable[int]) -> "Graph":
        drop = set(edge_ids)
        return Graph(self._vertices, [e for e in self._edges if e.id not in drop])

    def without_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        keep = self._vertices - drop
        edges = [e for e in self._edges if e.u in keep and e.v in keep]
        return Graph(keep, edges)

    def with_edges(self, new_edges: Iterable[Edge]) -> "Graph":
        extra = list(new_edges)
        verts = set(self._vertices)
        for e in extra:
            verts.add(e.u)
            verts.add(e.v)
        return Graph(verts, list(self._edges) + extra)

    def with_vertices(self, new_vertices: Iterable[int]) -> "Graph":
        return Graph(self._vertices | set(new_vertices), self._edges)

    def next_vertex_id(self) -> int:
        return max(self._vertices, default=-1) + 1

    def next_edge_id(self) -> int:
        return max((e.id for e in self._edges), default=-1) + 1

    def relabel_dense(self) -> tuple["Graph", dict[int, int], dict[int, int]]:
        """Re-number vertices and edges densely from 0.

        Returns (graph, old vertex id -> new, old edge id -> new).
        """
        vmap = {v: i for i, v in enumerate(sorted(self._vertices))}
        emap = {e.id: i for i, e in enumerate(self._edges)}
        edges = [Edge(emap[e.id], vmap[e.u], vmap[e.v], e.label) for e in self._edges]
        return Graph(range(len(vmap)), edges), vmap, emap

    def simplify(self) -> tuple["Graph", dict[int, list[int]]]:
        """Drop parallel duplicates, keeping the lowest-id edge of each class.

        Returns (simple graph, kept edge id -> all ids of its class).
        """
        groups: dict[tuple[int, int], list[Edge]] = {}
        for e in self._edges:
            groups.setdefault(e.pair(), []).append(e)
        keep: list[Edge] = []
        classes: dict[int, list[int]] = {}
        for pair in sorted(groups):
            cls = sorted(groups[pair], key=lambda e: e.id)
            keep.append(cls[0])
            classes[cls[0].id] = [e.id for e in cls]
        return Graph(self._vertices, keep), classes

    # -- connectivity primitives ---------------------------------------

    def components(self) -> list[frozenset[int]]:
        """Connected components as vertex sets, sorted by smallest member."""
        adj = self.adjacency()
        seen: set[int] = set()
        out: list[frozenset[int]] = []
        for start in sorted(self._vertices):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            seen.add(start)
            while stack:
                x = stack.pop()
                for e in adj[x]:
                    y = e.other(x)
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            out.append(frozenset(comp))
        return out

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        return len(self.components()) == 1

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph(|V|={len(self._vertices)}, |E|={len(self._edges)})"


# ----------------------------------------------------------------------
# Structural queries
# ----------------------------------------------------------------------


def max_degree(g: Graph) -> int:
    """Largest incident-edge count (parallel edges count with multiplicity)."""
    adj = g.adjacency()
    return max((len(adj[v]) for v in g.vertices), default=0)


def subdivide_parallel_edges(g: Graph) -> tuple[Graph, dict[int, tuple[int, ...]]]:
    """Subdivide every edge of every parallel class once, making the graph simple.

    Each edge of a class gets its own fresh midpoint vertex, so no new
    parallel pairs can arise and no vertex degree grows. The mapping sends
    every old edge id to the id path replacing it (identity tuple for
    untouched edges); drawings of the output project back by suppressing
    the midpoint vertices.
    """
    classes = g.parallel_classes()
    mapping: dict[int, tuple[int, ...]] = {e.id: (e.id,) for e in g.edges}
    if not classes:
        return g, mapping
    to_split = sorted(
        (e for cls in classes.values() for e in cls), key=lambda e: e.id
    )
    next_v = g.next_vertex_id()
    next_e = g.next_edge_id()
    verts = set(g.vertices)
    edges = [e for e in g.edges if e.pair() not in classes]
    for e in to_split:
        w = next_v
        next_v += 1
        first = Edge(next_e, e.u, w, e.label)
        second = Edge(next_e + 1, w, e.v, e.label)
        next_e += 2
        verts.add(w)
        edges.extend((first, second))
        mapping[e.id] = (first.id, second.id)
    return Graph(verts, edges), mapping


def biconnected_components(g: Graph) -> list[tuple[Graph, frozenset[int]]]:
    """Block-cut decomposition (Hopcroft-Tarjan, iterative).

    Returns (component, cut vertices of g lying in it) per component,
    every edge in exactly one component. Isolated vertices come out as
    single-vertex components.
    """
    adj = g.adjacency()
    num: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[Edge] = []
    comp_edges: list[list[Edge]] = []
    cut_vertices: set[int] = set()
    clock = 0

    for root in sorted(g.vertices):
        if root in num:
            continue
        num[root] = low[root] = clock
        clock += 1
        root_children = 0
        # frame: (vertex, incoming edge id, next incident index)
        frames: list[list[int]] = [[root, -1, 0]]
        while frames:
            v, in_eid, idx = frames[-1]
            incident = adj[v]
            advanced = False
            while idx < len(incident):
                e = incident[idx]
                idx += 1
                if e.id == in_eid:
                    continue
                w = e.other(v)
                if w not in num:
                    edge_stack.append(e)
                    num[w] = low[w] = clock
                    clock += 1
                    frames[-1][2] = idx
                    frames.append([w, e.id, 0])
                    advanced = True
                    break
                if num[w] < num[v]:
                    edge_stack.append(e)
                    if num[w] < low[v]:
                        low[v] = num[w]
            if advanced:
                continue
            frames.pop()
            if not frames:
                break
            p = frames[-1][0]
            if low[v] < low[p]:
                low[p] = low[v]
            if low[v] >= num[p]:
                if p == root:
                    root_children += 1
                    if root_children >= 2:
                        cut_vertices.add(root)
                else:
                    cut_vertices.add(p)
                group: list[Edge] = []
                while edge_stack:
                    e = edge_stack.pop()
                    group.append(e)
                    if e.id == in_eid:
                        break
                comp_edges.append(group)
        if edge_stack:  # pragma: no cover - defensive; stack drains per block
            comp_edges.append(edge_stack[:])
            edge_stack.clear()

    out: list[tuple[Graph, frozenset[int]]] = []
    covered: set[int] = set()
    for group in comp_edges:
        verts = {e.u for e in group} | {e.v for e in group}
        covered |= verts
        out.append((Graph(verts, group), frozenset(verts & cut_vertices)))
    for v in sorted(g.vertices - covered):
        out.append((Graph([v], []), frozenset()))
    out.sort(key=lambda item: min(item[0].vertices))
    return out


def articulation_points(g: Graph) -> frozenset[int]:
    cuts: set[int] = set()
    for _, c in biconnected_components(g):
        cuts |= c
    return frozenset(cuts)


def connectivity(g: Graph) -> int:
    """Vertex connectivity capped at 3 (3 stands for "3 or higher").

    0: disconnected (or empty). 1: has a cut vertex. 2: has a 2-separator
    but no smaller one. 3: no separator of size <= 2 exists.
    """
    n = g.num_vertices()
    if n == 0:
        return 0
    if not g.is_connected():
        return 0
    if articulation_points(g):
        return 1
    if n <= 3:
        return 3
    if n < 12:
        verts = sorted(g.vertices)
        for i, u in enumerate(verts):
            for v in verts[i + 1 :]:
                rest = g.without_vertices((u, v))
                if rest.num_vertices() > 1 and not rest.is_connected():
                    return 2
        return 3
    for u in sorted(g.vertices):
        if articulation_points(g.without_vertices((u,))):
            return 2
    return 3


def two_separators(g: Graph) -> list[VertexPair]:
    """All 2-separators by exhaustive removal. Oracle-grade; quadratic."""
    out = []
    verts = sorted(g.vertices)
    for i, u in enumerate(verts):
        for v in verts[i + 1 :]:
            rest = g.without_vertices((u, v))
            if rest.num_vertices() > 1 and not rest.is_connected():
                out.append(VertexPair(u, v))
    return out
