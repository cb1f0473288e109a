"""Degree reduction to maximum degree three, and its inverse on drawings.

Every vertex u becomes a path with one stop per incident edge, stops
ordered by ascending neighbor id.  Each original edge turns into a
type-1 edge joining its two stops; consecutive stops are joined by
type-2 path edges.  Contracting every path recovers the original
graph exactly, ids and labels included.

The inverse direction works on drawings.  Given a drawing of the
reduced graph, each path is contracted back to a point: a contraction
curve is routed from the path's first stop to every other stop, the
path edges are deleted from the surface, and each original edge is
stitched together from its two contraction curves and the type-1
chain between them.  Multi-crossings, self-crossings, and crossings
between edges sharing an endpoint produced by the stitching are all
removed by uncrossing, which never increases the crossing count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .graph import GADGET_T1, GADGET_T2, Edge, Graph
from .inserter import Drawing, _Surface, insert_edge
from .planarity import twin


@dataclass(frozen=True)
class DegreeReduction:
    """The reduced graph plus everything needed to undo it.

    vertex_map sends an incidence (u, edge id) to its stop vertex.
    paths lists each vertex's stops in incidence order; an isolated
    vertex keeps a single placeholder stop.  type1 maps reduced edge
    ids to original ids (the identity, stored to make the bijection a
    checkable fact rather than a convention); type2 holds the path
    edge ids.
    """

    original: Graph
    reduced: Graph
    vertex_map: Mapping[tuple[int, int], int]
    paths: Mapping[int, tuple[int, ...]]
    type1: Mapping[int, int]
    type2: frozenset[int]

    def contracted(self) -> Graph:
        """Undo the expansion on the graph level."""
        home: dict[int, int] = {}
        for u, stops in self.paths.items():
            for x in stops:
                home[x] = u
        edges = []
        for rid in sorted(self.type1):
            e = self.reduced.edge_by_id(rid)
            label = self.original.edge_by_id(self.type1[rid]).label
            edges.append(Edge(self.type1[rid], home[e.u], home[e.v], label))
        return Graph(self.original.vertices, edges)


def degree_reduce(g: Graph) -> DegreeReduction:
    """Expand every vertex into a path of its incidences.

    The reduced graph has sum(deg u) vertices plus one per isolated
    vertex, maximum degree three, and reuses the original edge ids for
    its type-1 edges.
    """
    if not g.is_simple():
        raise ValueError("degree reduction requires a simple graph")
    adj = g.adjacency()
    vertex_map: dict[tuple[int, int], int] = {}
    paths: dict[int, tuple[int, ...]] = {}
    stop = 0
    for u in sorted(g.vertices):
        inc = sorted(adj[u], key=lambda e: e.other(u))
        stops = []
        for e in inc:
            vertex_map[(u, e.id)] = stop
            stops.append(stop)
            stop += 1
        if not stops:
            stops = [stop]
            stop += 1
        paths[u] = tuple(stops)
    edges = [
        Edge(e.id, vertex_map[(e.u, e.id)], vertex_map[(e.v, e.id)], GADGET_T1)
        for e in sorted(g.edges, key=lambda e: e.id)
    ]
    nid = g.next_edge_id()
    for u in sorted(g.vertices):
        stops = paths[u]
        for a, b in zip(stops, stops[1:]):
            edges.append(Edge(nid, a, b, GADGET_T2))
            nid += 1
    reduced = Graph(range(stop), edges)
    return DegreeReduction(
        original=g,
        reduced=reduced,
        vertex_map=vertex_map,
        paths=paths,
        type1={e.id: e.id for e in g.edges},
        type2=frozenset(e.id for e in edges if e.label == GADGET_T2),
    )


def restore_crossing_bound(d: Drawing, red: DegreeReduction) -> int:
    """Instance bound on the crossings a restore may produce.

    Crossings of d are split by the kinds of the two edges involved.
    Type-1 with type-1 survives at most once; a path of a degree-d
    vertex carries d - 1 contraction curves, so a crossing on one
    path edge is passed at most d - 1 times and one between two path
    edges at most (d - 1)^2 times.
    """
    dmax = max((red.original.degree(v) for v in red.original.vertices), default=0)
    m = max(1, dmax - 1)
    c11 = c12 = c22 = 0
    for ea, eb, _, _ in d.crossings.values():
        t2 = (ea in red.type2) + (eb in red.type2)
        if t2 == 0:
            c11 += 1
        elif t2 == 1:
            c12 += 1
        else:
            c22 += 1
    return c11 + m * c12 + m * m * c22


def degree_restore(d: Drawing, red: DegreeReduction) -> Drawing:
    """Contract the paths of a reduced drawing back into vertices.

    Contraction curves are routed by cheapest insertion rather than
    literally alongside the paths, which never costs more.  After the
    path edges are deleted, every original edge is the concatenation
    of the curve at u, its type-1 chain, and the reverse of the curve
    at v; junction stops smooth away, and a final uncrossing pass
    removes self-crossings, repeated pairs, and crossings between
    edges sharing an endpoint.  The result is certified from scratch.
    """
    reduced = red.reduced
    if set(d.edge_paths) != set(reduced.edge_ids()):
        raise ValueError("drawing does not match the reduction")
    for e in reduced.edges:
        if set(d.edge_endpoints[e.id]) != {e.u, e.v}:
            raise ValueError("drawing does not match the reduction")
    g = red.original
    adj = g.adjacency()
    surface = _Surface.from_drawing(d)

    gamma: dict[tuple[int, int], Optional[int]] = {}
    plan: list[tuple[int, int]] = []
    for u in sorted(g.vertices):
        anchor = red.paths[u][0]
        # farthest stop first: a curve then only ever passes stops that
        # earlier curves did not end at, so in a crossing-free drawing
        # every route stays at cost zero along the path corridor
        for e in sorted(adj[u], key=lambda e: e.other(u), reverse=True):
            x = red.vertex_map[(u, e.id)]
            if x == anchor:
                gamma[(u, e.id)] = None
            else:
                plan.append((u, e.id))
    stop_home = {x: u for u, stops in red.paths.items() for x in stops}
    own_t2: dict[int, set[int]] = {u: set() for u in g.vertices}
    for t2 in red.type2:
        own_t2[stop_home[reduced.edge_by_id(t2).u]].add(t2)
    base = surface.next_seg
    surface.next_seg += len(plan)
    for off, (u, eid) in enumerate(plan):
        gid = base + off
        anchor = red.paths[u][0]
        target = red.vertex_map[(u, eid)]
        emb = surface.embedding()
        # the vertex's own path segments are about to be deleted, so
        # crossing them is free; other paths' segments vanish too, but
        # charging for them keeps each curve inside its own corridor
        free = frozenset(
            sid
            for sid, owner in surface.seg_owner.items()
            if owner in own_t2[u]
        )
        route = insert_edge(emb, anchor, target, free=free)
        surface.realize(gid, anchor, target, route, emb)
        gamma[(u, eid)] = gid
    while surface.uncross() or surface.uncross_adjacent():
        pass

    for t2 in sorted(red.type2):
        _delete_logical(surface, t2)

    for e in sorted(g.edges, key=lambda e: e.id):
        chain: list[int] = []
        junctions: list[int] = []
        gu = gamma[(e.u, e.id)]
        if gu is not None:
            part = surface.chain.pop(gu)
            # uncrossing may have flipped the stored orientation
            if surface.ends[gu][0] != red.paths[e.u][0]:
                part = [twin(dd) for dd in reversed(part)]
            del surface.ends[gu]
            chain += part
            junctions.append(red.vertex_map[(e.u, e.id)])
        mid = surface.chain[e.id]
        if surface.ends[e.id][0] != red.vertex_map[(e.u, e.id)]:
            mid = [twin(dd) for dd in reversed(mid)]
        chain += mid
        gv = gamma[(e.v, e.id)]
        if gv is not None:
            tail = surface.chain.pop(gv)
            if surface.ends[gv][0] != red.paths[e.v][0]:
                tail = [twin(dd) for dd in reversed(tail)]
            del surface.ends[gv]
            chain += [twin(dd) for dd in reversed(tail)]
            junctions.append(red.vertex_map[(e.v, e.id)])
        surface.chain[e.id] = chain
        surface.ends[e.id] = (red.paths[e.u][0], red.paths[e.v][0])
        for dd in chain:
            surface.seg_owner[dd >> 1] = e.id
        for x in junctions:
            surface._smooth(x)

    while surface.uncross() or surface.uncross_adjacent():
        pass

    # uncrossing records whatever orientation a swap left behind
    for e in g.edges:
        want = (red.paths[e.u][0], red.paths[e.v][0])
        if surface.ends[e.id] != want:
            surface.chain[e.id] = [
                twin(dd) for dd in reversed(surface.chain[e.id])
            ]
            surface.ends[e.id] = want

    # path anchors take the original vertex ids; crossing vertices are
    # renumbered past them to keep the id spaces disjoint
    vmap = {red.paths[u][0]: u for u in g.vertices}
    fresh = g.next_vertex_id()
    for w in sorted(surface.rot):
        if w not in vmap:
            vmap[w] = fresh
            fresh += 1
    surface.rot = {vmap[v]: darts for v, darts in surface.rot.items()}
    surface.seg = {sid: (vmap[a], vmap[b]) for sid, (a, b) in surface.seg.items()}
    surface.dummies = {vmap[w] for w in surface.dummies}
    surface.ends = {eid: (vmap[a], vmap[b]) for eid, (a, b) in surface.ends.items()}
    surface.next_vertex = fresh
    inserted = tuple(sorted(red.type1[i] for i in d.inserted if i in red.type1))
    return surface.freeze(inserted)
