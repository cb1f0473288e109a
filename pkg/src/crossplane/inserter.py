"""Edge insertion into a fixed planar embedding.

Each new edge is routed along a shortest path in the dual graph
between the faces incident to its endpoints, then realized
combinatorially: every crossing becomes a degree-4 dummy vertex that
splits both participating edges into segments. The resulting drawing
is itself a certified planar embedding (the "planarized skeleton")
plus bookkeeping mapping original edges to segment chains.

Shortest-route ties break lexicographically on (remaining distance,
face id, crossed segment id). This replaces the usual random
perturbation of dual edge lengths; it makes routes reproducible but
is not relied on for the at-most-one-crossing-per-pair property.
That property is enforced by `uncross`, the classical exchange
argument made executable: swap the two sub-curves between a repeated
crossing pair, smooth both crossing points away, repeat until clean.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .graph import DUMMY_SEGMENT, Edge, Graph, ORIGINAL, VertexPair
from .planarity import PlanarEmbedding, RotationSystem, twin


# ---------------------------------------------------------------------------
# routes
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class InsertionRoute:
    """Dual-graph route for one edge: the edges it crosses, in order.

    `faces` is the dual path; it has one more entry than `crossed`,
    except for two degenerate cost-0 shapes: a single face when the
    endpoints are co-facial, and a pair of faces from different
    connected components that the insertion will merge.
    """

    u: int
    v: int
    crossed: tuple[int, ...]
    faces: tuple[int, ...]
    edge_id: Optional[int] = None

    @property
    def cost(self) -> int:
        return len(self.crossed)


def insert_edge(
    emb: PlanarEmbedding, u: int, v: int, free: frozenset[int] = frozenset()
) -> InsertionRoute:
    """Cheapest insertion route for (u, v) in a fixed embedding.

    Cost is the minimum number of edge interiors any u-v curve must
    cross, computed as a multi-source multi-sink shortest path in the
    dual between the faces containing u and those containing v.

    Segments listed in `free` may be crossed at no cost; they still
    appear in the route (and become crossings when realized), they
    just do not count toward the minimized total. Callers that later
    delete those segments use this to route as if they were absent.
    """
    if u == v:
        raise ValueError("cannot insert a loop edge")
    g = emb.graph
    if u not in g.vertices or v not in g.vertices:
        raise ValueError("insertion endpoint missing from the embedding")
    rot = emb.rotation
    u_faces = sorted({emb.face_of(d) for d in rot.darts_at(u)})
    v_faces = sorted({emb.face_of(d) for d in rot.darts_at(v)})
    if not u_faces or not v_faces:
        # an isolated endpoint floats freely inside any face
        anchor = tuple(u_faces[:1]) + tuple(v_faces[:1])
        return InsertionRoute(u, v, (), anchor)
    common = set(u_faces) & set(v_faces)
    if common:
        return InsertionRoute(u, v, (), (min(common),))

    adj: dict[int, list[tuple[int, int]]] = {}
    for e in g.edges:
        fa, fb = emb.faces_of_edge(e.id)
        if fa == fb:
            continue  # bridge; crossing it never leaves the face
        adj.setdefault(fa, []).append((fb, e.id))
        adj.setdefault(fb, []).append((fa, e.id))
    for entries in adj.values():
        entries.sort()

    if free:
        # zero/one weights: deque BFS with parent pointers
        dist = {f: 0 for f in v_faces}
        par: dict[int, tuple[int, int]] = {}
        dq = deque(sorted(v_faces))
        while dq:
            f = dq.popleft()
            for nf, eid in adj.get(f, ()):
                w = 0 if eid in free else 1
                if nf not in dist or dist[f] + w < dist[nf]:
                    dist[nf] = dist[f] + w
                    par[nf] = (f, eid)
                    (dq.appendleft if w == 0 else dq.append)(nf)
        reachable = [f for f in u_faces if f in dist]
        if not reachable:
            return InsertionRoute(u, v, (), (u_faces[0], v_faces[0]))
        cur = min(reachable, key=lambda f: (dist[f], f))
        face_seq = [cur]
        crossed = []
        while cur in par:
            nf, eid = par[cur]
            crossed.append(eid)
            face_seq.append(nf)
            cur = nf
        return InsertionRoute(u, v, tuple(crossed), tuple(face_seq))

    # distance of every face to the v-side, then walk greedily from u
    dist = {f: 0 for f in v_faces}
    queue = deque(sorted(v_faces))
    while queue:
        f = queue.popleft()
        for nf, _ in adj.get(f, ()):
            if nf not in dist:
                dist[nf] = dist[f] + 1
                queue.append(nf)
    reachable = [f for f in u_faces if f in dist]
    if not reachable:
        # different components: merge them, crossing nothing
        return InsertionRoute(u, v, (), (u_faces[0], v_faces[0]))
    best = min(dist[f] for f in reachable)
    cur = min(f for f in reachable if dist[f] == best)
    face_seq = [cur]
    crossed = []
    while dist[cur] > 0:
        nf, eid = min(
            (nf, eid)
            for nf, eid in adj[cur]
            if dist.get(nf, best + 1) == dist[cur] - 1
        )
        crossed.append(eid)
        face_seq.append(nf)
        cur = nf
    return InsertionRoute(u, v, tuple(crossed), tuple(face_seq))


# ---------------------------------------------------------------------------
# drawings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Drawing:
    """A planarized drawing: skeleton embedding plus edge bookkeeping.

    skeleton        certified embedding whose edges are segments
    edge_paths      original edge id -> dart chain through the skeleton
    crossings       dummy vertex -> (edge a, edge b, index along a,
                    index along b), a <= b
    inserted        ids of the edges added on top of the base graph
    edge_endpoints  original edge id -> (u, v) as routed
    """

    skeleton: PlanarEmbedding
    edge_paths: Mapping[int, tuple[int, ...]]
    crossings: Mapping[int, tuple[int, int, int, int]]
    inserted: tuple[int, ...]
    edge_endpoints: Mapping[int, tuple[int, int]]

    def crossing_count(self) -> int:
        return len(self.crossings)

    def pair_multiplicities(self) -> dict[tuple[int, int], int]:
        """How many times each unordered edge pair crosses."""
        out: dict[tuple[int, int], int] = {}
        for ea, eb, _, _ in self.crossings.values():
            out[(ea, eb)] = out.get((ea, eb), 0) + 1
        return out

    def crossings_of_edge(self, eid: int) -> int:
        return sum(
            1 for ea, eb, _, _ in self.crossings.values() if eid in (ea, eb)
        )

    def verify(self) -> bool:
        """Full invariant suite; True iff every check passes."""
        try:
            self._check()
        except (AssertionError, KeyError, ValueError):
            return False
        return True

    def _check(self) -> None:
        emb = self.skeleton
        assert emb.verify()
        rot = emb.rotation
        seg_owner: dict[int, int] = {}
        used_darts: set[int] = set()
        for eid, path in self.edge_paths.items():
            assert path, f"edge {eid} has an empty path"
            pu, pv = self.edge_endpoints[eid]
            assert rot.origin(path[0]) == pu
            assert rot.head(path[-1]) == pv
            for d in path:
                assert d not in used_darts and twin(d) not in used_darts
                used_darts.add(d)
                assert seg_owner.setdefault(d >> 1, eid) == eid
            for a, b in zip(path, path[1:]):
                w = rot.head(a)
                assert w == rot.origin(b)
                assert w in self.crossings, f"edge {eid} passes non-dummy {w}"
        assert set(seg_owner) == {e.id for e in emb.graph.edges}

        recomputed: dict[int, list[tuple[int, int]]] = {}
        for eid, path in self.edge_paths.items():
            for k in range(len(path) - 1):
                w = rot.head(path[k])
                recomputed.setdefault(w, []).append((eid, k))
        assert set(recomputed) == set(self.crossings)
        for w, (ea, eb, ka, kb) in self.crossings.items():
            visits = sorted(recomputed[w])
            assert len(visits) == 2
            assert visits == sorted(((ea, ka), (eb, kb)))
            darts = rot.darts_at(w)
            assert len(darts) == 4
            # the two curve passes must interleave around the dummy
            # (by edge for a proper crossing, by visit for a self-crossing)
            (e1, k1), (e2, k2) = visits
            pass1 = {twin(self.edge_paths[e1][k1]), self.edge_paths[e1][k1 + 1]}
            pass2 = {twin(self.edge_paths[e2][k2]), self.edge_paths[e2][k2 + 1]}
            assert set(darts) == pass1 | pass2
            flags = [d in pass1 for d in darts]
            assert flags in ([True, False, True, False], [False, True, False, True])
        for eid in self.inserted:
            assert eid in self.edge_paths


# ---------------------------------------------------------------------------
# the mutable surface
# ---------------------------------------------------------------------------


class _Surface:
    """Planarized drawing under construction.

    Segments are the evolving skeleton's edges; every original edge
    owns an ordered dart chain over them. All surgery (subdividing a
    crossed segment, chording through a face, merging segments when a
    crossing is smoothed away) is face-consistent by construction, and
    `freeze` re-certifies the result from scratch.
    """

    def __init__(self) -> None:
        self.rot: dict[int, list[int]] = {}
        self.seg: dict[int, tuple[int, int]] = {}
        self.seg_label: dict[int, str] = {}
        self.seg_owner: dict[int, int] = {}
        self.chain: dict[int, list[int]] = {}
        self.ends: dict[int, tuple[int, int]] = {}
        self.dummies: set[int] = set()
        self.next_seg = 0
        self.next_vertex = 0

    # -- construction ---------------------------------------------------

    @classmethod
    def from_embedding(cls, emb: PlanarEmbedding) -> "_Surface":
        s = cls()
        g = emb.graph
        s.rot = {v: list(emb.rotation.darts_at(v)) for v in g.vertices}
        for e in g.edges:
            s.seg[e.id] = (e.u, e.v)
            s.seg_label[e.id] = e.label
            s.seg_owner[e.id] = e.id
            s.chain[e.id] = [2 * e.id]
            s.ends[e.id] = (e.u, e.v)
        s.next_seg = g.next_edge_id()
        s.next_vertex = g.next_vertex_id()
        return s

    @classmethod
    def from_drawing(cls, d: Drawing) -> "_Surface":
        s = cls()
        g = d.skeleton.graph
        s.rot = {v: list(d.skeleton.rotation.darts_at(v)) for v in g.vertices}
        for e in g.edges:
            s.seg[e.id] = (e.u, e.v)
            s.seg_label[e.id] = e.label
        for eid, path in d.edge_paths.items():
            s.chain[eid] = list(path)
            s.ends[eid] = d.edge_endpoints[eid]
            for dart in path:
                s.seg_owner[dart >> 1] = eid
        s.dummies = set(d.crossings)
        s.next_seg = g.next_edge_id()
        s.next_vertex = g.next_vertex_id()
        return s

    # -- dart geometry ----------------------------------------------------

    def origin(self, dart: int) -> int:
        return self.seg[dart >> 1][dart & 1]

    def head(self, dart: int) -> int:
        return self.seg[dart >> 1][1 ^ (dart & 1)]

    def graph(self) -> Graph:
        edges = [
            Edge(sid, ab[0], ab[1], self.seg_label[sid])
            for sid, ab in self.seg.items()
        ]
        return Graph(self.rot.keys(), edges)

    def embedding(self) -> PlanarEmbedding:
        g = self.graph()
        rs = RotationSystem(g, {v: tuple(ds) for v, ds in self.rot.items()})
        return PlanarEmbedding(rs)

    # -- surgery ----------------------------------------------------------

    def _insert_before(self, vertex: int, anchor: int, new_dart: int) -> None:
        self.rot[vertex].insert(self.rot[vertex].index(anchor), new_dart)

    def _corner_dart(self, emb: PlanarEmbedding, vertex: int, face: int) -> int:
        # darts minted after `emb` was computed cannot anchor a corner
        candidates = []
        for d in self.rot[vertex]:
            try:
                if emb.face_of(d) == face:
                    candidates.append(d)
            except KeyError:
                continue
        return min(candidates)

    def _subdivide(self, sid: int) -> tuple[int, int]:
        """Split segment sid with a fresh vertex; returns (vertex, tail id)."""
        a, b = self.seg[sid]
        w = self.next_vertex
        self.next_vertex += 1
        tail = self.next_seg
        self.next_seg += 1
        self.seg[sid] = (a, w)
        self.seg[tail] = (w, b)
        self.seg_label[sid] = DUMMY_SEGMENT
        self.seg_label[tail] = DUMMY_SEGMENT
        owner = self.seg_owner[sid]
        self.seg_owner[tail] = owner
        idx = self.rot[b].index(2 * sid + 1)
        self.rot[b][idx] = 2 * tail + 1
        self.rot[w] = [2 * sid + 1, 2 * tail]
        ch = self.chain[owner]
        if 2 * sid in ch:
            ch.insert(ch.index(2 * sid) + 1, 2 * tail)
        else:
            ch.insert(ch.index(2 * sid + 1), 2 * tail + 1)
        return w, tail

    def _new_chord(
        self, p: int, anchor_p: Optional[int], q: int, anchor_q: Optional[int],
        sid: Optional[int] = None, label: str = DUMMY_SEGMENT,
    ) -> int:
        """Add a segment p -> q, anchored before the given corner darts."""
        if sid is None:
            sid = self.next_seg
            self.next_seg += 1
        self.seg[sid] = (p, q)
        self.seg_label[sid] = label
        if anchor_p is None:
            self.rot.setdefault(p, []).append(2 * sid)
        else:
            self._insert_before(p, anchor_p, 2 * sid)
        if anchor_q is None:
            self.rot.setdefault(q, []).append(2 * sid + 1)
        else:
            self._insert_before(q, anchor_q, 2 * sid + 1)
        return sid

    def realize(
        self, eid: int, u: int, v: int, route: InsertionRoute,
        emb: PlanarEmbedding,
    ) -> None:
        """Materialize a route computed against this surface's embedding."""
        self.ends[eid] = (u, v)
        if not route.crossed:
            anchor_u = anchor_v = None
            if len(route.faces) == 1:
                f = route.faces[0]
                anchor_u = self._corner_dart(emb, u, f) if self.rot.get(u) else None
                anchor_v = self._corner_dart(emb, v, f) if self.rot.get(v) else None
            elif len(route.faces) == 2:
                fu, fv = route.faces
                anchor_u = self._corner_dart(emb, u, fu) if self.rot.get(u) else None
                anchor_v = self._corner_dart(emb, v, fv) if self.rot.get(v) else None
            sid = self._new_chord(u, anchor_u, v, anchor_v, sid=eid, label=ORIGINAL)
            self.seg_owner[sid] = eid
            self.chain[eid] = [2 * sid]
            return

        # crossing route: subdivide each crossed segment, then chord
        # through the faces. Corner anchors at the dummies come out of
        # the subdivision itself; only u and v need face lookups.
        chain: list[int] = []
        prev_vertex = u
        prev_anchor = self._corner_dart(emb, u, route.faces[0])
        for j, sid in enumerate(route.crossed):
            enter_face = route.faces[j]
            d_even_face = emb.face_of(2 * sid)
            w, tail = self._subdivide(sid)
            if d_even_face == enter_face:
                enter_anchor, exit_anchor = 2 * tail, 2 * sid + 1
            else:
                enter_anchor, exit_anchor = 2 * sid + 1, 2 * tail
            chord = self._new_chord(prev_vertex, prev_anchor, w, enter_anchor)
            self.seg_owner[chord] = eid
            chain.append(2 * chord)
            self.dummies.add(w)
            prev_vertex = w
            prev_anchor = exit_anchor
        final_anchor = self._corner_dart(emb, v, route.faces[-1])
        chord = self._new_chord(prev_vertex, prev_anchor, v, final_anchor)
        self.seg_owner[chord] = eid
        chain.append(2 * chord)
        self.chain[eid] = chain

    # -- uncrossing -------------------------------------------------------

    def _dummy_visits(self) -> dict[int, list[tuple[int, int]]]:
        out: dict[int, list[tuple[int, int]]] = {}
        for eid, ch in self.chain.items():
            for k in range(len(ch) - 1):
                out.setdefault(self.head(ch[k]), []).append((eid, k))
        return out

    def _delete_segment(self, sid: int) -> None:
        a, b = self.seg[sid]
        self.rot[a].remove(2 * sid)
        self.rot[b].remove(2 * sid + 1)
        del self.seg[sid], self.seg_label[sid], self.seg_owner[sid]

    def delete_chain(self, eid: int) -> None:
        """Remove an edge's whole chain; smooth crossings left behind."""
        chain = self.chain.pop(eid)
        del self.ends[eid]
        touched: set[int] = set()
        for d in chain:
            touched.add(self.origin(d))
            touched.add(self.head(d))
            self._delete_segment(d >> 1)
        for x in sorted(touched):
            if x not in self.rot or x not in self.dummies:
                continue
            if not self.rot[x]:
                del self.rot[x]
                self.dummies.discard(x)
            elif len(self.rot[x]) == 2:
                self._smooth(x)

    def _merge_at(self, w: int, d_in: int, d_out: int) -> int:
        """Fuse two segments meeting at w into one; returns its new dart."""
        x = self.origin(d_in)
        y = self.head(d_out)
        nid = self.next_seg
        self.next_seg += 1
        self.seg[nid] = (x, y)
        self.seg_label[nid] = DUMMY_SEGMENT
        self.rot[x][self.rot[x].index(d_in)] = 2 * nid
        self.rot[y][self.rot[y].index(twin(d_out))] = 2 * nid + 1
        self.rot[w].remove(twin(d_in))
        self.rot[w].remove(d_out)
        for sid in (d_in >> 1, d_out >> 1):
            del self.seg[sid], self.seg_label[sid], self.seg_owner[sid]
        return 2 * nid

    def _smooth(self, w: int) -> None:
        """Remove a crossing vertex both residual curves pass straight through."""
        while True:
            visit = None
            for eid, ch in self.chain.items():
                for k in range(len(ch) - 1):
                    if self.head(ch[k]) == w:
                        visit = (eid, k)
                        break
                if visit:
                    break
            if visit is None:
                break
            eid, k = visit
            ch = self.chain[eid]
            merged = self._merge_at(w, ch[k], ch[k + 1])
            self.seg_owner[merged >> 1] = eid
            ch[k : k + 2] = [merged]
        assert not self.rot[w]
        del self.rot[w]
        self.dummies.discard(w)

    def _shortcut(self, eid: int, w: int) -> None:
        """Cut a self-crossing: drop the loop the edge makes through w."""
        ch = self.chain[eid]
        hits = [k for k in range(len(ch) - 1) if self.head(ch[k]) == w]
        i, j = hits[0], hits[1]
        loop = ch[i + 1 : j + 1]
        self.chain[eid] = ch[: i + 1] + ch[j + 1 :]
        touched = {w}
        for d in loop:
            touched.add(self.origin(d))
            touched.add(self.head(d))
            self._delete_segment(d >> 1)
        for x in sorted(touched):
            if x not in self.rot or x not in self.dummies:
                continue
            if not self.rot[x]:
                del self.rot[x]
                self.dummies.discard(x)
            elif len(self.rot[x]) == 2:
                self._smooth(x)

    def _swap(self, a: int, b: int, w1: int, w2: int) -> None:
        """Exchange the sub-curves of a and b between crossings w1, w2."""
        ca, cb = self.chain[a], self.chain[b]
        ia = next(k for k in range(len(ca) - 1) if self.head(ca[k]) == w1)
        i2 = next(k for k in range(len(ca) - 1) if self.head(ca[k]) == w2)
        jb1 = next(k for k in range(len(cb) - 1) if self.head(cb[k]) == w1)
        jb2 = next(k for k in range(len(cb) - 1) if self.head(cb[k]) == w2)
        mid_a = ca[ia + 1 : i2 + 1]
        if jb1 < jb2:
            mid_b = cb[jb1 + 1 : jb2 + 1]
            new_a = ca[: ia + 1] + mid_b + ca[i2 + 1 :]
            new_b = cb[: jb1 + 1] + mid_a + cb[jb2 + 1 :]
        else:
            mid_b = cb[jb2 + 1 : jb1 + 1]
            new_a = ca[: ia + 1] + [twin(d) for d in reversed(mid_b)] + ca[i2 + 1 :]
            new_b = cb[: jb2 + 1] + [twin(d) for d in reversed(mid_a)] + cb[jb1 + 1 :]
        self.chain[a], self.chain[b] = new_a, new_b
        for d in mid_b:
            self.seg_owner[d >> 1] = a
        for d in mid_a:
            self.seg_owner[d >> 1] = b
        self._smooth(w1)
        self._smooth(w2)

    def uncross(self) -> bool:
        """Remove self-crossings and repeated pair crossings. True if changed."""
        changed = False
        while True:
            visits = self._dummy_visits()
            self_hits = sorted(
                w for w, vis in visits.items() if vis[0][0] == vis[1][0]
            )
            if self_hits:
                w = self_hits[0]
                self._shortcut(visits[w][0][0], w)
                changed = True
                continue
            by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
            for w, vis in visits.items():
                (ea, ka), (eb, _) = sorted(vis)
                by_pair.setdefault((ea, eb), []).append((ka, w))
            offenders = sorted(p for p, ws in by_pair.items() if len(ws) >= 2)
            if not offenders:
                return changed
            a, b = offenders[0]
            along_a = sorted(by_pair[(a, b)])
            self._swap(a, b, along_a[0][1], along_a[1][1])
            changed = True

    def uncross_adjacent(self) -> bool:
        """Remove crossings between curves that share an endpoint.

        Two curves out of a common vertex p that cross at w can trade
        their initial sub-curves up to w; both keep their endpoints and
        the crossing smooths away. Not part of the insertion contract
        (insert_all permits adjacent edges to cross once); contraction
        machinery calls this to match the stronger cleanup it needs.
        """
        changed = False
        while True:
            visits = self._dummy_visits()
            found = None
            for w in sorted(visits):
                (ea, ka), (eb, kb) = sorted(visits[w])
                if ea == eb:
                    continue
                shared = set(self.ends[ea]) & set(self.ends[eb])
                if shared:
                    found = (w, ea, ka, eb, kb, min(shared))
                    break
            if found is None:
                return changed
            w, ea, ka, eb, kb, p = found
            ca, cb = self.chain[ea], self.chain[eb]
            if self.ends[ea][0] != p:
                ca = [twin(d) for d in reversed(ca)]
                ka = len(ca) - 2 - ka
                far_a = self.ends[ea][0]
            else:
                far_a = self.ends[ea][1]
            if self.ends[eb][0] != p:
                cb = [twin(d) for d in reversed(cb)]
                kb = len(cb) - 2 - kb
                far_b = self.ends[eb][0]
            else:
                far_b = self.ends[eb][1]
            self.chain[ea] = cb[: kb + 1] + ca[ka + 1 :]
            self.chain[eb] = ca[: ka + 1] + cb[kb + 1 :]
            self.ends[ea] = (p, far_a)
            self.ends[eb] = (p, far_b)
            for d in self.chain[ea]:
                self.seg_owner[d >> 1] = ea
            for d in self.chain[eb]:
                self.seg_owner[d >> 1] = eb
            self._smooth(w)
            changed = True

    # -- freezing -----------------------------------------------------------

    def freeze(self, inserted: Sequence[int]) -> Drawing:
        emb = self.embedding()
        incid: dict[int, list[tuple[int, int]]] = {}
        for eid, ch in self.chain.items():
            for k in range(len(ch) - 1):
                incid.setdefault(self.head(ch[k]), []).append((eid, k))
        crossings: dict[int, tuple[int, int, int, int]] = {}
        for w in sorted(self.dummies):
            (ea, ka), (eb, kb) = sorted(incid[w])
            crossings[w] = (ea, eb, ka, kb)
        return Drawing(
            skeleton=emb,
            edge_paths={eid: tuple(ch) for eid, ch in self.chain.items()},
            crossings=crossings,
            inserted=tuple(inserted),
            edge_endpoints=dict(self.ends),
        )


# ---------------------------------------------------------------------------
# public entry points
# ---------------------------------------------------------------------------

PairLike = Union[VertexPair, tuple]


def insert_all(emb: PlanarEmbedding, e_star: Sequence[PairLike]) -> Drawing:
    """Insert every edge of e_star into the embedding, then uncross.

    Edges are routed sequentially in input order (equivalently:
    ascending id, since ids are allocated in input order); segments of
    earlier insertions are crossable at the same unit cost as base
    edges. The final drawing has no self-crossings and no edge pair
    crossing more than once.
    """
    pairs = [(p.u, p.v) if isinstance(p, VertexPair) else tuple(p) for p in e_star]
    surface = _Surface.from_embedding(emb)
    base = emb.graph.next_edge_id()
    surface.next_seg = base + len(pairs)
    ids = []
    for offset, (pu, pv) in enumerate(pairs):
        eid = base + offset
        current = surface.embedding()
        route = insert_edge(current, pu, pv)
        surface.realize(eid, pu, pv, route, current)
        ids.append(eid)
    surface.uncross()
    return surface.freeze(ids)


def uncross(d: Drawing) -> Drawing:
    """Enforce at-most-one crossing per edge pair and none per edge.

    Returns d itself when it is already clean; otherwise reroutes by
    sub-curve exchange, never increasing the total crossing count.
    """
    surface = _Surface.from_drawing(d)
    if not surface.uncross():
        return d
    return surface.freeze(d.inserted)
