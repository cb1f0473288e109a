"""Embedding selection for planarized components.

A 2-connected graph with 2-separators has many planar embeddings, and
most of the freedom is harmless. What is not harmless is a long chain
of nested blocks whose attachment vertices end up buried: a curve
routed past such a chain would have to pay for every level. This
module classifies the blocks of a laminar decomposition into sets
whose placement is already paid for (r1, r2, r3), extracts the
remaining single-child chains (tunnels), and mirrors block
sub-embeddings until every tunnel exposes all of its endpoint
vertices on one face.

Also here: the irregularity metric between two rotation systems of
the same graph. It counts vertices whose cyclic edge order differs
(up to reflection) and degree-2 chains whose endpoint orientations
disagree, which together measure how far apart two drawings are
locally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

from .decomp import (
    Block,
    BlockDecomposition,
    ConnectorInfo,
    block_decomposition,
    compute_connectors,
    spqr,
)
from .graph import Graph, articulation_points, biconnected_components, connectivity
from .planarity import (
    EmbeddingError,
    PlanarEmbedding,
    RotationSystem,
    edge_of_dart,
    embed_multigraph,
    test_planarity,
)


# ---------------------------------------------------------------------------
# block classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockClassification:
    """Charged block sets of one 2-connected component.

    r1      root, leaves, branching blocks, and blocks owning an s_x
            vertex that no child contains, each with five ancestors
    r2      per connector vertex, the innermost block using it, with
            five ancestors
    r3      single-child blocks whose own and child endpoints are not
            co-facial in the unique embedding of the contracted,
            augmented skeleton
    s_x     component vertices incident to removed edges or to edges
            leaving the component
    s1      cut vertices of the ambient graph lying in the component
    s2      vertices of some 2-separator of the component, minus s1
    e1, e2  component edges incident to s1 / with both ends in s2
    """

    component: Graph
    r1: frozenset[int]
    r2: frozenset[int]
    r3: frozenset[int]
    s_x: frozenset[int]
    s1: frozenset[int]
    s2: frozenset[int]
    e1: frozenset[int]
    e2: frozenset[int]
    connector_of: Mapping[int, int]

    def charged(self) -> frozenset[int]:
        return self.r1 | self.r2 | self.r3


def _face_vertex_sets(emb: PlanarEmbedding) -> list[frozenset[int]]:
    rot = emb.rotation
    return [frozenset(rot.origin(d) for d in walk) for walk in emb.faces]


def _face_containing(emb: PlanarEmbedding, wanted: Iterable[int]) -> Optional[int]:
    want = frozenset(wanted)
    for i, vs in enumerate(_face_vertex_sets(emb)):
        if want <= vs:
            return i
    return None


def classify_blocks(
    component: Graph,
    decomp: BlockDecomposition,
    connectors: ConnectorInfo,
    e_star: Iterable[int],
    s1: Iterable[int],
) -> BlockClassification:
    """Partition the decomposition's blocks into the charged sets.

    Blocks outside charged() all have exactly one child and form the
    disjoint chains that find_tunnels extracts. A 3-connected
    component (decomposition with only the root block) yields the
    empty classification.
    """
    if decomp.graph != component:
        raise ValueError("decomposition does not match the component")
    if connectors.component != component:
        raise ValueError("connector info does not match the component")
    star = frozenset(e_star)
    if star & set(component.edge_ids()):
        raise ValueError("component contains edges it is supposed to avoid")

    s1x = frozenset(s1) & component.vertices
    e1 = frozenset(e.id for e in component.edges if e.u in s1x or e.v in s1x)
    s_x = connectors.s_x
    connector_of = {i: c.x for i, c in connectors.connectors.items()}
    blocks = decomp.blocks
    if len(blocks) == 1:
        return BlockClassification(
            component,
            frozenset(),
            frozenset(),
            frozenset(),
            s_x,
            s1x,
            frozenset(),
            e1,
            frozenset(),
            {},
        )

    tree = decomp.spqr_tree if decomp.spqr_tree is not None else spqr(component)
    sep_vertices: set[int] = set()
    for pair in tree.derived_two_separators():
        sep_vertices.update(pair.as_tuple())
    s2 = frozenset(sep_vertices) - s1x
    e2 = frozenset(e.id for e in component.edges if e.u in s2 and e.v in s2)

    parent = decomp.parent
    children = decomp.children

    def with_ancestors(core: set[int]) -> frozenset[int]:
        out = set(core)
        for b in core:
            p = parent[b]
            for _ in range(5):
                if p is None:
                    break
                out.add(p)
                p = parent[p]
        return frozenset(out)

    core1: set[int] = set()
    for i, b in enumerate(blocks):
        degree = len(children[i]) + (0 if parent[i] is None else 1)
        if parent[i] is None or not children[i] or degree > 2:
            core1.add(i)
            continue
        in_children: set[int] = set()
        for c in children[i]:
            in_children |= blocks[c].vertices
        if any(v in s_x for v in b.vertices - in_children):
            core1.add(i)
    r1 = with_ancestors(core1)

    def depth(i: int) -> int:
        d = 0
        p = parent[i]
        while p is not None:
            d += 1
            p = parent[p]
        return d

    by_connector: dict[int, list[int]] = {}
    for i, x in connector_of.items():
        by_connector.setdefault(x, []).append(i)
    core2 = {
        max(ids, key=lambda i: (depth(i), i))
        for _, ids in sorted(by_connector.items())
    }
    r2 = with_ancestors(core2)

    r3: set[int] = set()
    for i in range(1, len(blocks)):
        if i in r1 or i in r2:
            continue
        if len(children[i]) != 1:
            raise ValueError(f"uncharged block {i} does not have a single child")
        (kid,) = children[i]
        res = embed_multigraph(decomp.augmented_skeleton(i))
        if not res.planar:
            raise ValueError(f"augmented skeleton of block {i} is not planar")
        four = set(blocks[i].endpoints.as_tuple())
        four |= set(blocks[kid].endpoints.as_tuple())
        if _face_containing(res, four) is None:
            r3.add(i)

    return BlockClassification(
        component,
        r1,
        r2,
        frozenset(r3),
        s_x,
        s1x,
        s2,
        e1,
        e2,
        dict(connector_of),
    )


# ---------------------------------------------------------------------------
# tunnels
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Tunnel:
    """Maximal chain of nested uncharged blocks, outermost first."""

    blocks: tuple[int, ...]
    connector: int


def find_tunnels(
    cls: BlockClassification, decomp: BlockDecomposition
) -> list[Tunnel]:
    """Chains of blocks outside cls.charged(), as disjoint tree paths."""
    if len(decomp.blocks) == 1:
        return []
    charged = cls.charged()
    free = {i for i in range(len(decomp.blocks)) if i not in charged}
    tunnels: list[Tunnel] = []
    for i in sorted(free):
        if decomp.parent[i] in free:
            continue
        chain = [i]
        (kid,) = decomp.children[i]
        while kid in free:
            chain.append(kid)
            (kid,) = decomp.children[kid]
        xs = {cls.connector_of[b] for b in chain}
        if len(xs) != 1:
            raise ValueError("tunnel blocks disagree on their connector vertex")
        tunnels.append(Tunnel(tuple(chain), xs.pop()))
    return tunnels


# ---------------------------------------------------------------------------
# flipping
# ---------------------------------------------------------------------------


def _normalized_run(seq: list[int], member) -> tuple[list[int], int]:
    """Rotate a rotation list so the member darts form a leading run."""
    n = len(seq)
    k = sum(1 for d in seq if member(d))
    if k == 0 or k == n:
        return list(seq), k
    starts = [
        i
        for i in range(n)
        if member(seq[i]) and not member(seq[(i - 1) % n])
    ]
    if len(starts) != 1:
        raise EmbeddingError("block darts do not form one interval at the attachment")
    s = starts[0]
    return seq[s:] + seq[:s], k


def _flip_block(rot: dict[int, list[int]], block: Block) -> dict[int, list[int]]:
    """Mirror one block: reverse its attachment intervals and every
    rotation strictly inside; the rest of the embedding is untouched."""
    u, v = block.endpoints.as_tuple()

    def member(d: int) -> bool:
        return edge_of_dart(d) in block.edge_ids

    out = dict(rot)
    for p in (u, v):
        run, k = _normalized_run(rot[p], member)
        out[p] = run[k - 1 :: -1] + run[k:]
    for w in block.inner_vertices():
        out[w] = list(reversed(rot[w]))
    return out


def _relocate_edge(
    rot: dict[int, list[int]], block: Block, edge, side: str
) -> dict[int, list[int]]:
    """Move an endpoint-to-endpoint edge to the far side of the block."""

    def member(d: int) -> bool:
        return edge_of_dart(d) in block.edge_ids

    out = dict(rot)
    for p, dart in ((edge.u, 2 * edge.id), (edge.v, 2 * edge.id + 1)):
        seq = [d for d in rot[p] if d != dart]
        run, k = _normalized_run(seq, member)
        if side == "after":
            out[p] = run[:k] + [dart] + run[k:]
        else:
            out[p] = run + [dart]
    return out


def _flip_candidates(
    rot: dict[int, list[int]], block: Block, g: Graph
) -> Iterator[dict[int, list[int]]]:
    u, v = block.endpoints.as_tuple()
    flipped = _flip_block(rot, block)
    yield flipped
    parallels = [
        e
        for e in g.edges
        if e.id not in block.edge_ids and {e.u, e.v} == {u, v}
    ]
    for e in sorted(parallels, key=lambda e: e.id):
        for base in (rot, flipped):
            for side in ("before", "after"):
                yield _relocate_edge(base, block, e, side)


def flip_tunnels(
    psi: PlanarEmbedding,
    tunnels: list[Tunnel],
    decomp: BlockDecomposition,
) -> PlanarEmbedding:
    """Re-embed so every tunnel's endpoint vertices share one face.

    Walks each tunnel outside in. At each level the child's endpoints
    must join the face that already holds all outer endpoint pairs;
    when they do not, the level is mirrored, or an endpoint edge is
    carried across it, whichever first yields a certified planar
    embedding passing the face test. Rotations outside the flipped
    blocks are preserved.
    """
    g = psi.rotation.graph
    if g != decomp.graph:
        raise ValueError("embedding does not match the decomposition")
    rot = {v: list(ds) for v, ds in psi.rotation.as_dict().items()}
    emb = psi
    for tunnel in tunnels:
        prefix: set[int] = set()
        chain = tunnel.blocks
        for pos, bid in enumerate(chain):
            block = decomp.blocks[bid]
            prefix |= set(block.endpoints.as_tuple())
            if pos + 1 < len(chain):
                child = chain[pos + 1]
            else:
                (child,) = decomp.children[bid]
            want = prefix | set(decomp.blocks[child].endpoints.as_tuple())
            if _face_containing(emb, want) is not None:
                continue
            for cand in _flip_candidates(rot, block, g):
                try:
                    cand_emb = PlanarEmbedding(RotationSystem(g, cand))
                except EmbeddingError:
                    continue
                if _face_containing(cand_emb, want) is not None:
                    rot, emb = cand, cand_emb
                    break
            else:
                raise ValueError(
                    f"no flip exposes the endpoints of block {child} "
                    f"inside block {bid}"
                )
    return emb


# ---------------------------------------------------------------------------
# the full per-component pipeline
# ---------------------------------------------------------------------------


def find_close_embedding(
    h_component: Graph, g_full: Graph, e_star: Iterable[int]
) -> PlanarEmbedding:
    """Planar embedding of one remainder component with tunnels opened.

    Starts from an arbitrary embedding. Each 2-connected piece that is
    not 3-connected is decomposed, classified, and tunnel-flipped
    independently; the pieces are then glued back at the cut vertices.
    A 3-connected component is returned as is, since its embedding is
    unique up to reflection.
    """
    res = test_planarity(h_component)
    if not res.planar:
        raise ValueError("component is not planar")
    if connectivity(h_component) >= 3:
        return res
    star = frozenset(e_star)
    s1 = articulation_points(h_component)

    changed = False
    piece_embs: list[PlanarEmbedding] = []
    for piece, _cuts in biconnected_components(h_component):
        if piece.num_vertices() < 3 or connectivity(piece) >= 3:
            piece_embs.append(test_planarity(piece))
            continue
        decomp = block_decomposition(piece)
        connectors = compute_connectors(g_full, piece, decomp, star)
        cls = classify_blocks(piece, decomp, connectors, star, s1)
        tunnels = find_tunnels(cls, decomp)
        base = test_planarity(piece)
        flipped = flip_tunnels(base, tunnels, decomp)
        if flipped.rotation != base.rotation:
            changed = True
        piece_embs.append(flipped)

    if not changed:
        return res
    rot: dict[int, list[int]] = {v: [] for v in h_component.vertices}
    for emb in piece_embs:
        for v, darts in emb.rotation.as_dict().items():
            rot[v].extend(darts)
    return PlanarEmbedding(RotationSystem(h_component, rot))


# ---------------------------------------------------------------------------
# irregularity metric
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IrregularityReport:
    """Vertices and edges at which two rotation systems disagree."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_json_dict(self) -> dict:
        return {
            "irregular_vertices": list(self.vertices),
            "irregular_edges": list(self.edges),
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
        }


def _cyclic_equal(a: list[int], b: list[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = a + a
    n = len(a)
    return any(doubled[i : i + n] == b for i in range(n))


def _degree_two_chains(g: Graph) -> list[tuple[int, int, int, int]]:
    """Maximal paths whose interior is all degree-2 vertices.

    Yields (first edge id, last edge id, endpoint x, endpoint y) for
    every chain with both endpoints of degree 3 or more; an edge
    joining two such vertices is a chain of length one.
    """
    deg = {v: g.degree(v) for v in g.vertices}
    adj = g.adjacency()
    seen: set[tuple[int, int]] = set()
    out: list[tuple[int, int, int, int]] = []
    for x in sorted(g.vertices):
        if deg[x] < 3:
            continue
        for start in sorted(adj[x], key=lambda e: e.id):
            came = start
            cur = start.other(x)
            while deg[cur] == 2:
                came = next(ee for ee in adj[cur] if ee.id != came.id)
                cur = came.other(cur)
            if deg[cur] < 3:
                continue
            key = (min(start.id, came.id), max(start.id, came.id))
            if key in seen:
                continue
            seen.add(key)
            out.append((start.id, came.id, x, cur))
    return out


def count_irregular(
    phi: RotationSystem, psi: RotationSystem
) -> IrregularityReport:
    """Where two rotation systems of one graph disagree.

    Each vertex of degree 3 or more either keeps its cyclic edge
    order (orientation +1), keeps it only mirrored (-1), or matches
    neither way. The dominant orientation is the sign shared by most
    vertices; a vertex is irregular when it matches neither way or
    disagrees with the dominant sign, so a whole-graph mirror scores
    (0, 0) while one reflected vertex among direct ones is charged.

    A degree-2 chain is irregular when both endpoints have a defined
    orientation and the signs differ; its first and last edges are
    reported.
    """
    if phi.graph != psi.graph:
        raise ValueError("rotation systems describe different graphs")
    g = phi.graph

    orient: dict[int, int] = {}
    unmatched: list[int] = []
    for v in sorted(g.vertices):
        if g.degree(v) <= 2:
            continue
        a = [edge_of_dart(d) for d in phi.darts_at(v)]
        b = [edge_of_dart(d) for d in psi.darts_at(v)]
        if _cyclic_equal(a, b):
            orient[v] = 1
        elif _cyclic_equal(a, list(reversed(b))):
            orient[v] = -1
        else:
            unmatched.append(v)

    mirrored = sum(1 for s in orient.values() if s < 0)
    direct = len(orient) - mirrored
    dominant = -1 if mirrored > direct else 1
    irregular_v = sorted(
        unmatched + [v for v, s in orient.items() if s != dominant]
    )

    irregular_e: set[int] = set()
    for first, last, x, y in _degree_two_chains(g):
        if x == y:
            continue
        if x in orient and y in orient and orient[x] != orient[y]:
            irregular_e.add(first)
            irregular_e.add(last)

    return IrregularityReport(tuple(irregular_v), tuple(sorted(irregular_e)))
