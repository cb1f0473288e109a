"""Edge insertion, crossing realization, and curve uncrossing."""

from __future__ import annotations

import random

import pytest

from crossplane.graph import DUMMY_SEGMENT, Edge, Graph, VertexPair
from crossplane.inserter import (
    Drawing,
    InsertionRoute,
    _Surface,
    insert_all,
    insert_edge,
    uncross,
)
from crossplane.planarity import (
    EmbeddingError,
    PlanarEmbedding,
    RotationSystem,
    embed_multigraph,
    test_planarity,
)

from corpus import (
    complete,
    complete_bipartite,
    cycle,
    octahedron,
    random_connected_graph,
    wheel,
)
from oracles import exhaustive_dual_cost

ANTIPODAL = [(0, 3), (1, 4), (2, 5)]  # the non-edges of the octahedron


def embed(g: Graph) -> PlanarEmbedding:
    res = test_planarity(g)
    assert res.planar
    return res


def minus_one_edge(g: Graph) -> tuple[PlanarEmbedding, int, int]:
    """Embedding of g without its first edge, plus that edge's ends."""
    e = g.edges[0]
    return embed(g.without_edges((e.id,))), e.u, e.v


def random_planar_embeddings(
    count: int, seed: int, max_faces: int = 12
) -> list[PlanarEmbedding]:
    rng = random.Random(seed)
    out: list[PlanarEmbedding] = []
    while len(out) < count:
        n = rng.randint(4, 10)
        m = rng.randint(n - 1, min(2 * n, n * (n - 1) // 2))
        res = embed_multigraph(random_connected_graph(rng, n, m))
        if res.planar and len(res.faces) <= max_faces:
            out.append(res)
    return out


# ---------------------------------------------------------------------------
# routing
# ---------------------------------------------------------------------------


class TestInsertEdge:
    def test_cofacial_costs_nothing(self):
        emb = embed(cycle(4))
        route = insert_edge(emb, 0, 2)
        assert route.cost == 0
        assert route.crossed == ()
        assert len(route.faces) == 1

    def test_parallel_to_existing_edge(self):
        route = insert_edge(embed(cycle(3)), 0, 1)
        assert route.cost == 0

    def test_k5_missing_edge_costs_one(self):
        emb, u, v = minus_one_edge(complete(5))
        route = insert_edge(emb, u, v)
        assert route.cost == 1

    def test_k33_missing_edge_costs_one(self):
        emb, u, v = minus_one_edge(complete_bipartite(3, 3))
        assert insert_edge(emb, u, v).cost == 1

    def test_octahedron_antipodal_costs_one(self):
        emb = embed(octahedron())
        for u, v in ANTIPODAL:
            assert insert_edge(emb, u, v).cost == 1

    def test_faces_bracket_crossings(self):
        emb, u, v = minus_one_edge(complete(5))
        route = insert_edge(emb, u, v)
        assert len(route.faces) == len(route.crossed) + 1
        for k, eid in enumerate(route.crossed):
            assert set(emb.faces_of_edge(eid)) == {
                route.faces[k],
                route.faces[k + 1],
            }

    def test_loop_rejected(self):
        with pytest.raises(ValueError, match="loop"):
            insert_edge(embed(cycle(3)), 1, 1)

    def test_unknown_endpoint_rejected(self):
        with pytest.raises(ValueError, match="missing"):
            insert_edge(embed(cycle(3)), 0, 77)

    def test_cost_zero_iff_cofacial(self):
        for emb in random_planar_embeddings(15, seed=0xF1):
            rot = emb.rotation
            face_sets = {
                v: {emb.face_of(d) for d in rot.darts_at(v)}
                for v in emb.graph.vertices
            }
            vs = sorted(emb.graph.vertices)
            for u in vs:
                for v in vs:
                    if u >= v:
                        continue
                    route = insert_edge(emb, u, v)
                    cofacial = bool(face_sets[u] & face_sets[v])
                    assert (route.cost == 0) == cofacial

    def test_cost_matches_exhaustive_enumeration(self):
        """Routing cost equals brute-force dual path search."""
        embeddings = random_planar_embeddings(55, seed=0xE4, max_faces=12)
        rng = random.Random(0xE5)
        checked = 0
        for emb in embeddings:
            vs = sorted(emb.graph.vertices)
            for _ in range(3):
                u, v = rng.sample(vs, 2)
                assert insert_edge(emb, u, v).cost == exhaustive_dual_cost(
                    emb, u, v
                )
                checked += 1
        assert checked >= 150

    def test_deterministic(self):
        emb = embed(octahedron())
        assert insert_edge(emb, 0, 3) == insert_edge(emb, 0, 3)


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


class TestInsertAll:
    def test_nothing_to_insert(self):
        emb = embed(cycle(4))
        d = insert_all(emb, [])
        assert d.crossing_count() == 0
        assert d.inserted == ()
        assert d.verify()

    def test_k5_single_crossing(self):
        emb, u, v = minus_one_edge(complete(5))
        d = insert_all(emb, [(u, v)])
        assert d.crossing_count() == 1
        assert d.verify()

    def test_k33_single_crossing(self):
        emb, u, v = minus_one_edge(complete_bipartite(3, 3))
        d = insert_all(emb, [(u, v)])
        assert d.crossing_count() == 1
        assert d.verify()

    def test_k6_from_octahedron(self):
        # the three antipodal chords turn K_{2,2,2} into K6; cr(K6) = 3
        d = insert_all(embed(octahedron()), ANTIPODAL)
        assert d.crossing_count() == 3
        assert d.verify()
        assert all(m == 1 for m in d.pair_multiplicities().values())

    def test_incremental_counts(self):
        emb = embed(octahedron())
        counts = [
            insert_all(emb, ANTIPODAL[:k]).crossing_count() for k in (1, 2, 3)
        ]
        assert counts == [1, 2, 3]

    def test_hexagon_diagonals(self):
        # C6 plus all three long diagonals is K3,3; one crossing suffices
        d = insert_all(embed(cycle(6)), [(0, 3), (1, 4), (2, 5)])
        assert d.crossing_count() == 1
        assert d.verify()

    def test_hexagon_short_chords_stay_planar(self):
        d = insert_all(embed(cycle(6)), [(0, 2), (2, 4), (4, 0)])
        assert d.crossing_count() == 0
        assert d.verify()

    def test_ids_endpoints_and_paths(self):
        emb = embed(octahedron())
        base = emb.graph.next_edge_id()
        d = insert_all(emb, ANTIPODAL)
        assert d.inserted == (base, base + 1, base + 2)
        rot = d.skeleton.rotation
        for eid, (u, v) in zip(d.inserted, ANTIPODAL):
            assert d.edge_endpoints[eid] == (u, v)
            path = d.edge_paths[eid]
            assert rot.origin(path[0]) == u
            assert rot.head(path[-1]) == v

    def test_vertex_pair_inputs(self):
        emb = embed(octahedron())
        d = insert_all(emb, [VertexPair(3, 0)])
        assert d.crossing_count() == 1
        assert d.edge_endpoints[d.inserted[0]] == (0, 3)

    def test_component_merge(self):
        two = Graph.from_pairs(
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
        )
        d = insert_all(embed(two), [(0, 3)])
        assert d.crossing_count() == 0
        assert d.verify()
        assert d.skeleton.graph.is_connected()

    def test_isolated_endpoint(self):
        g = Graph(range(4), Graph.from_pairs([(0, 1), (1, 2), (2, 0)]).edges)
        d = insert_all(embed(g), [(0, 3)])
        assert d.crossing_count() == 0
        assert d.verify()

    def test_parallel_insertion(self):
        d = insert_all(embed(cycle(3)), [(0, 1)])
        assert d.crossing_count() == 0
        assert d.verify()
        assert len(d.skeleton.graph.edges) == 4

    def test_random_corpus_always_verifies(self):
        rng = random.Random(0xAB)
        done = 0
        for emb in random_planar_embeddings(30, seed=0xAC, max_faces=14):
            vs = sorted(emb.graph.vertices)
            present = {
                frozenset((e.u, e.v)) for e in emb.graph.edges
            }
            absent = [
                (u, v)
                for i, u in enumerate(vs)
                for v in vs[i + 1 :]
                if frozenset((u, v)) not in present
            ]
            if not absent:
                continue
            k = min(len(absent), rng.randint(1, 3))
            d = insert_all(emb, rng.sample(absent, k))
            assert d.verify()
            for (ea, eb), mult in d.pair_multiplicities().items():
                assert ea != eb
                assert mult == 1
            done += 1
        assert done >= 25


# ---------------------------------------------------------------------------
# uncrossing
# ---------------------------------------------------------------------------


def double_crossing_fixture() -> Drawing:
    """Three chords of a square routed so one pair crosses twice.

    X = (0, 2) splits the inner face; Z = (1, 3) crosses X once; Y is a
    second (1, 3) chord forced the long way around, crossing both X
    segments, one Z segment, and a square edge: five crossings total,
    with the pair (X, Y) crossing twice.
    """
    emb = test_planarity(cycle(4))
    s = _Surface.from_embedding(emb)
    s.next_seg = 103

    def face_by_vertices(e, want):
        (f,) = [
            i
            for i, walk in enumerate(e.faces)
            if {e.rotation.origin(d) for d in walk} == want
        ]
        return f

    e0 = s.embedding()
    s.realize(100, 0, 2, InsertionRoute(0, 2, (), (0,)), e0)
    e1 = s.embedding()
    inner = face_by_vertices(e1, {0, 1, 2})
    other = face_by_vertices(e1, {0, 2, 3})
    s.realize(101, 1, 3, InsertionRoute(1, 3, (100,), (inner, other)), e1)
    e2 = s.embedding()
    w = 4  # the X/Z crossing made by the realize above
    s1 = s.chain[100][0] >> 1
    s2 = s.chain[100][1] >> 1
    z2 = s.chain[101][1] >> 1
    fa = face_by_vertices(e2, {0, 1, w})
    fd = face_by_vertices(e2, {0, 3, w})
    fc = face_by_vertices(e2, {2, 3, w})
    fb = face_by_vertices(e2, {1, 2, w})
    outer = face_by_vertices(e2, {0, 1, 2, 3})
    s.realize(
        102,
        1,
        3,
        InsertionRoute(1, 3, (s1, z2, s2, 1), (fa, fd, fc, fb, outer)),
        e2,
    )
    return s.freeze((100, 101, 102))


def self_crossing_fixture() -> Drawing:
    """An edge routed through its own loop, pierced twice by another.

    Edge 10 runs 0 -> w -> x1 -> x2 -> w -> 1 (self-crossing at w);
    edge 11 runs 2 -> x1 -> x2 -> 3 through the loop's interior.
    """
    segs = {
        20: (0, 4),
        21: (4, 5),
        22: (5, 6),
        23: (6, 4),
        24: (4, 1),
        25: (2, 5),
        26: (5, 6),
        27: (6, 3),
    }
    g = Graph(
        range(7),
        [Edge(s, a, b, DUMMY_SEGMENT) for s, (a, b) in segs.items()],
    )
    rot = {
        0: [40],
        1: [49],
        2: [50],
        3: [55],
        4: [42, 47, 41, 48],
        5: [43, 51, 44, 52],
        6: [45, 54, 46, 53],
    }
    return Drawing(
        skeleton=PlanarEmbedding(RotationSystem(g, rot)),
        edge_paths={10: (40, 42, 44, 46, 48), 11: (50, 52, 54)},
        crossings={4: (10, 10, 0, 3), 5: (10, 11, 1, 0), 6: (10, 11, 2, 1)},
        inserted=(10, 11),
        edge_endpoints={10: (0, 1), 11: (2, 3)},
    )


class TestUncross:
    def test_clean_drawing_is_returned_unchanged(self):
        emb, u, v = minus_one_edge(complete(5))
        d = insert_all(emb, [(u, v)])
        assert uncross(d) is d

    def test_double_crossing_pair_is_exchanged(self):
        d = double_crossing_fixture()
        assert d.verify()
        assert d.crossing_count() == 5
        assert d.pair_multiplicities()[(100, 102)] == 2
        u = uncross(d)
        assert u.verify()
        assert u.crossing_count() <= 3
        assert all(m == 1 for m in u.pair_multiplicities().values())
        assert all(ea != eb for ea, eb in u.pair_multiplicities())
        assert uncross(u) is u

    def test_self_crossing_is_shortcut(self):
        d = self_crossing_fixture()
        assert d.verify()
        assert d.crossing_count() == 3
        assert d.pair_multiplicities() == {(10, 10): 1, (10, 11): 2}
        u = uncross(d)
        assert u.verify()
        assert u.crossing_count() == 0
        assert u.pair_multiplicities() == {}
        # both curves straighten into single segments
        assert len(u.edge_paths[10]) == 1
        assert len(u.edge_paths[11]) == 1

    def test_never_increases_crossings(self):
        for fixture in (double_crossing_fixture, self_crossing_fixture):
            d = fixture()
            assert uncross(d).crossing_count() <= d.crossing_count()


# ---------------------------------------------------------------------------
# drawing invariants
# ---------------------------------------------------------------------------


class TestDrawingVerify:
    def test_tampered_crossing_record_fails(self):
        emb, u, v = minus_one_edge(complete(5))
        d = insert_all(emb, [(u, v)])
        assert d.verify()
        broken = Drawing(
            skeleton=d.skeleton,
            edge_paths=d.edge_paths,
            crossings={},
            inserted=d.inserted,
            edge_endpoints=d.edge_endpoints,
        )
        assert not broken.verify()

    def test_tampered_endpoints_fail(self):
        emb, u, v = minus_one_edge(complete(5))
        d = insert_all(emb, [(u, v)])
        wrong = dict(d.edge_endpoints)
        k = d.inserted[0]
        wrong[k] = (wrong[k][1], wrong[k][0])
        broken = Drawing(
            skeleton=d.skeleton,
            edge_paths=d.edge_paths,
            crossings=d.crossings,
            inserted=d.inserted,
            edge_endpoints=wrong,
        )
        assert not broken.verify()

    def test_dropped_path_fails(self):
        emb, u, v = minus_one_edge(complete(5))
        d = insert_all(emb, [(u, v)])
        trimmed = {
            eid: p for eid, p in d.edge_paths.items() if eid != d.inserted[0]
        }
        broken = Drawing(
            skeleton=d.skeleton,
            edge_paths=trimmed,
            crossings=d.crossings,
            inserted=d.inserted,
            edge_endpoints=d.edge_endpoints,
        )
        assert not broken.verify()
