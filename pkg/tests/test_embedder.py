"""Close-embedding machinery: classification, tunnels, flips, irregularity."""

from __future__ import annotations

import random

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from crossplane.decomp import block_decomposition, compute_connectors, spqr
from crossplane.embedder import (
    IrregularityReport,
    Tunnel,
    _flip_block,
    classify_blocks,
    count_irregular,
    find_close_embedding,
    find_tunnels,
    flip_tunnels,
)
from crossplane.graph import (
    Edge,
    Graph,
    articulation_points,
    connectivity,
)
from crossplane.planarity import (
    PlanarEmbedding,
    RotationSystem,
    embed_multigraph,
    test_planarity,
)

import corpus
from corpus import complete, cycle, octahedron, wheel, wheel_tower
from oracles import two_separators_by_oracle


# ---------------------------------------------------------------------------
# fixtures
# ---------------------------------------------------------------------------


def tower_instance(k):
    """Tower component, its 3-connecting supergraph, and classification."""
    x, eid, t = wheel_tower(k)
    g_full = Graph(x.vertices, list(x.edges) + [Edge(eid, t, 0, "original")])
    star = frozenset({eid})
    decomp = block_decomposition(x)
    conn = compute_connectors(g_full, x, decomp, star)
    cls = classify_blocks(x, decomp, conn, star, frozenset())
    return x, g_full, star, decomp, conn, cls, t


def wheel_rim_instance(n):
    """Rim cycle of a wheel; the spokes are the removed edges."""
    w = wheel(n)
    rim = w.without_vertices({0})
    spokes = frozenset(e.id for e in w.edges if 0 in (e.u, e.v))
    decomp = block_decomposition(rim)
    conn = compute_connectors(w, rim, decomp, spokes)
    cls = classify_blocks(rim, decomp, conn, spokes, frozenset())
    return rim, w, spokes, decomp, conn, cls


def cofacial(emb, vertices):
    want = set(vertices)
    rot = emb.rotation
    return any(
        want <= {rot.origin(d) for d in walk} for walk in emb.faces
    )


def tunnel_endpoints(decomp, tunnel):
    vs = set()
    for b in tunnel.blocks:
        vs |= set(decomp.blocks[b].endpoints.as_tuple())
    (kid,) = decomp.children[tunnel.blocks[-1]]
    vs |= set(decomp.blocks[kid].endpoints.as_tuple())
    return vs


def random_rotation(g, rng):
    rot = {}
    for v in g.vertices:
        darts = [2 * e.id for e in g.edges if e.u == v]
        darts += [2 * e.id + 1 for e in g.edges if e.v == v]
        rng.shuffle(darts)
        rot[v] = darts
    return RotationSystem(g, rot)


def mirrored(rot_sys):
    return RotationSystem(
        rot_sys.graph,
        {v: list(reversed(ds)) for v, ds in rot_sys.as_dict().items()},
    )


def check_classification_by_definition(x, decomp, conn, cls):
    """Recompute every charged set straight from its wording."""
    blocks = decomp.blocks
    par, ch = decomp.parent, decomp.children
    n = len(blocks)
    if n == 1:
        assert cls.charged() == frozenset()
        assert cls.r1 == cls.r2 == cls.r3 == frozenset()
        return

    def up(i, hops=5):
        out = []
        while par[i] is not None and len(out) < hops:
            i = par[i]
            out.append(i)
        return out

    core1 = set()
    for i in range(n):
        if par[i] is None or not ch[i]:
            core1.add(i)
            continue
        if len(ch[i]) + 1 > 2:
            core1.add(i)
            continue
        covered = set()
        for c in ch[i]:
            covered |= blocks[c].vertices
        if (blocks[i].vertices - covered) & conn.s_x:
            core1.add(i)
    r1 = set(core1)
    for b in core1:
        r1.update(up(b))
    assert cls.r1 == frozenset(r1)

    def depth(i):
        return 0 if par[i] is None else 1 + depth(par[i])

    deepest = {}
    for i, c in conn.connectors.items():
        j = deepest.get(c.x)
        if j is None or (depth(i), i) > (depth(j), j):
            deepest[c.x] = i
    r2 = set()
    for i in deepest.values():
        r2.add(i)
        r2.update(up(i))
    assert cls.r2 == frozenset(r2)

    r3 = set()
    for i in range(n):
        if i in r1 or i in r2 or par[i] is None:
            continue
        (kid,) = ch[i]
        emb = embed_multigraph(decomp.augmented_skeleton(i))
        assert emb.planar
        four = set(blocks[i].endpoints.as_tuple())
        four |= set(blocks[kid].endpoints.as_tuple())
        if not cofacial(emb, four):
            r3.add(i)
    assert cls.r3 == frozenset(r3)


# ---------------------------------------------------------------------------
# classify_blocks
# ---------------------------------------------------------------------------


class TestClassifyBlocks:
    def test_three_connected_component_all_empty(self):
        k4 = complete(4)
        decomp = block_decomposition(k4)
        assert len(decomp.blocks) == 1
        conn = compute_connectors(k4, k4, decomp, frozenset())
        cls = classify_blocks(k4, decomp, conn, frozenset(), frozenset())
        assert cls.charged() == frozenset()
        assert cls.r1 == cls.r2 == cls.r3 == frozenset()
        assert cls.connector_of == {}

    def test_wheel_rim_every_block_charged(self):
        rim, w, spokes, decomp, conn, cls = wheel_rim_instance(8)
        everything = frozenset(range(len(decomp.blocks)))
        assert cls.r1 == everything
        assert cls.s_x == rim.vertices
        assert find_tunnels(cls, decomp) == []

    def test_tower_shape(self):
        x, g_full, star, decomp, conn, cls, t = tower_instance(16)
        assert len(decomp.blocks) == 16
        assert 0 in cls.r1
        leaves = {i for i in range(16) if not decomp.children[i]}
        assert leaves <= cls.r1
        assert cls.r3 == frozenset()
        assert cls.s_x == frozenset({0, t})
        assert cls.s1 == frozenset()
        assert cls.e1 == frozenset()

    def test_tower_s2_matches_brute_force(self):
        x, _, _, decomp, conn, cls, _ = tower_instance(8)
        brute = set()
        for pair in two_separators_by_oracle(x):
            brute.update(pair)
        assert cls.s2 == frozenset(brute)
        e2 = frozenset(
            e.id for e in x.edges if e.u in cls.s2 and e.v in cls.s2
        )
        assert cls.e2 == e2

    @pytest.mark.parametrize("k", [8, 10, 13, 16])
    def test_definition_recheck_towers(self, k):
        x, _, _, decomp, conn, cls, _ = tower_instance(k)
        check_classification_by_definition(x, decomp, conn, cls)

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_definition_recheck_wheel_rims(self, n):
        rim, w, spokes, decomp, conn, cls = wheel_rim_instance(n)
        check_classification_by_definition(rim, decomp, conn, cls)

    def test_definition_recheck_glued_tower(self):
        h, g_full, star, x = glued_tower()
        decomp = block_decomposition(x)
        conn = compute_connectors(g_full, x, decomp, star)
        cls = classify_blocks(x, decomp, conn, star, articulation_points(h))
        check_classification_by_definition(x, decomp, conn, cls)
        assert cls.s1 == frozenset({0, 30})
        assert cls.e1

    def test_mismatched_decomposition_rejected(self):
        x, _, star, _, conn, _, _ = tower_instance(8)
        other = block_decomposition(wheel_tower(9)[0])
        with pytest.raises(ValueError, match="decomposition"):
            classify_blocks(x, other, conn, star, frozenset())

    def test_mismatched_connectors_rejected(self):
        x, _, star, decomp, _, _, _ = tower_instance(8)
        _, _, _, _, conn9, _, _ = tower_instance(9)
        with pytest.raises(ValueError, match="connector"):
            classify_blocks(x, decomp, conn9, star, frozenset())

    def test_star_edge_inside_component_rejected(self):
        x, _, _, decomp, conn, _, _ = tower_instance(8)
        with pytest.raises(ValueError, match="avoid"):
            classify_blocks(x, decomp, conn, frozenset({0}), frozenset())


# ---------------------------------------------------------------------------
# find_tunnels
# ---------------------------------------------------------------------------


class TestFindTunnels:
    def test_long_chain_yields_one_tunnel(self):
        x, _, _, decomp, _, cls, t = tower_instance(16)
        tunnels = find_tunnels(cls, decomp)
        assert len(tunnels) == 1
        assert tunnels[0].blocks == (1, 2, 3, 4, 5, 6, 7, 8, 9)
        assert tunnels[0].connector == t

    @pytest.mark.parametrize("k", range(8, 18))
    def test_every_tower_has_a_tunnel(self, k):
        x, _, _, decomp, _, cls, t = tower_instance(k)
        tunnels = find_tunnels(cls, decomp)
        assert len(tunnels) == 1
        assert len(tunnels[0].blocks) == k - 7
        assert tunnels[0].connector == t

    def test_tunnel_blocks_are_uncharged_single_child_chain(self):
        x, _, _, decomp, _, cls, _ = tower_instance(14)
        (tunnel,) = find_tunnels(cls, decomp)
        charged = cls.charged()
        assert not set(tunnel.blocks) & charged
        assert decomp.parent[tunnel.blocks[0]] in charged
        for a, b in zip(tunnel.blocks, tunnel.blocks[1:]):
            assert decomp.children[a] == (b,)
        (tail_kid,) = decomp.children[tunnel.blocks[-1]]
        assert tail_kid in charged

    def test_no_tunnels_when_everything_charged(self):
        rim, w, spokes, decomp, conn, cls = wheel_rim_instance(10)
        assert find_tunnels(cls, decomp) == []

    def test_trivial_classification_has_no_tunnels(self):
        k4 = complete(4)
        decomp = block_decomposition(k4)
        conn = compute_connectors(k4, k4, decomp, frozenset())
        cls = classify_blocks(k4, decomp, conn, frozenset(), frozenset())
        assert find_tunnels(cls, decomp) == []


# ---------------------------------------------------------------------------
# flip_tunnels
# ---------------------------------------------------------------------------


class TestFlipTunnels:
    def test_default_embedding_gets_opened(self):
        x, _, _, decomp, _, cls, _ = tower_instance(16)
        (tunnel,) = find_tunnels(cls, decomp)
        want = tunnel_endpoints(decomp, tunnel)
        base = test_planarity(x)
        assert not cofacial(base, want)
        out = flip_tunnels(base, [tunnel], decomp)
        out.verify()
        assert cofacial(out, want)

    def test_mirrored_blocks_restored(self):
        x, _, _, decomp, _, cls, _ = tower_instance(16)
        (tunnel,) = find_tunnels(cls, decomp)
        want = tunnel_endpoints(decomp, tunnel)
        base = test_planarity(x)
        rot = {v: list(ds) for v, ds in base.rotation.as_dict().items()}
        for bid in (3, 5, 7):
            rot = _flip_block(rot, decomp.blocks[bid])
        bad = PlanarEmbedding(RotationSystem(x, rot))
        assert not cofacial(bad, want)
        fixed = flip_tunnels(bad, [tunnel], decomp)
        fixed.verify()
        assert cofacial(fixed, want)

    def test_untouched_vertices_keep_their_rotation(self):
        x, _, _, decomp, _, cls, _ = tower_instance(16)
        (tunnel,) = find_tunnels(cls, decomp)
        base = test_planarity(x)
        out = flip_tunnels(base, [tunnel], decomp)
        flipped_region = set()
        for bid in tunnel.blocks:
            flipped_region |= decomp.blocks[bid].vertices
        for v in x.vertices - flipped_region:
            assert out.rotation.as_dict()[v] == base.rotation.as_dict()[v]

    def test_three_level_tunnel_exposes_eight_endpoints(self):
        x, _, _, decomp, _, cls, _ = tower_instance(10)
        (tunnel,) = find_tunnels(cls, decomp)
        assert len(tunnel.blocks) == 3
        want = tunnel_endpoints(decomp, tunnel)
        assert len(want) == 8
        out = flip_tunnels(test_planarity(x), [tunnel], decomp)
        out.verify()
        assert cofacial(out, want)

    def test_single_nested_block_needs_one_flip(self):
        x, eid, t = wheel_tower(5)
        decomp = block_decomposition(x)
        hand = Tunnel((1, 2), t)
        want = tunnel_endpoints(decomp, hand)
        base = test_planarity(x)
        assert not cofacial(base, want)
        out = flip_tunnels(base, [hand], decomp)
        out.verify()
        assert cofacial(out, want)
        assert out.rotation != base.rotation
        # the one flip is local to the inner block
        inner = decomp.blocks[2].vertices
        for v in x.vertices - inner:
            assert out.rotation.as_dict()[v] == base.rotation.as_dict()[v]

    def test_already_cofacial_tunnel_left_alone(self):
        x, eid, t = wheel_tower(4)
        decomp = block_decomposition(x)
        hand = Tunnel((1,), t)
        base = test_planarity(x)
        out = flip_tunnels(base, [hand], decomp)
        assert out is base

    def test_no_tunnels_is_identity(self):
        x, _, _, decomp, _, _, _ = tower_instance(8)
        base = test_planarity(x)
        assert flip_tunnels(base, [], decomp) is base

    def test_flip_is_idempotent_on_result(self):
        x, _, _, decomp, _, cls, _ = tower_instance(12)
        tunnels = find_tunnels(cls, decomp)
        once = flip_tunnels(test_planarity(x), tunnels, decomp)
        twice = flip_tunnels(once, tunnels, decomp)
        assert twice.rotation == once.rotation

    @pytest.mark.parametrize("k", range(8, 18))
    def test_postcondition_across_towers(self, k):
        x, _, _, decomp, _, cls, _ = tower_instance(k)
        (tunnel,) = find_tunnels(cls, decomp)
        want = tunnel_endpoints(decomp, tunnel)
        base = test_planarity(x)
        mid = tunnel.blocks[len(tunnel.blocks) // 2]
        rot = {v: list(ds) for v, ds in base.rotation.as_dict().items()}
        bad = PlanarEmbedding(RotationSystem(x, _flip_block(rot, decomp.blocks[mid])))
        for start in (base, bad):
            out = flip_tunnels(start, [tunnel], decomp)
            out.verify()
            assert cofacial(out, want)

    def test_mismatched_graph_rejected(self):
        x, _, _, decomp, _, cls, _ = tower_instance(8)
        tunnels = find_tunnels(cls, decomp)
        other = test_planarity(wheel_tower(9)[0])
        with pytest.raises(ValueError, match="match"):
            flip_tunnels(other, tunnels, decomp)


# ---------------------------------------------------------------------------
# find_close_embedding
# ---------------------------------------------------------------------------


def glued_tower():
    """Tower, a triangle at cut vertex 0, and a pendant vertex at the
    terminal; extra edges make the supergraph 3-connected."""
    x, eid, t = wheel_tower(10)
    extra = [
        Edge(eid, 0, 100, "original"),
        Edge(eid + 1, 0, 101, "original"),
        Edge(eid + 2, 100, 101, "original"),
        Edge(eid + 3, t, 102, "original"),
    ]
    h = Graph(sorted(x.vertices | {100, 101, 102}), list(x.edges) + extra)
    star_edges = [
        Edge(eid + 4, t, 0, "original"),
        Edge(eid + 5, 100, 1, "original"),
        Edge(eid + 6, 101, 3, "original"),
        Edge(eid + 7, 102, 1, "original"),
        Edge(eid + 8, 102, 4, "original"),
    ]
    g_full = Graph(h.vertices, list(h.edges) + star_edges)
    star = frozenset(e.id for e in star_edges)
    return h, g_full, star, x


class TestFindCloseEmbedding:
    @pytest.mark.parametrize("g", [complete(4), octahedron()])
    def test_three_connected_returned_as_is(self, g):
        emb = find_close_embedding(g, g, frozenset())
        assert emb.rotation == test_planarity(g).rotation

    def test_tree_returned_unchanged(self):
        tree = Graph.from_pairs([(0, 1), (1, 2), (1, 3), (3, 4)])
        emb = find_close_embedding(tree, tree, frozenset())
        assert emb.rotation == test_planarity(tree).rotation

    def test_tower_tunnel_opened(self):
        x, g_full, star, decomp, _, cls, _ = tower_instance(16)
        (tunnel,) = find_tunnels(cls, decomp)
        want = tunnel_endpoints(decomp, tunnel)
        emb = find_close_embedding(x, g_full, star)
        emb.verify()
        assert cofacial(emb, want)

    def test_glued_components(self):
        h, g_full, star, x = glued_tower()
        assert connectivity(h) == 1
        assert connectivity(g_full) == 3
        emb = find_close_embedding(h, g_full, star)
        emb.verify()
        assert emb.rotation.graph == h
        decomp = block_decomposition(x)
        conn = compute_connectors(g_full, x, decomp, star)
        cls = classify_blocks(x, decomp, conn, star, articulation_points(h))
        for tunnel in find_tunnels(cls, decomp):
            assert cofacial(emb, tunnel_endpoints(decomp, tunnel))

    def test_nonplanar_component_rejected(self):
        k5 = complete(5)
        with pytest.raises(ValueError, match="planar"):
            find_close_embedding(k5, k5, frozenset())


# ---------------------------------------------------------------------------
# count_irregular
# ---------------------------------------------------------------------------


class TestCountIrregular:
    def test_identical_is_zero(self):
        phi = test_planarity(complete(4)).rotation
        report = count_irregular(phi, phi)
        assert (report.vertex_count, report.edge_count) == (0, 0)
        assert report.vertices == () and report.edges == ()

    @pytest.mark.parametrize(
        "g",
        [complete(4), octahedron(), corpus.cube_q3(), corpus.petersen()],
    )
    def test_global_mirror_is_zero(self, g):
        phi = random_rotation(g, random.Random(7))
        report = count_irregular(phi, mirrored(phi))
        assert (report.vertex_count, report.edge_count) == (0, 0)

    def test_transposed_k4_vertex_witness(self):
        k4 = complete(4)
        phi = test_planarity(k4).rotation
        rot = {v: list(ds) for v, ds in phi.as_dict().items()}
        rot[0] = [rot[0][1], rot[0][0], rot[0][2]]
        psi = RotationSystem(k4, rot)
        report = count_irregular(phi, psi)
        assert report.vertices == (0,)
        assert set(report.edges) == {
            e.id for e in k4.edges if 0 in (e.u, e.v)
        }

    def test_majority_orientation_wins(self):
        k4 = complete(4)
        phi = test_planarity(k4).rotation
        rot = {v: list(ds) for v, ds in phi.as_dict().items()}
        for v in (1, 2, 3):
            rot[v] = list(reversed(rot[v]))
        psi = RotationSystem(k4, rot)
        report = count_irregular(phi, psi)
        assert report.vertices == (0,)

    def test_degree_two_chain_edges(self):
        edges = [
            Edge(0, 0, 2, "original"),
            Edge(1, 2, 1, "original"),
            Edge(2, 0, 3, "original"),
            Edge(3, 3, 1, "original"),
            Edge(4, 0, 4, "original"),
            Edge(5, 4, 1, "original"),
        ]
        theta = Graph(range(5), edges)
        rot_a = {0: [0, 4, 8], 1: [3, 11, 7], 2: [1, 2], 3: [5, 6], 4: [9, 10]}
        rot_b = {0: [0, 4, 8], 1: [3, 7, 11], 2: [1, 2], 3: [5, 6], 4: [9, 10]}
        report = count_irregular(
            RotationSystem(theta, rot_a), RotationSystem(theta, rot_b)
        )
        assert report.vertices == (1,)
        assert report.edges == (0, 1, 2, 3, 4, 5)

    def test_cycles_never_irregular(self):
        g = cycle(6)
        rng = random.Random(3)
        a = random_rotation(g, rng)
        b = random_rotation(g, rng)
        report = count_irregular(a, b)
        assert (report.vertex_count, report.edge_count) == (0, 0)

    def test_mismatched_graphs_rejected(self):
        a = test_planarity(complete(4)).rotation
        b = test_planarity(cycle(4)).rotation
        with pytest.raises(ValueError, match="graph"):
            count_irregular(a, b)

    def test_report_json(self):
        phi = test_planarity(complete(4)).rotation
        rot = {v: list(ds) for v, ds in phi.as_dict().items()}
        rot[0] = [rot[0][1], rot[0][0], rot[0][2]]
        report = count_irregular(phi, RotationSystem(complete(4), rot))
        doc = report.to_json_dict()
        assert doc["irregular_vertices"] == [0]
        assert doc["vertex_count"] == 1
        assert doc["edge_count"] == len(doc["irregular_edges"])

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_symmetric(self, data):
        n = data.draw(st.integers(4, 9))
        m = data.draw(st.integers(n - 1, min(2 * n, 14)))
        seed = data.draw(st.integers(0, 10**6))
        rng = random.Random(seed)
        g = corpus.random_connected_graph(rng, n, m)
        a = random_rotation(g, rng)
        b = random_rotation(g, rng)
        r1 = count_irregular(a, b)
        r2 = count_irregular(b, a)
        assert r1.vertices == r2.vertices
        assert r1.edges == r2.edges

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_mirror_invariance_random(self, data):
        n = data.draw(st.integers(4, 9))
        m = data.draw(st.integers(n - 1, min(2 * n, 14)))
        seed = data.draw(st.integers(0, 10**6))
        rng = random.Random(seed)
        g = corpus.random_connected_graph(rng, n, m)
        a = random_rotation(g, rng)
        report = count_irregular(a, mirrored(a))
        assert (report.vertex_count, report.edge_count) == (0, 0)
