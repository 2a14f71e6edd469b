"""Tests for rotation-system embeddings, the growth operations, and the
planar verification pipeline."""

from __future__ import annotations

import pytest

from balgraph import (
    DisconnectedError,
    EmbeddedGraph,
    Graph,
    GraphError,
    NotCubicError,
    a1_subdivision,
    batagelj_enumerate,
    canonical_form,
    cube_seed,
    delete_edge,
    diamond_inflation,
    embedding_from_text,
    embedding_to_text,
    enumerate_cubic_bipartite,
    faces,
    from_edges,
    is_balanced,
    is_bipartite,
    is_connected,
    is_isomorphic,
    planarity_test,
    s_v_subgraph,
    two_cut_decompose,
    verify_sv_claims,
    vertex_connectivity,
)

from helpers import complete_bipartite, cube_graph, cycle_graph, path_graph


def two_cube_chain() -> Graph:
    """Two cubes, each missing one edge, joined by two edges across the gap.

    Cubic, bipartite, planar, and 2-connected but not 3-connected: the
    pair of joining edges is a 2-edge-cut and their endpoints form 2-cuts.
    """
    cube = cube_graph()
    piece = delete_edge(cube, 0, 1)
    edges = list(piece.edges()) + [(u + 8, v + 8) for u, v in piece.edges()]
    edges += [(0, 8), (1, 9)]
    return from_edges(16, edges)


# ---------------------------------------------------------------------------
# Face tracing


def test_cube_seed_faces():
    emb = cube_seed()
    assert emb.graph.n == 8
    assert is_isomorphic(emb.graph, cube_graph())
    fs = emb.faces()
    assert len(fs) == 6
    assert all(f.length == 4 for f in fs)
    # every dart appears in exactly one face
    darts = [d for f in fs for d in f.darts]
    assert len(darts) == 24 and len(set(darts)) == 24


def test_face_walk_accessors():
    emb = cube_seed()
    f = emb.face_at(0, 1)
    assert f.length == 4
    assert (0, 1) in f.darts
    assert len(f.vertices) == 4
    for u, v in f.edges():
        assert u < v and emb.graph.has_edge(u, v)


def test_face_indices_of_edges():
    emb = cube_seed()
    for u, v in emb.graph.edges():
        idx = emb.face_indices_of_edge(u, v)
        assert len(idx) == 2 and idx[0] != idx[1]
    with pytest.raises(GraphError):
        emb.face_indices_of_edge(0, 2)
    with pytest.raises(GraphError):
        emb.face_at(0, 2)


def test_single_edge_has_one_face():
    emb = planarity_test(from_edges(2, [(0, 1)]))
    assert len(emb.faces()) == 1
    assert emb.faces()[0].length == 2
    assert emb.face_indices_of_edge(0, 1) == (0,)


def test_single_vertex_has_one_empty_face():
    emb = planarity_test(from_edges(1, []))
    assert [f.darts for f in emb.faces()] == [()]


def test_tree_edges_bound_one_face_twice():
    emb = planarity_test(path_graph(4))
    assert len(emb.faces()) == 1
    assert emb.faces()[0].length == 6  # both sides of each of the 3 edges


def test_cycle_has_two_faces():
    emb = planarity_test(cycle_graph(4))
    assert sorted(f.length for f in emb.faces()) == [4, 4]


def test_faces_function_matches_method():
    emb = cube_seed()
    assert faces(emb) == emb.faces()


# ---------------------------------------------------------------------------
# EmbeddedGraph validation


def test_rotation_must_match_neighborhoods():
    g = cube_graph()
    rot = [list(g.neighbors(v)) for v in range(8)]
    rot[3] = rot[3][:2] + [0]  # repeats a neighbor, drops one
    with pytest.raises(GraphError):
        EmbeddedGraph(g, tuple(tuple(r) for r in rot))


def test_rotation_row_count_checked():
    g = cube_graph()
    with pytest.raises(GraphError):
        EmbeddedGraph(g, tuple(g.neighbors(v) for v in range(7)))


def test_non_spherical_rotation_rejected():
    emb = cube_seed()
    rot = list(emb.rotation)
    rot[0] = tuple(reversed(rot[0]))  # flips one vertex: genus goes up
    with pytest.raises(GraphError, match="not spherical"):
        EmbeddedGraph(emb.graph, tuple(rot))


def test_disconnected_graph_rejected():
    g = from_edges(4, [(0, 1), (2, 3)])
    rot = tuple(g.neighbors(v) for v in range(4))
    with pytest.raises(DisconnectedError):
        EmbeddedGraph(g, rot)


def test_embedding_is_immutable():
    emb = cube_seed()
    with pytest.raises(AttributeError):
        emb.rotation = ()


# ---------------------------------------------------------------------------
# Serialization


def test_text_round_trip():
    emb = cube_seed()
    again = embedding_from_text(embedding_to_text(emb))
    assert again.graph == emb.graph
    assert again.rotation == emb.rotation


def test_text_parse_errors():
    with pytest.raises(GraphError, match="expected"):
        embedding_from_text("0 1 2\n")
    with pytest.raises(GraphError, match="listed twice"):
        embedding_from_text("0: 1\n0: 1\n1: 0 0\n")
    with pytest.raises(GraphError, match="0..n-1"):
        embedding_from_text("0: 5\n5: 0\n")
    with pytest.raises(GraphError):
        embedding_from_text("0: 1\n1:\n")  # asymmetric adjacency


# ---------------------------------------------------------------------------
# Growth operation: vertex inflation


def test_inflation_shape():
    emb = cube_seed()
    bigger = diamond_inflation(emb, 0)
    g = bigger.graph
    assert g.n == 14
    assert g.is_regular(3)
    assert is_bipartite(g)
    assert vertex_connectivity(g) == 3
    assert len(bigger.faces()) == g.n // 2 + 2  # Euler: F = 3n/2 - n + 2


def test_inflation_is_vertex_independent_on_the_cube():
    emb = cube_seed()
    forms = {canonical_form(diamond_inflation(emb, v).graph) for v in range(8)}
    assert len(forms) == 1  # the cube is vertex-transitive


def test_inflation_composes():
    emb = diamond_inflation(diamond_inflation(cube_seed(), 0), 0)
    assert emb.graph.n == 20
    assert emb.graph.is_regular(3) and is_bipartite(emb.graph)


def test_inflation_rejects_bad_vertices():
    with pytest.raises(GraphError):
        diamond_inflation(cube_seed(), 8)
    emb = planarity_test(cycle_graph(4))
    with pytest.raises(NotCubicError):
        diamond_inflation(emb, 0)


# ---------------------------------------------------------------------------
# Growth operation: double subdivision with crossing


def test_a1_on_opposite_face_edges():
    emb = cube_seed()
    walk = emb.face_at(0, 1)
    a, b, c, d = walk.vertices
    out = a1_subdivision(emb, (a, b), (c, d))
    g = out.graph
    assert g.n == 12
    assert g.is_regular(3) and is_bipartite(g)
    assert vertex_connectivity(g) == 3


def test_a1_error_paths():
    emb = cube_seed()
    walk = emb.face_at(0, 1)
    a, b, c, d = walk.vertices
    with pytest.raises(GraphError, match="share"):
        a1_subdivision(emb, (a, b), (b, c))
    # two edges from different faces that share no face
    other = next(
        e
        for e in emb.graph.edges()
        if not set(emb.face_indices_of_edge(*e)) & set(emb.face_indices_of_edge(a, b))
        and not {a, b} & set(e)
    )
    with pytest.raises(GraphError, match="common face"):
        a1_subdivision(emb, (a, b), other)
    with pytest.raises(GraphError, match="not a common face"):
        a1_subdivision(emb, (a, b), (c, d), face_index=99)


def test_a1_parity_guard():
    emb = planarity_test(cycle_graph(6))
    with pytest.raises(GraphError, match="odd distance"):
        a1_subdivision(emb, (0, 1), (3, 4))
    out = a1_subdivision(emb, (0, 1), (2, 3))
    assert out.graph.n == 10 and is_bipartite(out.graph)


def test_a1_face_choice():
    emb = planarity_test(cycle_graph(6))
    for idx in emb.face_indices_of_edge(0, 1):
        out = a1_subdivision(emb, (0, 1), (2, 3), face_index=idx)
        assert out.graph.n == 10


def test_a1_rejects_edge_bounding_face_twice():
    emb = planarity_test(path_graph(4))
    with pytest.raises(GraphError, match="both sides"):
        a1_subdivision(emb, (0, 1), (2, 3))


# ---------------------------------------------------------------------------
# Closure enumeration


def test_closure_counts_through_sixteen():
    by_n: dict[int, int] = {}
    for emb in batagelj_enumerate(16):
        by_n[emb.graph.n] = by_n.get(emb.graph.n, 0) + 1
    assert by_n == {8: 1, 12: 1, 14: 1, 16: 2}


def test_closure_members_are_certified():
    for emb in batagelj_enumerate(14):
        g = emb.graph
        assert g.is_regular(3)
        assert is_bipartite(g)
        assert vertex_connectivity(g) == 3
        # the EmbeddedGraph invariant already certified sphericity;
        # double-check against the independent planarity test
        assert planarity_test(g) is not None


def test_closure_matches_census_planar_filter():
    closure = {canonical_form(emb.graph) for emb in batagelj_enumerate(14)}
    census = {
        canonical_form(g)
        for d in (8, 10, 12, 14)
        for g in enumerate_cubic_bipartite(d)
        if vertex_connectivity(g) == 3 and planarity_test(g) is not None
    }
    assert closure == census


def test_closure_smallest_member_is_the_cube():
    first = min(batagelj_enumerate(8), key=lambda e: e.graph.n)
    assert is_isomorphic(first.graph, cube_graph())


def test_closure_twelve_vertex_member_comes_from_subdivision():
    emb = cube_seed()
    walk = emb.face_at(0, 1)
    a, b, c, d = walk.vertices
    grown = a1_subdivision(emb, (a, b), (c, d))
    (member,) = (e for e in batagelj_enumerate(12) if e.graph.n == 12)
    assert is_isomorphic(member.graph, grown.graph)


def test_closure_bound_validation():
    with pytest.raises(GraphError):
        list(batagelj_enumerate(1000))


def test_closure_respects_vertex_cap(monkeypatch):
    monkeypatch.setenv("BALGRAPH_MAX_VERTICES", "10")
    with pytest.raises(GraphError):
        list(batagelj_enumerate(12))


# ---------------------------------------------------------------------------
# Witness subgraphs


def test_cube_witness_subgraph():
    emb = cube_seed()
    w = s_v_subgraph(emb, 0)
    assert w.center == 0
    assert len(w.vertices) == 7
    assert len(w.edges) == 9
    assert w.is_induced_in(emb.graph)
    assert not is_balanced(w.graph)
    assert is_connected(w.graph)


def test_witness_errors():
    with pytest.raises(GraphError):
        s_v_subgraph(cube_seed(), 99)
    with pytest.raises(NotCubicError):
        s_v_subgraph(planarity_test(cycle_graph(8)), 0)


def test_sv_claims_on_cube():
    report = verify_sv_claims(cube_seed())
    assert report.ok
    assert report.vertex_count == 8
    assert report.non_induced == ()
    assert report.balanced_centers == ()
    assert report.shared_edges == ()
    assert report.graph_balanced is False
    assert report.balanced_after_deletion == ()


def test_sv_claims_on_inflated_cube():
    report = verify_sv_claims(diamond_inflation(cube_seed(), 3))
    assert report.ok and report.vertex_count == 14


def test_sv_claims_preconditions():
    with pytest.raises(NotCubicError):
        verify_sv_claims(planarity_test(cycle_graph(4)))
    k4 = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(GraphError, match="bipartite"):
        verify_sv_claims(planarity_test(k4))
    with pytest.raises(GraphError, match="3-connected"):
        verify_sv_claims(planarity_test(two_cube_chain()))


# ---------------------------------------------------------------------------
# Planarity testing


def test_planarity_positive_and_negative():
    assert planarity_test(complete_bipartite(3, 3)) is None
    k5 = from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert planarity_test(k5) is None
    emb = planarity_test(cube_graph())
    assert emb is not None and len(emb.faces()) == 6


def test_planarity_errors():
    with pytest.raises(DisconnectedError):
        planarity_test(from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        planarity_test(from_edges(0, []))


def test_planarity_respects_vertex_cap(monkeypatch):
    monkeypatch.setenv("BALGRAPH_MAX_VERTICES", "6")
    with pytest.raises(GraphError):
        planarity_test(cube_graph())


# ---------------------------------------------------------------------------
# Decomposition at connectivity two


def test_two_cut_decomposition_of_chained_cubes():
    g = two_cube_chain()
    assert vertex_connectivity(g) == 2
    dec = two_cut_decompose(g)
    assert dec is not None
    assert is_isomorphic(dec.completed, cube_graph())
    assert dec.completed.is_regular(3)
    assert vertex_connectivity(dec.completed) == 3
    # the bridge endpoints live in the component, not in the cut
    assert set(dec.bridge) <= set(dec.component)
    assert not set(dec.cut) & set(dec.component)
    assert dec.embedding.graph == dec.completed


def test_two_cut_decompose_not_applicable():
    assert two_cut_decompose(cube_graph()) is None  # 3-connected


def test_two_cut_decompose_preconditions():
    with pytest.raises(NotCubicError):
        two_cut_decompose(cycle_graph(6))
    k4 = from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(GraphError, match="bipartite"):
        two_cut_decompose(k4)


def test_two_cut_decompose_rejects_non_planar():
    # two copies of K33 minus an edge, joined crosswise: cubic, bipartite,
    # connectivity two, but still contains a K33 subdivision
    k33 = complete_bipartite(3, 3)
    piece = delete_edge(k33, 0, 3)
    edges = list(piece.edges()) + [(u + 6, v + 6) for u, v in piece.edges()]
    edges += [(0, 9), (3, 6)]
    g = from_edges(12, edges)
    assert g.is_regular(3) and is_bipartite(g)
    assert vertex_connectivity(g) == 2
    with pytest.raises(GraphError, match="planar"):
        two_cut_decompose(g)
