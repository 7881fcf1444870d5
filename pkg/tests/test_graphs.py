import pytest

import oracles
from strandhopf import fixtures, iso
from strandhopf.graphs import (GraphError, OneGraph, TwoGraph, boundary,
                               boundary_components, connected_components,
                               disjoint_union, euler_characteristic, faces,
                               from_combinatorial_map, internal_face_count,
                               is_bridgeless, is_connected, residue, skeleton,
                               subgraph_with_edges, to_complex, validate,
                               vertex_graph, vertex_graphs_multiset)

CORPUS = fixtures.all_fixtures()


def test_corpus_validates():
    for name, g in CORPUS.items():
        rep = validate(g)
        assert rep.valid, (name, rep.violations)


def test_make_rejects_edge_without_strand_pairing():
    # half-edges a and b form an edge, yet their sections stay fixed
    with pytest.raises(GraphError):
        TwoGraph.make(["v"], ["a", "b"], ["a.1", "b.1"],
                      {"a": "v", "b": "v"},
                      {"a.1": "a", "b.1": "b"},
                      iota_pairs=[("a", "b")],
                      sigma1_pairs=[("a.1", "b.1")],
                      sigma2_pairs=[])


def test_sigma1_must_cover_every_section():
    # a section without a vertex-local partner is rejected
    with pytest.raises(GraphError):
        TwoGraph.make(["v"], ["a", "b"], ["a.1", "b.1", "b.2"],
                      {"a": "v", "b": "v"},
                      {"a.1": "a", "b.1": "b", "b.2": "b"},
                      iota_pairs=[], sigma1_pairs=[("a.1", "b.1")],
                      sigma2_pairs=[])


def test_sigma2_requires_matching_edge():
    # pairing strands across half-edges that are not an edge
    with pytest.raises(GraphError):
        TwoGraph.make(["v", "w"], ["a", "b"], ["a.1", "a.2", "b.1", "b.2"],
                      {"a": "v", "b": "w"},
                      {"a.1": "a", "a.2": "a", "b.1": "b", "b.2": "b"},
                      iota_pairs=[],
                      sigma1_pairs=[("a.1", "a.2"), ("b.1", "b.2")],
                      sigma2_pairs=[("a.1", "b.1")])


def test_sigma1_must_stay_inside_a_vertex():
    with pytest.raises(GraphError):
        TwoGraph.make(["v", "w"], ["a", "b"], ["a.1", "a.2", "b.1", "b.2"],
                      {"a": "v", "b": "w"},
                      {"a.1": "a", "a.2": "a", "b.1": "b", "b.2": "b"},
                      iota_pairs=[("a", "b")],
                      sigma1_pairs=[("a.1", "b.1"), ("a.2", "b.2")],
                      sigma2_pairs=[("a.1", "b.1"), ("a.2", "b.2")])


# ---------------------------------------------------------------------------
# faces


def test_face_counts_match_chain_oracle_on_corpus():
    for name, g in CORPUS.items():
        internal, external = faces(g)
        oi, oe = oracles.chain_face_counts(g)
        assert (len(internal), len(external)) == (oi, oe), name


def test_fish_face_counts():
    internal, external = faces(fixtures.fish(1, 2))
    assert len(external) == 8
    assert len(internal) == 2
    internal, external = faces(fixtures.fish(1, 1))
    assert len(external) == 8
    assert len(internal) == 3


def test_fish_has_32_sections_and_4_externals():
    g = fixtures.fish(1, 2)
    assert len(g.strands) == 32
    assert len(g.external_half_edges()) == 4
    assert all(g.strand_degree(h) == 4 for h in g.half_edges)


def test_external_faces_end_on_fixed_sections():
    for g in CORPUS.values():
        internal, external = faces(g)
        for f in external:
            assert g.sigma2[f.sections[0]] == f.sections[0]
            assert g.sigma2[f.sections[-1]] == f.sections[-1]
        for f in internal:
            assert len(f.sections) % 2 == 0 and len(f.sections) >= 2


def test_faces_partition_the_sections():
    for g in CORPUS.values():
        internal, external = faces(g)
        seen = [s for f in internal + external for s in f.sections]
        assert sorted(map(repr, seen)) == sorted(map(repr, g.strands))


# ---------------------------------------------------------------------------
# vertex graphs and boundary


def test_fish_vertex_graph_is_bipartite_quartic():
    g = fixtures.fish(1, 2)
    vg = vertex_graph(g, "u")
    assert sorted(vg.vertices) == ["e1", "e2", "x1", "x2"]
    assert all(vg.degree(n) == 4 for n in vg.vertices)
    # bipartition: the two whites never share an edge, nor the two blacks
    whites, blacks = {"x2", "e1"}, {"x1", "e2"}
    for h in vg.half_edges:
        a, b = vg.attach[h], vg.attach[vg.pairing[h]]
        assert not (a in whites and b in whites)
        assert not (a in blacks and b in blacks)


def test_fish_vertex_graphs_are_two_isomorphic_quartics():
    g = fixtures.fish(1, 2)
    entries = vertex_graphs_multiset(g)
    assert len(entries) == 2
    assert iso.one_graphs_isomorphic(entries[0], entries[1])


def test_fish_boundary_two_dipoles():
    b = fixtures.fish_boundary(1, 2)
    comps = b.components()
    assert len(comps) == 2
    for vs in comps:
        c = b.induced(vs)
        assert len(c.vertices) == 2
        assert c.n_edges() == 4


def test_boundary_of_double_fish():
    g = fixtures.fish(1, 2)
    gg = disjoint_union([g, g])
    assert len(boundary(gg).components()) == 4
    per_comp = boundary_components(gg)
    assert len(per_comp) == 2
    for b in per_comp:
        assert len(b.components()) == 2


def test_residue_of_fish():
    same = residue(fixtures.fish(1, 1))
    mixed = residue(fixtures.fish(1, 2))
    for r in (same, mixed):
        assert len(r.vertices) == 1
        assert r.n_edges() == 0
        assert len(r.half_edges) == 4
    assert len(vertex_graph(same, same.vertices[0]).components()) == 1
    assert len(vertex_graph(mixed, mixed.vertices[0]).components()) == 2


def test_skeleton_forgets_edges_only():
    g = fixtures.fish(1, 2)
    s = skeleton(g)
    assert s.n_edges() == 0
    assert s.vertices == g.vertices
    assert s.half_edges == g.half_edges
    assert s.sigma1 == g.sigma1


def test_subgraph_with_edges_rejects_non_edges():
    g = fixtures.fish(1, 2)
    with pytest.raises(GraphError):
        subgraph_with_edges(g, [("x1", "x2")])


# ---------------------------------------------------------------------------
# complex view, Euler characteristic, connectivity


def test_fish_complex_is_pure_and_two_dimensional():
    rep = to_complex(fixtures.fish(1, 2))
    assert rep.pure
    assert rep.two_dimensional
    assert len(rep.cells[0]) == 2
    assert len(rep.cells[1]) == 2 + 4   # two edges, four external half-edges
    assert len(rep.cells[2]) == 10


def test_euler_characteristic_closed_fixtures():
    assert euler_characteristic(fixtures.bipartite_torus()) == 0
    assert euler_characteristic(fixtures.bipartite_sphere()) == 2
    assert euler_characteristic(fixtures.crossing_tadpole()) == 0
    assert euler_characteristic(fixtures.nested_tadpole()) == 2


def test_connectivity_and_bridges():
    g = fixtures.fish(1, 2)
    assert is_connected(g)
    assert is_bridgeless(g)
    m = fixtures.melon_two_point()
    assert is_connected(m)
    assert not is_bridgeless(m)   # cutting its single edge splits the chain
    t = fixtures.quartic_tadpole("same")
    assert is_bridgeless(t)       # a self-loop never counts as a bridge
    two = disjoint_union([g, m])
    assert not is_connected(two)
    assert len(connected_components(two)) == 2


def test_map_constructor_matches_face_oracle():
    rots = [(1, 2, 3, 4), (5, 7, 6, 8), (9, 10), (11, 12)]
    edges = [(1, 5), (2, 6), (3, 9), (4, 10), (7, 11), (8, 12)]
    g = from_combinatorial_map(list(range(1, 13)), {
        h: rot[(i + 1) % len(rot)] for rot in rots for i, h in enumerate(rot)
    }, edges)
    assert internal_face_count(g) == oracles.map_face_count(rots, edges)


def test_one_graph_components():
    b = fixtures.fish_boundary(1, 2)
    assert isinstance(b, OneGraph)
    assert len(b.components()) == 2
    assert b.external() == ()
