"""Subgraphs, contraction, insertion, and their duality."""

import pytest

from strandhopf import fixtures
from strandhopf import (
    GraphError,
    are_isomorphic,
    automorphism_count,
    boundary,
    canonical_code,
    connected_components,
    contract,
    disjoint_union,
    insert,
    insertions,
    residue,
    subgraphs,
    validate,
    vertex_graph,
)
from strandhopf.iso import (boundary_multiset_aut_count,
                            one_graph_automorphism_count, one_graph_code)
from strandhopf.models import (dipole_type, double_dipole_type,
                               melonic_quartic_type)
from strandhopf.rewrite import InsertionMap, contraction_closure_bounded

CORPUS = fixtures.all_fixtures()


def test_subgraph_lattice_size_and_order():
    for name, g in CORPUS.items():
        subs = subgraphs(g)
        assert len(subs) == 2 ** g.n_edges(), name
        assert subs[0].is_skeleton
        assert subs[-1].is_full
        seen = {s.edges for s in subs}
        assert len(seen) == len(subs), name


def test_contract_nothing_is_identity():
    for name, g in CORPUS.items():
        h = contract(g, ())
        assert h.iota == g.iota and h.sigma1 == g.sigma1 \
            and h.sigma2 == g.sigma2, name


def test_fish_contractions():
    for c2 in (1, 2):
        g = fixtures.fish(1, c2)
        subs = subgraphs(g)
        assert len(subs) == 4
        one_edge = [s for s in subs if len(s.edges) == 1]
        cographs = [s.contract() for s in one_edge]
        for h in cographs:
            assert len(h.vertices) == 1
            assert h.n_edges() == 1
            assert len(h.half_edges) == 6
            assert len(h.external_half_edges()) == 4
        assert are_isomorphic(cographs[0], cographs[1])
        full = contract(g, g.edge_pairs())
        assert are_isomorphic(full, residue(g))
        n_comp = len(vertex_graph(full, full.vertices[0]).components())
        assert n_comp == (1 if c2 == 1 else 2)


def test_contractions_stay_valid_and_shrink():
    for name, g in CORPUS.items():
        if g.n_edges() > 3:
            continue
        for s in subgraphs(g):
            h = s.contract()
            assert validate(h).valid, (name, s.edges)
            assert h.n_edges() == g.n_edges() - len(s.edges)
            assert len(h.external_half_edges()) == \
                len(g.external_half_edges())


def test_insertion_count_formula_on_fixture_corpus():
    checked = 0
    for name, g in CORPUS.items():
        target = residue(g)
        got = len(insertions(g, target))
        comps = connected_components(g)
        expected = boundary_multiset_aut_count([boundary(c) for c in comps])
        assert got == expected, name
        checked += 1
    assert checked >= 10
    # disjoint unions exercise the wreath factor across components
    g = fixtures.fish(1, 2)
    t = fixtures.quartic_tadpole("same")
    for big in (disjoint_union([t, t]), disjoint_union([g, t])):
        got = len(insertions(big, residue(big)))
        expected = boundary_multiset_aut_count(
            [boundary(c) for c in connected_components(big)])
        assert got == expected


def _identity_insertion(H, G2):
    hs = sorted(H.external_half_edges(), key=str)
    ss = sorted(H.external_strands(), key=str)
    return InsertionMap(H, G2, tuple((h, h) for h in hs),
                        tuple((s, s) for s in ss))


def test_insertion_inverts_contraction():
    for name, g in CORPUS.items():
        if g.n_edges() > 3:
            continue
        for s in subgraphs(g):
            H = s.materialize()
            G2 = s.contract()
            maps = insertions(H, G2)
            comps = connected_components(H)
            assert len(maps) == boundary_multiset_aut_count(
                [boundary(c) for c in comps]), (name, s.edges)
            # contraction keeps labels, so the identity map is present
            back = insert(G2, H, _identity_insertion(H, G2))
            assert back.iota == g.iota and back.sigma2 == g.sigma2, name
            for ins in maps[:20]:
                r = insert(G2, H, ins)
                assert validate(r).valid
                assert are_isomorphic(contract(r, s.edges), G2), \
                    (name, s.edges)


def test_insert_rejects_bad_maps():
    g = fixtures.fish(1, 2)
    s = subgraphs(g)[-1]
    H, G2 = s.materialize(), s.contract()
    good = _identity_insertion(H, G2)
    with pytest.raises(GraphError):
        insert(G2, H, InsertionMap(H, G2, good.on_half_edges[1:],
                                   good.on_strands))
    with pytest.raises(GraphError):
        insert(G2, H, InsertionMap(H, G2, good.on_half_edges,
                                   good.on_strands[2:]))


def test_insertions_reject_mismatched_targets():
    g = fixtures.fish(1, 2)
    assert insertions(g, fixtures.fish(1, 1)) == []
    assert insertions(g, residue(fixtures.melon_two_point())) == []


def test_closure_reaches_dipole_and_double_dipole():
    q2 = melonic_quartic_type(2)
    rep = contraction_closure_bounded([q2.graph], 4, 2, max_rounds=1)
    assert one_graph_code(dipole_type(2).graph) in rep.types
    assert one_graph_code(double_dipole_type(2).graph) in rep.types
    assert one_graph_code(q2.graph) in rep.types
    assert rep.truncated      # six-slot boundaries were cut off
    assert not rep.reached_fixpoint


def test_closure_fixpoint_on_dipole_alone():
    d2 = dipole_type(2)
    rep = contraction_closure_bounded([d2.graph], 2, 2)
    assert rep.reached_fixpoint
    assert one_graph_code(d2.graph) in rep.types
