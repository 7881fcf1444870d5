"""Power counting: degrees, genus, jackets, and divergence reports."""

import pytest

from strandhopf import fixtures
from strandhopf import (
    GraphError,
    boundary,
    canonical_code,
    classify,
    contract,
    divergent_set,
    enumerate_diagrams,
    euler_characteristic,
    genus,
    gurau_degree,
    infer_colouring,
    is_bridgeless,
    matrix_degree_closed_form,
    open_jacket_degree,
    preset,
    renormalizability_check,
    superficial_degree,
    tensorial_degree_closed_form,
)
from strandhopf.models import boundary_gurau_degree, cap_boundary

BGR = preset("bgr")
GW4 = preset("gw4")
MQ3 = preset("mq3")


def test_superficial_degrees_on_fixtures():
    assert superficial_degree(BGR, fixtures.fish(1, 2)) == 0
    assert superficial_degree(BGR, fixtures.fish(1, 1)) == 1
    assert superficial_degree(BGR, fixtures.quartic_tadpole("same")) == 2
    assert superficial_degree(BGR, fixtures.quartic_tadpole("cross")) == 0
    assert superficial_degree(BGR, fixtures.melon_two_point()) == 2
    assert superficial_degree(GW4, fixtures.gw_ladder()) == 0
    assert superficial_degree(MQ3, fixtures.rank3_melon()) == 3


def test_degree_needs_theory_vertex_types():
    with pytest.raises(GraphError):
        superficial_degree(GW4, fixtures.fish(1, 2))


def test_genus_on_map_fixtures():
    assert genus(fixtures.paper_map()) == 0
    assert genus(fixtures.gw_ladder()) == 0
    assert genus(fixtures.nested_tadpole()) == 0
    assert genus(fixtures.crossing_tadpole()) == 1
    assert genus(fixtures.bipartite_torus()) == 1
    assert genus(fixtures.bipartite_sphere()) == 0
    with pytest.raises(GraphError):
        genus(fixtures.fish(1, 2))   # strand degree four


def test_gurau_degree_equals_genus_for_two_strands():
    assert gurau_degree(fixtures.bipartite_torus()) == 1
    assert gurau_degree(fixtures.bipartite_sphere()) == 0


def test_crossing_tadpole_has_no_colouring():
    with pytest.raises(GraphError):
        infer_colouring(fixtures.crossing_tadpole())


def test_pinched_surface_euler_count():
    gam, cylinder = fixtures.pinched_torus_pair()
    assert genus(gam) == 1
    h = contract(gam, cylinder)
    assert len(h.vertices) == 3
    assert h.n_edges() == 4
    assert euler_characteristic(h) == 1
    with pytest.raises(GraphError):
        genus(h)                     # chi is odd, no orientable surface


def test_jacket_degrees_on_quartic_tadpoles():
    same = fixtures.quartic_tadpole("same")
    cross = fixtures.quartic_tadpole("cross")
    assert open_jacket_degree(same) == 0
    assert open_jacket_degree(cross) == 6
    assert boundary_gurau_degree(same) == 0
    assert boundary_gurau_degree(cross) == 0


def test_capped_closure_can_exceed_jacket_degree():
    (rep,) = classify(BGR, fixtures.fish(1, 1))
    assert rep.gurau == 0
    assert rep.gurau_capped == 6
    (rep,) = classify(BGR, fixtures.fish(1, 2))
    assert rep.gurau == rep.gurau_capped == 0


def test_cap_boundary_closes_the_graph():
    g = fixtures.fish(1, 2)
    capped = cap_boundary(g)
    assert not capped.external_half_edges()
    assert len(capped.vertices) == len(g.vertices) + 2
    closed = fixtures.closed_melon()
    assert cap_boundary(closed) is closed


def test_matrix_closed_form_matches_face_count():
    ts = enumerate_diagrams(GW4, 2)
    assert len(ts.terms) == 30
    for t in ts.terms:
        assert matrix_degree_closed_form(GW4, t.graph) == \
            superficial_degree(GW4, t.graph), t.code


def test_gw4_divergent_set_characterization():
    div = divergent_set(GW4, 2)
    div_codes = {canonical_code(g) for g, _ in div}
    for g, deg in div:
        assert genus(g) == 0
        assert len(g.external_half_edges()) in (2, 4)
        assert len(boundary(g).components()) == 1
    # and conversely: every planar one-boundary 2- or 4-point class diverges
    for t in enumerate_diagrams(GW4, 2).terms:
        g = t.graph
        if t.n_edges == 0 or not g.external_half_edges() \
                or not is_bridgeless(g):
            continue
        planar_small = (genus(g) == 0
                        and len(boundary(g).components()) == 1
                        and len(g.external_half_edges()) in (2, 4))
        assert planar_small == (t.code in div_codes), t.code


def test_tensorial_closed_form_matches_face_count():
    assert tensorial_degree_closed_form(BGR, fixtures.fish(1, 2)) == 0
    assert tensorial_degree_closed_form(BGR, fixtures.fish(1, 1)) == 1
    for th, n_classes in ((MQ3, 33), (BGR, 83)):
        rep = renormalizability_check(th, 2)
        assert rep.passed, rep
        assert rep.n_checked == n_classes
        assert rep.closed_form_mismatches == []
        assert rep.invariant_clashes == []
    assert BGR.max_interaction_order() == 6
    assert MQ3.max_interaction_order() == 4
    assert GW4.max_interaction_order() is None


def test_jacket_degree_is_contraction_invariant():
    ts = enumerate_diagrams(MQ3, 2)
    tested = 0
    for t in ts.terms:
        g = t.graph
        col = infer_colouring(g)
        for a, b in g.edge_pairs():
            if g.nu[a] == g.nu[b]:
                continue             # self-loop contractions are excluded
            h = contract(g, [(a, b)])
            sub_col = {s: col[s] for s in h.strands}
            assert open_jacket_degree(h, sub_col) == \
                open_jacket_degree(g, col), t.code
            tested += 1
    assert tested >= 30


def test_gurau_against_boundary_gurau():
    for t in enumerate_diagrams(MQ3, 2).terms:
        g = t.graph
        col = infer_colouring(g)
        assert open_jacket_degree(g, col) >= boundary_gurau_degree(g, col)


def test_divergent_sets_are_contraction_closed_in_class():
    sizes = {"bgr": 9, "mq3": 5}
    for name, th in (("bgr", BGR), ("mq3", MQ3)):
        div = divergent_set(th, 2)
        assert len(div) == sizes[name]
        in_class = 0
        for g, deg in div:
            assert deg >= 0 and is_bridgeless(g)
            assert g.external_half_edges() and g.n_edges() >= 1
            for e in g.edge_pairs():
                cog = contract(g, [e])
                try:
                    dcog = superficial_degree(th, cog)
                except GraphError:
                    continue         # contraction left the vertex-type set
                in_class += 1
                if cog.n_edges() and cog.external_half_edges() \
                        and is_bridgeless(cog):
                    assert dcog >= 0, name
        assert in_class >= 5, name


def test_classify_flags():
    (rep,) = classify(BGR, fixtures.melon_two_point())
    assert rep.degree == 2 and not rep.bridgeless and not rep.divergent
    (rep,) = classify(BGR, fixtures.quartic_tadpole("same"))
    assert rep.divergent and rep.n_external == 2 and rep.n_internal_faces == 3
    (rep,) = classify(BGR, fixtures.closed_melon())
    assert rep.divergent and rep.n_external == 0   # classify keeps vacua
    assert all(g.external_half_edges() for g, _ in divergent_set(BGR, 2))
    reps = classify(GW4, fixtures.gw_ladder())
    assert len(reps) == 1 and reps[0].genus == 0


def test_unknown_preset():
    with pytest.raises(GraphError):
        preset("nope")
