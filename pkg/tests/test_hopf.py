"""Coproduct, counit, antipode, and the toy renormalization calculus."""

import random
from fractions import Fraction

import oracles
from strandhopf import fixtures
from strandhopf import (
    LaurentPoly,
    Renormalization,
    antipode,
    antipode_of_element,
    character_inverse,
    convolve,
    coproduct,
    counit,
    ms_projection,
    residue,
    toy_ms_character,
)
from strandhopf.hopf import (UNIT_MONOMIAL, coproduct_of_monomial, el_add,
                             el_eq, el_graph, el_mul, el_scale, el_unit,
                             el_zero, graph_of_code, intern_graph)

CORPUS = fixtures.all_fixtures()
SMALL = {n: g for n, g in CORPUS.items() if g.n_edges() <= 3}


def n_edges_of_mono(mono):
    return sum(graph_of_code(code).n_edges() * e for code, e in mono)


def test_fish_coproduct_has_three_terms_with_middle_multiplicity_two():
    g = fixtures.fish(1, 2)
    cop = coproduct(g)
    assert len(cop) == 3
    by_left_edges = {n_edges_of_mono(lm): ((lm, rm), c)
                     for (lm, rm), c in cop.items()}
    assert set(by_left_edges) == {0, 1, 2}
    (lm, rm), c = by_left_edges[0]          # skeleton (x) the graph itself
    assert c == 1
    assert lm == ((intern_graph(residue(fixtures.quartic_tadpole("same"))),
                   2),) or len(lm) == 1     # two isomorphic bare vertices
    assert rm == ((intern_graph(g), 1),)
    (lm, rm), c = by_left_edges[1]          # either single edge, same class
    assert c == 2
    assert n_edges_of_mono(rm) == 1
    (lm, rm), c = by_left_edges[2]          # the graph (x) its residue
    assert c == 1
    assert lm == ((intern_graph(g), 1),)
    assert n_edges_of_mono(rm) == 0


def test_counit_values():
    g = fixtures.fish(1, 2)
    assert counit(g) == 0
    assert counit(residue(g)) == 1
    assert counit(el_unit(5)) == 5
    assert counit(el_add(el_graph(g), el_graph(residue(g), 3))) == 3


def test_counit_is_a_two_sided_unit_for_the_coproduct():
    for name, g in SMALL.items():
        el = el_graph(g)
        left = el_zero()
        right = el_zero()
        for (lm, rm), c in coproduct(g).items():
            left = el_add(left, el_scale(
                {rm: c}, counit({lm: Fraction(1)})))
            right = el_add(right, el_scale(
                {lm: c}, counit({rm: Fraction(1)})))
        assert el_eq(left, el), name
        assert el_eq(right, el), name


def test_coproduct_is_coassociative():
    for name, g in SMALL.items():
        mono = next(iter(el_graph(g)))
        lhs, rhs = {}, {}
        for (a, b), c in coproduct_of_monomial(mono).items():
            for (a1, a2), c2 in coproduct_of_monomial(a).items():
                key = (a1, a2, b)
                lhs[key] = lhs.get(key, Fraction(0)) + c * c2
            for (b1, b2), c2 in coproduct_of_monomial(b).items():
                key = (a, b1, b2)
                rhs[key] = rhs.get(key, Fraction(0)) + c * c2
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        assert lhs == rhs, name


def test_antipode_axiom_on_fixtures():
    for name, g in CORPUS.items():
        if g.n_edges() > 3:
            continue
        expected = el_unit(counit(g))
        left = el_zero()
        right = el_zero()
        for (lm, rm), c in coproduct(g).items():
            s_l = antipode_of_element({lm: Fraction(c)})
            left = el_add(left, el_mul(s_l, {rm: Fraction(1)}))
            s_r = antipode_of_element({rm: Fraction(c)})
            right = el_add(right, el_mul({lm: Fraction(1)}, s_r))
        assert el_eq(left, expected), name
        assert el_eq(right, expected), name


def test_antipode_is_an_involution_here():
    # the algebra is commutative, so S o S is the identity
    for name, g in SMALL.items():
        el = el_graph(g)
        assert el_eq(antipode_of_element(antipode(g)), el), name


def test_antipode_of_group_like_is_inverse():
    r = residue(fixtures.fish(1, 2))
    s = antipode(r)
    assert el_eq(el_mul(s, el_graph(r)), el_unit())
    assert counit(s) == 1


def test_ms_projection_is_rota_baxter():
    rng = random.Random(2024)
    for _ in range(1000):
        x = oracles.random_laurent(rng)
        y = oracles.random_laurent(rng)
        lhs = ms_projection(x) * ms_projection(y) + ms_projection(x * y)
        rhs = ms_projection(ms_projection(x) * y) \
            + ms_projection(x * ms_projection(y))
        assert lhs == rhs


def test_ms_projection_splits_and_is_idempotent():
    rng = random.Random(9)
    for _ in range(200):
        p = oracles.random_laurent(rng)
        pole = ms_projection(p)
        assert pole + p.regular_part() == p
        assert ms_projection(pole) == pole
        assert not p.regular_part().has_pole()


def test_laurent_poly_arithmetic():
    z2 = LaurentPoly.z_power(2, 3)
    assert (z2 * z2.invert()).is_one()
    p = LaurentPoly({-2: Fraction(1), 0: Fraction(5), 1: Fraction(-3)})
    assert p.pole_part() + p.regular_part() == p
    assert p.has_pole()
    assert (p - p).is_zero()
    assert p ** 0 == LaurentPoly.constant(1)
    assert p ** 2 == p * p
    assert p.to_json() == {"-2": [1, 1], "0": [5, 1], "1": [-3, 1]}


def _degree_table():
    # frozen superficial degrees so the character is self-contained
    table = {
        intern_graph(fixtures.fish(1, 1)): 1,
        intern_graph(fixtures.fish(1, 2)): 0,
        intern_graph(fixtures.quartic_tadpole("same")): 2,
        intern_graph(fixtures.melon_two_point()): 2,
    }
    return lambda G: table.get(intern_graph(G), -1)


def test_toy_ms_renormalization_kills_poles():
    phi = toy_ms_character(_degree_table())
    ren = Renormalization(phi)
    for g in (fixtures.fish(1, 1), fixtures.fish(1, 2),
              fixtures.quartic_tadpole("same"), fixtures.melon_two_point()):
        assert phi(g).has_pole()
        assert not ren.renormalized(g).has_pole()
        assert ren.counterterm(g).has_pole()


def test_trivial_projection_means_no_subtraction():
    phi = toy_ms_character(_degree_table())
    ren = Renormalization(phi, R=lambda p: LaurentPoly())
    for g in (fixtures.fish(1, 1), fixtures.quartic_tadpole("same")):
        assert ren.renormalized(g) == phi(g)


def test_character_inverse_convolves_to_counit():
    phi = toy_ms_character(_degree_table())
    e = convolve(character_inverse(phi), phi)
    g = fixtures.fish(1, 1)
    assert e(g).is_zero()                     # counit of a graph with edges
    assert e(residue(g)).is_one()
    assert e(fixtures.quartic_tadpole("same")).is_zero()
