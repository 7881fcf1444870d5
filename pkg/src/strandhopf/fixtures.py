"""Small worked graphs used by the test suite, the demos and the docs.

Most fixtures are built from their combinatorial data (rotations and
edge pairings for maps, coloured edge lists for tensorial graphs); the
fish graph is spelled out section by section because its half-edge
names e1, e2, f1, f2 are part of the CLI examples.
"""

from .graphs import (TwoGraph, boundary, from_coloured_graph,
                     from_combinatorial_map)

RANK = 4


def _melonic_sigma1(roles, transmit, s1):
    # roles: w1/b1/w2/b2 -> half-edge label; transmit colour crosses the
    # two dipole halves, every other colour stays inside its half
    for c in range(1, RANK + 1):
        if c == transmit:
            pairs = ((roles["w1"], roles["b2"]), (roles["w2"], roles["b1"]))
        else:
            pairs = ((roles["w1"], roles["b1"]), (roles["w2"], roles["b2"]))
        for a, b in pairs:
            s1[f"{a}.{c}"] = f"{b}.{c}"
            s1[f"{b}.{c}"] = f"{a}.{c}"


def fish(c1=1, c2=2):
    """Two melonic quartic rank-4 vertices joined by two edges.

    Vertex u transmits colour ``c1``, vertex v colour ``c2``; the edges
    are (e1, f1) and (e2, f2), the external half-edges x1, x2, x3, x4.
    The two variants c1 = c2 and c1 != c2 differ in their residue: the
    first contracts to a connected vertex, the second to a multi-trace
    vertex with two quartic boundary components.
    """
    u_roles = {"b1": "x1", "w1": "x2", "w2": "e1", "b2": "e2"}
    v_roles = {"b1": "x3", "w1": "x4", "b2": "f1", "w2": "f2"}
    hs = ["x1", "x2", "e1", "e2", "x3", "x4", "f1", "f2"]
    nu = {h: ("u" if h in ("x1", "x2", "e1", "e2") else "v") for h in hs}
    strands = [f"{h}.{c}" for h in hs for c in range(1, RANK + 1)]
    mu = {s: s.rsplit(".", 1)[0] for s in strands}
    iota = {h: h for h in hs}
    s2 = {s: s for s in strands}
    for a, b in fish_edges():
        iota[a] = b
        iota[b] = a
        for c in range(1, RANK + 1):
            s2[f"{a}.{c}"] = f"{b}.{c}"
            s2[f"{b}.{c}"] = f"{a}.{c}"
    s1 = {}
    _melonic_sigma1(u_roles, c1, s1)
    _melonic_sigma1(v_roles, c2, s1)
    return TwoGraph(["u", "v"], hs, strands, nu, mu, iota, s1, s2)


def fish_edges():
    """The fish's two edges as half-edge pairs, contraction-ready."""
    return [("e1", "f1"), ("e2", "f2")]


def fish_boundary(c1=1, c2=2):
    """Boundary 1-graph of the fish; two rank-4 dipoles when c1 != c2."""
    return boundary(fish(c1, c2))


# ---------------------------------------------------------------------------
# combinatorial maps


def _map(rotations, edges, n):
    sigma = {}
    for rot in rotations:
        for i, h in enumerate(rot):
            sigma[h] = rot[(i + 1) % len(rot)]
    return from_combinatorial_map(list(range(1, n + 1)), sigma, edges)


def paper_map():
    """Three-vertex open map with rotations (1)(234)(576) and edges
    (12)(35)(46); half-edge 7 is external."""
    return _map([(1,), (2, 3, 4), (5, 7, 6)], [(1, 2), (3, 5), (4, 6)], 7)


def nested_tadpole():
    return _map([(1, 2, 3, 4)], [(1, 2), (3, 4)], 4)


def side_tadpole():
    return _map([(1, 2, 3, 4)], [(1, 4), (2, 3)], 4)


def crossing_tadpole():
    """One quartic vertex with crossing self-loops: the Hermitian torus.
    Its strand structure admits no rank-2 colouring."""
    return _map([(1, 2, 3, 4)], [(1, 3), (2, 4)], 4)


def gw_ladder():
    """Planar two-vertex quartic map with two parallel edges and one
    internal face; marginal in the d=2 matrix theory."""
    return _map([(1, 2, 3, 4), (5, 6, 7, 8)], [(3, 6), (4, 5)], 8)


def bipartite_torus():
    """Closed quadrangulation of the torus on two vertices; carries a
    rank-2 strand colouring."""
    return _map([(1, 2, 3, 4), (5, 6, 7, 8)],
                [(1, 5), (2, 6), (3, 7), (4, 8)], 8)


def bipartite_sphere():
    """Closed planar two-vertex map with four parallel edges; carries a
    rank-2 strand colouring."""
    return _map([(1, 2, 3, 4), (5, 6, 7, 8)],
                [(1, 8), (2, 7), (3, 6), (4, 5)], 8)


def pinched_torus_pair():
    """A closed torus map and the edge list of a two-edge cylinder inside
    it.  Contracting the cylinder merges its two vertices into one
    double-trace vertex; the result has V=3, E=4, F=2, so Euler
    characteristic 1, a pinched torus."""
    gamma = _map([(1, 2, 3, 4), (5, 7, 6, 8), (9, 10), (11, 12)],
                 [(1, 5), (2, 6), (3, 9), (4, 10), (7, 11), (8, 12)], 12)
    return gamma, [(1, 5), (2, 6)]


# ---------------------------------------------------------------------------
# tensorial graphs


def melon_two_point():
    """Two rank-4 dipole vertices joined by one edge, two external legs.
    The minimal melonic two-point function of the rank-4 theory."""
    edges = ([("a", "b", c) for c in range(1, RANK + 1)]
             + [("c", "d", c) for c in range(1, RANK + 1)]
             + [("b", "c", 0)])
    return from_coloured_graph(["a", "b", "c", "d"], edges,
                               external_nodes=["a", "d"])


def closed_melon():
    """The closed rank-4 melon: two dipole vertices, two edges."""
    edges = ([("a", "b", c) for c in range(1, RANK + 1)]
             + [("c", "d", c) for c in range(1, RANK + 1)]
             + [("b", "c", 0), ("d", "a", 0)])
    return from_coloured_graph(["a", "b", "c", "d"], edges)


def quartic_tadpole(channel="same"):
    """Melonic quartic rank-4 vertex with one self-loop.

    With ``channel="same"`` the loop closes a dipole half (the melonic
    channel, degree-0 jackets); with ``channel="cross"`` it joins the two
    halves, which costs Gurau degree 6.
    """
    roles = {"b1": "x1", "w1": "x2", "w2": "e1", "b2": "e2"}
    hs = ["x1", "x2", "e1", "e2"]
    if channel == "cross":
        roles = {"b1": "e2", "w1": "x2", "w2": "e1", "b2": "x1"}
    elif channel != "same":
        raise ValueError("channel must be 'same' or 'cross'")
    strands = [f"{h}.{c}" for h in hs for c in range(1, RANK + 1)]
    nu = {h: "u" for h in hs}
    mu = {s: s.rsplit(".", 1)[0] for s in strands}
    iota = {h: h for h in hs}
    iota["e1"] = "e2"
    iota["e2"] = "e1"
    s2 = {s: s for s in strands}
    for c in range(1, RANK + 1):
        s2[f"e1.{c}"] = f"e2.{c}"
        s2[f"e2.{c}"] = f"e1.{c}"
    s1 = {}
    _melonic_sigma1(roles, 1, s1)
    return TwoGraph(["u"], hs, strands, nu, mu, iota, s1, s2)


def rank3_melon():
    """Closed rank-3 melon on two dipole vertices (mq3 theory)."""
    edges = ([("u", "v", c) for c in range(1, 4)] + [("u", "v", 0)])
    return from_coloured_graph(["u", "v"], edges)


# ---------------------------------------------------------------------------
# corpus


def all_fixtures():
    """Name -> graph map over the whole fixture corpus."""
    out = {
        "fish_same": fish(1, 1),
        "fish_mixed": fish(1, 2),
        "fish_mixed_34": fish(3, 4),
        "paper_map": paper_map(),
        "nested_tadpole": nested_tadpole(),
        "side_tadpole": side_tadpole(),
        "crossing_tadpole": crossing_tadpole(),
        "gw_ladder": gw_ladder(),
        "bipartite_torus": bipartite_torus(),
        "bipartite_sphere": bipartite_sphere(),
        "melon_two_point": melon_two_point(),
        "closed_melon": closed_melon(),
        "quartic_tadpole_same": quartic_tadpole("same"),
        "quartic_tadpole_cross": quartic_tadpole("cross"),
        "rank3_melon": rank3_melon(),
    }
    gamma, _ = pinched_torus_pair()
    out["pinched_torus_source"] = gamma
    return out
