"""Walk through the two-vertex "fish" graph: faces, contractions,
coproduct, and how the colouring of its edges changes everything.

Run:  python3 demos/fish_tour.py
"""

from strandhopf import (
    automorphism_count,
    boundary,
    classify,
    coproduct,
    faces,
    preset,
    residue,
    subgraphs,
    vertex_graph,
)
from strandhopf import fixtures
from strandhopf.hopf import graph_of_code

bgr = preset("bgr")

for c2, label in ((2, "mixed colours"), (1, "same colour")):
    g = fixtures.fish(1, c2)
    internal, external = faces(g)
    print(f"fish with {label}:")
    print(f"  {len(g.vertices)} vertices, {g.n_edges()} edges, "
          f"{len(g.external_half_edges())} external legs")
    print(f"  {len(internal)} internal faces, {len(external)} external")
    print(f"  |Aut| = {automorphism_count(g)}")
    print(f"  boundary has {len(boundary(g).components())} components")

    # the subgraph lattice has four elements; contracting each one
    # walks from the graph itself down to its residue
    for s in subgraphs(g):
        c = s.contract()
        what = ", ".join("-".join(p) for p in s.edges) or "nothing"
        print(f"  contract {what:<20} -> "
              f"{len(c.vertices)} vertex(es), {c.n_edges()} edge(s)")
    r = residue(g)
    (v,) = r.vertices
    parts = len(vertex_graph(r, v).components())
    kind = "multi-trace" if parts > 1 else "single-trace"
    print(f"  residue vertex graph: {parts} component(s), {kind}")

    print("  coproduct:")
    for (lm, rm), coeff in sorted(coproduct(g).items()):
        le = sum(graph_of_code(c).n_edges() * e for c, e in lm)
        re = sum(graph_of_code(c).n_edges() * e for c, e in rm)
        print(f"    {coeff} x (left {le} edges) (x) (right {re} edges)")

    (rep,) = classify(bgr, g)
    print(f"  degree {rep.degree}, divergent: {rep.divergent}, "
          f"jacket degree {rep.gurau}\n")
