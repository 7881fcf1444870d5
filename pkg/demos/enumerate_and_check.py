"""Enumerate diagram classes of the map theory with 2- and 4-valent
polygons, then verify the boundary-filtered series identity.

Run:  python3 demos/enumerate_and_check.py
"""

import sys
from collections import Counter

from strandhopf import preset, superficial_degree
from strandhopf.series import check_central_identity, enumerate_diagrams

gw4 = preset("gw4")

ts = enumerate_diagrams(gw4, max_edges=2)
profile = Counter((len(t.graph.vertices), t.n_edges) for t in ts.terms)
print(f"{len(ts.terms)} connected classes with at most 2 edges:")
for (v, e), n in sorted(profile.items()):
    print(f"  {n:3d} classes with {v} vertices and {e} edge(s)")

divergent = [t for t in ts.terms
             if superficial_degree(gw4, t.graph) >= 0 and t.n_edges > 0]
print(f"{len(divergent)} of them superficially divergent; weights:")
for t in divergent[:6]:
    print(f"  1/{t.automorphisms:<4d} degree "
          f"{superficial_degree(gw4, t.graph)}")

print()
rep = check_central_identity(gw4, max_edges=2)
print(f"central identity on {rep.universe_size} graphs, "
      f"{rep.pairs_checked} coefficient pairs, "
      f"{rep.multi_trace_vertex_classes} multi-trace right factors: "
      f"{'PASS' if rep.passed else 'FAIL'}")
sys.exit(0 if rep.passed else 1)
