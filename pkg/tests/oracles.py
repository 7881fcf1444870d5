"""Independent brute-force oracles.

Everything here recomputes library results from the raw definitions,
without sharing code with the package: faces by chasing the two strand
involutions, automorphisms by enumerating label bijections, map genus
from the rotation data.  Slow on purpose; only used on small inputs.
"""

import itertools
import random
from fractions import Fraction


def chain_face_counts(G):
    """(internal, external) face counts from the union of the two strand
    involutions: components are paths (external faces, the endpoints are
    the sigma2-fixed sections) or cycles (internal faces)."""
    parent = {s: s for s in G.strands}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for s in G.strands:
        union(s, G.sigma1[s])
        if G.sigma2[s] != s:
            union(s, G.sigma2[s])
    comps = {}
    for s in G.strands:
        comps.setdefault(find(s), []).append(s)
    internal = external = 0
    for members in comps.values():
        ends = [s for s in members if G.sigma2[s] == s]
        if ends:
            assert len(ends) == 2, "path component must have two endpoints"
            external += 1
        else:
            internal += 1
    return internal, external


def brute_one_graph_automorphism_count(g):
    """Pairs of bijections (vertices, half-edges) commuting with the
    attachment and pairing maps.  Half-edge candidates are enumerated
    fibre by fibre over the vertices, which is exhaustive because any
    attachment-equivariant bijection restricts to one on each fibre."""
    vs, hs = list(g.vertices), list(g.half_edges)
    at = {v: [h for h in hs if g.attach[h] == v] for v in vs}
    count = 0
    for pv in itertools.permutations(vs):
        jv = dict(zip(vs, pv))
        if any(len(at[v]) != len(at[jv[v]]) for v in vs):
            continue
        fibre_maps = []
        for v in vs:
            fibre_maps.append([list(zip(at[v], q))
                               for q in itertools.permutations(at[jv[v]])])
        for combo in itertools.product(*fibre_maps):
            jh = dict(p for part in combo for p in part)
            if any(jh[g.pairing[h]] != g.pairing[jh[h]] for h in hs):
                continue
            count += 1
    return count


def _strand_extensions(G, jh):
    """Number of strand bijections compatible with a fixed half-edge
    bijection: fibre-by-fibre backtracking with incremental checks of the
    two strand involutions."""
    fibre = {h: [] for h in G.half_edges}
    for s in G.strands:
        fibre[G.mu[s]].append(s)
    order = sorted(G.half_edges, key=lambda h: (h.__class__.__name__, h))

    def consistent(js, s):
        # involution equivariance on every pair fully inside the domain
        for inv in (G.sigma1, G.sigma2):
            t = inv[s]
            if t in js and inv[js[s]] != js[t]:
                return False
        return True

    def extend(i, js):
        if i == len(order):
            return 1
        h = order[i]
        src = fibre[h]
        dst = fibre[jh[h]]
        if len(src) != len(dst):
            return 0
        total = 0
        for perm in itertools.permutations(dst):
            trial = dict(js)
            ok = True
            for s, t in zip(src, perm):
                trial[s] = t
                if not consistent(trial, s):
                    ok = False
                    break
            if ok:
                total += extend(i + 1, trial)
        return total

    return extend(0, {})


def brute_two_graph_automorphism_count(G):
    """Triples of bijections commuting with all five structure maps."""
    vs, hs = list(G.vertices), list(G.half_edges)
    count = 0
    for pv in itertools.permutations(vs):
        jv = dict(zip(vs, pv))
        for ph in itertools.permutations(hs):
            jh = dict(zip(hs, ph))
            if any(jv[G.nu[h]] != G.nu[jh[h]] for h in hs):
                continue
            if any(jh[G.iota[h]] != G.iota[jh[h]] for h in hs):
                continue
            count += _strand_extensions(G, jh)
    return count


def brute_two_graphs_isomorphic(G1, G2):
    """Existence of a commuting triple of bijections between two graphs."""
    if (len(G1.vertices) != len(G2.vertices)
            or len(G1.half_edges) != len(G2.half_edges)
            or len(G1.strands) != len(G2.strands)):
        return False
    vs1, hs1 = list(G1.vertices), list(G1.half_edges)
    for pv in itertools.permutations(G2.vertices):
        jv = dict(zip(vs1, pv))
        for ph in itertools.permutations(G2.half_edges):
            jh = dict(zip(hs1, ph))
            if any(jv[G1.nu[h]] != G2.nu[jh[h]] for h in hs1):
                continue
            if any(jh[G1.iota[h]] != G2.iota[jh[h]] for h in hs1):
                continue
            if _cross_extension_exists(G1, G2, jh):
                return True
    return False


def _cross_extension_exists(G1, G2, jh):
    fibre1 = {h: [] for h in G1.half_edges}
    for s in G1.strands:
        fibre1[G1.mu[s]].append(s)
    fibre2 = {h: [] for h in G2.half_edges}
    for s in G2.strands:
        fibre2[G2.mu[s]].append(s)
    order = sorted(G1.half_edges, key=lambda h: (h.__class__.__name__, h))

    def ok_so_far(js, s):
        for inv1, inv2 in ((G1.sigma1, G2.sigma1), (G1.sigma2, G2.sigma2)):
            t = inv1[s]
            if t in js and inv2[js[s]] != js[t]:
                return False
        return True

    def extend(i, js):
        if i == len(order):
            return True
        h = order[i]
        src, dst = fibre1[h], fibre2[jh[h]]
        if len(src) != len(dst):
            return False
        for perm in itertools.permutations(dst):
            trial = dict(js)
            good = True
            for s, t in zip(src, perm):
                trial[s] = t
                if not ok_so_far(trial, s):
                    good = False
                    break
            if good and extend(i + 1, trial):
                return True
        return False

    return extend(0, {})


def map_face_count(rotations, edge_pairs):
    """Face count of a closed combinatorial map as the number of cycles of
    sigma composed with iota, straight from the defining permutations."""
    sigma = {}
    for rot in rotations:
        for i, h in enumerate(rot):
            sigma[h] = rot[(i + 1) % len(rot)]
    iota = {}
    for a, b in edge_pairs:
        iota[a] = b
        iota[b] = a
    phi = {h: sigma[iota[h]] for h in iota}
    seen = set()
    faces = 0
    for h in phi:
        if h in seen:
            continue
        faces += 1
        while h not in seen:
            seen.add(h)
            h = phi[h]
    return faces


def random_relabelled(G, rng):
    """Copy of ``G`` under uniformly random label bijections, with labels
    drawn from a disjoint namespace."""
    from strandhopf.graphs import relabel

    def shuffled_map(labels, tag):
        target = [f"{tag}{i}" for i in range(len(labels))]
        rng.shuffle(target)
        return dict(zip(labels, target))

    return relabel(G,
                   shuffled_map(G.vertices, "rv"),
                   shuffled_map(G.half_edges, "rh"),
                   shuffled_map(G.strands, "rs"))


def random_laurent(rng, span=4, terms=3):
    """Random small Laurent polynomial with Fraction coefficients."""
    from strandhopf.hopf import LaurentPoly
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        k = rng.randint(-span, span)
        coeffs[k] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return LaurentPoly(coeffs)
