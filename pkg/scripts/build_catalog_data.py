"""Regenerate the edge-list data files for catalog graphs without an LCF code.

Run from the repository root::

    python scripts/build_catalog_data.py

Wong and Meringer are not rebuilt here: wong.edges is a transcription of a
published drawing and meringer.edges comes from scripts/find_cage.py.
"""

import itertools
from pathlib import Path

import networkx as nx
import numpy as np

from graphdesigns.graph import format_edge_list, from_edge_list, from_lcf

DATA = Path(__file__).resolve().parents[1] / "src" / "graphdesigns" / "data"


def golay_octads():
    """The 759 weight-8 words of the extended binary Golay code."""
    residues = {(i * i) % 23 for i in range(1, 23)}
    base = np.zeros(23, dtype=np.uint8)
    base[[0, *sorted(residues)]] = 1
    rows = [np.roll(base, s) for s in range(23)] + [np.ones(23, dtype=np.uint8)]
    # GF(2) row reduction
    pivots = {}
    for r in rows:
        r = r.copy()
        while r.any() and int(np.argmax(r)) in pivots:
            r ^= pivots[int(np.argmax(r))]
        if r.any():
            pivots[int(np.argmax(r))] = r
    basis = list(pivots.values())
    assert len(basis) == 12, len(basis)
    words = []
    for coeffs in itertools.product([0, 1], repeat=12):
        w = np.zeros(23, dtype=np.uint8)
        for c, b in zip(coeffs, basis):
            if c:
                w ^= b
        words.append(np.append(w, w.sum() % 2))
    words = np.array(words)
    weights = words.sum(axis=1)
    assert sorted(set(weights)) == [0, 8, 12, 16, 24]
    octads = [frozenset(np.flatnonzero(w)) for w in words[weights == 8]]
    assert len(octads) == 759
    return octads


def gewirtz():
    # S(3,6,22): octads through two fixed points; then drop blocks through a third
    octads = golay_octads()
    hexads = [o - {22, 23} for o in octads if {22, 23} <= o]
    assert len(hexads) == 77
    blocks = [h for h in hexads if 0 not in h]
    edges = [(i, j) for i, j in itertools.combinations(range(len(blocks)), 2)
             if not blocks[i] & blocks[j]]
    return from_edge_list(len(blocks), edges)


def gosset():
    vecs = []
    for pair in itertools.combinations(range(8), 2):
        v = np.full(8, -1)
        v[list(pair)] = 3
        vecs.extend([v, -v])
    edges = [(i, j) for i, j in itertools.combinations(range(56), 2)
             if vecs[i] @ vecs[j] == 8]
    return from_edge_list(56, edges)


def twenty_four_cell():
    vecs = set()
    for i, j in itertools.combinations(range(4), 2):
        for si, sj in itertools.product([1, -1], repeat=2):
            v = [0, 0, 0, 0]
            v[i], v[j] = si, sj
            vecs.add(tuple(v))
    vecs = sorted(vecs)
    edges = [(a, b) for a, b in itertools.combinations(range(24), 2)
             if np.dot(vecs[a], vecs[b]) == 1]
    return from_edge_list(24, edges)


def icosidodecahedral():
    dodeca = from_lcf([10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)
    line = nx.line_graph(nx.Graph(dodeca.edges))
    line = nx.convert_node_labels_to_integers(line, ordering="sorted")
    return from_edge_list(30, line.edges())


def hoffman_singleton():
    label = {}
    for kind in "PQ":
        for h in range(5):
            for j in range(5):
                label[kind, h, j] = len(label)
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((label["P", h, j], label["P", h, (j + 1) % 5]))
            edges.append((label["Q", h, j], label["Q", h, (j + 2) % 5]))
            for i in range(5):
                edges.append((label["P", h, j], label["Q", i, (h * i + j) % 5]))
    return from_edge_list(50, edges)


def sylvester():
    hs = hoffman_singleton()
    u, v = hs.edges[0]
    drop = set(hs.adjacency[u]) | set(hs.adjacency[v])
    keep = [x for x in range(hs.n) if x not in drop]
    index = {x: i for i, x in enumerate(keep)}
    edges = [(index[a], index[b]) for a, b in hs.edges if a in index and b in index]
    return from_edge_list(len(keep), edges)


def robertson():
    # 19-cycle plus one chord per vertex
    offsets = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4]
    edges = [(i, (i + 1) % 19) for i in range(19)]
    edges += [(i, (i + offsets[i]) % 19) for i in range(19)]
    return from_edge_list(19, edges)


BUILDERS = {
    "gewirtz": (gewirtz, "Gewirtz graph, srg(56,10,0,2): blocks of S(3,6,22) avoiding a point, adjacent when disjoint"),
    "gosset": (gosset, "Gosset graph: permutations of +-(3,3,-1,...,-1), adjacent when inner product is 8"),
    "24-cell": (twenty_four_cell, "24-cell: permutations of (+-1,+-1,0,0), adjacent when inner product is 1"),
    "icosidodecahedral": (icosidodecahedral, "icosidodecahedral graph: line graph of the dodecahedron"),
    "sylvester": (sylvester, "Sylvester graph: Hoffman-Singleton minus the neighbourhoods of an edge's endpoints"),
    "robertson": (robertson, "Robertson graph, the (4,5)-cage: 19-cycle plus one chord per vertex"),
}


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    for name, (build, comment) in BUILDERS.items():
        g = build()
        (DATA / f"{name}.edges").write_text(format_edge_list(g, comment), encoding="utf-8")
        print(f"{name}: n={g.n} m={g.edge_count} degrees={sorted(set(g.degrees.tolist()))} girth={g.girth()}")


if __name__ == "__main__":
    main()
