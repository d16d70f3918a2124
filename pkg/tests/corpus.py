"""Shared seeded corpora for the test suite."""

import itertools
import random
from functools import lru_cache

from cwgraphs import CWDecomposition, is_cm_cw, random_cw
from cwgraphs.graph import Graph

CORPUS_SEED = 20240601


@lru_cache(maxsize=None)
def cw_corpus(count: int = 300, max_vertices: int = 16) -> tuple[CWDecomposition, ...]:
    """Seeded random Cameron-Walker decompositions, half of them with the
    Cohen-Macaulay one-leaf/one-triangle shape."""
    rng = random.Random(CORPUS_SEED)
    decs = []
    while len(decs) < count // 2:
        n = rng.randint(1, 5)
        m = rng.randint(1, 4)
        max_f = rng.randint(1, 3)
        max_t = rng.randint(0, 2)
        if n == 1 and max_t == 0:
            continue
        dec = random_cw(n, m, max_f, max_t, rng.random(), rng.randrange(2**30))
        if dec.vertex_count() <= max_vertices:
            decs.append(dec)
    while len(decs) < count:
        n = rng.randint(1, 4)
        m = rng.randint(1, 4)
        if 2 * n + 3 * m > max_vertices:
            continue
        dec = random_cw(n, m, 1, 1, rng.random(), rng.randrange(2**30))
        if is_cm_cw(dec):
            decs.append(dec)
    return tuple(decs)


def random_graph(rng: random.Random, max_vertices: int, density: float) -> Graph:
    nv = rng.randint(1, max_vertices)
    verts = [f"v{i + 1}" for i in range(nv)]
    edges = [p for p in itertools.combinations(verts, 2) if rng.random() < density]
    return Graph(verts, edges)


def random_clique_partition(rng: random.Random, base: Graph):
    rest = list(base.vertices)
    rng.shuffle(rest)
    parts = []
    while rest:
        v = rest.pop()
        part = {v}
        for u in rest[:]:
            if all(base.has_edge(u, w) for w in part) and rng.random() < 0.6:
                part.add(u)
                rest.remove(u)
        parts.append(frozenset(part))
    if rng.random() < 0.3:
        parts.append(frozenset())
    return tuple(parts)


def petersen() -> Graph:
    outer = [(f"v{i + 1}", f"v{(i + 1) % 5 + 1}") for i in range(5)]
    inner = [(f"u{i + 1}", f"u{(i + 2) % 5 + 1}") for i in range(5)]
    spokes = [(f"v{i + 1}", f"u{i + 1}") for i in range(5)]
    return Graph(
        [f"v{i + 1}" for i in range(5)] + [f"u{i + 1}" for i in range(5)],
        outer + inner + spokes,
    )


def complete_graph(n: int) -> Graph:
    verts = [f"a{i + 1}" for i in range(n)]
    return Graph(verts, itertools.combinations(verts, 2))


def complete_bipartite(a: int, b: int) -> Graph:
    ls = [f"l{i + 1}" for i in range(a)]
    rs = [f"r{j + 1}" for j in range(b)]
    return Graph(ls + rs, [(x, y) for x in ls for y in rs])


def star_triangle(t: int) -> Graph:
    """t triangles glued at a common centre."""
    edges = []
    for k in range(t):
        a, b = f"a{k + 1}", f"b{k + 1}"
        edges += [("c", a), ("c", b), (a, b)]
    return Graph(["c"] + [v for e in edges for v in e], edges)


G5_EDGES = [("x", "v"), ("x", "y"), ("y", "z"), ("y", "w"), ("z", "w")]
P5_EDGES = [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]
STAR7_EDGES = [
    ("1", "2"), ("1", "3"), ("2", "3"),
    ("1", "4"), ("1", "5"), ("4", "5"),
    ("1", "6"), ("1", "7"), ("6", "7"),
]
