"""Cameron-Walker recognition, decomposition and graph constructions.

A Cameron-Walker graph is a connected graph with im(G) = m(G) that is
neither a star nor a star triangle; structurally it is a connected
bipartite support whose left vertices each carry at least one leaf and
whose right vertices may carry pendant triangles.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .errors import (
    InvalidDecomposition,
    InvalidParams,
    InvalidSize,
    NotAClique,
    NotAPartition,
    NotCameronWalker,
    ParseError,
)
from .graph import Graph, canonical_edge, label_key, sorted_labels
from .matchings import induced_matching_number, matching_number

TAG_STAR = "Star"
TAG_STAR_TRIANGLE = "StarTriangle"
TAG_CAMERON_WALKER = "CameronWalker"
TAG_OTHER = "Other"


@dataclass(frozen=True)
class CWDecomposition:
    """Structural certificate: bipartite support plus attachment maps.

    ``leaf_map[x]`` lists the leaves hanging off the left vertex x (at
    least one each); ``triangle_map[y]`` lists the degree-2 vertex pairs
    of the pendant triangles at the right vertex y.  Right vertices are
    ordered so that the triangle-bearing ones come first.
    """

    support: Graph
    left: tuple[str, ...]
    right: tuple[str, ...]
    leaf_map: dict[str, tuple[str, ...]] = field(default_factory=dict)
    triangle_map: dict[str, tuple[tuple[str, str], ...]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def m(self) -> int:
        return len(self.right)

    @property
    def f_counts(self) -> tuple[int, ...]:
        return tuple(len(self.leaf_map[x]) for x in self.left)

    @property
    def t_counts(self) -> tuple[int, ...]:
        return tuple(len(self.triangle_map[y]) for y in self.right)

    @property
    def f(self) -> int:
        return sum(self.f_counts)

    @property
    def t(self) -> int:
        return sum(self.t_counts)

    @property
    def m_prime(self) -> int:
        return sum(1 for t in self.t_counts if t >= 1)

    def validate(self) -> None:
        if not self.left or not self.right:
            raise InvalidDecomposition("support needs vertices on both sides")
        if set(self.support.vertices) != set(self.left) | set(self.right):
            raise InvalidDecomposition("left/right must partition the support vertices")
        if set(self.left) & set(self.right):
            raise InvalidDecomposition("left and right overlap")
        if not self.support.is_connected():
            raise InvalidDecomposition("support is not connected")
        lset = set(self.left)
        for u, v in self.support.edges:
            if (u in lset) == (v in lset):
                raise InvalidDecomposition("support edge inside one side; not bipartite")
        if set(self.leaf_map) != set(self.left):
            raise InvalidDecomposition("leaf_map keys must be exactly the left vertices")
        if set(self.triangle_map) != set(self.right):
            raise InvalidDecomposition("triangle_map keys must be exactly the right vertices")
        if any(len(ls) == 0 for ls in self.leaf_map.values()):
            raise InvalidDecomposition("every left vertex needs at least one leaf")
        counts = self.t_counts
        seen_bare = False
        for t in counts:
            if t == 0:
                seen_bare = True
            elif seen_bare:
                raise InvalidDecomposition(
                    "right vertices must be ordered with triangle-bearing ones first"
                )
        attached: set[str] = set()
        for ls in self.leaf_map.values():
            attached.update(ls)
        for pairs in self.triangle_map.values():
            for a, b in pairs:
                attached.update((a, b))
        expected = sum(len(ls) for ls in self.leaf_map.values()) + 2 * self.t
        if len(attached) != expected or attached & set(self.support.vertices):
            raise InvalidDecomposition("attachment labels must be fresh and distinct")

    def vertex_count(self) -> int:
        return self.n + self.m + self.f + 2 * self.t

    def canonical_map(self) -> dict[str, str]:
        """Mapping from this decomposition's labels to the canonical scheme."""
        out: dict[str, str] = {}
        for i, x in enumerate(self.left, start=1):
            out[x] = f"x{i}"
            for l, z in enumerate(self.leaf_map[x], start=1):
                out[z] = f"z{i}_{l}"
        for j, y in enumerate(self.right, start=1):
            out[y] = f"y{j}"
            for k, (a, b) in enumerate(self.triangle_map[y], start=1):
                out[a] = f"w{j}_{k}+"
                out[b] = f"w{j}_{k}-"
        return out

    def canonicalize(self) -> "CWDecomposition":
        """The same decomposition written in canonical labels."""
        cmap = self.canonical_map()
        support = Graph(
            [cmap[v] for v in self.support.vertices],
            [(cmap[u], cmap[v]) for u, v in self.support.edges],
        )
        return CWDecomposition(
            support=support,
            left=tuple(cmap[x] for x in self.left),
            right=tuple(cmap[y] for y in self.right),
            leaf_map={cmap[x]: tuple(cmap[z] for z in zs) for x, zs in self.leaf_map.items()},
            triangle_map={
                cmap[y]: tuple((cmap[a], cmap[b]) for a, b in pairs)
                for y, pairs in self.triangle_map.items()
            },
        )

    def to_json(self) -> str:
        payload = {
            "left": list(self.left),
            "right": list(self.right),
            "support_edges": [list(e) for e in self.support.edges],
            "leaves": {x: len(self.leaf_map[x]) for x in self.left},
            "triangles": {y: len(self.triangle_map[y]) for y in self.right},
        }
        return json.dumps(payload)


def decomposition_from_json(text: str) -> CWDecomposition:
    """Rebuild a decomposition from its JSON form.

    The schema carries leaf/triangle counts only, so attachment vertices
    get canonical names keyed by position (z{i}_{l}, w{j}_{k}+/-).
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        left = tuple(payload["left"])
        right = tuple(payload["right"])
        support = Graph(left + right, [tuple(e) for e in payload["support_edges"]])
        leaf_map = {
            x: tuple(f"z{i}_{l}" for l in range(1, int(payload["leaves"][x]) + 1))
            for i, x in enumerate(left, start=1)
        }
        triangle_map = {
            y: tuple(
                (f"w{j}_{k}+", f"w{j}_{k}-")
                for k in range(1, int(payload["triangles"][y]) + 1)
            )
            for j, y in enumerate(right, start=1)
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed decomposition JSON: {exc}") from exc
    dec = CWDecomposition(support, left, right, leaf_map, triangle_map)
    dec.validate()
    return dec


@dataclass(frozen=True)
class Classification:
    tag: str
    decomposition: CWDecomposition | None = None
    reason: str | None = None

    def to_json(self) -> str:
        payload: dict = {"tag": self.tag}
        if self.reason is not None:
            payload["reason"] = self.reason
        if self.decomposition is not None:
            payload["decomposition"] = json.loads(self.decomposition.to_json())
        return json.dumps(payload)


def _is_star(g: Graph) -> bool:
    # K_{1,k} for k >= 0: every edge through one common vertex.
    if g.vertex_count == 1:
        return True
    return any(all(c in e for e in g.edges) for c in g.vertices)


def _is_star_triangle(g: Graph) -> bool:
    # t >= 1 triangles glued at one common vertex and nothing else.
    nv = g.vertex_count
    if nv < 3 or nv % 2 == 0 or g.edge_count != 3 * (nv - 1) // 2:
        return False
    for c in g.vertices:
        others = [v for v in g.vertices if v != c]
        ok = True
        for v in others:
            nbrs = g.neighborhood(v)
            if len(nbrs) != 2 or c not in nbrs:
                ok = False
                break
            partner = next(iter(nbrs - {c}))
            if g.degree(partner) != 2:
                ok = False
                break
        if ok:
            return True
    return False


def _attachments(g: Graph):
    """Leaves, pendant-triangle pairs and the remaining support vertices."""
    leaves = g.leaves()
    triangles = g.pendant_triangles()
    stripped = set(leaves)
    for _, a, b in triangles:
        stripped.update((a, b))
    support_vertices = [v for v in g.vertices if v not in stripped]
    return leaves, triangles, support_vertices


def _try_decompose(g: Graph):
    """Attempt the structural reading; returns (decomposition, reason)."""
    leaves, triangles, support_vertices = _attachments(g)
    if len(support_vertices) < 2:
        return None, "support has fewer than two vertices after stripping"
    support = g.induced_subgraph(support_vertices)
    if not support.is_connected():
        return None, "support is not connected"
    bip = support.bipartition()
    if bip is None:
        return None, "support is not bipartite"

    leaf_at: dict[str, list[str]] = {v: [] for v in support_vertices}
    for z in leaves:
        (u,) = g.neighborhood(z)
        if u not in leaf_at:
            return None, f"leaf {z!r} hangs off a stripped vertex"
        leaf_at[u].append(z)
    tri_at: dict[str, list[tuple[str, str]]] = {v: [] for v in support_vertices}
    for c, a, b in triangles:
        tri_at[c].append((a, b))

    def orientation_ok(left_side, right_side) -> bool:
        return (
            all(leaf_at[x] for x in left_side)
            and all(not tri_at[x] for x in left_side)
            and all(not leaf_at[y] for y in right_side)
        )

    candidates = []
    if orientation_ok(bip.left, bip.right):
        candidates.append((bip.left, bip.right))
    if orientation_ok(bip.right, bip.left):
        candidates.append((bip.right, bip.left))
    if not candidates:
        return None, "no side has a leaf on every vertex with triangles on the other"
    # Both orientations can only pass together for degenerate inputs; keep
    # the lexicographically smaller left side for determinism.
    left_side, right_side = min(candidates, key=lambda lr: tuple(label_key(v) for v in lr[0]))

    left = sorted_labels(left_side)
    right = tuple(
        sorted(right_side, key=lambda y: (0 if tri_at[y] else 1, label_key(y)))
    )
    leaf_map = {x: sorted_labels(leaf_at[x]) for x in left}
    triangle_map = {
        y: tuple(sorted((canonical_edge(a, b) for a, b in tri_at[y]),
                        key=lambda p: (label_key(p[0]), label_key(p[1]))))
        for y in right
    }
    dec = CWDecomposition(support, left, right, leaf_map, triangle_map)
    dec.validate()
    return dec, None


def classify(g: Graph, *, cross_check: bool = True) -> Classification:
    """Star / StarTriangle / CameronWalker / Other, with certificate.

    A successful Cameron-Walker reading is cross-checked against
    im(G) = m(G) (the defining equality) when ``cross_check`` is set.
    """
    if not g.is_connected():
        return Classification(TAG_OTHER, reason="disconnected")
    if _is_star(g):
        return Classification(TAG_STAR)
    if _is_star_triangle(g):
        return Classification(TAG_STAR_TRIANGLE)
    dec, _reason = _try_decompose(g)
    if dec is None:
        return Classification(TAG_OTHER, reason="im!=m")
    if cross_check:
        m, _ = matching_number(g)
        im, _ = induced_matching_number(g)
        assert im == m, "structural decomposition found but im != m; classification bug"
    return Classification(TAG_CAMERON_WALKER, decomposition=dec)


def decompose(g: Graph) -> CWDecomposition:
    """The structural certificate of a Cameron-Walker graph."""
    if not g.is_connected():
        raise NotCameronWalker("graph is disconnected")
    if _is_star(g):
        raise NotCameronWalker("graph is a star")
    if _is_star_triangle(g):
        raise NotCameronWalker("graph is a star triangle")
    dec, reason = _try_decompose(g)
    if dec is None:
        raise NotCameronWalker(reason)
    return dec


def build_cw(dec: CWDecomposition) -> Graph:
    """Emit the graph of a decomposition with canonical labels.

    Left vertices become x1..xn, right vertices y1..ym, leaves z{i}_{l}
    and pendant-triangle pairs w{j}_{k}+ / w{j}_{k}-.
    """
    dec.validate()
    cmap = dec.canonical_map()
    vertices = list(cmap.values())
    edges = [(cmap[u], cmap[v]) for u, v in dec.support.edges]
    for x in dec.left:
        for z in dec.leaf_map[x]:
            edges.append((cmap[x], cmap[z]))
    for y in dec.right:
        for a, b in dec.triangle_map[y]:
            edges.append((cmap[y], cmap[a]))
            edges.append((cmap[y], cmap[b]))
            edges.append((cmap[a], cmap[b]))
    return Graph(vertices, edges)


@dataclass(frozen=True)
class CliqueAttachmentSpec:
    """Base graph plus one clique size k_i >= 2 per vertex."""

    base: Graph
    sizes: dict[str, int]

    def validate(self) -> None:
        if set(self.sizes) != set(self.base.vertices):
            raise InvalidSize("need exactly one clique size per base vertex")
        for v, k in self.sizes.items():
            if k < 2:
                raise InvalidSize(f"clique size at {v!r} must be at least 2, got {k}")


def attach_cliques(spec: CliqueAttachmentSpec) -> Graph:
    """Attach a complete graph K_{k_i} at each base vertex x_i.

    Adds k_i - 1 fresh vertices per base vertex, labelled "{v}@{j}" (with
    extra '@' appended on the unlikely name clash), forming a complete
    graph together with x_i; base edges are preserved.
    """
    spec.validate()
    used = set(spec.base.vertices)
    vertices = list(spec.base.vertices)
    edges = list(spec.base.edges)
    for v in spec.base.vertices:
        fresh = []
        for j in range(1, spec.sizes[v]):
            name = f"{v}@{j}"
            while name in used:
                name += "@"
            used.add(name)
            fresh.append(name)
        vertices.extend(fresh)
        block = [v, *fresh]
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                edges.append((block[i], block[j]))
    return Graph(vertices, edges)


@dataclass(frozen=True)
class CliquePartition:
    """Disjoint (possibly empty) cliques covering the vertex set."""

    base: Graph
    parts: tuple[frozenset[str], ...]

    def validate(self) -> None:
        union: set[str] = set()
        total = 0
        for part in self.parts:
            total += len(part)
            union |= set(part)
            for u in part:
                for v in part:
                    if u != v and not self.base.has_edge(u, v):
                        raise NotAClique(f"part {sorted(part)} is not a clique")
        if total != len(union) or union != set(self.base.vertices):
            raise NotAPartition("parts must be disjoint and cover every vertex")


def whisker_partition(p: CliquePartition) -> Graph:
    """Add one fresh vertex per part, joined to everything in that part.

    Fresh vertices are labelled w1, w2, ... (with '@' appended on a name
    clash); an empty part contributes an isolated new vertex.
    """
    p.validate()
    used = set(p.base.vertices)
    vertices = list(p.base.vertices)
    edges = list(p.base.edges)
    for i, part in enumerate(p.parts, start=1):
        name = f"w{i}"
        while name in used:
            name += "@"
        used.add(name)
        vertices.append(name)
        for v in sorted(part, key=label_key):
            edges.append((name, v))
    return Graph(vertices, edges)


def random_cw(
    n: int,
    m: int,
    max_f: int,
    max_t: int,
    edge_density: float,
    seed: int,
) -> CWDecomposition:
    """Seeded random Cameron-Walker decomposition in canonical labels.

    The support is a random bipartite spanning tree on n + m vertices
    plus density-controlled extra edges; f_i is uniform in [1, max_f] and
    t_j uniform in [0, max_t].  Draws are adjusted so the built graph is
    a genuine Cameron-Walker graph: a right vertex of support degree 1
    must carry a triangle (otherwise it would read as a leaf), which with
    n = 1 forces at least one triangle in total.
    """
    if n < 1 or m < 1:
        raise InvalidParams("need n >= 1 and m >= 1")
    if max_f < 1 or max_t < 0:
        raise InvalidParams("need max_f >= 1 and max_t >= 0")
    if not 0.0 <= edge_density <= 1.0:
        raise InvalidParams("edge_density must lie in [0, 1]")
    if n == 1 and max_t == 0:
        raise InvalidParams(
            "n = 1 with max_t = 0 can only produce stars; allow triangles"
        )
    rng = random.Random(seed)

    # Random spanning tree of the bipartite support, then extra edges.
    tree: set[tuple[int, int]] = {(0, 0)}
    left_in, right_in = [0], [0]
    pool = [("L", i) for i in range(1, n)] + [("R", j) for j in range(1, m)]
    rng.shuffle(pool)
    for side, idx in pool:
        if side == "L":
            tree.add((idx, rng.choice(right_in)))
            left_in.append(idx)
        else:
            tree.add((rng.choice(left_in), idx))
            right_in.append(idx)
    support_pairs = set(tree)
    for i in range(n):
        for j in range(m):
            if (i, j) not in support_pairs and rng.random() < edge_density:
                support_pairs.add((i, j))

    if max_t == 0:
        # Right vertices of support degree 1 would degenerate into leaves.
        for j in range(m):
            deg = sum(1 for i in range(n) if (i, j) in support_pairs)
            if deg == 1:
                (i0,) = [i for i in range(n) if (i, j) in support_pairs]
                others = [i for i in range(n) if i != i0]
                support_pairs.add((rng.choice(others), j))

    f_counts = [rng.randint(1, max_f) for _ in range(n)]
    t_counts = []
    for j in range(m):
        deg = sum(1 for i in range(n) if (i, j) in support_pairs)
        t = rng.randint(0, max_t)
        if deg == 1 and t == 0:
            t = rng.randint(1, max_t)
        t_counts.append(t)

    # Canonical right order: triangle-bearing vertices first.
    right_order = sorted(range(m), key=lambda j: (0 if t_counts[j] else 1, j))
    rank = {j: pos for pos, j in enumerate(right_order)}

    left = tuple(f"x{i + 1}" for i in range(n))
    right = tuple(f"y{pos + 1}" for pos in range(m))
    support = Graph(
        left + right,
        [(f"x{i + 1}", f"y{rank[j] + 1}") for i, j in support_pairs],
    )
    leaf_map = {
        f"x{i + 1}": tuple(f"z{i + 1}_{l + 1}" for l in range(f_counts[i]))
        for i in range(n)
    }
    triangle_map = {
        f"y{rank[j] + 1}": tuple(
            (f"w{rank[j] + 1}_{k + 1}+", f"w{rank[j] + 1}_{k + 1}-")
            for k in range(t_counts[j])
        )
        for j in range(m)
    }
    dec = CWDecomposition(support, left, right, leaf_map, triangle_map)
    dec.validate()
    return dec
