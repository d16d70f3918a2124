"""Immutable finite simple graphs with string labels.

Vertex labels are opaque strings compared with numeric awareness
("x2" < "x10"); every operation iterates vertices in that order, so
repeated calls on equal inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    Disconnected,
    EmptyGraph,
    LoopEdge,
    ParseError,
    UnknownVertex,
)

_DIGIT_RUN = re.compile(r"(\d+)")


def label_key(label: str):
    """Sort key for labels: runs of digits compare as integers.

    The raw label is appended as a tie-break so distinct labels such as
    "x01" and "x1" still compare unequal.
    """
    parts = _DIGIT_RUN.split(label)
    return tuple(int(p) if i % 2 else p for i, p in enumerate(parts)), label


def sorted_labels(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(labels, key=label_key))


def edge_key(edge: tuple[str, str]):
    u, v = edge
    return (label_key(u), label_key(v))


def canonical_edge(u: str, v: str) -> tuple[str, str]:
    return (u, v) if label_key(u) <= label_key(v) else (v, u)


@dataclass(frozen=True)
class BipartitePartition:
    """Proper 2-coloring of a connected bipartite graph.

    ``left`` is the side containing the canonically smallest vertex.
    """

    left: tuple[str, ...]
    right: tuple[str, ...]


class Graph:
    """Finite simple undirected graph; immutable after construction.

    Vertices without incident edges are allowed; the empty graph is
    allowed here (it arises as an induced subgraph) but rejected by the
    public parsers.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_vset")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vs = sorted_labels(set(vertices))
        adj: dict[str, set[str]] = {v: set() for v in vs}
        es = set()
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop edge at {u!r}")
            for w in (u, v):
                if w not in adj:
                    raise UnknownVertex(f"edge endpoint {w!r} is not a declared vertex")
            es.add(canonical_edge(u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = vs
        self._vset = frozenset(vs)
        self._edges = tuple(sorted(es, key=edge_key))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}

    # -- basic accessors ------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, v: str) -> bool:
        return v in self._vset

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"Graph({len(self._vertices)} vertices, {len(self._edges)} edges)"

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def degree(self, v: str) -> int:
        self._require(v)
        return len(self._adj[v])

    # -- structural primitives ------------------------------------------

    def _require(self, v: str) -> None:
        if v not in self._vset:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def neighborhood(self, v: str, closed: bool = False) -> frozenset[str]:
        """Open neighbourhood N(v), or the closed N[v] = N(v) + {v}."""
        self._require(v)
        if closed:
            return self._adj[v] | {v}
        return self._adj[v]

    def induced_subgraph(self, keep: Iterable[str]) -> "Graph":
        """Subgraph on the kept vertices with all edges inside them."""
        kept = set(keep)
        for v in kept:
            self._require(v)
        edges = [e for e in self._edges if e[0] in kept and e[1] in kept]
        return Graph(kept, edges)

    def delete(self, drop: Iterable[str] | str) -> "Graph":
        """Induced subgraph on the complement of ``drop``."""
        if isinstance(drop, str):
            drop = {drop}
        dropped = set(drop)
        for v in dropped:
            self._require(v)
        return self.induced_subgraph(self._vset - dropped)

    def connected_components(self) -> tuple[tuple[str, ...], ...]:
        """Maximal connected vertex sets, each sorted, listed by smallest member."""
        seen: set[str] = set()
        comps = []
        for root in self._vertices:
            if root in seen:
                continue
            comp = {root}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            comps.append(sorted_labels(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def bipartition(self) -> BipartitePartition | None:
        """2-coloring by breadth-first layering; None if an odd cycle exists.

        Requires a connected graph; the side of the canonically smallest
        vertex is "left".
        """
        if not self._vertices:
            raise Disconnected("the empty graph has no bipartition")
        if not self.is_connected():
            raise Disconnected("bipartition requires a connected graph")
        color = {self._vertices[0]: 0}
        queue = deque([self._vertices[0]])
        while queue:
            u = queue.popleft()
            for w in sorted(self._adj[u], key=label_key):
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
        left = sorted_labels(v for v in self._vertices if color[v] == 0)
        right = sorted_labels(v for v in self._vertices if color[v] == 1)
        return BipartitePartition(left, right)

    def leaves(self) -> tuple[str, ...]:
        """All vertices of degree 1."""
        return sorted_labels(v for v in self._vertices if len(self._adj[v]) == 1)

    def pendant_triangles(self) -> tuple[tuple[str, str, str], ...]:
        """Triangles with two degree-2 vertices hanging off a vertex of degree > 2.

        Each is reported as (c, a, b) where c is the attachment vertex and
        a < b are the degree-2 vertices; sorted by c then (a, b).
        """
        found = []
        for a in self._vertices:
            if len(self._adj[a]) != 2:
                continue
            x, y = sorted(self._adj[a], key=label_key)
            # a's triangle partner is its degree-2 neighbour; the third
            # vertex is the attachment and must have degree > 2.
            for b, c in ((x, y), (y, x)):
                if (
                    len(self._adj[b]) == 2
                    and len(self._adj[c]) > 2
                    and self.has_edge(b, c)
                    and label_key(a) < label_key(b)
                ):
                    found.append((c, a, b))
        found.sort(key=lambda t: (label_key(t[0]), label_key(t[1]), label_key(t[2])))
        return tuple(found)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "vertices": list(self._vertices),
            "edges": [list(e) for e in self._edges],
        }
        return json.dumps(payload)


def from_edge_list(
    pairs: Iterable[tuple[str, str]], isolated: Iterable[str] = ()
) -> Graph:
    """Build a graph from labelled edge pairs plus isolated vertices.

    Duplicate edges collapse; a loop raises LoopEdge; an overall empty
    vertex set raises EmptyGraph.
    """
    pairs = list(pairs)
    vertices = set(isolated)
    for u, v in pairs:
        if not u or not v:
            raise ParseError("vertex labels must be nonempty strings")
        vertices.add(u)
        vertices.add(v)
    if not vertices:
        raise EmptyGraph("a graph needs at least one vertex")
    return Graph(vertices, pairs)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    One edge per line as ``u v``; lines starting with ``#`` are comments;
    ``vertex u`` declares an isolated vertex.
    """
    pairs = []
    isolated = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertex":
            if len(tokens) != 2:
                raise ParseError("expected 'vertex <label>'", lineno)
            isolated.append(tokens[1])
        elif len(tokens) == 2:
            pairs.append((tokens[0], tokens[1]))
        else:
            raise ParseError(f"expected 'u v' or 'vertex u', got {line!r}", lineno)
    if not pairs and not isolated:
        raise EmptyGraph("input declares no vertices")
    return from_edge_list(pairs, isolated)


def parse_graph_json(text: str) -> Graph:
    """Parse the JSON format {"vertices": [...], "edges": [["u","v"], ...]}."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(payload, dict) or "edges" not in payload:
        raise ParseError("graph JSON needs an 'edges' field")
    vertices = payload.get("vertices", [])
    edges = [tuple(e) for e in payload["edges"]]
    for e in edges:
        if len(e) != 2:
            raise ParseError(f"edge {e!r} must have exactly two endpoints")
    vertex_set = set(vertices)
    for u, v in edges:
        vertex_set.add(u)
        vertex_set.add(v)
    if not vertex_set:
        raise EmptyGraph("graph JSON declares no vertices")
    return Graph(vertex_set, edges)
