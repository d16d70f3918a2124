"""Edge-ideal invariants through their combinatorial characterizations.

Everything here reduces to exact combinatorics: minimal vertex covers
are complements of maximal independent sets, Cohen-Macaulayness of a
Cameron-Walker graph is the one-leaf/one-triangle shape, the
Cohen-Macaulay type is 2^m (certified by counting maximal independent
sets of a derived subgraph), and regularity comes from im = m.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .complexes import (
    COMPLEX_VERTEX_CAP,
    independence_complex,
    is_vertex_decomposable_graph,
)
from .errors import (
    InvalidDecomposition,
    NotCameronWalker,
    NotCohenMacaulay,
    NotInFamily,
    SizeGuard,
)
from .graph import Graph, label_key, sorted_labels
from .matchings import induced_matching_number, matching_number
from .structure import (
    TAG_CAMERON_WALKER,
    TAG_STAR,
    TAG_STAR_TRIANGLE,
    Classification,
    CWDecomposition,
    build_cw,
    classify,
)


def minimal_vertex_covers(g: Graph, cap: int = COMPLEX_VERTEX_CAP):
    """All minimal vertex covers: complements of the independence facets."""
    cx = independence_complex(g, cap=cap)
    vset = set(g.vertices)
    covers = [sorted_labels(vset - f) for f in cx.facets]
    return tuple(sorted(covers, key=lambda c: tuple(label_key(v) for v in c)))


def is_unmixed(g: Graph, cap: int = COMPLEX_VERTEX_CAP) -> bool:
    """True iff all minimal vertex covers share one cardinality."""
    return len({len(c) for c in minimal_vertex_covers(g, cap=cap)}) <= 1


def _is_vertex_cover(g: Graph, cover: set) -> bool:
    return all(u in cover or v in cover for u, v in g.edges)


def _is_minimal_vertex_cover(g: Graph, cover: set) -> bool:
    if not _is_vertex_cover(g, cover):
        return False
    return all(not _is_vertex_cover(g, cover - {v}) for v in cover)


def cw_witness_covers(dec: CWDecomposition):
    """The three minimal vertex covers of a Cameron-Walker graph, in the
    canonical labels of build_cw:

    (i)   all left vertices plus both degree-2 vertices of every triangle;
    (ii)  all right vertices, all leaves, one degree-2 vertex per triangle;
    (iii) all left vertices, the triangle-bearing right vertices, and one
          degree-2 vertex per triangle.
    """
    dec.validate()
    canon = dec.canonicalize()
    xs = set(canon.left)
    ys = set(canon.right)
    zs = {z for x in canon.left for z in canon.leaf_map[x]}
    w_both = set()
    w_first = set()
    for y in canon.right:
        for a, b in canon.triangle_map[y]:
            w_both.update((a, b))
            w_first.add(a)
    bearing = {y for y in canon.right if canon.triangle_map[y]}
    return (
        frozenset(xs | w_both),
        frozenset(ys | zs | w_first),
        frozenset(xs | bearing | w_first),
    )


def cw_cover_cardinalities(dec: CWDecomposition) -> tuple[int, int, int]:
    """(n + 2t, m + f + t, n + m' + t); the witness covers are checked to
    be minimal vertex covers of the built graph."""
    dec.validate()
    g = build_cw(dec)
    covers = cw_witness_covers(dec)
    triple = (
        dec.n + 2 * dec.t,
        dec.m + dec.f + dec.t,
        dec.n + dec.m_prime + dec.t,
    )
    for cover, size in zip(covers, triple):
        if len(cover) != size or not _is_minimal_vertex_cover(g, set(cover)):
            raise InvalidDecomposition("witness cover failed its minimality check")
    return triple


def is_cm_cw(dec: CWDecomposition) -> bool:
    """Cohen-Macaulay iff exactly one leaf per left vertex and exactly one
    pendant triangle per right vertex."""
    dec.validate()
    return all(f == 1 for f in dec.f_counts) and all(t == 1 for t in dec.t_counts)


def g_prime(dec: CWDecomposition) -> Graph:
    """Induced subgraph of the built graph on the left vertices, the right
    vertices, and one fixed triangle vertex (the '+') per right vertex.

    Only defined for Cohen-Macaulay decompositions.
    """
    if not is_cm_cw(dec):
        raise NotCohenMacaulay("the derived subgraph needs a Cohen-Macaulay shape")
    g = build_cw(dec)
    keep = [f"x{i}" for i in range(1, dec.n + 1)]
    keep += [f"y{j}" for j in range(1, dec.m + 1)]
    keep += [f"w{j}_1+" for j in range(1, dec.m + 1)]
    return g.induced_subgraph(keep)


def cm_type_cw(dec: CWDecomposition, cap: int = COMPLEX_VERTEX_CAP, verify="auto") -> int:
    """Cohen-Macaulay type 2^m, certified by counting the maximal
    independent sets of the derived subgraph.

    verify="auto" runs the count when the derived graph fits the cap and
    silently degrades to the bare formula beyond it; True forces the
    count (SizeGuard beyond the cap); False skips it.
    """
    if not is_cm_cw(dec):
        raise NotCohenMacaulay("Cohen-Macaulay type needs a Cohen-Macaulay graph")
    value = 2**dec.m
    if verify is True or (verify == "auto" and dec.n + 2 * dec.m <= cap):
        count = len(independence_complex(g_prime(dec), cap=cap).facets)
        assert count == value, "independent-set count disagrees with 2^m"
    return value


def is_gorenstein_cw(dec: CWDecomposition) -> bool:
    """Gorenstein means Cohen-Macaulay of type 1; the type is 2^m >= 2, so
    this is always False."""
    dec.validate()
    return is_cm_cw(dec) and cm_type_cw(dec) == 1


def independence_domination_number(g: Graph, cap: int = COMPLEX_VERTEX_CAP):
    """Minimum size of an independent set whose closed neighbourhood covers
    the graph; equals the minimum facet size of the independence complex.
    Returns (value, canonical witness)."""
    cx = independence_complex(g, cap=cap)
    best = min(cx.facets, key=lambda f: (len(f), tuple(label_key(v) for v in sorted(f, key=label_key))))
    return len(best), sorted_labels(best)


def projective_dimension_cw(g: Graph, cap: int = COMPLEX_VERTEX_CAP) -> int:
    """|V| minus the independence domination number, for Cameron-Walker graphs."""
    cls = classify(g)
    if cls.tag != TAG_CAMERON_WALKER:
        raise NotCameronWalker(f"projective dimension formula needs a Cameron-Walker graph, got {cls.tag}")
    i_g, _ = independence_domination_number(g, cap=cap)
    return g.vertex_count - i_g


def regularity_cw(g: Graph) -> int:
    """Regularity for the im = m families, where the sandwich
    im <= reg <= m pins it to the common value."""
    cls = classify(g)
    if cls.tag not in (TAG_STAR, TAG_STAR_TRIANGLE, TAG_CAMERON_WALKER):
        raise NotInFamily(f"regularity is only pinned down for im = m graphs, got {cls.tag}")
    m, _ = matching_number(g)
    im, _ = induced_matching_number(g)
    assert im == m, "family member with im != m; classification bug"
    return m


_REPORT_FIELDS = (
    "im",
    "m",
    "classification",
    "unmixed",
    "cover_cardinalities",
    "cm",
    "cm_type",
    "gorenstein",
    "vertex_decomposable",
    "sequentially_cm",
    "i_g",
    "pd",
    "reg",
)


@dataclass
class InvariantReport:
    """All invariants of one graph; inapplicable fields are None with a
    reason recorded under the same name."""

    im: int | None = None
    m: int | None = None
    classification: Classification | None = None
    unmixed: bool | None = None
    cover_cardinalities: tuple[int, ...] | None = None
    cm: bool | None = None
    cm_type: int | None = None
    gorenstein: bool | None = None
    vertex_decomposable: bool | None = None
    sequentially_cm: bool | None = None
    i_g: int | None = None
    pd: int | None = None
    reg: int | None = None
    reasons: dict[str, str] = field(default_factory=dict)
    partial: bool = False

    def to_json(self) -> str:
        payload: dict = {}
        for name in _REPORT_FIELDS:
            value = getattr(self, name)
            if name == "classification" and value is not None:
                value = json.loads(value.to_json())
            if name == "cover_cardinalities" and value is not None:
                value = list(value)
            payload[name] = value
            if value is None and name in self.reasons:
                payload[f"{name}_reason"] = self.reasons[name]
        payload["partial"] = self.partial
        return json.dumps(payload)


def full_report(g: Graph, cap: int = COMPLEX_VERTEX_CAP) -> InvariantReport:
    """Aggregate every invariant; size-guarded fields degrade to None."""
    rep = InvariantReport()

    def guarded(name, fn):
        try:
            setattr(rep, name, fn())
        except SizeGuard as exc:
            rep.reasons[name] = str(exc)
            rep.partial = True

    guarded("m", lambda: matching_number(g)[0])
    guarded("im", lambda: induced_matching_number(g)[0])
    guarded("classification", lambda: classify(g))
    cls = rep.classification
    dec = cls.decomposition if cls is not None else None

    guarded("unmixed", lambda: is_unmixed(g, cap=cap))
    guarded(
        "cover_cardinalities",
        lambda: tuple(sorted(len(c) for c in minimal_vertex_covers(g, cap=cap))),
    )

    if dec is not None:
        guarded("cm", lambda: is_cm_cw(dec))
        if rep.cm:
            guarded("cm_type", lambda: cm_type_cw(dec, cap=cap))
            if dec.n + 2 * dec.m > cap:
                rep.reasons["cm_type"] = "formula only; derived graph exceeds the cap"
            rep.gorenstein = is_gorenstein_cw(dec)
        else:
            rep.reasons["cm_type"] = "not Cohen-Macaulay"
            rep.gorenstein = False
    else:
        for name in ("cm", "cm_type", "gorenstein"):
            rep.reasons[name] = "only computed for Cameron-Walker graphs"

    guarded("vertex_decomposable", lambda: is_vertex_decomposable_graph(g, cap=cap)[0])
    if rep.vertex_decomposable:
        rep.sequentially_cm = True
    else:
        rep.reasons["sequentially_cm"] = "no vertex-decomposability certificate"

    guarded("i_g", lambda: independence_domination_number(g, cap=cap)[0])
    if dec is not None:
        if rep.i_g is not None:
            rep.pd = g.vertex_count - rep.i_g
        else:
            rep.reasons["pd"] = rep.reasons.get("i_g", "size guard")
            rep.partial = True
    else:
        rep.reasons["pd"] = "only computed for Cameron-Walker graphs"

    if cls is not None and cls.tag in (TAG_STAR, TAG_STAR_TRIANGLE, TAG_CAMERON_WALKER):
        if rep.m is not None and rep.im is not None:
            rep.reg = rep.m
        else:
            rep.reasons["reg"] = "size guard on the matching invariants"
            rep.partial = True
    else:
        rep.reasons["reg"] = "regularity is only pinned down when im = m"

    return rep
