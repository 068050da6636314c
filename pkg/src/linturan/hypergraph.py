"""Finite hypergraphs with integer vertices and set edges.

Vertices of a hypergraph on n points are the integers 0..n-1.  An edge is
stored as a strictly ascending tuple of distinct vertices.  A hypergraph is
either uniform of some order r (every edge has exactly r vertices) or mixed.
Instances are immutable; every constructor normalises edge order and sorts
the edge list lexicographically, so equal hypergraphs compare equal.

A hypergraph is *linear* when any two edges share at most one vertex.
Linearity is a property, not an invariant: non-linear hypergraphs are
first-class values and operations that require linearity check it.

Edges may carry provenance labels (which factor of a product they came
from, which lattice axis, whether a vertex was inserted into them).  A
labelled hypergraph has exactly one label per edge, permuted together with
the edges during normalisation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    BadParameters,
    DuplicateEdge,
    NonUniformEdge,
    OutOfRangeVertex,
    ProductTooLarge,
    RepeatedVertexInEdge,
)

__all__ = [
    "EdgeLabel",
    "PLAIN",
    "left_factor",
    "lattice_axis",
    "inserted",
    "Hypergraph",
    "make_hypergraph",
    "is_linear",
    "linearity_violation",
    "disjoint_union",
    "k_copies",
    "remove_vertices",
    "cartesian_product",
    "integer_lattice",
    "edges_between",
    "VertexPartition",
    "connected_components",
    "DEFAULT_PRODUCT_CAP",
]

# Largest vertex count a product/lattice constructor will produce by default.
DEFAULT_PRODUCT_CAP = 200_000


@dataclass(frozen=True)
class EdgeLabel:
    """Provenance of one edge.

    kind is one of:
      "plain"       no provenance (index is None)
      "left-factor" edge e x {u} of a product; index = u, the right-factor copy
      "axis"        lattice edge along coordinate axis `index`
      "inserted"    edge that received inserted vertex number `index`
    """

    kind: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("plain", "left-factor", "axis", "inserted"):
            raise BadParameters(f"unknown edge label kind {self.kind!r}")
        if (self.index is None) != (self.kind == "plain"):
            raise BadParameters(f"label kind {self.kind!r} used with index={self.index!r}")


PLAIN = EdgeLabel("plain")


def left_factor(copy: int) -> EdgeLabel:
    return EdgeLabel("left-factor", copy)


def lattice_axis(axis: int) -> EdgeLabel:
    return EdgeLabel("axis", axis)


def inserted(color: int) -> EdgeLabel:
    return EdgeLabel("inserted", color)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable hypergraph.  Build instances through make_hypergraph.

    n       number of vertices (vertices are 0..n-1; isolated vertices count)
    edges   lexicographically sorted tuple of ascending vertex tuples
    r       uniform order, or None for a mixed hypergraph
    labels  optional per-edge provenance, parallel to edges
    """

    n: int
    edges: tuple[tuple[int, ...], ...]
    r: Optional[int] = None
    labels: Optional[tuple[EdgeLabel, ...]] = None

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(ds) for ds in inc)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_uniform(self) -> bool:
        return self.r is not None

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise OutOfRangeVertex(f"vertex {v} not in range(0, {self.n})")
        return len(self.incidence[v])

    def degrees(self) -> list[int]:
        return [len(ds) for ds in self.incidence]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def __repr__(self) -> str:  # keep failure output short
        u = f"r={self.r}" if self.r is not None else "mixed"
        return f"Hypergraph(n={self.n}, m={self.edge_count}, {u})"


def make_hypergraph(
    n: int,
    edges: Iterable[Sequence[int]],
    r: Optional[int] = None,
    labels: Optional[Sequence[EdgeLabel]] = None,
) -> Hypergraph:
    """Validate, normalise, and freeze a hypergraph.

    Edges may arrive in any internal order; they are sorted ascending and the
    edge list is sorted lexicographically (labels are permuted alongside).
    Uniformity is explicit: r=None builds a mixed hypergraph even if all
    edges happen to share an order.

    Raises OutOfRangeVertex, RepeatedVertexInEdge, DuplicateEdge,
    NonUniformEdge, or BadParameters.
    """
    if n < 0:
        raise BadParameters(f"vertex count must be nonnegative, got {n}")
    if r is not None and r < 1:
        raise BadParameters(f"uniform order must be positive, got {r}")
    raw = [tuple(e) for e in edges]
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != len(raw):
            raise BadParameters(f"{len(labels)} labels for {len(raw)} edges")
    norm: list[tuple[int, ...]] = []
    for e in raw:
        for v in e:
            if not 0 <= v < n:
                raise OutOfRangeVertex(f"vertex {v} in edge {e} not in range(0, {n})")
        t = tuple(sorted(e))
        if len(set(t)) != len(t):
            raise RepeatedVertexInEdge(f"edge {e} repeats a vertex")
        if r is not None and len(t) != r:
            raise NonUniformEdge(f"edge {e} has order {len(t)}, expected {r}")
        norm.append(t)
    if len(set(norm)) != len(norm):
        seen: set[tuple[int, ...]] = set()
        for t in norm:
            if t in seen:
                raise DuplicateEdge(f"edge {t} appears more than once")
            seen.add(t)
    if labels is None:
        return Hypergraph(n, tuple(sorted(norm)), r)
    order = sorted(range(len(norm)), key=lambda i: norm[i])
    return Hypergraph(
        n,
        tuple(norm[i] for i in order),
        r,
        tuple(labels[i] for i in order),
    )


def linearity_violation(h: Hypergraph) -> Optional[tuple[int, int]]:
    """Indices of some edge pair sharing >= 2 vertices, or None if linear.

    Scans vertex pairs instead of edge pairs: h is linear iff no unordered
    vertex pair lies in two edges.
    """
    seen: dict[tuple[int, int], int] = {}
    for i, e in enumerate(h.edges):
        for p in itertools.combinations(e, 2):
            if p in seen:
                return (seen[p], i)
            seen[p] = i
    return None


def is_linear(h: Hypergraph) -> bool:
    """True when every two edges meet in at most one vertex."""
    return linearity_violation(h) is None


def disjoint_union(hs: Sequence[Hypergraph]) -> Hypergraph:
    """Disjoint union on relabelled vertices; blocks keep input order.

    The i-th input occupies vertices offset..offset+n_i-1.  Uniformity is
    preserved when shared by all inputs, otherwise the result is mixed.
    Labels are kept when any input is labelled (unlabelled edges become plain).
    """
    if not hs:
        raise BadParameters("disjoint_union needs at least one hypergraph")
    rs = {h.r for h in hs}
    r = rs.pop() if len(rs) == 1 else None
    want_labels = any(h.labels is not None for h in hs)
    n = 0
    edges: list[tuple[int, ...]] = []
    labels: list[EdgeLabel] = []
    for h in hs:
        for i, e in enumerate(h.edges):
            edges.append(tuple(v + n for v in e))
            if want_labels:
                labels.append(h.labels[i] if h.labels is not None else PLAIN)
        n += h.n
    return make_hypergraph(n, edges, r, labels if want_labels else None)


def k_copies(h: Hypergraph, k: int) -> Hypergraph:
    """Disjoint union of k copies of h (k >= 1)."""
    if k < 1:
        raise BadParameters(f"copy count must be >= 1, got {k}")
    return disjoint_union([h] * k)


def remove_vertices(h: Hypergraph, drop: Iterable[int]) -> Hypergraph:
    """Delete vertices and every edge meeting them; reindex order-preserving."""
    dropset = frozenset(drop)
    for v in dropset:
        if not 0 <= v < h.n:
            raise OutOfRangeVertex(f"vertex {v} not in range(0, {h.n})")
    keep = [v for v in range(h.n) if v not in dropset]
    newindex = {v: i for i, v in enumerate(keep)}
    edges = []
    labels = [] if h.labels is not None else None
    for i, e in enumerate(h.edges):
        if dropset.isdisjoint(e):
            edges.append(tuple(newindex[v] for v in e))
            if labels is not None:
                labels.append(h.labels[i])
    return make_hypergraph(len(keep), edges, h.r, labels)


def _product_uniformity(h: Hypergraph, g: Hypergraph) -> Optional[int]:
    orders = set()
    if h.edges:
        orders.add(h.r)
    if g.edges:
        orders.add(g.r)
    if not orders:
        return h.r if h.r == g.r else None
    if len(orders) == 1:
        return orders.pop()
    return None


def cartesian_product(
    h: Hypergraph, g: Hypergraph, max_vertices: int = DEFAULT_PRODUCT_CAP
) -> Hypergraph:
    """Cartesian product: vertex (a, u) is encoded as a*|V(g)| + u.

    Edges are e x {u} for e in E(h) (labelled left-factor with copy index u)
    and {a} x f for f in E(g) (carrying over g's label, plain if none).
    The edge count is |E(h)|*|V(g)| + |E(g)|*|V(h)|, and the product of
    linear factors is linear.

    Both factors must be uniform; raises ProductTooLarge past max_vertices.
    """
    if h.r is None or g.r is None:
        raise BadParameters("cartesian_product requires uniform factors")
    n = h.n * g.n
    if n > max_vertices:
        raise ProductTooLarge(f"product would have {n} vertices (cap {max_vertices})")
    edges: list[tuple[int, ...]] = []
    labels: list[EdgeLabel] = []
    for u in range(g.n):
        for e in h.edges:
            edges.append(tuple(a * g.n + u for a in e))
            labels.append(left_factor(u))
    for a in range(h.n):
        for j, f in enumerate(g.edges):
            edges.append(tuple(a * g.n + u for u in f))
            labels.append(g.labels[j] if g.labels is not None else PLAIN)
    return make_hypergraph(n, edges, _product_uniformity(h, g), labels)


def integer_lattice(r: int, d: int, max_vertices: int = DEFAULT_PRODUCT_CAP) -> Hypergraph:
    """The d-dimensional integer lattice on {0..r-1}^d.

    Vertices are the r^d coordinate tuples, encoded big-endian row-major
    (tuple t maps to sum of t[i]*r^(d-1-i)).  For each axis there are
    r^(d-1) edges of order r, one per fixing of the other coordinates;
    each axis class is a perfect matching, every vertex has degree d,
    and the whole lattice is linear.
    """
    if r < 2 or d < 1:
        raise BadParameters(f"lattice needs r >= 2 and d >= 1, got r={r}, d={d}")
    n = r**d
    if n > max_vertices:
        raise ProductTooLarge(f"lattice would have {n} vertices (cap {max_vertices})")
    weights = [r ** (d - 1 - i) for i in range(d)]
    edges: list[tuple[int, ...]] = []
    labels: list[EdgeLabel] = []
    for axis in range(d):
        others = [i for i in range(d) if i != axis]
        for rest in itertools.product(range(r), repeat=d - 1):
            base = sum(rest[j] * weights[others[j]] for j in range(d - 1))
            edges.append(tuple(base + t * weights[axis] for t in range(r)))
            labels.append(lattice_axis(axis))
    return make_hypergraph(n, edges, r, labels)


def edges_between(h: Hypergraph, part: Iterable[int]) -> tuple[int, int, int]:
    """Counts (crossing, inside the part, inside the complement)."""
    u = frozenset(part)
    for v in u:
        if not 0 <= v < h.n:
            raise OutOfRangeVertex(f"vertex {v} not in range(0, {h.n})")
    cross = inside = outside = 0
    for e in h.edge_sets:
        k = len(e & u)
        if k == 0:
            outside += 1
        elif k == len(e):
            inside += 1
        else:
            cross += 1
    return (cross, inside, outside)


class VertexPartition:
    """Named, pairwise disjoint vertex classes over a vertex range.

    The classes need not cover all of 0..n-1.  Mainly a carrier for
    reporting (e.g. a path frame's end/interior/exterior split).
    """

    def __init__(self, n: int, parts: Mapping[str, Iterable[int]]):
        self.n = n
        self.parts: dict[str, frozenset[int]] = {}
        used: set[int] = set()
        for name, vs in parts.items():
            fs = frozenset(vs)
            for v in fs:
                if not 0 <= v < n:
                    raise OutOfRangeVertex(f"vertex {v} not in range(0, {n})")
            if used & fs:
                raise BadParameters(f"partition class {name!r} overlaps another class")
            used |= fs
            self.parts[name] = fs

    def __getitem__(self, name: str) -> frozenset[int]:
        return self.parts[name]

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={sorted(v)}" for k, v in self.parts.items())
        return f"VertexPartition(n={self.n}, {inner})"


def connected_components(h: Hypergraph) -> list[frozenset[int]]:
    """Vertex sets of the components; isolated vertices are singletons."""
    parent = list(range(h.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in h.edges:
        for v in e[1:]:
            ra, rb = find(e[0]), find(v)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, set[int]] = {}
    for v in range(h.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(g) for g in sorted(groups.values(), key=min)]
