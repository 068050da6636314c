"""Lower-bound witness constructions.

Three families: disjoint copies of a pairwise-balanced design, the
design-times-lattice product with hub vertices inserted into the thin
edges, and cones (all edges meeting a fresh vertex set over a kernel).
Each builder returns a ConstructionReport holding the graph, the nominal
formula value it chases, the achieved edge count, and freeness
certificates that were actually verified, never assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .bounds import inserted_product_lower, packing_lower
from .designs import Design, build_design, is_admissible, require_design
from .detect import contains
from .errors import BadParameters, InvariantViolation, NoDesignAvailable
from .hypergraph import (
    PLAIN,
    Hypergraph,
    cartesian_product,
    connected_components,
    inserted,
    integer_lattice,
    is_linear,
    make_hypergraph,
    remove_vertices,
)
from .patterns import (
    ForbiddenPattern,
    PatternComponent,
    forest,
    linear_path,
)

# enumeration guard for cone hosts: C(n, r) capped here
CONE_ENUMERATION_CAP = 2_000_000

FALLBACK_NOTE = "fallback block count"
PADDING_NOTE = "isolated padding vertices"
NOT_LINEAR_NOTE = "result is not linear"


@dataclass(frozen=True)
class FreenessCertificate:
    """A pattern verified absent from a construction, and how."""

    pattern: ForbiddenPattern
    method: str  # "detect" | "structural"

    def to_obj(self) -> dict:
        return {"pattern": str(self.pattern), "method": self.method}


@dataclass(frozen=True)
class ConstructionReport:
    name: str
    params: tuple[tuple[str, object], ...]
    result: Hypergraph
    nominal: Fraction
    actual: int
    linear: bool
    certificates: tuple[FreenessCertificate, ...]
    caveats: tuple[str, ...]

    def to_obj(self) -> dict:
        return {
            "name": self.name,
            "params": {k: _obj(v) for k, v in self.params},
            "vertices": self.result.n,
            "nominal": str(self.nominal),
            "nominal_float": float(self.nominal),
            "actual": self.actual,
            "linear": self.linear,
            "certificates": [c.to_obj() for c in self.certificates],
            "caveats": list(self.caveats),
        }

    def __str__(self) -> str:
        lines = [
            f"{self.name}: {self.result.n} vertices, {self.actual} edges "
            f"(nominal {self.nominal}){'' if self.linear else ' [not linear]'}"
        ]
        for cert in self.certificates:
            lines.append(f"  free of {cert.pattern} ({cert.method})")
        for note in self.caveats:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def _obj(value: object) -> object:
    if isinstance(value, Fraction):
        return str(value)
    return value


def _finish(name, params, result, nominal, certificates, caveats) -> ConstructionReport:
    return ConstructionReport(
        name=name,
        params=tuple(params),
        result=result,
        nominal=nominal,
        actual=result.edge_count,
        linear=is_linear(result),
        certificates=tuple(certificates),
        caveats=tuple(caveats),
    )


def fallback_block_count(r: int, ell: int, limit: Optional[int] = None) -> Design:
    """Largest buildable design on at most ell*(r-1) points (and at most
    ``limit`` when given).  The ideal point count ell*(r-1) itself never
    passes the admissibility test for r >= 3, hence the fallback."""
    top = ell * (r - 1)
    if limit is not None:
        top = min(top, limit)
    for m in range(top, r - 1, -1):
        if not is_admissible(m, r):
            continue
        outcome = build_design(m, r)
        if outcome.ok:
            return outcome.design
    raise NoDesignAvailable(
        f"no design with at most {top} points exists for block size {r}"
    )


def thm45_construction(r: int, ell: int, n: int, certify: bool = True) -> ConstructionReport:
    """Disjoint design copies: a linear host with no loose ell-path.

    Fills n vertices with floor(n/m) copies of the fallback design on m
    points plus isolated padding.  Freeness is structural (every component
    has m <= ell*(r-1) vertices, one fewer than the path needs) and
    rechecked by search when ``certify`` is set.
    """
    if r < 3 or ell < 4:
        raise BadParameters(f"need r >= 3 and ell >= 4, got r={r}, ell={ell}")
    if n < r:
        raise NoDesignAvailable(f"no design fits on {n} < {r} vertices")
    design = fallback_block_count(r, ell, limit=n)
    m = design.n
    copies = n // m
    edges = []
    for c in range(copies):
        off = c * m
        edges.extend(tuple(v + off for v in e) for e in design.graph.edges)
    result = make_hypergraph(n, edges, r=r)

    caveats = []
    if m != ell * (r - 1):
        caveats.append(
            f"{FALLBACK_NOTE}: {m} points per block copy instead of {ell * (r - 1)}"
        )
    if n % m != 0:
        caveats.append(f"{PADDING_NOTE}: {n % m}")

    pattern = linear_path(ell, r)
    certificates = [FreenessCertificate(pattern, "structural")]
    if certify:
        if contains(result, pattern) is not None:
            raise InvariantViolation(
                "design copies too small for the path, yet one was found"
            )
        certificates.append(FreenessCertificate(pattern, "detect"))

    nominal = packing_lower(r, ell, n).value
    params = [("r", r), ("ell", ell), ("n", n), ("m", m), ("copies", copies)]
    return _finish("thm45", params, result, nominal, certificates, caveats)


def _hub_core(k: int, r: int) -> Hypergraph:
    # k = 1 is the empty design on one point: no pairs to cover
    if k == 1:
        return make_hypergraph(1, [], r=r)
    if k < r:
        raise NoDesignAvailable(f"no design on {k} points with block size {r}")
    return require_design(k, r).graph


def _structural_forest_premises(
    result: Hypergraph, k: int, ell: int, r: int, m: int, blocks: int
) -> None:
    """Check the facts behind the hub-counting freeness argument.

    Removing the k hubs must leave exactly ``blocks`` components, each a
    copy of the m-point design: too few vertices for the path and too low
    a degree for the star.  Then each of the k+1 forest components would
    need its own hub vertex.
    """
    rest = remove_vertices(result, range(k))
    comps = connected_components(rest)
    if len(comps) != blocks or any(len(c) != m for c in comps):
        raise InvariantViolation(
            f"hub removal left {[len(c) for c in comps]} instead of "
            f"{blocks} components of {m} vertices"
        )
    if any(len(c) >= ell * (r - 1) + 1 for c in comps):
        raise InvariantViolation("a component is large enough to hold the path")
    if rest.edge_count and rest.max_degree() >= ell:
        raise InvariantViolation("a component is dense enough to hold the star")


def thm47_construction(
    r: int, ell: int, k: int, copies: int, certify: bool = True
) -> ConstructionReport:
    """Hub-inserted product: a linear host avoiding a path plus k stars.

    Builds a design on k hub vertices, then ``copies`` instances of
    (m-point design) x (k-dimensional lattice over r-1 points); every thin
    lattice edge in direction i absorbs hub i, restoring order r.  Each
    forbidden-forest component would need a hub of its own, and there are
    only k hubs against k+1 components.
    """
    if r < 3 or ell < 4 or k < 1 or copies < 0:
        raise BadParameters(
            f"need r >= 3, ell >= 4, k >= 1, copies >= 0, "
            f"got r={r}, ell={ell}, k={k}, copies={copies}"
        )
    hub_core = _hub_core(k, r)
    design = fallback_block_count(r, ell)
    m = design.n
    lattice = integer_lattice(r - 1, k)
    product = cartesian_product(design.graph, lattice)
    block_n = product.n

    edges = list(hub_core.edges)
    labels = [PLAIN] * len(edges)
    for c in range(copies):
        off = k + c * block_n
        for j, e in enumerate(product.edges):
            shifted = tuple(v + off for v in e)
            label = product.labels[j]
            if label.kind == "axis":
                edges.append(tuple(sorted(shifted + (label.index,))))
                labels.append(inserted(label.index))
            else:
                edges.append(shifted)
                labels.append(PLAIN)
    n = k + copies * block_n
    result = make_hypergraph(n, edges, r=r, labels=labels)
    if not is_linear(result):
        raise InvariantViolation("hub insertion broke linearity")

    pattern = forest(
        [PatternComponent("path", ell)] + [PatternComponent("star", ell)] * k, r
    )
    blocks = copies * (r - 1) ** k
    _structural_forest_premises(result, k, ell, r, m, blocks)
    certificates = [FreenessCertificate(pattern, "structural")]
    if certify:
        if contains(result, pattern) is not None:
            raise InvariantViolation(
                "hub-counting argument holds, yet the forest was found"
            )
        certificates.append(FreenessCertificate(pattern, "detect"))

    caveats = []
    if m != ell * (r - 1):
        caveats.append(
            f"{FALLBACK_NOTE}: {m} points per design instance instead of {ell * (r - 1)}"
        )
    nominal = inserted_product_lower(r, ell, k, n).value
    params = [
        ("r", r), ("ell", ell), ("k", k), ("copies", copies), ("m", m), ("n", n),
    ]
    return _finish("thm47", params, result, nominal, certificates, caveats)


def cone_construction(
    n: int,
    r: int,
    k: int,
    kernel: Hypergraph,
    free_pattern: Optional[ForbiddenPattern] = None,
) -> ConstructionReport:
    """All r-subsets meeting k fresh vertices, on top of a kernel.

    The hub set occupies vertices 0..k-1 and the kernel is shifted behind
    it; the edge count is C(n,r) - C(n-k,r) + |E(kernel)| exactly.  Not
    linear in general, and flagged when not.  When ``free_pattern`` is
    given, its absence is checked by search; presence becomes a caveat,
    not an error, since it only means the kernel lacked the assumed
    freeness.
    """
    if k < 1:
        raise BadParameters(f"need at least one cone vertex, got k={k}")
    if n < r:
        raise BadParameters(f"no edges of order {r} fit on {n} vertices")
    if kernel.n != n - k:
        raise BadParameters(
            f"kernel has {kernel.n} vertices, expected n - k = {n - k}"
        )
    if kernel.edge_count and kernel.r != r:
        raise BadParameters(
            f"kernel edges have order {kernel.r}, cone needs {r}"
        )
    if math.comb(n, r) > CONE_ENUMERATION_CAP:
        raise BadParameters(
            f"C({n},{r}) exceeds the enumeration cap {CONE_ENUMERATION_CAP}"
        )

    edges = [e for e in itertools.combinations(range(n), r) if e[0] < k]
    edges.extend(tuple(v + k for v in e) for e in kernel.edges)
    result = make_hypergraph(n, edges, r=r)
    expected = math.comb(n, r) - math.comb(n - k, r) + kernel.edge_count
    if result.edge_count != expected:
        raise InvariantViolation(
            f"cone produced {result.edge_count} edges, formula says {expected}"
        )

    caveats = []
    certificates = []
    linear = is_linear(result)
    if not linear:
        caveats.append(NOT_LINEAR_NOTE)
    if free_pattern is not None:
        if contains(result, free_pattern) is None:
            certificates.append(FreenessCertificate(free_pattern, "detect"))
        else:
            caveats.append(f"pattern {free_pattern} present; no freeness certificate")

    nominal = Fraction(expected)
    params = [("n", n), ("r", r), ("k", k), ("kernel_edges", kernel.edge_count)]
    return _finish("cone", params, result, nominal, certificates, caveats)


__all__ = [
    "ConstructionReport",
    "FreenessCertificate",
    "fallback_block_count",
    "thm45_construction",
    "thm47_construction",
    "cone_construction",
    "CONE_ENUMERATION_CAP",
]
