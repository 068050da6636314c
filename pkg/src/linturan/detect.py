"""Pattern containment: search a host for loose paths, stars, cycles, and
vertex-disjoint unions of them.

contains(h, pattern) returns an Embedding witnessing the pattern inside the
host, or None when the host is pattern-free.  The search is exact in both
directions and deterministic: re-running it on equal inputs returns the
same witness (edge choices are explored in ascending index order, so the
witness is the first one in that canonical ordering).

An Embedding maps the pattern's minimum realization (see
patterns.realize) into the host; verify_embedding rechecks it against the
host from scratch, so witnesses are independently auditable.

Only host edges of exactly the pattern's order participate; a mixed host
is searched through its order-r edges.  The host does not have to be
linear.  Union patterns are embedded component by component with two
sound prunes: each component type must exist individually, and when k
components remain, deleting any k-1 vertices must leave at least one
remaining type present (pigeonhole over vertex-disjoint copies), so if
greedily deleting the k-1 busiest vertices kills every remaining type the
branch is abandoned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import MalformedEmbedding
from .hypergraph import Hypergraph, is_linear
from .patterns import (
    ForbiddenPattern,
    PatternComponent,
    construction_edges,
    realize,
)

__all__ = [
    "Embedding",
    "contains",
    "iter_embeddings",
    "is_free",
    "verify_embedding",
    "star_presence_linear",
]


@dataclass(frozen=True)
class Embedding:
    """A certified occurrence of a pattern in a host.

    vertex_map[p] is the host vertex for pattern vertex p (numbering of
    realize(pattern)); edge_map[j] is the host edge index whose vertex set
    is the image of pattern edge j (lexicographic edge numbering of the
    realization).
    """

    pattern: ForbiddenPattern
    edge_map: tuple[int, ...]
    vertex_map: tuple[int, ...]

    def to_obj(self) -> dict:
        return {
            "pattern": str(self.pattern),
            "edge_map": list(self.edge_map),
            "vertex_map": list(self.vertex_map),
        }


def verify_embedding(h: Hypergraph, emb: Embedding) -> bool:
    """Recheck an embedding against the host from first principles."""
    ideal = realize(emb.pattern)
    if len(emb.vertex_map) != ideal.n or len(emb.edge_map) != ideal.edge_count:
        return False
    if len(set(emb.vertex_map)) != ideal.n:
        return False
    if len(set(emb.edge_map)) != ideal.edge_count:
        return False
    for v in emb.vertex_map:
        if not 0 <= v < h.n:
            return False
    for j, host_idx in enumerate(emb.edge_map):
        if not 0 <= host_idx < h.edge_count:
            return False
        image = {emb.vertex_map[p] for p in ideal.edges[j]}
        if image != set(h.edges[host_idx]):
            return False
    return True


def _require_valid(h: Hypergraph, emb: Embedding) -> Embedding:
    if not verify_embedding(h, emb):
        raise MalformedEmbedding(f"search produced an invalid embedding {emb.to_obj()!r}")
    return emb


class _Search:
    """One containment query; holds the host's order-r view."""

    def __init__(self, h: Hypergraph, pattern: ForbiddenPattern):
        self.h = h
        self.pattern = pattern
        self.r = pattern.r
        # live positions index only the order-r edges of the host
        self.orig_index: list[int] = [
            i for i, e in enumerate(h.edges) if len(e) == self.r
        ]
        self.sets: list[frozenset[int]] = [h.edge_sets[i] for i in self.orig_index]
        self.incidence: dict[int, list[int]] = {}
        for pos, es in enumerate(self.sets):
            for v in es:
                self.incidence.setdefault(v, []).append(pos)

    # -- single-component generators ------------------------------------
    # Each yields (positions in construction order, local vertex map dict,
    # used host vertices).  Positions are live positions, not host indices.

    def iter_component(
        self, comp: PatternComponent, banned: frozenset[int]
    ) -> Iterator[tuple[list[int], dict[int, int], frozenset[int]]]:
        if comp.kind == "path":
            yield from self._iter_paths(comp.length, banned)
        elif comp.kind == "star":
            yield from self._iter_stars(comp.length, banned)
        else:
            yield from self._iter_cycles(comp.length, banned)

    def _single_edge(self, banned):
        for pos, es in enumerate(self.sets):
            if es & banned:
                continue
            vmap = {p: v for p, v in enumerate(sorted(es))}
            yield [pos], vmap, es

    def _iter_paths(self, ell, banned):
        if ell == 1:
            yield from self._single_edge(banned)
            return
        r = self.r

        def vmap_of(chain, conns):
            vm: dict[int, int] = {}
            first = self.sets[chain[0]]
            for p, v in enumerate(sorted(first - {conns[0]})):
                vm[p] = v
            for i in range(1, ell):
                vm[i * (r - 1)] = conns[i - 1]
            for i in range(2, ell):
                mids = sorted(self.sets[chain[i - 1]] - {conns[i - 2], conns[i - 1]})
                for off, v in enumerate(mids, start=1):
                    vm[(i - 1) * (r - 1) + off] = v
            last = sorted(self.sets[chain[ell - 1]] - {conns[ell - 2]})
            for off, v in enumerate(last, start=1):
                vm[(ell - 1) * (r - 1) + off] = v
            return vm

        def extend(chain, used, conns):
            if len(chain) == ell:
                yield list(chain), vmap_of(chain, conns), frozenset(used)
                return
            last_set = self.sets[chain[-1]]
            prev = conns[-1] if conns else None
            cand: set[int] = set()
            for v in last_set:
                if v == prev:
                    continue
                cand.update(self.incidence.get(v, ()))
            for q in sorted(cand):
                if q in chain:
                    continue
                eq = self.sets[q]
                if eq & banned:
                    continue
                inter = eq & used
                if len(inter) != 1:
                    continue
                (v,) = inter
                if v == prev or v not in last_set:
                    continue
                yield from extend(chain + [q], used | eq, conns + [v])

        for p0 in range(len(self.sets)):
            e0 = self.sets[p0]
            if e0 & banned:
                continue
            yield from extend([p0], set(e0), [])

    def _iter_stars(self, ell, banned):
        if ell == 1:
            yield from self._single_edge(banned)
            return
        r = self.r

        def vmap_of(chosen, centre):
            vm = {0: centre}
            for i, pos in enumerate(chosen):
                leaves = sorted(self.sets[pos] - {centre})
                for off, v in enumerate(leaves, start=1):
                    vm[i * (r - 1) + off] = v
            return vm

        def extend(chosen, centre, used):
            if len(chosen) == ell:
                yield list(chosen), vmap_of(chosen, centre), frozenset(used)
                return
            for q in range(chosen[-1] + 1, len(self.sets)):
                eq = self.sets[q]
                if eq & banned:
                    continue
                if centre is None:
                    inter = eq & used
                    if len(inter) != 1:
                        continue
                    (c,) = inter
                    yield from extend(chosen + [q], c, used | eq)
                else:
                    inter = eq & used
                    if inter != {centre}:
                        continue
                    yield from extend(chosen + [q], centre, used | eq)

        for p0 in range(len(self.sets)):
            e0 = self.sets[p0]
            if e0 & banned:
                continue
            yield from extend([p0], None, set(e0))

    def _iter_cycles(self, ell, banned):
        r = self.r

        def vmap_of(chain, conns, back):
            # back is the vertex shared by the closing edge and chain[0]
            vm = {0: back}
            first = self.sets[chain[0]]
            for off, v in enumerate(sorted(first - {back, conns[0]}), start=1):
                vm[off] = v
            for i in range(1, ell):
                vm[i * (r - 1)] = conns[i - 1]
            for i in range(2, ell):
                mids = sorted(self.sets[chain[i - 1]] - {conns[i - 2], conns[i - 1]})
                for off, v in enumerate(mids, start=1):
                    vm[(i - 1) * (r - 1) + off] = v
            closing = sorted(self.sets[chain[ell - 1]] - {conns[ell - 2], back})
            for off, v in enumerate(closing, start=1):
                vm[(ell - 1) * (r - 1) + off] = v
            return vm

        def extend(p0, chain, used, conns):
            if len(chain) == ell - 1:
                last_set = self.sets[chain[-1]]
                prev = conns[-1]
                first_set = self.sets[chain[0]]
                cand: set[int] = set()
                for v in last_set:
                    if v == prev:
                        continue
                    cand.update(self.incidence.get(v, ()))
                for q in sorted(cand):
                    if q <= p0 or q in chain:
                        continue
                    eq = self.sets[q]
                    if eq & banned:
                        continue
                    inter = eq & used
                    if len(inter) != 2:
                        continue
                    va_set = inter & (last_set - {prev})
                    vb_set = inter & (first_set - {conns[0]})
                    if len(va_set) != 1 or len(vb_set) != 1 or va_set == vb_set:
                        continue
                    (va,) = va_set
                    (vb,) = vb_set
                    full_chain = chain + [q]
                    yield (
                        list(full_chain),
                        vmap_of(full_chain, conns + [va], vb),
                        frozenset(used | eq),
                    )
                return
            last_set = self.sets[chain[-1]]
            prev = conns[-1] if conns else None
            cand = set()
            for v in last_set:
                if v == prev:
                    continue
                cand.update(self.incidence.get(v, ()))
            for q in sorted(cand):
                if q <= p0 or q in chain:
                    continue
                eq = self.sets[q]
                if eq & banned:
                    continue
                inter = eq & used
                if len(inter) != 1:
                    continue
                (v,) = inter
                if v == prev or v not in last_set:
                    continue
                yield from extend(p0, chain + [q], used | eq, conns + [v])

        # the minimum-index edge of any cycle serves as the chain start,
        # so later edges are restricted to larger positions
        for p0 in range(len(self.sets)):
            e0 = self.sets[p0]
            if e0 & banned:
                continue
            yield from extend(p0, [p0], set(e0), [])

    # -- union search -----------------------------------------------------

    def component_present(self, comp: PatternComponent, banned: frozenset[int]) -> bool:
        for _ in self.iter_component(comp, banned):
            return True
        return False

    def _busiest_vertices(self, banned: frozenset[int], k: int) -> frozenset[int]:
        deg: dict[int, int] = {}
        for es in self.sets:
            if es & banned:
                continue
            for v in es:
                deg[v] = deg.get(v, 0) + 1
        ranked = sorted(deg, key=lambda v: (-deg[v], v))
        return frozenset(ranked[:k])

    def _prune_disjoint(self, comps, idx, banned) -> bool:
        """True when the remaining components provably cannot all embed.

        If the remaining k components had disjoint embeddings avoiding
        banned, any k-1 deleted vertices would miss one of them entirely.
        """
        need = len(comps) - idx
        if need < 2:
            return False
        peel = self._busiest_vertices(banned, need - 1)
        blocked = banned | peel
        for comp in set(comps[idx:]):
            if self.component_present(comp, blocked):
                return False
        return True

    def iter_all(self) -> Iterator[Embedding]:
        """Every occurrence of the pattern, in canonical search order.

        Copies of identical components are listed once (assigned in order
        of their smallest host-edge index), not once per permutation.
        """
        comps = self.pattern.components
        if self.pattern.num_vertices > self.h.n:
            return
        if self.pattern.num_edges > len(self.sets):
            return
        for comp in set(comps):
            if not self.component_present(comp, frozenset()):
                return

        chosen: list[tuple[list[int], dict[int, int]]] = []

        def dfs(idx: int, banned: frozenset[int]) -> Iterator[Embedding]:
            if idx == len(comps):
                yield self._assemble(chosen)
                return
            if self._prune_disjoint(comps, idx, banned):
                return
            floor = -1
            if idx > 0 and comps[idx - 1] == comps[idx]:
                floor = min(chosen[idx - 1][0])
            for positions, vmap, used in self.iter_component(comps[idx], banned):
                if min(positions) <= floor:
                    continue
                chosen.append((positions, vmap))
                yield from dfs(idx + 1, banned | used)
                chosen.pop()

        yield from dfs(0, frozenset())

    def find(self) -> Optional[Embedding]:
        return next(self.iter_all(), None)

    def _assemble(self, chosen) -> Embedding:
        ideal = realize(self.pattern)
        index_of = {e: j for j, e in enumerate(ideal.edges)}
        vertex_map = [0] * ideal.n
        edge_map = [0] * ideal.edge_count
        offset = 0
        for k, comp in enumerate(self.pattern.components):
            positions, vmap = chosen[k]
            for local, host_v in vmap.items():
                vertex_map[local + offset] = host_v
            for ci, pe in enumerate(construction_edges(comp, self.r)):
                shifted = tuple(sorted(v + offset for v in pe))
                edge_map[index_of[shifted]] = self.orig_index[positions[ci]]
            offset += comp.vertex_count(self.r)
        return _require_valid(
            self.h, Embedding(self.pattern, tuple(edge_map), tuple(vertex_map))
        )


def star_presence_linear(h: Hypergraph, length: int, r: int) -> bool:
    """Presence of a loose star in a linear host, by degree counting.

    In a linear host, any two edges through a vertex meet exactly there, so
    a star of the given length exists iff some vertex lies in that many
    order-r edges.  Callers must ensure the host is linear.
    """
    deg = [0] * h.n
    for e in h.edges:
        if len(e) != r:
            continue
        for v in e:
            deg[v] += 1
            if deg[v] >= length:
                return True
    return False


def contains(h: Hypergraph, pattern: ForbiddenPattern) -> Optional[Embedding]:
    """Witness of the pattern inside the host, or None when free."""
    single_star = pattern.single("star")
    if single_star is not None and is_linear(h):
        if not star_presence_linear(h, single_star, pattern.r):
            return None
    return _Search(h, pattern).find()


def iter_embeddings(h: Hypergraph, pattern: ForbiddenPattern) -> Iterator[Embedding]:
    """All occurrences of the pattern in the host.

    Paths and cycles appear once per traversal direction; identical union
    components are not permuted among themselves.
    """
    return _Search(h, pattern).iter_all()


def is_free(h: Hypergraph, pattern: ForbiddenPattern) -> bool:
    """True when the host has no occurrence of the pattern."""
    return contains(h, pattern) is None
