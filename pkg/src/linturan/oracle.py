"""Exhaustive computation of extremal edge counts on small hosts.

max_edges finds, by branch and bound over lexicographically ordered edge
sets, the maximum number of edges of a pattern-free host on n vertices,
optionally restricted to linear hosts.  It is the ground-truth generator
for everything else in the package: witnesses are re-verified through
detect and is_linear before being returned, never trusted from search
state.

Budgets turn an over-long search into an explicit interrupted result (or
InterruptedSearch for the enumerators, which have no partial answer worth
returning).  The parallelism field is honored as an interface; exploration
is currently serial, which trivially satisfies the requirement that values
not depend on scheduling.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .bounds import linear_path_upper
from .detect import is_free
from .errors import BadParameters, InterruptedSearch, InvariantViolation
from .hgio import dump_json
from .hypergraph import Hypergraph, is_linear, make_hypergraph
from .patterns import ForbiddenPattern, pattern_expr
from .results import ResultRecord, ResultsStore

__all__ = [
    "SearchBudget",
    "SearchStats",
    "OracleResult",
    "max_edges",
    "iter_free",
    "enumerate_free",
    "ex_table",
]

HOSTS = ("linear", "general")


@dataclass(frozen=True)
class SearchBudget:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds
    parallelism: int = 1
    deterministic_witness: bool = True

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise BadParameters(f"node limit must be positive, got {self.node_limit}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise BadParameters(f"time limit must be positive, got {self.time_limit}")
        if self.parallelism < 1:
            raise BadParameters(f"parallelism must be at least 1, got {self.parallelism}")


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: Hypergraph
    status: str  # "exact" | "interrupted"
    stats: SearchStats

    @property
    def exact(self) -> bool:
        return self.status == "exact"


class _Stop(Exception):
    """Internal unwind when a budget limit is reached."""


class _Searcher:
    def __init__(
        self,
        n: int,
        r: int,
        pattern: Optional[ForbiddenPattern],
        host: str,
        budget: SearchBudget,
    ):
        if r < 2:
            raise BadParameters(f"edge order must be at least 2, got {r}")
        if n < r:
            raise BadParameters(f"need n >= r, got n={n}, r={r}")
        if host not in HOSTS:
            raise BadParameters(f"host must be one of {HOSTS}, got {host!r}")
        if pattern is not None and pattern.r != r:
            raise BadParameters(
                f"pattern is {pattern.r}-uniform but the host order is {r}"
            )
        self.n = n
        self.r = r
        self.pattern = pattern
        self.host = host
        self.budget = budget
        self.cands: list[tuple[int, ...]] = list(
            itertools.combinations(range(n), r)
        )
        self.pair_sets: list[frozenset[tuple[int, int]]] = [
            frozenset(itertools.combinations(e, 2)) for e in self.cands
        ]
        self.pairs_per_edge = r * (r - 1) // 2
        self.total_pairs = n * (n - 1) // 2
        self.stats = SearchStats()
        self.start = time.monotonic()

    def tick(self) -> None:
        self.stats.nodes += 1
        b = self.budget
        if b.node_limit is not None and self.stats.nodes > b.node_limit:
            raise _Stop()
        if b.time_limit is not None and self.stats.nodes % 256 == 0:
            if time.monotonic() - self.start > b.time_limit:
                raise _Stop()

    def finish(self) -> None:
        self.stats.elapsed = time.monotonic() - self.start

    def graph(self, chosen: Sequence[int]) -> Hypergraph:
        return make_hypergraph(self.n, [self.cands[i] for i in chosen], self.r)

    def compatible(self, q: int, used_pairs: frozenset) -> bool:
        if self.host == "linear" and self.pair_sets[q] & used_pairs:
            return False
        return True

    def admits(self, chosen: list[int]) -> bool:
        # a config grown one edge at a time from a free config contains the
        # pattern only through its newest edge, so a whole-graph check is an
        # exact implementation of the incremental test
        if self.pattern is None:
            return True
        return is_free(self.graph(chosen), self.pattern)

    def headroom(self, last: int, used_pairs: frozenset) -> int:
        """Optimistic count of further edges: later candidates compatible
        with the current config, additionally capped by leftover pair
        capacity when the host is linear."""
        count = 0
        for q in range(last + 1, len(self.cands)):
            if self.compatible(q, used_pairs):
                count += 1
        if self.host == "linear":
            free_pairs = self.total_pairs - len(used_pairs)
            count = min(count, free_pairs // self.pairs_per_edge)
        return count


def max_edges(
    n: int,
    r: int,
    pattern: Optional[ForbiddenPattern],
    host: str = "linear",
    budget: Optional[SearchBudget] = None,
) -> OracleResult:
    """Exact maximum edge count of a pattern-free host, with witness.

    pattern None means unconstrained (pure packing; only meaningful for
    linear hosts).  The witness is the lexicographically least extremal
    edge set, because the search explores candidates in ascending order
    and only strict improvements replace the incumbent.
    """
    budget = budget or SearchBudget()
    s = _Searcher(n, r, pattern, host, budget)

    best_value = -1
    best_edges: tuple[int, ...] = ()
    interrupted = False

    def dfs(last: int, chosen: list[int], used_pairs: frozenset) -> None:
        nonlocal best_value, best_edges
        s.tick()
        if len(chosen) > best_value:
            best_value = len(chosen)
            best_edges = tuple(chosen)
        if len(chosen) + s.headroom(last, used_pairs) <= best_value:
            return
        for q in range(last + 1, len(s.cands)):
            if not s.compatible(q, used_pairs):
                continue
            chosen.append(q)
            if s.admits(chosen):
                dfs(q, chosen, used_pairs | s.pair_sets[q])
            chosen.pop()

    try:
        dfs(-1, [], frozenset())
    except _Stop:
        interrupted = True
    s.finish()

    witness = s.graph(best_edges)
    _verify_witness(witness, pattern, host, best_value)
    if (
        not interrupted
        and host == "linear"
        and pattern is not None
        and pattern.is_single
        and pattern.components[0].kind == "path"
        and pattern.components[0].length >= 2
        and r >= 3
    ):
        # these path caps hold for every n, so the exact value may never
        # exceed them; a violation is a searcher bug
        cap = linear_path_upper(r, pattern.components[0].length, n)
        if best_value > cap.value:
            raise InvariantViolation(
                f"search value {best_value} exceeds the proven cap {cap.value}"
            )
    return OracleResult(
        value=best_value,
        witness=witness,
        status="interrupted" if interrupted else "exact",
        stats=s.stats,
    )


def _verify_witness(
    witness: Hypergraph, pattern: Optional[ForbiddenPattern], host: str, value: int
) -> None:
    if witness.edge_count != value:
        raise InvariantViolation(
            f"witness has {witness.edge_count} edges, claimed {value}"
        )
    if host == "linear" and not is_linear(witness):
        raise InvariantViolation("witness is not linear")
    if pattern is not None and not is_free(witness, pattern):
        raise InvariantViolation("witness contains the forbidden pattern")


def iter_free(
    n: int,
    r: int,
    pattern: Optional[ForbiddenPattern],
    host: str = "linear",
    edge_count: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
) -> Iterator[Hypergraph]:
    """Every pattern-free host on n labeled vertices, raw (no isomorph
    reduction), in lexicographic edge-set order.

    edge_count restricts to hosts with exactly that many edges; None
    yields every size including the empty host.  Budget overruns raise
    InterruptedSearch: a truncated enumeration has no honest summary.
    """
    budget = budget or SearchBudget()
    s = _Searcher(n, r, pattern, host, budget)
    if edge_count is not None and edge_count < 0:
        raise BadParameters(f"edge count must be nonnegative, got {edge_count}")

    def dfs(last: int, chosen: list[int], used_pairs: frozenset) -> Iterator[Hypergraph]:
        s.tick()
        if edge_count is None:
            yield s.graph(chosen)
        elif len(chosen) == edge_count:
            yield s.graph(chosen)
            return
        elif len(chosen) + s.headroom(last, used_pairs) < edge_count:
            return
        for q in range(last + 1, len(s.cands)):
            if not s.compatible(q, used_pairs):
                continue
            chosen.append(q)
            if s.admits(chosen):
                yield from dfs(q, chosen, used_pairs | s.pair_sets[q])
            chosen.pop()

    try:
        yield from dfs(-1, [], frozenset())
    except _Stop:
        s.finish()
        raise InterruptedSearch(
            f"enumeration exceeded its budget after {s.stats.nodes} nodes"
        ) from None
    s.finish()


def enumerate_free(
    n: int,
    r: int,
    pattern: Optional[ForbiddenPattern],
    host: str = "linear",
    edge_count: Optional[int] = None,
    budget: Optional[SearchBudget] = None,
) -> int:
    """Count of pattern-free hosts; see iter_free for conventions."""
    return sum(1 for _ in iter_free(n, r, pattern, host, edge_count, budget))


def ex_table(
    rows: Sequence[tuple[int, int, Optional[ForbiddenPattern]]],
    host: str = "linear",
    budget: Optional[SearchBudget] = None,
    store: Optional[ResultsStore] = None,
) -> list[OracleResult]:
    """max_edges over a parameter grid of (n, r, pattern) rows.

    With a store, exact results already on file are reused (their
    witnesses re-verified, not trusted) and fresh results are appended,
    so an interrupted batch resumes where it left off.
    """
    out: list[OracleResult] = []
    for n, r, pattern in rows:
        expr = pattern_expr(pattern) if pattern is not None else None
        if store is not None:
            rec = store.best(n, r, expr, host)
            if rec is not None and rec.status == "exact":
                witness = rec.witness_graph()
                _verify_witness(witness, pattern, host, rec.value)
                out.append(
                    OracleResult(
                        value=rec.value,
                        witness=witness,
                        status="exact",
                        stats=SearchStats(nodes=rec.nodes, elapsed=rec.elapsed),
                    )
                )
                continue
        result = max_edges(n, r, pattern, host, budget)
        if store is not None:
            store.add(
                ResultRecord(
                    n=n,
                    r=r,
                    pattern=expr,
                    host=host,
                    value=result.value,
                    status=result.status,
                    witness=json.loads(dump_json(result.witness)),
                    nodes=result.stats.nodes,
                    elapsed=result.stats.elapsed,
                )
            )
        out.append(result)
    return out
