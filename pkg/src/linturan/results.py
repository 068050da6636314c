"""Persistent store for computed extremal values.

One JSON object per line, append-only.  A record is keyed by
(n, r, pattern, host); re-running a computation appends a fresh line
rather than rewriting history, and lookups resolve the duplicates: an
exact record always beats an interrupted one, later records beat earlier
ones of the same status.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any, Iterator, Optional

from .errors import FormatError
from .hypergraph import Hypergraph, make_hypergraph

__all__ = ["ResultRecord", "ResultsStore"]

_FIELDS = ("n", "r", "pattern", "host", "value", "status", "witness", "nodes", "elapsed")


@dataclass(frozen=True)
class ResultRecord:
    n: int
    r: int
    pattern: Optional[str]  # canonical pattern expression, None = unconstrained
    host: str  # "linear" | "general"
    value: int
    status: str  # "exact" | "interrupted"
    witness: dict  # hypergraph JSON object
    nodes: int
    elapsed: float

    @property
    def key(self) -> tuple:
        return (self.n, self.r, self.pattern, self.host)

    def witness_graph(self) -> Hypergraph:
        return make_hypergraph(
            self.witness["n"],
            [tuple(e) for e in self.witness["edges"]],
            self.witness.get("r"),
        )

    def to_obj(self) -> dict[str, Any]:
        return {name: getattr(self, name) for name in _FIELDS}

    @classmethod
    def from_obj(cls, obj: Any) -> "ResultRecord":
        if not isinstance(obj, dict):
            raise FormatError(f"result record must be an object, got {obj!r}")
        missing = [name for name in _FIELDS if name not in obj]
        if missing:
            raise FormatError(f"result record missing {missing}")
        return cls(**{name: obj[name] for name in _FIELDS})


class ResultsStore:
    """JSON Lines store; safe to point several runs at the same file."""

    def __init__(self, path: str):
        self.path = path
        self._records: list[ResultRecord] = []
        if os.path.exists(path):
            with open(path, "r", encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, start=1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        obj = json.loads(line)
                    except json.JSONDecodeError as exc:
                        raise FormatError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
                    self._records.append(ResultRecord.from_obj(obj))

    def __len__(self) -> int:
        return len(self._records)

    def add(self, record: ResultRecord) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(record.to_obj(), sort_keys=True) + "\n")
        self._records.append(record)

    def best(
        self, n: int, r: int, pattern: Optional[str], host: str
    ) -> Optional[ResultRecord]:
        """Resolve duplicates for one key: exact beats interrupted, then
        the latest line wins."""
        key = (n, r, pattern, host)
        found: Optional[ResultRecord] = None
        for rec in self._records:
            if rec.key != key:
                continue
            if found is None or rec.status == "exact" or found.status != "exact":
                found = rec
        return found

    def entries(self) -> Iterator[ResultRecord]:
        """The resolved record for every key, in sorted key order."""
        keys = sorted({rec.key for rec in self._records}, key=lambda k: (k[0], k[1], str(k[2]), k[3]))
        for n, r, pattern, host in keys:
            rec = self.best(n, r, pattern, host)
            if rec is not None:
                yield rec
