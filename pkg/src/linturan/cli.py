"""Command-line surface.

Subcommands: build, check, turan, bound, verify, report.  Exit codes are
part of the interface: 0 the property holds / the command succeeded, 2 a
property failed or a pattern was found (a witness is printed), 3 a search
budget ran out, 1 usage or internal errors.

Budgets may come from flags, the LINTURAN_NODE_LIMIT / LINTURAN_TIME_LIMIT
environment variables, or a config file, in that order of precedence.
Semantic parameters are flags only.  --seed is accepted everywhere for
interface stability and ignored: every algorithm here is exact.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import bounds as bounds_mod
from .constructions import (
    cone_construction,
    thm45_construction,
    thm47_construction,
)
from .designs import DEFAULT_PRIME_CAP, build_design, verify_design
from .detect import contains
from .endsets import verify_frame_sweep
from .errors import (
    BadParameters,
    FormatError,
    HostContainsPath,
    InterruptedSearch,
    InvariantViolation,
    LinturanError,
    NoDesignAvailable,
)
from .hgio import read_file, write_file
from .hypergraph import (
    cartesian_product,
    integer_lattice,
    is_linear,
    linearity_violation,
)
from .oracle import SearchBudget, ex_table, max_edges
from .patterns import parse_pattern, realize
from .results import ResultsStore

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_INTERRUPTED = 3

ENV_NODE_LIMIT = "LINTURAN_NODE_LIMIT"
ENV_TIME_LIMIT = "LINTURAN_TIME_LIMIT"

_CONFIG_KEYS = {
    "node_limit",
    "time_limit",
    "prime_cap",
    "search_cap",
    "deterministic",
    "output_dir",
    "format",
}


@dataclass(frozen=True)
class Config:
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None
    prime_cap: int = DEFAULT_PRIME_CAP
    search_cap: Optional[int] = None
    deterministic: bool = True
    output_dir: str = "."
    format: str = "text"


def load_config(path: Optional[str]) -> Config:
    if path is None:
        return Config()
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: config must be a JSON object")
    unknown = sorted(set(obj) - _CONFIG_KEYS)
    if unknown:
        raise BadParameters(f"{path}: unknown config keys {unknown}")
    for cap in ("node_limit", "time_limit", "prime_cap", "search_cap"):
        if obj.get(cap) is not None and obj[cap] <= 0:
            raise BadParameters(f"{path}: {cap} must be positive")
    if obj.get("format", "text") not in ("text", "structured"):
        raise BadParameters(f"{path}: format must be 'text' or 'structured'")
    return Config(**obj)


def _budget(args, config: Config) -> SearchBudget:
    node = args.node_limit
    if node is None and os.environ.get(ENV_NODE_LIMIT):
        node = int(os.environ[ENV_NODE_LIMIT])
    if node is None:
        node = config.node_limit
    wall = args.time_limit
    if wall is None and os.environ.get(ENV_TIME_LIMIT):
        wall = float(os.environ[ENV_TIME_LIMIT])
    if wall is None:
        wall = config.time_limit
    return SearchBudget(node_limit=node, time_limit=wall)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; this interface reserves 2
    # for property failures, so route usage problems through BadParameters
    def error(self, message):
        raise BadParameters(message)


def _structured(args, config: Config) -> bool:
    fmt = getattr(args, "report_format", None) or config.format
    return fmt == "structured"


def _emit(obj, text: str, structured: bool) -> None:
    if structured:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _write_graph(h, args, config: Config) -> None:
    if args.out:
        path = args.out
        if not os.path.isabs(path):
            path = os.path.join(config.output_dir, path)
        write_file(h, path, fmt=args.graph_format)
    else:
        write_file(h, sys.stdout, fmt=args.graph_format)


def _pattern(expr: str, default_r: Optional[int]):
    return parse_pattern(expr, default_r=default_r)


# ---------------------------------------------------------------------------
# build


def _cmd_build(args, config: Config) -> int:
    kind = args.what
    if kind in ("path", "star", "cycle"):
        letter = {"path": "P", "star": "S", "cycle": "C"}[kind]
        pattern = _pattern(f"{letter}{args.ell}", args.r)
        _write_graph(realize(pattern), args, config)
        return EXIT_OK
    if kind == "forest":
        pattern = _pattern(args.pattern, args.r)
        _write_graph(realize(pattern), args, config)
        return EXIT_OK
    if kind == "lattice":
        _write_graph(integer_lattice(args.base, args.dim), args, config)
        return EXIT_OK
    if kind == "product":
        left = read_file(args.left)
        right = read_file(args.right)
        _write_graph(cartesian_product(left, right), args, config)
        return EXIT_OK
    if kind == "design":
        outcome = build_design(
            args.n, args.r, prime_cap=config.prime_cap,
            search_cap=config.search_cap,
        )
        if not outcome.ok:
            print(f"no design: {outcome.reason}", file=sys.stderr)
            return EXIT_FAIL
        design = outcome.design
        _emit(
            {"n": design.n, "r": design.r, "blocks": design.num_blocks,
             "strategy": design.strategy},
            f"design on {design.n} points, block size {design.r}, "
            f"{design.num_blocks} blocks ({design.strategy})",
            _structured(args, config),
        )
        _write_graph(design.graph, args, config)
        return EXIT_OK
    if kind == "thm45":
        report = thm45_construction(args.r, args.ell, args.n, certify=not args.no_certify)
    elif kind == "thm47":
        report = thm47_construction(
            args.r, args.ell, args.k, args.copies, certify=not args.no_certify
        )
    elif kind == "cone":
        kernel = read_file(args.kernel)
        pattern = _pattern(args.pattern, args.r) if args.pattern else None
        report = cone_construction(args.n, args.r, args.k, kernel, free_pattern=pattern)
    else:  # pragma: no cover - argparse restricts choices
        raise BadParameters(f"unknown build target {kind!r}")
    _emit(report.to_obj(), str(report), _structured(args, config))
    if args.out:
        _write_graph(report.result, args, config)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check


def _cmd_check(args, config: Config) -> int:
    h = read_file(args.infile)
    structured = _structured(args, config)
    if args.what == "linear":
        pair = linearity_violation(h)
        if pair is None:
            _emit({"linear": True}, "linear", structured)
            return EXIT_OK
        _emit(
            {"linear": False, "witness": list(pair)},
            f"not linear: edges {pair[0]} and {pair[1]} share two or more vertices",
            structured,
        )
        return EXIT_FAIL
    if args.what == "design":
        if verify_design(h):
            _emit({"design": True}, "design: every pair covered exactly once", structured)
            return EXIT_OK
        _emit({"design": False}, "not a design", structured)
        return EXIT_FAIL
    if args.what == "free":
        pattern = _pattern(args.pattern, h.r)
        emb = contains(h, pattern)
        if emb is None:
            _emit({"free": True, "pattern": str(pattern)}, f"free of {pattern}", structured)
            return EXIT_OK
        _emit(
            {"free": False, "witness": emb.to_obj()},
            f"contains {pattern}: witness {json.dumps(emb.to_obj())}",
            structured,
        )
        return EXIT_FAIL
    raise BadParameters(f"unknown check {args.what!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# turan


def _cmd_turan(args, config: Config) -> int:
    pattern = _pattern(args.pattern, args.r) if args.pattern else None
    host = "linear" if args.linear else "general"
    budget = _budget(args, config)
    store = ResultsStore(args.results) if args.results else None
    result = ex_table([(args.n, args.r, pattern)], host, budget, store)[0]
    structured = _structured(args, config)
    if structured:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "r": args.r,
                    "pattern": str(pattern) if pattern else None,
                    "host": host,
                    "value": result.value,
                    "status": result.status,
                    "nodes": result.stats.nodes,
                },
                sort_keys=True,
            )
        )
    else:
        print(result.value)
    if args.witness_out:
        write_file(result.witness, args.witness_out, fmt=args.graph_format)
    if not result.exact:
        print("search interrupted; value is a lower bound", file=sys.stderr)
        return EXIT_INTERRUPTED
    return EXIT_OK


# ---------------------------------------------------------------------------
# bound


def _need(args, *names) -> list:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = ", ".join("--" + name.replace("_", "-") for name in missing)
        raise BadParameters(f"bound --theorem {args.theorem} needs {flags}")
    return [getattr(args, name) for name in names]


def _bound_reports(args) -> list:
    t = args.theorem
    if t == "linear-path":
        r, ell, n = _need(args, "r", "ell", "n")
        return [bounds_mod.linear_path_upper(r, ell, n)]
    if t == "star-forest":
        r, ell, k, n = _need(args, "r", "ell", "k", "n")
        return [bounds_mod.star_forest_upper(r, ell, k, n)]
    if t == "path-star-forest":
        r, ell, n = _need(args, "r", "ell", "n")
        lengths = [int(x) for x in args.lengths.split(",")] if args.lengths else []
        return [bounds_mod.path_star_forest_upper(r, ell, lengths, n)]
    if t == "packing":
        r, ell, n = _need(args, "r", "ell", "n")
        return [bounds_mod.packing_lower(r, ell, n)]
    if t == "removal":
        r, ell, k, n = _need(args, "r", "ell", "k", "n")
        return [bounds_mod.removal_upper(r, ell, k, n, path_free_max=args.ex)]
    if t == "inserted-product":
        r, ell, k, n = _need(args, "r", "ell", "k", "n")
        return [bounds_mod.inserted_product_lower(r, ell, k, n)]
    if t == "path-turan":
        r, ell, n = _need(args, "r", "ell", "n")
        return [bounds_mod.path_turan_exact(r, ell, n)]
    if t == "disjoint-paths-turan":
        r, ell, k, n = _need(args, "r", "ell", "k", "n")
        return [bounds_mod.disjoint_paths_turan(r, ell, k, n)]
    if t == "star-turan":
        r, ell, n = _need(args, "r", "ell", "n")
        return [bounds_mod.star_turan_upper(r, ell, n, c=args.c)]
    if t == "path-star-turan":
        r, ell, k, n = _need(args, "r", "ell", "k", "n")
        return list(bounds_mod.path_star_turan(r, ell, k, n, c=args.c))
    if t == "forest-turan":
        r, ell, k1, k2, n = _need(args, "r", "ell", "k1", "k2", "n")
        return list(bounds_mod.forest_turan(r, ell, k1, k2, n, c=args.c))
    raise BadParameters(f"unknown theorem id {t!r}")


def _cmd_bound(args, config: Config) -> int:
    reports = _bound_reports(args)
    structured = _structured(args, config)
    if structured:
        print(json.dumps([rep.to_obj() for rep in reports], sort_keys=True))
    else:
        for rep in reports:
            print(rep)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _cmd_verify_section2(args, config: Config) -> int:
    h = read_file(args.infile)
    structured = _structured(args, config)
    try:
        sweep = verify_frame_sweep(h, args.ell, h.r)
    except HostContainsPath as exc:
        obj = {"status": "host-contains-path"}
        if exc.witness is not None:
            obj["witness"] = exc.witness.to_obj()
        _emit(obj, f"host contains the forbidden path: {exc}", structured)
        return EXIT_FAIL
    if structured:
        print(
            json.dumps(
                {
                    "status": sweep.status,
                    "embeddings_checked": sweep.embeddings_checked,
                    "failures": [
                        {
                            "embedding": rep.emb.to_obj(),
                            "outcomes": [
                                {"name": o.name, "detail": o.detail}
                                for o in rep.failures
                            ],
                        }
                        for rep in sweep.failures
                    ],
                },
                sort_keys=True,
            )
        )
    else:
        print(
            f"{sweep.status}: {sweep.embeddings_checked} embeddings checked, "
            f"{len(sweep.failures)} failures"
        )
        for rep in sweep.failures:
            for outcome in rep.failures:
                print(f"  {outcome.name}: {outcome.detail}")
            print(f"    embedding: {json.dumps(rep.emb.to_obj())}")
    # "not-applicable" is not a failed property, just an out-of-range ell/r
    return EXIT_FAIL if sweep.status == "fail" else EXIT_OK


_CONSTRUCTION_PARAMS = {
    "thm45": ("r", "ell", "n"),
    "thm47": ("r", "ell", "k", "copies"),
    "cone": ("n", "r", "k", "kernel"),
}


def _cmd_verify_construction(args, config: Config) -> int:
    structured = _structured(args, config)
    missing = [p for p in _CONSTRUCTION_PARAMS[args.which] if getattr(args, p) is None]
    if missing:
        flags = ", ".join("--" + p for p in missing)
        raise BadParameters(f"verify construction --which {args.which} needs {flags}")
    try:
        if args.which == "thm45":
            report = thm45_construction(args.r, args.ell, args.n, certify=True)
        elif args.which == "thm47":
            report = thm47_construction(args.r, args.ell, args.k, args.copies, certify=True)
        else:
            kernel = read_file(args.kernel)
            pattern = _pattern(args.pattern, args.r) if args.pattern else None
            report = cone_construction(args.n, args.r, args.k, kernel, free_pattern=pattern)
    except InvariantViolation as exc:
        _emit({"verified": False, "error": str(exc)}, f"verification failed: {exc}", structured)
        return EXIT_FAIL
    _emit(
        {"verified": True, "report": report.to_obj()},
        str(report),
        structured,
    )
    return EXIT_OK


def _suite_checks():
    from .patterns import linear_path

    yield (
        "designs 7,9,13,15 build and verify",
        lambda: all(
            build_design(n, 3).ok and verify_design(build_design(n, 3).design.graph)
            for n in (7, 9, 13, 15)
        ),
    )
    yield (
        "designs 6,8 inadmissible",
        lambda: all(
            not build_design(n, 3).ok
            and build_design(n, 3).reason == "inadmissible"
            for n in (6, 8)
        ),
    )
    yield (
        "matching numbers n=3..8",
        lambda: [
            max_edges(n, 3, parse_pattern("P2@r3"), "linear").value for n in range(3, 9)
        ] == [1, 1, 1, 2, 2, 2],
    )
    yield (
        "lattice shapes",
        lambda: (integer_lattice(4, 2).n, integer_lattice(4, 2).edge_count) == (16, 8),
    )
    yield (
        "pinned bound values",
        lambda: (
            bounds_mod.linear_path_upper(3, 4, 100).value == 600
            and bounds_mod.linear_path_upper(5, 2, 12).value == 2
            and bounds_mod.star_forest_upper(3, 2, 1, 10).value == Fraction(10, 3)
            and bounds_mod.path_turan_exact(3, 5, 10).value == 64
            and bounds_mod.path_turan_exact(3, 4, 10).value == 43
            and bounds_mod.disjoint_paths_turan(3, 1, 2, 10).value == 64
        ),
    )
    yield (
        "design-copy construction certifies",
        lambda: thm45_construction(3, 4, 7).actual == 7,
    )
    yield (
        "path cap dominates small exact values",
        lambda: all(
            max_edges(n, 3, parse_pattern("P4@r3"), "linear").value
            <= bounds_mod.linear_path_upper(3, 4, n).value
            for n in range(3, 7)
        ),
    )


def _cmd_verify_suite(args, config: Config) -> int:
    failures = 0
    for name, check in _suite_checks():
        try:
            ok = check()
        except LinturanError as exc:
            ok = False
            name = f"{name} ({exc})"
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failures += 0 if ok else 1
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# report


def _cmd_report(args, config: Config) -> int:
    store = ResultsStore(args.results)
    structured = _structured(args, config)
    rows = []
    for rec in store.entries():
        if rec.status != "exact":
            continue  # only exact results are worth collating
        bound_txt = ""
        try:
            if rec.pattern and rec.host == "linear":
                pat = parse_pattern(rec.pattern)
                single = pat.single("path")
                if single is not None and single >= 2:
                    bound_txt = str(bounds_mod.linear_path_upper(rec.r, single, rec.n).value)
        except LinturanError:
            bound_txt = ""
        rows.append(
            {
                "n": rec.n,
                "r": rec.r,
                "pattern": rec.pattern or "-",
                "host": rec.host,
                "value": rec.value,
                "bound": bound_txt or "-",
            }
        )
    if structured:
        print(json.dumps(rows, sort_keys=True))
        return EXIT_OK
    header = f"{'n':>4} {'r':>3}  {'pattern':<14} {'host':<8} {'value':>6}  {'cap':>8}"
    print(header)
    print("-" * len(header))
    for row in rows:
        print(
            f"{row['n']:>4} {row['r']:>3}  {row['pattern']:<14} "
            f"{row['host']:<8} {row['value']:>6}  {row['bound']:>8}"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", default=None, help="JSON config file")
    p.add_argument("--seed", type=int, default=None,
                   help="accepted and ignored; algorithms are exact")
    p.add_argument("--report-format", choices=("text", "structured"), default=None,
                   help="report object rendering (default from config)")
    p.add_argument("--graph-format", choices=("text", "json"), default="text",
                   help="interchange format for graph output")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--time-limit", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="linturan", description=__doc__,
                  formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = top.add_subparsers(dest="command", required=True)

    pb = sub.add_parser("build", help="construct hosts and witnesses")
    bsub = pb.add_subparsers(dest="what", required=True)
    for kind in ("path", "star", "cycle"):
        sp = bsub.add_parser(kind)
        sp.add_argument("--ell", type=int, required=True)
        sp.add_argument("--r", type=int, required=True)
        sp.add_argument("--out", default=None)
        _add_common(sp)
        sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("forest")
    sp.add_argument("--pattern", required=True)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("lattice")
    sp.add_argument("--base", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("product")
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("design")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("thm45")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--no-certify", action="store_true")
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("thm47")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--copies", type=int, required=True)
    sp.add_argument("--no-certify", action="store_true")
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)
    sp = bsub.add_parser("cone")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kernel", required=True, help="kernel hypergraph file")
    sp.add_argument("--pattern", default=None, help="pattern to certify absent")
    sp.add_argument("--out", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_build)

    pc = sub.add_parser("check", help="verify properties of a host file")
    csub = pc.add_subparsers(dest="what", required=True)
    for kind in ("linear", "design", "free"):
        sp = csub.add_parser(kind)
        sp.add_argument("--in", dest="infile", required=True)
        if kind == "free":
            sp.add_argument("--pattern", required=True)
        _add_common(sp)
        sp.set_defaults(func=_cmd_check)

    pt = sub.add_parser("turan", help="exact extremal edge count by search")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--r", type=int, required=True)
    pt.add_argument("--pattern", default=None)
    pt.add_argument("--linear", action="store_true")
    pt.add_argument("--results", default=None, help="append to this results file")
    pt.add_argument("--witness-out", default=None)
    _add_budget(pt)
    _add_common(pt)
    pt.set_defaults(func=_cmd_turan)

    pd = sub.add_parser("bound", help="evaluate closed-form bounds")
    pd.add_argument("--theorem", required=True, help=(
        "one of linear-path, star-forest, path-star-forest, packing, removal, "
        "inserted-product, path-turan, disjoint-paths-turan, star-turan, "
        "path-star-turan, forest-turan"
    ))
    pd.add_argument("--r", type=int, default=None)
    pd.add_argument("--ell", type=int, default=None)
    pd.add_argument("--n", type=int, default=None)
    pd.add_argument("--k", type=int, default=None)
    pd.add_argument("--k1", type=int, default=None)
    pd.add_argument("--k2", type=int, default=None)
    pd.add_argument("--lengths", default=None, help="comma-separated star lengths")
    pd.add_argument("--ex", type=Fraction, default=None,
                    help="known extremal value to splice in (fraction)")
    pd.add_argument("--c", type=Fraction, default=Fraction(1),
                    help="constant factor for the star cap")
    _add_common(pd)
    pd.set_defaults(func=_cmd_bound)

    pv = sub.add_parser("verify", help="run verification batteries")
    vsub = pv.add_subparsers(dest="what", required=True)
    sp = vsub.add_parser("section2", help="end-edge-set checks over all path embeddings")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--ell", type=int, required=True)
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify_section2)
    sp = vsub.add_parser("construction")
    sp.add_argument("--which", choices=("thm45", "thm47", "cone"), required=True)
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--ell", type=int, default=None)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--k", type=int, default=None)
    sp.add_argument("--copies", type=int, default=None)
    sp.add_argument("--kernel", default=None)
    sp.add_argument("--pattern", default=None)
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify_construction)
    sp = vsub.add_parser("suite", help="fast self-checks")
    _add_common(sp)
    sp.set_defaults(func=_cmd_verify_suite)

    pr = sub.add_parser("report", help="collate a results file")
    pr.add_argument("--results", required=True)
    _add_common(pr)
    pr.set_defaults(func=_cmd_report)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = load_config(getattr(args, "config", None))
        return args.func(args, config)
    except InterruptedSearch as exc:
        print(f"interrupted: {exc}", file=sys.stderr)
        return EXIT_INTERRUPTED
    except (BadParameters, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LinturanError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
