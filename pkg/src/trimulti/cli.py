"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 domain rejection,
3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from . import io
from .constructors import CONSTRUCTIONS, realize
from .errors import (
    EmptyBenchmark,
    EmptyInput,
    LimitExceeded,
    NegativeEntry,
    NotRealizable,
    Overflow,
    PreconditionViolated,
    RetryBudgetExceeded,
    ZeroDegreePresent,
)
from .generate import bench_realize, generate_valid_sequence
from .oracle import exists_simple_realization, exists_triangular_realization, proposition_census
from .sequence import canonicalize, check_erdos_gallai, check_triangular_conditions

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_sequence(text: str) -> List[int]:
    """Comma- or whitespace-separated integers, or a path to a file containing them."""
    if os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise UsageError("empty degree sequence")
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise UsageError(f"not an integer sequence: {text.strip()!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _err(msg: str) -> None:
    print(f"trimulti: {msg}", file=sys.stderr)


def _realize_one(raw: List[int], fmt: str, sorted_order: bool, construction: str = "auto"):
    s = canonicalize(raw)
    g, cert = realize(s, original_order=not sorted_order, construction=construction)
    degrees = s.degrees.tolist() if sorted_order else list(raw)
    doc = io.RealizationDocument.from_realization(g, degrees, cert, verified=True)
    return io.emit(doc, fmt)


def _rejection(report) -> dict:
    return {"error": "NotRealizable", "reason": report.first_failure(), "report": report.to_dict()}


def cmd_realize(args) -> int:
    raw = parse_sequence(args.sequence)
    try:
        out = _realize_one(raw, args.format, args.sorted, args.construction)
    except NotRealizable as exc:
        print(_dump(_rejection(exc.report)))
        _err(str(exc))
        return EXIT_DOMAIN
    except PreconditionViolated as exc:
        print(_dump({"error": "PreconditionViolated", "reason": exc.which}))
        _err(str(exc))
        return EXIT_DOMAIN
    sys.stdout.write(out)
    return EXIT_OK


def cmd_batch(args) -> int:
    """One sequence per line in, one JSON document (or rejection) per line out."""
    worst = EXIT_OK
    with open(args.path) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            try:
                raw = parse_sequence(line)
                sys.stdout.write(_realize_one(raw, "json", args.sorted))
            except NotRealizable as exc:
                print(_dump(_rejection(exc.report)))
                worst = max(worst, EXIT_DOMAIN)
            except (UsageError, EmptyInput, NegativeEntry, Overflow) as exc:
                print(_dump({"error": type(exc).__name__, "line": lineno, "message": str(exc)}))
                worst = max(worst, EXIT_USAGE)
    return worst


def cmd_check(args) -> int:
    raw = parse_sequence(args.sequence)
    s = canonicalize(raw)
    if args.erdos_gallai:
        try:
            report = check_erdos_gallai(s)
        except ZeroDegreePresent as exc:
            print(_dump({"error": "ZeroDegreePresent", "reason": "zero_degree"}))
            _err(str(exc))
            return EXIT_DOMAIN
        ok = bool(report.erdos_gallai_ok)
        reason = None if ok else "erdos_gallai"
        requested = ["erdos_gallai"]
    else:
        report = check_triangular_conditions(s)
        ok = report.triangular_ok
        reason = report.first_failure()
        requested = ["ordering", "parity", "d1_bound", "min_degree"]
    doc = {"ok": ok, "reason": reason, "requested": requested, **report.to_dict()}
    print(_dump(doc))
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_oracle(args) -> int:
    if args.census is not None:
        rows = proposition_census(args.census, deadline=args.deadline)
        print("n,exists,nodes_explored")
        for r in rows:
            print(f"{r.n},{str(r.exists).lower()},{r.nodes_explored}")
        return EXIT_OK
    if args.sequence is None:
        raise UsageError("oracle needs a sequence or --census N")
    raw = parse_sequence(args.sequence)
    if args.simple:
        result = exists_simple_realization(raw, deadline=args.deadline)
    else:
        if any(x < 1 for x in raw):
            raise UsageError("oracle degrees must be positive")
        result = exists_triangular_realization(raw, max_n=args.max_n, max_sum=args.max_sum,
                                               deadline=args.deadline)
    print(_dump(result.to_dict()))
    return EXIT_OK


def cmd_generate(args) -> int:
    s = generate_valid_sequence(args.seed, (args.n_min, args.n_max), (args.d_min, args.d_max))
    print(",".join(str(x) for x in s.tolist()))
    return EXIT_OK


def cmd_bench(args) -> int:
    report = bench_realize(args.n, args.trials, seed=args.seed)
    print(_dump(report.to_dict()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="trimulti", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("realize", help="construct a triangular multigraph")
    r.add_argument("sequence", help="comma-separated degrees or a file containing them")
    r.add_argument("--format", choices=io.FORMATS, default="json")
    r.add_argument("--sorted", action="store_true",
                   help="label vertices in sorted-degree order instead of input order")
    r.add_argument("--construction", choices=CONSTRUCTIONS, default="auto",
                   help="force one construction family (default: automatic)")
    r.set_defaults(func=cmd_realize)

    b = sub.add_parser("batch", help="realize one sequence per line of a file (JSON lines)")
    b.add_argument("path")
    b.add_argument("--sorted", action="store_true")
    b.set_defaults(func=cmd_batch)

    c = sub.add_parser("check", help="evaluate the realizability conditions")
    c.add_argument("sequence")
    c.add_argument("--erdos-gallai", action="store_true",
                   help="check graphicality (simple graphs) instead")
    c.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="exhaustive search at small n")
    o.add_argument("sequence", nargs="?")
    o.add_argument("--census", type=int, metavar="N", help="all-3 sequences for n = 3..N (CSV)")
    o.add_argument("--simple", action="store_true", help="search simple graphs only")
    o.add_argument("--max-n", type=int, default=None)
    o.add_argument("--max-sum", type=int, default=None)
    o.add_argument("--deadline", type=float, default=None, help="seconds")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("generate", help="print a random valid sequence")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n-min", type=int, default=3)
    g.add_argument("--n-max", type=int, default=20)
    g.add_argument("--d-min", type=int, default=4)
    g.add_argument("--d-max", type=int, default=20)
    g.set_defaults(func=cmd_generate)

    bn = sub.add_parser("bench", help="time realize on random sequences of length n")
    bn.add_argument("--n", type=int, default=10**6)
    bn.add_argument("--trials", type=int, default=5)
    bn.add_argument("--seed", type=int, default=0)
    bn.set_defaults(func=cmd_bench)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(_dump({"error": "LimitExceeded", "what": exc.what}))
        _err(str(exc))
        return EXIT_LIMIT
    except (UsageError, EmptyInput, NegativeEntry, Overflow, EmptyBenchmark,
            RetryBudgetExceeded, ValueError, OSError) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
