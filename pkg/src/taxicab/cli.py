"""Command-line front end.

Exit codes: 0 when something was found (or everything verified), 2 on bad
usage, 3 when a well-formed query finds nothing (or a verification fails).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import registry
from .arith import MATERIALIZE_LIMIT, Factorization, factorize, parse_factors
from .cabtaxi import decompose_difference, signed_decompositions
from .cubeform import decompose, median_congruence_ok, solve_h
from .identities import CATALOG, UnknownIdentity, check_identity, sweep
from .taxisearch import (
    CheckpointMismatch,
    InvalidSeed,
    SearchCheckpoint,
    max_multiplier_bound,
    record_from_value,
    search_range,
    taxicab_lower_bound,
)

EXIT_OK, EXIT_USAGE, EXIT_NONE = 0, 2, 3


class UsageError(Exception):
    pass


def _natural(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _factors_for(N: int, text: str | None) -> Factorization | None:
    if text is None:
        return None
    try:
        F = parse_factors(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if F.value != N:
        raise UsageError("factor list does not multiply to N")
    return F


def _print_decomposition(N: int, d) -> None:
    print(f"DECOMP N={N} x={d.x} y={d.y} sign={'+' if d.sign > 0 else '-'}")


def cmd_decompose(args) -> int:
    N, n = args.N, args.power
    if N < 1 or n < 3 or n % 2 == 0:
        raise UsageError("need N >= 1 and odd power >= 3")
    if args.signed and n != 3:
        raise UsageError("--signed is only defined for cubes")
    F = _factors_for(N, args.factors)
    if args.signed:
        decs = signed_decompositions(N, F)
    else:
        if F is not None and N % 2:
            F = F * Factorization(((2, n),))
        decs = decompose(N, n, F) if N >= 2 else []
    for d in decs:
        _print_decomposition(N, d)
    return EXIT_OK if decs else EXIT_NONE


def _seed_record(text: str):
    if text in registry.REGISTRY or text in registry.ALIASES:
        try:
            return registry.entry_record(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not text.isdigit():
        raise UsageError(f"unknown seed label {text!r}")
    N = int(text)
    if N < 2 or N % 2:
        raise UsageError("a numeric seed must be even")
    rec = record_from_value(N)
    if not rec.ways:
        raise UsageError("seed has no representation")
    return rec


def cmd_search(args) -> int:
    T = _seed_record(args.seed)
    if not 2 <= args.start <= args.stop <= max_multiplier_bound(T):
        raise UsageError(f"range must lie in [2, {max_multiplier_bound(T)}]")
    checkpoint = None
    if args.checkpoint and os.path.exists(args.checkpoint):
        try:
            checkpoint = SearchCheckpoint.load(args.checkpoint)
        except ValueError as exc:
            raise UsageError(f"{args.checkpoint}: {exc}") from None

    def report(M, rec):
        if rec is not None:
            print(f"FOUND M={M} ways={rec.ways} value={rec.value}", flush=True)

    try:
        hits = search_range(
            T, args.start, args.stop, checkpoint, args.prime_only, args.workers,
            args.checkpoint, on_result=report,
        )
    except (CheckpointMismatch, InvalidSeed) as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK if hits else EXIT_NONE


def verify_entry(e: registry.RegistryEntry) -> str | None:
    """Return None if the entry is consistent, else a short reason."""
    n, N = e.power, e.value
    if len(e.pairs) != e.ways or len(set(e.pairs)) != e.ways:
        return "pair count differs from ways"
    for x, y in e.pairs:
        if not 0 < x < y:
            return f"pair ({x}, {y}) not ordered"
        if x**n + y**n != N:
            return f"{x}^{n} + {y}^{n} != value"
    # Recover each pair through its median: N itself, or 2^n N for odd N.
    lifted, scale = (N, 1) if N % 2 == 0 else (N << n, 2)
    medians = set()
    for x, y in e.pairs:
        m, h = scale * (x + y) // 2, scale * (y - x) // 2
        if lifted % m or not median_congruence_ok(m, lifted, n) or solve_h(lifted, m, n) != h:
            return f"median {m} not recovered"
        medians.add(m)
    if len(medians) != e.ways:
        return "medians not distinct"
    F = registry.entry_factorization(e.label)
    if N % 2:
        F = F * Factorization(((2, n),))
    if F.divisor_count() <= MATERIALIZE_LIMIT:
        full = [(d.x, d.y) for d in decompose(N, n, F)]
        if full != sorted(e.pairs):
            return f"full decomposition finds {len(full)} pairs"
    return None


def cmd_verify(args) -> int:
    if args.entry is not None:
        if args.entry not in registry.REGISTRY and args.entry not in registry.ALIASES:
            raise UsageError(f"unknown entry {args.entry!r}")
        entries = [registry.resolve(args.entry)]
    else:
        entries = list(registry.REGISTRY.values())
    ok = True
    for e in entries:
        reason = verify_entry(e)
        if reason is None:
            print(f"OK {e.label}")
        else:
            ok = False
            print(f"FAIL {e.label} {reason}")
    return EXIT_OK if ok else EXIT_NONE


def _format_params(params) -> str:
    return ",".join(map(str, params))


def cmd_identity(args) -> int:
    if args.all:
        if args.grid is None or args.grid < 0:
            raise UsageError("--all needs --grid k with k >= 0")
        names = list(CATALOG)
        cases = [c for name in names for c in sweep(name, args.grid)]
        failed = [c for c in cases if not c.holds]
        for c in failed:
            print(f"IDENTITY {c.name} params={_format_params(c.params)} FAIL")
        for name in names:
            mine = [c for c in cases if c.name == name]
            bad = sum(not c.holds for c in mine)
            degenerate = sum(c.degenerate for c in mine)
            status = "FAIL" if bad else "OK"
            print(f"IDENTITY {name} grid={args.grid} cases={len(mine)} degenerate={degenerate} {status}")
        return EXIT_OK if not failed else EXIT_NONE
    if args.name is None or args.params is None:
        raise UsageError("identity needs --name and --params, or --all --grid k")
    try:
        params = tuple(int(p) for p in args.params.split(","))
        case = check_identity(args.name, params)
    except UnknownIdentity:
        raise UsageError(f"unknown identity {args.name!r}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    status = "DEGENERATE" if case.degenerate else ("OK" if case.holds else "FAIL")
    print(f"IDENTITY {case.name} params={_format_params(case.params)} {status}")
    return EXIT_OK if case.holds else EXIT_NONE


def cmd_bounds(args) -> int:
    try:
        print(taxicab_lower_bound(args.power, args.ways))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_cabtaxi(args) -> int:
    N = args.N
    if N < 1:
        raise UsageError("need N >= 1")
    F = _factors_for(N, args.factors) or factorize(N)
    decs = signed_decompositions(N, F) if N >= 2 else decompose_difference(N, F)
    print(f"CABTAXI N={N} order={len(decs)}")
    for d in decs:
        _print_decomposition(N, d)
    return EXIT_OK if decs else EXIT_NONE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="taxicab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="sums (or differences) of two equal odd powers")
    p.add_argument("N", type=_natural)
    p.add_argument("--power", type=int, default=3)
    p.add_argument("--signed", action="store_true", help="also list x^3 - y^3 = N")
    p.add_argument("--factors", help="factorization of N as p1^e1,p2^e2,...")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("search", help="scan cubic multipliers of a seed")
    p.add_argument("--seed", required=True, help="registry label or even number")
    p.add_argument("--from", dest="start", type=_natural, required=True)
    p.add_argument("--to", dest="stop", type=_natural, required=True)
    p.add_argument("--prime-only", action="store_true")
    p.add_argument("--checkpoint", help="checkpoint file, resumed if present")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="recheck the registry of known numbers")
    p.add_argument("--entry")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identity", help="check parametric identities exactly")
    p.add_argument("--name")
    p.add_argument("--params")
    p.add_argument("--all", action="store_true")
    p.add_argument("--grid", type=int)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("bounds", help="lower bound for a k-way even number")
    p.add_argument("--power", type=int, default=3)
    p.add_argument("--ways", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cabtaxi", help="signed two-cube representations of N")
    p.add_argument("N", type=_natural)
    p.add_argument("--factors")
    p.set_defaults(func=cmd_cabtaxi)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
