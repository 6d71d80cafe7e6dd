"""``vk`` command line front end.

Exit codes: 0 success, 2 parse or validation error, 3 oracle mismatch,
4 property failure (selftest or catalog verification).
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import catalog as cat
from .codec import GaussCodeError, UnknownLabelError, parse_gauss_code, render_gauss_code
from .moves import MoveError, MoveSite, apply_site, scramble_trace
from .report import OracleMismatch, build_report
from .selftest import DEFAULT_SEED, FAULTS, SelftestConfig, run_selftest
from .surgery import linking_number, smooth

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_ORACLE = 3
EXIT_PROPERTY = 4


class InputError(Exception):
    pass


def _read_batch(path: str) -> list[str]:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    out = []
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            out.append(s)
    return out


def _parse(text: str):
    try:
        return parse_gauss_code(text)
    except GaussCodeError as e:
        raise InputError(f"invalid Gauss code {text!r}: {e}") from None


def cmd_invariants(args) -> int:
    if args.file is not None:
        texts = _read_batch(args.file)
    else:
        texts = [args.code or ""]
    codes = [_parse(t) for t in texts]
    # map() keeps input order whatever the completion order
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        reports = list(pool.map(lambda c: build_report(c, oracle=args.oracle), codes))
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload if args.file is not None else payload[0], indent=2))
    else:
        print("\n\n".join(r.text() for r in reports))
    return EXIT_OK


def _labels(spec: str) -> list[str]:
    return [s for s in (x.strip() for x in spec.split(",")) if s]


def cmd_smooth(args) -> int:
    code = _parse(args.code)
    labels = _labels(args.labels)
    try:
        r = smooth(code, labels)
    except UnknownLabelError as e:
        raise InputError(str(e)) from None
    out = {
        "code": render_gauss_code(code),
        "smoothed": sorted(r.smoothed),
        "components": r.link.to_json(),
        "component_count": len(r.link.components),
    }
    if len(r.link.components) == 2:
        L = linking_number(r)
        out["linking_number"] = L
        out["linking_mod2"] = L % 2
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_moves(args) -> int:
    code = _parse(args.code)
    before = build_report(code)
    if args.script is not None:
        try:
            sites = [MoveSite.from_json(o) for o in json.loads(Path(args.script).read_text())]
        except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
            raise InputError(f"cannot read move script: {e}") from None
        after_code = code
        try:
            for site in sites:
                after_code = apply_site(after_code, site)
        except (MoveError, UnknownLabelError, IndexError) as e:
            raise InputError(f"move failed: {e}") from None
    else:
        allowed = _labels(args.allowed)
        try:
            log = scramble_trace(code, args.seed, args.scramble, allowed)
        except ValueError as e:
            raise InputError(str(e)) from None
        sites, after_code = log.sites, log.code
    after = build_report(after_code)
    if args.save_script:
        Path(args.save_script).write_text(json.dumps([s.to_json() for s in sites], indent=1))
    print(json.dumps({
        "code": render_gauss_code(code),
        "result": render_gauss_code(after_code),
        "moves": [s.to_json() for s in sites],
        "before": before.to_json(),
        "after": after.to_json(),
    }, indent=2))
    return EXIT_OK


def cmd_selftest(args) -> int:
    cfg = SelftestConfig(min_n=args.min_n, max_n=args.max_n, count=args.count,
                         seed=args.seed, fault=args.inject_fault)
    summary = run_selftest(cfg)
    print("\n".join(summary.lines()))
    return EXIT_OK if summary.ok else EXIT_PROPERTY


def cmd_catalog(args) -> int:
    try:
        entries = cat.load_catalog()
    except (OSError, cat.CatalogError) as e:
        raise InputError(f"cannot load catalog: {e}") from None
    if args.action == "list":
        for e in entries:
            print(f"{e.name}\t{e.code or '(empty)'}\t{e.note}")
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise InputError("catalog show needs a NAME")
        try:
            e = cat.find(entries, args.name)
        except cat.CatalogError as err:
            raise InputError(str(err)) from None
        report, bad = cat.verify_entry(e)
        print(f"name       {e.name}")
        if e.note:
            print(f"note       {e.note}")
        print(report.text())
        return EXIT_OK
    failed = 0
    for e in entries:
        try:
            _, bad = cat.verify_entry(e)
        except GaussCodeError as err:
            bad = [f"parse: {err}"]
        status = "ok" if not bad else "MISMATCH " + ",".join(bad)
        if e.figure_pending:
            status += " (figure-pending)"
        print(f"{e.name:<20} {status}")
        failed += bool(bad)
    return EXIT_OK if not failed else EXIT_PROPERTY


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vk", description="Linking-number invariants of virtual knots.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("invariants", help="writhe, gamma, gamma_bar, gamma2_bar of a code")
    q.add_argument("code", nargs="?", help="signed Gauss code, e.g. O1-U2-O3-U1-O2-U3-")
    q.add_argument("--file", help="one code per line ('-' for stdin)")
    q.add_argument("--json", action="store_true")
    q.add_argument("--oracle", action="store_true", help="recompute via literal smoothing and compare")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=cmd_invariants)

    q = sub.add_parser("smooth", help="smooth crossings and report the link")
    q.add_argument("code")
    q.add_argument("--labels", required=True, help="comma-separated crossing labels")
    q.set_defaults(func=cmd_smooth)

    q = sub.add_parser("moves", help="apply a move script or a random scramble")
    q.add_argument("code")
    g = q.add_mutually_exclusive_group(required=True)
    g.add_argument("--script", help="JSON array of move sites")
    g.add_argument("--scramble", type=int, metavar="N", help="number of random moves")
    q.add_argument("--allowed", default="r2,r3", help="move types for --scramble (r1,r2,r3)")
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--save-script", help="write the applied moves as a replayable script")
    q.set_defaults(func=cmd_moves)

    q = sub.add_parser("selftest", help="property scan over random codes")
    q.add_argument("--min-n", type=int, default=0)
    q.add_argument("--max-n", type=int, default=8)
    q.add_argument("--count", type=int, default=200)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--inject-fault", choices=FAULTS, help=argparse.SUPPRESS)
    q.set_defaults(func=cmd_selftest)

    q = sub.add_parser("catalog", help="bundled knot catalog")
    q.add_argument("action", choices=("verify", "list", "show"))
    q.add_argument("name", nargs="?")
    q.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariants" and args.code is not None and args.file is not None:
        parser.error("give either CODE or --file, not both")
    try:
        return args.func(args)
    except InputError as e:
        print(f"vk: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OracleMismatch as e:
        print(f"vk: oracle mismatch: {e}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
